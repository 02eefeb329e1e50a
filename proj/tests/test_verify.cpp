#include <doctest.h>

#include <set>

#include <json.hpp>

#include "burgetree/burge.hpp"
#include "burgetree/errors.hpp"
#include "burgetree/fermionic.hpp"
#include "burgetree/qcombinat.hpp"
#include "burgetree/verify.hpp"

using namespace burgetree;

namespace {

LaurentPoly P(std::initializer_list<std::pair<std::int64_t, std::int64_t>> t) { return LaurentPoly::from_terms(t); }

IdentityCase fixture(std::function<std::vector<Check>(const Params&)> eval) {
    IdentityCase c;
    c.id = "fixture";
    c.suite = "thmmain";
    c.param_names = {"a", "b", "L", "M"};
    c.in_domain = [](const Params& p) { return p.size() == 4; };
    c.grid = [](const Budget&) { return std::vector<Params>{}; };
    c.evaluate = std::move(eval);
    return c;
}

}  // namespace

TEST_CASE("catalogue shape") {
    std::set<std::string> ids, suites;
    for (const auto& c : identity_catalogue()) {
        CHECK(ids.insert(c.id).second);
        CHECK(is_suite(c.suite));
        suites.insert(c.suite);
        CHECK_FALSE(c.statement.empty());
        CHECK_FALSE(c.grid(Budget{}).empty());
    }
    CHECK(suites.size() == suite_names().size());
    CHECK_THROWS_AS(find_case("no.such.case"), std::out_of_range);
    CHECK_FALSE(is_suite("everything"));
}

TEST_CASE("check_identity passes and reports failures") {
    const VerifyReport ok = check_identity(find_case("F.bosonic_equals_fermionic"), {2, 1, 1, 1});
    CHECK(ok.status == Status::pass);

    const IdentityCase bad = fixture([](const Params& p) {
        const CoprimePair pr{p[0], p[1]};
        // exponent shifted by one on the left
        return std::vector<Check>{PolyCheck{"shifted", bosonic_eval(thmmain_spec(pr), p[2], p[3]).shifted(1), eval_F(pr, p[2], p[3])}};
    });
    const VerifyReport r = check_identity(bad, {2, 1, 1, 1});
    CHECK(r.status == Status::fail);
    CHECK(r.failed_check == "shifted");
    REQUIRE(r.first_diff_exponent.has_value());
    CHECK(*r.first_diff_exponent == 0);
    CHECK(*r.lhs_coeff == Integer(0));
    CHECK(*r.rhs_coeff == Integer(1));

    const IdentityCase throws = fixture([](const Params&) -> std::vector<Check> { throw std::runtime_error("boom"); });
    const VerifyReport e = check_identity(throws, {2, 1, 1, 1});
    CHECK(e.status == Status::error);
    CHECK(e.error == "boom");

    CHECK_THROWS_AS(check_identity(find_case("F.bosonic_equals_fermionic"), {4, 2, 1, 1}), DomainError);
    CHECK_THROWS_AS(check_identity(find_case("F.bosonic_equals_fermionic"), {3, 1, -1, 1}), DomainError);
}

TEST_CASE("series checks") {
    CHECK(check_identity(find_case("series.andrews_gordon"), {2, 10}).status == Status::pass);
    CHECK(check_identity(find_case("series.fibonacci"), {1, 5, 40}).status == Status::pass);
    const TruncatedSeries p = product_series(15, 31, 40);
    CHECK(p == triple_product_sum(15, 31, 40));
}

TEST_CASE("positivity scan") {
    CHECK(positivity_scan(P({{0, 1}, {1, 2}, {2, 1}})).nonneg);
    const PositivityReport r = positivity_scan(P({{0, 1}, {3, -1}}));
    CHECK_FALSE(r.nonneg);
    REQUIRE(r.first_negative.has_value());
    CHECK(r.first_negative->first == 3);
    CHECK(r.first_negative->second == Integer(-1));
    for (std::int64_t n = 0; n <= 30; ++n) CHECK(positivity_scan(borwein_split(n).a).nonneg);
}

TEST_CASE("partition oracle") {
    CHECK(partition_oracle(4, 2, 0, 0, 1, 1) == LaurentPoly::one());
    for (std::int64_t N = 0; N <= 6; ++N) {
        for (std::int64_t M = 0; M <= 6; ++M) {
            if (!(1 - 2 <= N - M && N - M <= 4 - 1 - 2)) continue;
            CHECK(partition_oracle(4, 2, N, M, 1, 1) == d_poly(4, 2, N, M, Rational(1), Rational(1)));
        }
    }
    CHECK(partition_oracle(40, 20, 3, 4, 1, 1) == qbinomial(7, 4));
    CHECK_THROWS_AS(partition_oracle(4, 2, 5, 0, 1, 1), DomainError);
    CHECK_THROWS_AS(partition_oracle(4, 2, 1, 1, 0, 1), DomainError);
}

TEST_CASE("campaigns") {
    CampaignOptions o;
    o.budget.a_max = 5;
    o.budget.lm_max = 6;
    const auto r = run_campaign({"thmmain"}, o);
    CHECK(r.size() == 2 * 9 * 49);
    CHECK(summary_line(r) == "PASS 882/882");

    CampaignOptions s8;
    s8.case_filter = {"nn.explicit_sums"};
    const auto r8 = run_campaign({"section8"}, s8);
    CHECK(r8.size() == 5 * 13);
    CHECK(summary_line(r8) == "PASS 65/65");

    CampaignOptions none;
    CHECK(run_campaign({}, none).empty());
}

TEST_CASE("report rendering") {
    CampaignOptions o;
    o.budget.a_max = 3;
    o.budget.lm_max = 1;
    o.case_filter = {"F.bosonic_equals_fermionic"};
    auto r = run_campaign({"thmmain"}, o);
    REQUIRE(r.size() == 12);
    r[0].status = Status::fail;
    r[0].failed_check = "x";
    r[0].first_diff_exponent = 4;
    r[0].lhs_coeff = Integer(2);
    r[0].rhs_coeff = Integer(3);

    const auto j = nlohmann::json::parse(render_reports(r, ReportFormat::json, true));
    REQUIRE(j.size() == 12);
    CHECK(j[0]["case"] == "F.bosonic_equals_fermionic");
    CHECK(j[0]["params"]["a"] == 2);
    CHECK(j[0]["status"] == "fail");
    CHECK(j[0]["lhs_coeff"] == "2");
    CHECK(j[0]["first_diff_exponent"] == 4);
    CHECK_FALSE(j[0].contains("elapsed_ms"));
    CHECK(nlohmann::json::parse(render_reports(r, ReportFormat::json, false))[1].contains("elapsed_ms"));

    const std::string csv = render_reports(r, ReportFormat::csv, true);
    CHECK(csv.rfind("case,params,status,failed_check,first_diff_exponent,lhs_coeff,rhs_coeff,error\n", 0) == 0);
    CHECK(csv.find("F.bosonic_equals_fermionic,a=2 b=1 L=0 M=0,fail,x,4,2,3,\n") != std::string::npos);

    const std::string plain = render_reports(r, ReportFormat::plain, true);
    CHECK(plain.find("fail F.bosonic_equals_fermionic [a=2 b=1 L=0 M=0] check 'x' at q^4: 2 vs 3\n") == 0);
    CHECK(summary_line(r) == "FAIL 11/12");
}
