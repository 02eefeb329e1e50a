#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "burgetree/burgetree.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    bt_string_free(s);
    return out;
}

std::string poly_text(bt_poly* p) {
    char* s = nullptr;
    REQUIRE(bt_poly_to_string(p, &s) == BT_OK);
    bt_poly_free(p);
    return take(s);
}

}  // namespace

TEST_CASE("polynomials through the C interface") {
    bt_poly* p = nullptr;
    REQUIRE(bt_qbinomial(4, 2, &p) == BT_OK);
    char* c = nullptr;
    REQUIRE(bt_poly_coeff(p, 2, &c) == BT_OK);
    CHECK(take(c) == "2");
    int64_t lo = -1, hi = -1;
    REQUIRE(bt_poly_degree_range(p, &lo, &hi) == BT_OK);
    CHECK(lo == 0);
    CHECK(hi == 4);
    CHECK(poly_text(p) == "0:1 1:1 2:2 3:1 4:1");

    REQUIRE(bt_g_poly(1, 1, "1", "3/2", 2, &p) == BT_OK);
    CHECK(poly_text(p) == "0:1 1:1");

    REQUIRE(bt_eval(BT_FAMILY_F, 2, 1, 1, 1, &p) == BT_OK);
    bt_poly* q = nullptr;
    REQUIRE(bt_bosonic(BT_FAMILY_F, 2, 1, 1, 1, &q) == BT_OK);
    int eq = 0;
    REQUIRE(bt_poly_equal(p, q, &eq) == BT_OK);
    CHECK(eq == 1);
    bt_poly_free(q);
    CHECK(poly_text(p) == "0:1 1:2 2:1");

    REQUIRE(bt_b_kernel(0, 0, 0, 0, &p) == BT_OK);
    CHECK(poly_text(p) == "0:1");
    REQUIRE(bt_qbinomial(2, 3, &p) == BT_OK);
    CHECK(poly_text(p) == "0");
}

TEST_CASE("series and limits") {
    bt_series* s = nullptr;
    REQUIRE(bt_eval_series(BT_FAMILY_F, 2, 1, 11, &s) == BT_OK);
    int64_t T = 0;
    REQUIRE(bt_series_order(s, &T) == BT_OK);
    CHECK(T == 11);
    char* text = nullptr;
    REQUIRE(bt_series_to_string(s, &text) == BT_OK);
    CHECK(take(text) == "0:1 1:1 2:1 3:1 4:2 5:2 6:3 7:3 8:4 9:5 10:6 11:7");
    bt_series_free(s);

    bt_poly* p = nullptr;
    REQUIRE(bt_eval_limit_M(BT_FAMILY_F, 3, 2, 2, &p) == BT_OK);
    bt_poly* w = nullptr;
    REQUIRE(bt_tree_walk(BT_FAMILY_F, 3, 2, 2, 2, &w) == BT_OK);
    bt_poly_free(w);
    bt_poly_free(p);
}

TEST_CASE("error codes") {
    bt_poly* p = nullptr;
    CHECK(bt_eval(BT_FAMILY_F, 4, 2, 1, 1, &p) == BT_ERR_DOMAIN);
    CHECK(p == nullptr);
    CHECK(std::string(bt_last_error()).size() > 0);
    CHECK(bt_g_poly(1, 1, "x/2", "1", 2, &p) == BT_ERR_INVALID_ARGUMENT);
    CHECK(bt_qbinomial(1, 1, nullptr) == BT_ERR_INVALID_ARGUMENT);
    REQUIRE(bt_qbinomial(1, 1, &p) == BT_OK);
    CHECK(std::string(bt_last_error()).empty());
    bt_poly_free(p);
    CHECK(std::string(bt_version()) == "1.0.0");
}

TEST_CASE("campaigns through the C interface") {
    char* names = nullptr;
    REQUIRE(bt_suite_names(&names) == BT_OK);
    CHECK(take(names).find("thmmain2\n") != std::string::npos);

    bt_campaign_options o;
    bt_campaign_options_init(&o);
    CHECK(o.a_max < 0);
    o.a_max = 3;
    o.lm_max = 2;
    o.jobs = 1;
    const char* suites[] = {"thmmain"};
    bt_campaign* c = nullptr;
    REQUIRE(bt_campaign_run(suites, 1, nullptr, 0, &o, &c) == BT_OK);
    CHECK(bt_campaign_size(c) == 2 * 3 * 9);
    CHECK(bt_campaign_passed(c) == bt_campaign_size(c));
    char* summary = nullptr;
    REQUIRE(bt_campaign_summary(c, &summary) == BT_OK);
    CHECK(take(summary) == "PASS 54/54");
    char* csv = nullptr;
    REQUIRE(bt_campaign_render(c, BT_FORMAT_CSV, 1, &csv) == BT_OK);
    CHECK(take(csv).rfind("case,params,status", 0) == 0);
    bt_campaign_free(c);

    const char* bad[] = {"nonsense"};
    CHECK(bt_campaign_run(bad, 1, nullptr, 0, &o, &c) == BT_ERR_INVALID_ARGUMENT);
    const char* ids[] = {"F.tree_walk"};
    REQUIRE(bt_campaign_run(nullptr, 0, ids, 1, &o, &c) == BT_OK);
    CHECK(bt_campaign_size(c) == 27);
    bt_campaign_free(c);

    char* listing = nullptr;
    REQUIRE(bt_list_identities("hookp", BT_FORMAT_JSON, &listing) == BT_OK);
    CHECK(take(listing).find("hook.partition_count") != std::string::npos);
}
