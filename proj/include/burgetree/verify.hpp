#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "burgetree/integer.hpp"
#include "burgetree/laurent_poly.hpp"
#include "burgetree/rational.hpp"
#include "burgetree/truncated_series.hpp"

namespace burgetree {

enum class CaseKind { polynomial, series, positivity };
const char* to_string(CaseKind kind);

// Grid bounds. Unset fields fall back to each case's own default.
struct Budget {
    std::optional<std::int64_t> a_max;   // largest a of a coprime pair
    std::optional<std::int64_t> lm_max;  // largest L and M
    std::optional<std::int64_t> n_max;   // largest single bound (L, n or N,M) for one-parameter cases
    std::optional<std::int64_t> order;   // series truncation order

    std::int64_t a(std::int64_t fallback) const { return a_max.value_or(fallback); }
    std::int64_t lm(std::int64_t fallback) const { return lm_max.value_or(fallback); }
    std::int64_t n(std::int64_t fallback) const { return n_max.value_or(fallback); }
    std::int64_t t(std::int64_t fallback) const { return order.value_or(fallback); }
};

using Params = std::vector<std::int64_t>;

struct PolyCheck {
    std::string label;
    LaurentPoly lhs;
    LaurentPoly rhs;
};
struct SeriesCheck {
    std::string label;
    TruncatedSeries lhs;
    TruncatedSeries rhs;
};
struct PositivityCheck {
    std::string label;
    LaurentPoly value;
};
using Check = std::variant<PolyCheck, SeriesCheck, PositivityCheck>;

struct IdentityCase {
    std::string id;
    std::string suite;
    std::string statement;  // human-readable form of the identity
    CaseKind kind = CaseKind::polynomial;
    std::vector<std::string> param_names;
    std::string domain;  // description of the parameter grid
    std::function<bool(const Params&)> in_domain;
    std::function<std::vector<Params>(const Budget&)> grid;
    std::function<std::vector<Check>(const Params&)> evaluate;
};

enum class Status { pass, fail, error };
const char* to_string(Status s);

struct VerifyReport {
    std::string case_id;
    std::vector<std::string> param_names;
    Params params;
    Status status = Status::pass;
    std::string failed_check;  // label of the first failing check
    std::optional<std::int64_t> first_diff_exponent;
    std::optional<Integer> lhs_coeff;
    std::optional<Integer> rhs_coeff;
    std::string error;  // exception text when status == error
    double elapsed_ms = 0.0;
};

struct PositivityReport {
    bool nonneg = true;
    std::optional<std::pair<std::int64_t, Integer>> first_negative;
};

// All registered cases, in registration order.
const std::vector<IdentityCase>& identity_catalogue();
const IdentityCase& find_case(const std::string& id);  // throws std::out_of_range
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws DomainError when params lie outside the case domain.
VerifyReport check_identity(const IdentityCase& c, const Params& params);

PositivityReport positivity_scan(const LaurentPoly& p);

// Brute-force generating function of partitions in an M x N box (at most M
// parts, parts at most N) whose hook differences are at least beta-i+1 on
// diagonal 1-beta and at most K-alpha-i-1 on diagonal alpha-1.
LaurentPoly partition_oracle(std::int64_t K, std::int64_t i, std::int64_t N, std::int64_t M, std::int64_t alpha,
                             std::int64_t beta);

struct CampaignOptions {
    Budget budget;
    unsigned jobs = 0;  // 0: hardware concurrency
    std::vector<std::string> case_filter;  // empty: all cases of the suites
};

// Runs every case of the listed suites over its grid. Reports are sorted by
// (case id, params), independent of scheduling.
std::vector<VerifyReport> run_campaign(const std::vector<std::string>& suites, const CampaignOptions& options);

enum class ReportFormat { json, csv, plain };
// canonical drops timing so output is byte-stable.
std::string render_reports(const std::vector<VerifyReport>& reports, ReportFormat format, bool canonical);
std::string summary_line(const std::vector<VerifyReport>& reports);

// (q^A, q^{B-A}, q^B; q^B)_inf / (q)_inf to order T, via explicit factors.
TruncatedSeries product_series(std::int64_t A, std::int64_t B, std::int64_t T);
// The same quantity via sum_j (-1)^j q^{B j(j-1)/2 + A j} / (q)_inf.
TruncatedSeries triple_product_sum(std::int64_t A, std::int64_t B, std::int64_t T);

}  // namespace burgetree
