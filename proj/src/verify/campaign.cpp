#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>
#include <functional>
#include <tuple>

#include <json.hpp>

#include "burgetree/errors.hpp"
#include "burgetree/verify.hpp"

namespace burgetree {

const char* to_string(CaseKind kind) {
    switch (kind) {
        case CaseKind::polynomial: return "polynomial";
        case CaseKind::series: return "series";
        case CaseKind::positivity: return "positivity";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::error: return "error";
    }
    return "?";
}

PositivityReport positivity_scan(const LaurentPoly& p) {
    PositivityReport r;
    const auto& d = p.dense();
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k].sign() < 0) {
            r.nonneg = false;
            r.first_negative = std::make_pair(p.min_exponent() + static_cast<std::int64_t>(k), d[k]);
            break;
        }
    }
    return r;
}

namespace {

// Marks the report failed at the first difference; returns false on failure.
bool apply(const PolyCheck& c, VerifyReport& r) {
    if (c.lhs == c.rhs) return true;
    const LaurentPoly diff = c.lhs - c.rhs;
    const std::int64_t e = diff.min_exponent();
    r.status = Status::fail;
    r.failed_check = c.label;
    r.first_diff_exponent = e;
    r.lhs_coeff = c.lhs.coeff(e);
    r.rhs_coeff = c.rhs.coeff(e);
    return false;
}

bool apply(const SeriesCheck& c, VerifyReport& r) {
    const std::int64_t n = std::min(c.lhs.order(), c.rhs.order());
    for (std::int64_t k = 0; k <= n; ++k) {
        if (c.lhs.coeff(k) != c.rhs.coeff(k)) {
            r.status = Status::fail;
            r.failed_check = c.label;
            r.first_diff_exponent = k;
            r.lhs_coeff = c.lhs.coeff(k);
            r.rhs_coeff = c.rhs.coeff(k);
            return false;
        }
    }
    if (c.lhs.order() != c.rhs.order()) {
        r.status = Status::fail;
        r.failed_check = c.label + " (truncation orders differ)";
        r.first_diff_exponent = n + 1;
        return false;
    }
    return true;
}

bool apply(const PositivityCheck& c, VerifyReport& r) {
    const PositivityReport p = positivity_scan(c.value);
    if (p.nonneg) return true;
    r.status = Status::fail;
    r.failed_check = c.label + " has a negative coefficient";
    r.first_diff_exponent = p.first_negative->first;
    r.lhs_coeff = p.first_negative->second;
    r.rhs_coeff = Integer(0);
    return false;
}

}  // namespace

VerifyReport check_identity(const IdentityCase& c, const Params& params) {
    if (!c.in_domain(params)) {
        std::ostringstream os;
        os << c.id << ": parameters outside the domain (" << c.domain << ")";
        throw DomainError(os.str());
    }
    VerifyReport r;
    r.case_id = c.id;
    r.param_names = c.param_names;
    r.params = params;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        for (const Check& chk : c.evaluate(params)) {
            if (!std::visit([&](const auto& x) { return apply(x, r); }, chk)) break;
        }
    } catch (const std::exception& e) {
        r.status = Status::error;
        r.error = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

LaurentPoly partition_oracle(std::int64_t K, std::int64_t i, std::int64_t N, std::int64_t M, std::int64_t alpha,
                             std::int64_t beta) {
    if (N < 0 || M < 0) throw DomainError("partition_oracle: negative box");
    if (alpha <= 0 || beta <= 0) throw DomainError("partition_oracle: alpha and beta must be positive");
    if (!(beta - i <= N - M && N - M <= K - alpha - i)) throw DomainError("partition_oracle: need beta-i <= N-M <= K-alpha-i");
    std::vector<Integer> counts(static_cast<std::size_t>(N * M + 1));
    std::vector<std::int64_t> parts;
    const std::int64_t low_diag = 1 - beta, high_diag = alpha - 1;
    const std::int64_t low_bound = beta - i + 1, high_bound = K - alpha - i - 1;

    auto admissible = [&]() {
        // conjugate: lambda'_c = number of parts >= c
        auto conj = [&](std::int64_t c) {
            std::int64_t n = 0;
            for (std::int64_t p : parts) n += (p >= c) ? 1 : 0;
            return n;
        };
        for (std::size_t r0 = 0; r0 < parts.size(); ++r0) {
            const std::int64_t r = static_cast<std::int64_t>(r0) + 1;
            for (std::int64_t c = 1; c <= parts[r0]; ++c) {
                const std::int64_t d = r - c;
                if (d != low_diag && d != high_diag) continue;
                const std::int64_t hd = parts[r0] - conj(c);
                if (d == low_diag && hd < low_bound) return false;
                if (d == high_diag && hd > high_bound) return false;
            }
        }
        return true;
    };

    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t max_part, std::int64_t weight) {
        if (admissible()) counts[static_cast<std::size_t>(weight)] += Integer(1);
        if (static_cast<std::int64_t>(parts.size()) == M) return;
        for (std::int64_t p = 1; p <= max_part; ++p) {
            parts.push_back(p);
            rec(p, weight + p);
            parts.pop_back();
        }
    };
    rec(N, 0);
    return LaurentPoly(0, std::move(counts));
}

TruncatedSeries product_series(std::int64_t A, std::int64_t B, std::int64_t T) {
    if (B <= 0 || A <= 0 || A >= B) throw DomainError("product_series needs 0 < A < B");
    std::vector<SeriesFactor> f;
    for (std::int64_t m = 0; m * B < T + B; ++m) {
        for (std::int64_t e : {m * B + A, m * B + B - A, m * B + B}) {
            if (e <= T) f.push_back({e, +1});
        }
    }
    for (std::int64_t e = 1; e <= T; ++e) f.push_back({e, -1});
    return ts_from_factors(f, T);
}

TruncatedSeries triple_product_sum(std::int64_t A, std::int64_t B, std::int64_t T) {
    if (B <= 0 || A <= 0 || A >= B) throw DomainError("triple_product_sum needs 0 < A < B");
    LaurentPoly num;
    // exponent B j(j-1)/2 + A j grows quadratically on both sides
    for (std::int64_t j = -2 * T - 2; j <= 2 * T + 2; ++j) {
        const std::int64_t e = B * j * (j - 1) / 2 + A * j;
        if (e < 0 || e > T) continue;
        num.add_scaled(LaurentPoly::one(), e, (j % 2 != 0) ? -1 : 1);
    }
    return TruncatedSeries::from_poly(num, T) * reciprocal_poch(T, 1, T);
}

std::vector<VerifyReport> run_campaign(const std::vector<std::string>& suites, const CampaignOptions& options) {
    struct Job {
        const IdentityCase* c;
        Params p;
    };
    std::vector<Job> jobs;
    for (const auto& c : identity_catalogue()) {
        if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) continue;
        if (!options.case_filter.empty() &&
            std::find(options.case_filter.begin(), options.case_filter.end(), c.id) == options.case_filter.end())
            continue;
        for (auto& p : c.grid(options.budget)) jobs.push_back({&c, std::move(p)});
    }

    std::vector<VerifyReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t k = next++; k < jobs.size(); k = next++) out[k] = check_identity(*jobs[k].c, jobs[k].p);
    };
    unsigned n = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs.size(), 1)));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(out.begin(), out.end(), [](const VerifyReport& x, const VerifyReport& y) {
        return std::tie(x.case_id, x.params) < std::tie(y.case_id, y.params);
    });
    return out;
}

namespace {

std::string params_text(const VerifyReport& r) {
    std::ostringstream os;
    for (std::size_t k = 0; k < r.params.size(); ++k) {
        if (k) os << ' ';
        os << (k < r.param_names.size() ? r.param_names[k] : "p" + std::to_string(k)) << '=' << r.params[k];
    }
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string opt_int(const std::optional<Integer>& v) { return v ? v->to_string() : ""; }

}  // namespace

std::string render_reports(const std::vector<VerifyReport>& reports, ReportFormat format, bool canonical) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) {
                nlohmann::json params = nlohmann::json::object();
                for (std::size_t k = 0; k < r.params.size(); ++k) params[r.param_names.at(k)] = r.params[k];
                nlohmann::json j;
                j["case"] = r.case_id;
                j["params"] = params;
                j["status"] = to_string(r.status);
                if (r.status == Status::fail) {
                    j["failed_check"] = r.failed_check;
                    j["first_diff_exponent"] = r.first_diff_exponent ? nlohmann::json(*r.first_diff_exponent) : nullptr;
                    j["lhs_coeff"] = r.lhs_coeff ? nlohmann::json(r.lhs_coeff->to_string()) : nullptr;
                    j["rhs_coeff"] = r.rhs_coeff ? nlohmann::json(r.rhs_coeff->to_string()) : nullptr;
                }
                if (r.status == Status::error) j["error"] = r.error;
                if (!canonical) j["elapsed_ms"] = r.elapsed_ms;
                arr.push_back(std::move(j));
            }
            os << arr.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv: {
            os << "case,params,status,failed_check,first_diff_exponent,lhs_coeff,rhs_coeff,error";
            if (!canonical) os << ",elapsed_ms";
            os << '\n';
            for (const auto& r : reports) {
                os << csv_field(r.case_id) << ',' << csv_field(params_text(r)) << ',' << to_string(r.status) << ','
                   << csv_field(r.failed_check) << ',' << (r.first_diff_exponent ? std::to_string(*r.first_diff_exponent) : "") << ','
                   << opt_int(r.lhs_coeff) << ',' << opt_int(r.rhs_coeff) << ',' << csv_field(r.error);
                if (!canonical) os << ',' << r.elapsed_ms;
                os << '\n';
            }
            break;
        }
        case ReportFormat::plain: {
            for (const auto& r : reports) {
                os << to_string(r.status) << ' ' << r.case_id << " [" << params_text(r) << ']';
                if (r.status == Status::fail) {
                    os << " check '" << r.failed_check << "'";
                    if (r.first_diff_exponent) os << " at q^" << *r.first_diff_exponent;
                    if (r.lhs_coeff || r.rhs_coeff) os << ": " << opt_int(r.lhs_coeff) << " vs " << opt_int(r.rhs_coeff);
                }
                if (r.status == Status::error) os << ": " << r.error;
                if (!canonical) os << " (" << r.elapsed_ms << " ms)";
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

std::string summary_line(const std::vector<VerifyReport>& reports) {
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.status == Status::pass; });
    std::ostringstream os;
    os << (static_cast<std::size_t>(passed) == reports.size() ? "PASS " : "FAIL ") << passed << '/' << reports.size();
    return os.str();
}

}  // namespace burgetree
