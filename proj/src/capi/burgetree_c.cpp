#include "burgetree/burgetree.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "burgetree/burge.hpp"
#include "burgetree/errors.hpp"
#include "burgetree/fermionic.hpp"
#include "burgetree/qcombinat.hpp"
#include "burgetree/verify.hpp"

struct bt_poly {
    burgetree::LaurentPoly value;
};
struct bt_series {
    burgetree::TruncatedSeries value;
};
struct bt_campaign {
    std::vector<burgetree::VerifyReport> reports;
};

namespace {

using namespace burgetree;

thread_local std::string g_last_error;

bt_status fail(bt_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
bt_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const DomainError& e) {
        return fail(BT_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(BT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BT_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

Family family_of(bt_family f) {
    switch (f) {
        case BT_FAMILY_F: return Family::F;
        case BT_FAMILY_f: return Family::f;
        case BT_FAMILY_H: return Family::H;
        case BT_FAMILY_I: return Family::I;
    }
    throw std::invalid_argument("unknown family code " + std::to_string(static_cast<int>(f)));
}

Rational rational_arg(const char* s, const char* name) {
    if (!s) throw std::invalid_argument(std::string(name) + " is null");
    return Rational::parse(s);
}

bt_status put(bt_poly** out, LaurentPoly p) {
    if (!out) return fail(BT_ERR_INVALID_ARGUMENT, "output pointer is null");
    *out = new bt_poly{std::move(p)};
    return BT_OK;
}

template <class Fn>
bt_status poly_call(bt_poly** out, Fn&& fn) {
    return guarded([&] {
        if (!out) return fail(BT_ERR_INVALID_ARGUMENT, "output pointer is null");
        return put(out, fn());
    });
}

std::string poly_text(const LaurentPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

}  // namespace

extern "C" {

const char* bt_last_error(void) { return g_last_error.c_str(); }
const char* bt_version(void) { return "1.0.0"; }
void bt_string_free(char* s) { std::free(s); }

void bt_poly_free(bt_poly* p) { delete p; }

bt_status bt_poly_to_string(const bt_poly* p, char** out) {
    return guarded([&] {
        if (!p || !out) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        *out = dup(poly_text(p->value));
        return BT_OK;
    });
}

bt_status bt_poly_coeff(const bt_poly* p, int64_t exponent, char** out) {
    return guarded([&] {
        if (!p || !out) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        *out = dup(p->value.coeff(exponent).to_string());
        return BT_OK;
    });
}

bt_status bt_poly_degree_range(const bt_poly* p, int64_t* min_exponent, int64_t* max_exponent) {
    return guarded([&] {
        if (!p || !min_exponent || !max_exponent) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        if (p->value.is_zero()) return fail(BT_ERR_DOMAIN, "zero polynomial has no exponent range");
        *min_exponent = p->value.min_exponent();
        *max_exponent = p->value.max_exponent();
        return BT_OK;
    });
}

bt_status bt_poly_equal(const bt_poly* x, const bt_poly* y, int* out) {
    return guarded([&] {
        if (!x || !y || !out) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        *out = (x->value == y->value) ? 1 : 0;
        return BT_OK;
    });
}

void bt_series_free(bt_series* s) { delete s; }

bt_status bt_series_order(const bt_series* s, int64_t* out) {
    return guarded([&] {
        if (!s || !out) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        *out = s->value.order();
        return BT_OK;
    });
}

bt_status bt_series_to_string(const bt_series* s, char** out) {
    return guarded([&] {
        if (!s || !out) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        const std::string t = s->value.to_string();
        *out = dup(t.empty() ? "0" : t);
        return BT_OK;
    });
}

bt_status bt_qbinomial(int64_t n, int64_t m, bt_poly** out) {
    return poly_call(out, [&] { return qbinomial(n, m); });
}

bt_status bt_b_kernel(int64_t L, int64_t M, int64_t a, int64_t b, bt_poly** out) {
    return poly_call(out, [&] { return b_kernel(L, M, a, b); });
}

bt_status bt_g_poly(int64_t N, int64_t M, const char* alpha, const char* beta, int64_t K, bt_poly** out) {
    return poly_call(out, [&] { return g_poly(N, M, rational_arg(alpha, "alpha"), rational_arg(beta, "beta"), K); });
}

bt_status bt_d_poly(int64_t K, int64_t i, int64_t N, int64_t M, const char* alpha, const char* beta, bt_poly** out) {
    return poly_call(out, [&] { return d_poly(K, i, N, M, rational_arg(alpha, "alpha"), rational_arg(beta, "beta")); });
}

bt_status bt_eval(bt_family family, int64_t a, int64_t b, int64_t L, int64_t M, bt_poly** out) {
    return poly_call(out, [&] {
        const CoprimePair p = CoprimePair::make(a, b);
        switch (family_of(family)) {
            case Family::F: return eval_F(p, L, M);
            case Family::f: return eval_f(p, L, M);
            case Family::H: return eval_H(p, L, M);
            case Family::I: return eval_I(p, L, M);
        }
        throw std::logic_error("unreachable");
    });
}

bt_status bt_eval_limit_M(bt_family family, int64_t a, int64_t b, int64_t L, bt_poly** out) {
    return poly_call(out, [&] { return eval_limit_M(CoprimePair::make(a, b), family_of(family), L); });
}

bt_status bt_eval_limit_L(bt_family family, int64_t a, int64_t b, int64_t M, bt_poly** out) {
    return poly_call(out, [&] { return eval_limit_L(CoprimePair::make(a, b), family_of(family), M); });
}

bt_status bt_eval_series(bt_family family, int64_t a, int64_t b, int64_t T, bt_series** out) {
    return guarded([&] {
        if (!out) return fail(BT_ERR_INVALID_ARGUMENT, "output pointer is null");
        *out = new bt_series{eval_limit_both(CoprimePair::make(a, b), family_of(family), T)};
        return BT_OK;
    });
}

bt_status bt_bosonic(bt_family family, int64_t a, int64_t b, int64_t L, int64_t M, bt_poly** out) {
    return poly_call(out, [&] {
        const CoprimePair p = CoprimePair::make(a, b);
        switch (family_of(family)) {
            case Family::F: return bosonic_eval(thmmain_spec(p), L, M);
            case Family::f: return bosonic_eval(mainrecip_spec(p), L, M);
            case Family::H: return bosonic_eval(thmmain2_spec(p), L, M);
            case Family::I: return bosonic_eval(even_spec(p), L, M);
        }
        throw std::logic_error("unreachable");
    });
}

bt_status bt_tree_walk(bt_family family, int64_t a, int64_t b, int64_t L, int64_t M, bt_poly** out) {
    return poly_call(out, [&] { return tree_walk(CoprimePair::make(a, b), family_of(family), L, M); });
}

void bt_campaign_options_init(bt_campaign_options* o) {
    if (!o) return;
    o->a_max = o->lm_max = o->n_max = o->order = -1;
    o->jobs = 0;
}

bt_status bt_suite_names(char** out) {
    return guarded([&] {
        if (!out) return fail(BT_ERR_INVALID_ARGUMENT, "output pointer is null");
        std::string s;
        for (const auto& n : suite_names()) s += n + "\n";
        *out = dup(s);
        return BT_OK;
    });
}

bt_status bt_list_identities(const char* suite, bt_format format, char** out) {
    return guarded([&] {
        if (!out) return fail(BT_ERR_INVALID_ARGUMENT, "output pointer is null");
        if (suite && !is_suite(suite)) return fail(BT_ERR_INVALID_ARGUMENT, std::string("unknown suite: ") + suite);
        if (format != BT_FORMAT_JSON && format != BT_FORMAT_PLAIN) return fail(BT_ERR_INVALID_ARGUMENT, "list supports json or plain");
        nlohmann::json arr = nlohmann::json::array();
        std::string plain;
        for (const auto& c : identity_catalogue()) {
            if (suite && c.suite != suite) continue;
            if (format == BT_FORMAT_JSON) {
                arr.push_back({{"id", c.id},
                               {"suite", c.suite},
                               {"kind", to_string(c.kind)},
                               {"params", c.param_names},
                               {"domain", c.domain},
                               {"statement", c.statement}});
            } else {
                std::string params;
                for (const auto& p : c.param_names) params += (params.empty() ? "" : ",") + p;
                plain += c.id + "  [" + c.suite + ", " + to_string(c.kind) + "]  (" + params + ")\n    " + c.statement +
                         "\n    grid: " + c.domain + "\n";
            }
        }
        *out = dup(format == BT_FORMAT_JSON ? arr.dump(2) + "\n" : plain);
        return BT_OK;
    });
}

bt_status bt_campaign_run(const char* const* suites, size_t n_suites, const char* const* case_ids, size_t n_cases,
                          const bt_campaign_options* options, bt_campaign** out) {
    return guarded([&] {
        if (!out || (n_suites && !suites) || (n_cases && !case_ids)) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        CampaignOptions opts;
        std::vector<std::string> names;
        for (size_t k = 0; k < n_suites; ++k) {
            if (!suites[k] || !is_suite(suites[k])) return fail(BT_ERR_INVALID_ARGUMENT, std::string("unknown suite: ") + (suites[k] ? suites[k] : "(null)"));
            names.emplace_back(suites[k]);
        }
        for (size_t k = 0; k < n_cases; ++k) {
            if (!case_ids[k]) return fail(BT_ERR_INVALID_ARGUMENT, "null case id");
            const IdentityCase& c = find_case(case_ids[k]);
            opts.case_filter.push_back(c.id);
            if (std::find(names.begin(), names.end(), c.suite) == names.end() && n_suites == 0) names.push_back(c.suite);
        }
        if (options) {
            auto set = [](std::optional<std::int64_t>& dst, int64_t v) {
                if (v >= 0) dst = v;
            };
            set(opts.budget.a_max, options->a_max);
            set(opts.budget.lm_max, options->lm_max);
            set(opts.budget.n_max, options->n_max);
            set(opts.budget.order, options->order);
            opts.jobs = options->jobs;
        }
        *out = new bt_campaign{run_campaign(names, opts)};
        return BT_OK;
    });
}

void bt_campaign_free(bt_campaign* c) { delete c; }

size_t bt_campaign_size(const bt_campaign* c) { return c ? c->reports.size() : 0; }

size_t bt_campaign_passed(const bt_campaign* c) {
    if (!c) return 0;
    return static_cast<size_t>(std::count_if(c->reports.begin(), c->reports.end(),
                                             [](const VerifyReport& r) { return r.status == Status::pass; }));
}

bt_status bt_campaign_render(const bt_campaign* c, bt_format format, int canonical, char** out) {
    return guarded([&] {
        if (!c || !out) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        ReportFormat f;
        switch (format) {
            case BT_FORMAT_JSON: f = ReportFormat::json; break;
            case BT_FORMAT_CSV: f = ReportFormat::csv; break;
            case BT_FORMAT_PLAIN: f = ReportFormat::plain; break;
            default: return fail(BT_ERR_INVALID_ARGUMENT, "unknown report format");
        }
        *out = dup(render_reports(c->reports, f, canonical != 0));
        return BT_OK;
    });
}

bt_status bt_campaign_summary(const bt_campaign* c, char** out) {
    return guarded([&] {
        if (!c || !out) return fail(BT_ERR_INVALID_ARGUMENT, "null argument");
        *out = dup(summary_line(c->reports));
        return BT_OK;
    });
}

}  // extern "C"
