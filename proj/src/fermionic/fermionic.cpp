#include "burgetree/fermionic.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <limits>
#include <map>
#include <stdexcept>

#include "burgetree/errors.hpp"
#include "burgetree/qcombinat.hpp"
#include "chain.hpp"

namespace burgetree {

using detail::Chain;
using detail::ChainTerm;

FermionicSpec FermionicSpec::make(CoprimePair pair, Family family, BoundMode mode, const EvalOptions& options) {
    FermionicSpec s;
    s.pair = CoprimePair::make(pair.a, pair.b);
    s.family = family;
    s.mode = mode;
    s.options = options;
    if (options.search_slack < 0) throw std::invalid_argument("search slack must be nonnegative");
    if (family == Family::H && options.rep != Representation::last_at_least_two) {
        throw DomainError("H polynomials are defined with the final quotient >= 2 only");
    }
    s.cf = cf_expand(s.pair, options.rep);
    s.cartan = build_cartan(s.cf);
    const bool lower_ok = s.pair.a <= 2 * s.pair.b;
    const bool upper_ok = s.pair.a >= 2 * s.pair.b;
    if ((options.form == FormChoice::lower && !lower_ok) || (options.form == FormChoice::upper && !upper_ok)) {
        throw DomainError("requested summation form does not exist for " + s.pair.to_string());
    }
    return s;
}

bool FermionicSpec::upper_form() const {
    if (pair.a != 2 * pair.b) return pair.a > 2 * pair.b;
    return options.form == FormChoice::upper;
}

LaurentPoly poch_quotient(std::int64_t top, const std::vector<std::int64_t>& parts) {
    std::int64_t s = 0;
    LaurentPoly r = LaurentPoly::one();
    for (auto p : parts) {
        if (p < 0) throw std::invalid_argument("poch_quotient: negative part");
        s += p;
        r = r * qbinomial_ref(s, p);
    }
    if (s > top) throw std::invalid_argument("poch_quotient: parts exceed the numerator");
    for (std::int64_t k = s + 1; k <= top; ++k) {
        LaurentPoly f = r;
        f.add_scaled(r, k, -1);
        r = std::move(f);
    }
    return r;
}

namespace {

constexpr std::int64_t kNoCap = std::numeric_limits<std::int64_t>::max() / 4;

struct Binom {
    std::int64_t top;
    std::int64_t bottom;
    std::int64_t base;
    bool nonzero() const { return bottom >= 0 && bottom <= top; }
};

// Running product q^E * factors, truncated above cap.
class Term {
public:
    Term(std::int64_t exponent, std::int64_t cap) : cap_(cap) {
        if (exponent <= cap) acc_ = LaurentPoly::monomial(exponent);
    }
    void mul(const LaurentPoly& p) {
        if (!acc_.is_zero()) acc_ = mul_truncated(acc_, p, cap_);
    }
    void mul(const Binom& b) {
        if (acc_.is_zero()) return;
        if (!b.nonzero()) {
            acc_ = LaurentPoly();
            return;
        }
        if (b.bottom == 0 || b.bottom == b.top) return;
        if (b.base == 1) {
            mul(qbinomial_ref(b.top, b.bottom));
        } else {
            mul(qbinomial(b.top, b.bottom, b.base));
        }
    }
    const LaurentPoly& value() const { return acc_; }

private:
    std::int64_t cap_;
    LaurentPoly acc_;
};

class Engine {
public:
    explicit Engine(const FermionicSpec& s) : s_(s), c_(s.cartan), d_(s.cartan.d), slack_(s.options.search_slack) {
        for (std::int64_t k = 0; k < d_; ++k) {
            ChainTerm t;
            t.start = c_.block_start[static_cast<std::size_t>(k)];
            t.shift = (s_.family == Family::H && !t.start && k == d_ - 1) ? 1 : 0;
            terms_.push_back(t);
        }
        a0_ = s_.cf.quotients.front();
    }

    // n_j (0-based) = L delta_{j,0} - (C m)_j
    std::int64_t n_at(std::int64_t j, std::int64_t L, const std::vector<std::int64_t>& m) const {
        std::int64_t v = (j == 0) ? L : 0;
        for (std::int64_t k = std::max<std::int64_t>(0, j - 1); k <= std::min(d_ - 1, j + 1); ++k) {
            v -= c_.cartan(j + 1, k + 1) * m[static_cast<std::size_t>(k)];
        }
        return v;
    }

    Binom factor(std::int64_t j, std::int64_t L, const std::vector<std::int64_t>& m) const {
        const std::int64_t tau = c_.tau[static_cast<std::size_t>(j)];
        const std::int64_t mj = m[static_cast<std::size_t>(j)];
        Binom b{tau * mj + n_at(j, L, m), tau * mj, 1};
        if (s_.family == Family::I) b.base = c_.taubar[static_cast<std::size_t>(j)];
        if (s_.family == Family::H) {
            if (j == d_ - 1) b.top -= 1;
            if (j == d_ - 2) b.bottom -= 1;
        }
        return b;
    }

    // Exponent contribution of the quadratic part restricted to indices >= from.
    std::int64_t quad(const std::vector<std::int64_t>& m, std::int64_t from) const {
        std::int64_t s = 0;
        for (std::int64_t j = from; j < d_; ++j) {
            if (s_.family == Family::f && j == d_ - 1) continue;  // barred row
            for (std::int64_t k = std::max(from, j - 1); k <= std::min(d_ - 1, j + 1); ++k) {
                s += m[static_cast<std::size_t>(j)] * c_.cartan(j + 1, k + 1) * m[static_cast<std::size_t>(k)];
            }
        }
        if (s_.family == Family::H) s += 2 * m[static_cast<std::size_t>(d_ - 1)] - 2 * m[static_cast<std::size_t>(d_ - 2)] + 1;
        return s;
    }

    std::int64_t exponent_m(std::int64_t L, const std::vector<std::int64_t>& m) const {
        std::int64_t e = quad(m, 0);
        if (s_.upper_form()) e += L * (L - 2 * m[0]);
        return e;
    }

    Binom boundary(std::int64_t L, std::int64_t M, std::int64_t m1) const {
        if (s_.upper_form()) return {L + M + m1, 2 * L, 1};
        return {2 * L + M - m1, 2 * L, 1};
    }

    // Points of the sum in m-coordinates; M < 0 means no boundary binomial.
    template <class Visit>
    void enumerate_m(std::int64_t L, std::int64_t M, Visit&& visit) const {
        std::vector<std::int64_t> m(static_cast<std::size_t>(d_), 0);
        Chain ch;
        ch.terms = terms_;
        ch.fixed = slack_;
        ch.per_first = L + slack_;
        auto admit = [&](std::size_t pos) {
            const auto p = static_cast<std::int64_t>(pos);
            if (p == 0 && M >= 0 && !boundary(L, M, m[0]).nonzero()) return false;
            if (p >= 1 && !factor(p - 1, L, m).nonzero()) return false;
            if (p == d_ - 1 && !factor(p, L, m).nonzero()) return false;
            return true;
        };
        auto leaf = [&]() { visit(m); };
        ch.run(m, 0, admit, leaf);
    }

    LaurentPoly sum_m(std::int64_t L, std::int64_t M) const {
        LaurentPoly r;
        enumerate_m(L, M, [&](const std::vector<std::int64_t>& m) {
            Term t(exponent_m(L, m), kNoCap);
            if (M >= 0) t.mul(boundary(L, M, m[0]));
            for (std::int64_t j = 0; j < d_; ++j) t.mul(factor(j, L, m));
            r += t.value();
        });
        return r;
    }

    std::vector<LatticePoint> points(std::int64_t L, std::int64_t M) const {
        std::vector<LatticePoint> out;
        enumerate_m(L, M, [&](const std::vector<std::int64_t>& m) {
            out.push_back({m, mn_solve(c_, L, m), exponent_m(L, m)});
        });
        return out;
    }

    // L -> infinity (series == false, bound = M) or both infinite (series == true, bound = T).
    LaurentPoly sum_limit(bool series, std::int64_t bound) const {
        return s_.upper_form() ? sum_upper_limit(series, bound) : sum_lower_limit(series, bound);
    }

private:
    std::int64_t dressing(std::int64_t j) const {
        return s_.family == Family::I ? c_.taubar[static_cast<std::size_t>(j)] : 1;
    }

    LaurentPoly reciprocal(std::int64_t n, std::int64_t step, std::int64_t cap) const {
        return reciprocal_poch(n, step, std::max<std::int64_t>(cap, 0)).to_poly();
    }

    // Admissibility of the tail factors j >= first.
    auto tail_admit(std::vector<std::int64_t>& m, std::int64_t first) const {
        return [this, &m, first](std::size_t pos) {
            const auto p = static_cast<std::int64_t>(pos);
            if (p - 1 >= first && !factor(p - 1, 0, m).nonzero()) return false;
            if (p == d_ - 1 && p >= first && !factor(p, 0, m).nonzero()) return false;
            return true;
        };
    }

    LaurentPoly sum_lower_limit(bool series, std::int64_t bound) const {
        LaurentPoly r;
        std::vector<std::int64_t> m(static_cast<std::size_t>(d_), 0);
        const std::int64_t tau1 = c_.tau[0];
        auto admit = tail_admit(m, 1);
        auto leaf = [&]() {
            const std::int64_t e = quad(m, 0);
            if (series) {
                Term t(e, bound);
                t.mul(reciprocal(tau1 * m[0], dressing(0), bound - e));
                for (std::int64_t j = 1; j < d_; ++j) t.mul(factor(j, 0, m));
                r += t.value();
            } else {
                Term t(e, kNoCap);
                t.mul(poch_quotient(2 * bound, {bound - m[0], tau1 * m[0]}));
                for (std::int64_t j = 1; j < d_; ++j) t.mul(factor(j, 0, m));
                r += t.value();
            }
        };
        if (series) {
            Chain ch;
            ch.terms = terms_;
            ch.fixed = bound + slack_;
            ch.run(m, 0, admit, leaf);
            return r;
        }
        Chain ch;
        ch.terms.assign(terms_.begin() + 1, terms_.end());
        ch.anchor = 0;
        ch.fixed = slack_;
        for (std::int64_t m1 = 0; m1 <= bound + slack_; ++m1) {
            if (bound - m1 < 0) continue;
            m.assign(static_cast<std::size_t>(d_), 0);
            m[0] = m1;
            ch.per_first = m1 + slack_;
            if (ch.terms.empty()) {
                leaf();
            } else {
                ch.run(m, 1, admit, leaf);
            }
        }
        return r;
    }

    // Coordinates n_1..n_{a0}, mu = m_{a0+1}, m_{a0+2}..m_d.
    LaurentPoly sum_upper_limit(bool series, std::int64_t bound) const {
        LaurentPoly r;
        const bool has_mu = d_ > a0_;
        std::vector<std::int64_t> m(static_cast<std::size_t>(d_), 0);
        std::vector<std::int64_t> n(static_cast<std::size_t>(a0_), 0);
        std::vector<std::int64_t> big_n(static_cast<std::size_t>(a0_) + 1, 0);  // N_j, N_{a0+1} = 0
        std::int64_t mu = 0;
        auto admit = tail_admit(m, a0_ + 1);

        auto leaf = [&]() {
            std::int64_t e = has_mu ? quad(m, a0_) : 0;
            for (std::int64_t j = 0; j < a0_; ++j) {
                const std::int64_t v = big_n[static_cast<std::size_t>(j)] + mu;
                e += v * v;
            }
            const std::int64_t tau_mu = has_mu ? c_.tau[static_cast<std::size_t>(a0_)] * mu : 0;
            if (series) {
                Term t(e, bound);
                for (std::int64_t j = 0; j < a0_ && !t.value().is_zero(); ++j) {
                    t.mul(reciprocal(n[static_cast<std::size_t>(j)], dressing(j), bound - e));
                }
                if (has_mu) t.mul(reciprocal(tau_mu, dressing(a0_), bound - e));
                for (std::int64_t j = a0_ + 1; j < d_; ++j) t.mul(factor(j, 0, m));
                r += t.value();
            } else {
                std::vector<std::int64_t> parts{bound - big_n[0] - mu};
                parts.insert(parts.end(), n.begin(), n.end());
                parts.push_back(tau_mu);
                Term t(e, kNoCap);
                t.mul(poch_quotient(2 * bound, parts));
                for (std::int64_t j = a0_ + 1; j < d_; ++j) t.mul(factor(j, 0, m));
                r += t.value();
            }
        };

        Chain ch;
        ch.terms.assign(terms_.begin() + std::min(a0_ + 1, d_), terms_.end());

        // used = mu^2 + sum_{j > current} (N_j + mu)^2 in the series case
        std::function<void(std::int64_t, std::int64_t)> pick_n = [&](std::int64_t j, std::int64_t used) {
            if (j < 0) {
                if (series) {
                    ch.anchor = mu;
                    ch.fixed = bound + slack_ - used;
                    ch.per_first = 0;
                } else {
                    if (bound - big_n[0] - mu < 0) return;
                    ch.anchor = 0;
                    ch.fixed = slack_;
                    ch.per_first = mu + slack_;
                }
                if (!has_mu || ch.terms.empty()) {
                    leaf();
                } else {
                    ch.run(m, static_cast<std::size_t>(a0_ + 1), admit, leaf);
                }
                return;
            }
            const std::int64_t above = big_n[static_cast<std::size_t>(j) + 1];
            for (std::int64_t v = 0;; ++v) {
                const std::int64_t nj_total = above + v;  // N_j
                std::int64_t next_used = used;
                if (series) {
                    next_used += (nj_total + mu) * (nj_total + mu);
                    if (next_used > bound + slack_) break;
                } else if (nj_total + mu > bound + slack_) {
                    break;
                }
                n[static_cast<std::size_t>(j)] = v;
                big_n[static_cast<std::size_t>(j)] = nj_total;
                pick_n(j - 1, next_used);
            }
            n[static_cast<std::size_t>(j)] = 0;
            big_n[static_cast<std::size_t>(j)] = above;
        };

        const std::int64_t mu_max = has_mu ? (series ? static_cast<std::int64_t>(detail::isqrt128(bound + slack_)) : bound + slack_) : 0;
        for (mu = 0; mu <= mu_max; ++mu) {
            std::fill(m.begin(), m.end(), 0);
            if (has_mu) m[static_cast<std::size_t>(a0_)] = mu;
            pick_n(a0_ - 1, series ? mu * mu : 0);
        }
        return r;
    }

    const FermionicSpec& s_;
    const CartanData& c_;
    std::int64_t d_;
    std::int64_t slack_;
    std::int64_t a0_ = 0;
    std::vector<ChainTerm> terms_;
};

// ---- special cases that are defined separately from the general formulas ----

bool is_21(const FermionicSpec& s) { return s.pair.a == 2 && s.pair.b == 1; }

LaurentPoly f21_double(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t m = 0; m <= L; ++m) {
        r.add_scaled(qbinomial_ref(2 * L + M - m, 2 * L) * qbinomial_ref(L, m), L * m);
    }
    return r;
}

LaurentPoly f21_limit_M(std::int64_t L) {
    LaurentPoly r;
    for (std::int64_t m = 0; m <= L; ++m) r.add_scaled(qbinomial_ref(L, m), L * m);
    return r;
}

LaurentPoly h21_double(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L - 1; ++n) {
        r.add_scaled(qbinomial_ref(2 * L + M - n - 1, 2 * L - 1) * qbinomial_ref(L - 1, n), n * n);
    }
    return r;
}

// (q)_{2L} times the M -> infinity limit of h21_double: the boundary factor tends to 1/(q)_{2L-1}.
LaurentPoly h21_limit_M(std::int64_t L) {
    if (L == 0) return {};
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L - 1; ++n) r.add_scaled(qbinomial_ref(L - 1, n), n * n);
    LaurentPoly out = r;
    out.add_scaled(r, 2 * L, -1);
    return out;
}

void require_nonneg(std::int64_t v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace

std::vector<LatticePoint> lattice_points(const FermionicSpec& spec, std::int64_t L, std::int64_t M) {
    if (spec.mode != BoundMode::double_bounded && spec.mode != BoundMode::limit_M) {
        throw DomainError("lattice points are listed for the double-bounded and limit_M sums only");
    }
    if ((spec.family == Family::f || spec.family == Family::H) && is_21(spec)) {
        throw DomainError("the pair (2,1) has a separately defined sum for this family");
    }
    require_nonneg(L, "L");
    Engine e(spec);
    return e.points(L, spec.mode == BoundMode::double_bounded ? M : -1);
}

LaurentPoly eval_double(const FermionicSpec& spec, std::int64_t L, std::int64_t M) {
    require_nonneg(L, "L");
    require_nonneg(M, "M");
    if (is_21(spec) && spec.family == Family::f) return f21_double(L, M);
    if (is_21(spec) && spec.family == Family::H) return h21_double(L, M);
    return Engine(spec).sum_m(L, M);
}

std::variant<LaurentPoly, TruncatedSeries> eval_limit(const FermionicSpec& spec, std::int64_t bound) {
    switch (spec.mode) {
        case BoundMode::double_bounded:
            throw std::invalid_argument("eval_limit needs a limit mode");
        case BoundMode::limit_M:
            require_nonneg(bound, "L");
            if (is_21(spec) && spec.family == Family::f) return f21_limit_M(bound);
            if (is_21(spec) && spec.family == Family::H) return h21_limit_M(bound);
            return Engine(spec).sum_m(bound, -1);
        case BoundMode::limit_L:
            require_nonneg(bound, "M");
            if (spec.family == Family::H || spec.family == Family::I) {
                throw DomainError("the L -> infinity limit is defined for the F and f families only");
            }
            if (spec.family == Family::f && spec.pair.b == 1) {
                if (spec.pair.a == 2) return poch_quotient(2 * bound, {bound});
                return eval_limit_L({spec.pair.a - 1, 1}, Family::F, bound, spec.options);
            }
            return Engine(spec).sum_limit(false, bound);
        case BoundMode::limit_both:
            if (bound < 0) throw std::invalid_argument("series order must be nonnegative");
            if (spec.family == Family::H) throw DomainError("no double limit is defined for the H family");
            if (spec.family == Family::f && spec.pair.b == 1) {
                if (spec.pair.a == 2) return TruncatedSeries::one(bound);
                return eval_limit_both({spec.pair.a - 1, 1}, Family::F, bound, spec.options);
            }
            return TruncatedSeries::from_poly(Engine(spec).sum_limit(true, bound), bound);
    }
    throw std::invalid_argument("unknown bound mode");
}

LaurentPoly eval_F(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& o) {
    return eval_double(FermionicSpec::make(p, Family::F, BoundMode::double_bounded, o), L, M);
}
LaurentPoly eval_f(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& o) {
    return eval_double(FermionicSpec::make(p, Family::f, BoundMode::double_bounded, o), L, M);
}
LaurentPoly eval_H(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& o) {
    return eval_double(FermionicSpec::make(p, Family::H, BoundMode::double_bounded, o), L, M);
}
LaurentPoly eval_I(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& o) {
    return eval_double(FermionicSpec::make(p, Family::I, BoundMode::double_bounded, o), L, M);
}

LaurentPoly eval_limit_M(CoprimePair p, Family family, std::int64_t L, const EvalOptions& o) {
    return std::get<LaurentPoly>(eval_limit(FermionicSpec::make(p, family, BoundMode::limit_M, o), L));
}
LaurentPoly eval_limit_L(CoprimePair p, Family family, std::int64_t M, const EvalOptions& o) {
    return std::get<LaurentPoly>(eval_limit(FermionicSpec::make(p, family, BoundMode::limit_L, o), M));
}
TruncatedSeries eval_limit_both(CoprimePair p, Family family, std::int64_t T, const EvalOptions& o) {
    return std::get<TruncatedSeries>(eval_limit(FermionicSpec::make(p, family, BoundMode::limit_both, o), T));
}

}  // namespace burgetree
