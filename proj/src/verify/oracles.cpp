#include "oracles.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

#include "burgetree/qcombinat.hpp"

namespace burgetree::oracle {

namespace {

using Vec = std::vector<std::int64_t>;

// Visit every v with 0 <= v_j <= caps[j].
void box_walk(const Vec& caps, const std::function<void(const Vec&)>& visit) {
    Vec v(caps.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level == caps.size()) {
            visit(v);
            return;
        }
        for (std::int64_t x = 0; x <= caps[level]; ++x) {
            v[level] = x;
            rec(level + 1);
        }
    };
    rec(0);
}

std::int64_t isqrt(std::int64_t x) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

struct Bin {
    std::int64_t top;
    std::int64_t bottom;
    std::int64_t base = 1;
};

struct Poch {
    std::int64_t n;
    std::int64_t base = 1;
};

// Accumulates q^E / prod (q^base; q^base)_n * prod [top, bottom]_{q^base} to order T.
class SeriesSum {
public:
    explicit SeriesSum(std::int64_t T) : T_(T), sum_(T) {}
    void add(std::int64_t E, const std::vector<Poch>& denominators, const std::vector<Bin>& binomials) {
        if (E < 0) throw std::logic_error("negative exponent in a series oracle");
        if (E > T_) return;
        for (const auto& b : binomials) {
            if (b.bottom < 0 || b.bottom > b.top) return;
        }
        for (const auto& d : denominators) {
            if (d.n < 0) return;
        }
        TruncatedSeries term = TruncatedSeries::from_poly(LaurentPoly::monomial(E), T_);
        for (const auto& d : denominators) term = term * reciprocal_poch(d.n, d.base, T_);
        for (const auto& b : binomials) term = term * TruncatedSeries::from_poly(qbinomial(b.top, b.bottom, b.base).truncated(T_), T_);
        sum_ += term;
    }
    const TruncatedSeries& value() const { return sum_; }

private:
    std::int64_t T_;
    TruncatedSeries sum_;
};

LaurentPoly bin(std::int64_t n, std::int64_t m, std::int64_t base = 1) { return qbinomial(n, m, base); }

// Single alternating sum sum_j (-1)^j q^{e(j)} f(j) over |j| <= R.
LaurentPoly alternating(std::int64_t R, const std::function<std::int64_t(std::int64_t)>& e,
                        const std::function<LaurentPoly(std::int64_t)>& f) {
    LaurentPoly out;
    for (std::int64_t j = -R; j <= R; ++j) {
        const LaurentPoly t = f(j);
        if (t.is_zero()) continue;
        out.add_scaled(t, e(j), (j % 2 != 0) ? -1 : 1);
    }
    return out;
}

}  // namespace

std::int64_t fibonacci(std::int64_t k) {
    std::int64_t a = 0, b = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        const std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

LaurentPoly square_sum_bounded(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(bin(2 * L + M - n, 2 * L) * bin(L, n), n * n);
    return r;
}

LaurentPoly comp_lhs(std::int64_t L, std::int64_t M) {
    return alternating(
        L + M + 1, [](std::int64_t j) { return j * (5 * j + 3) / 2; },
        [&](std::int64_t j) { return bin(L + M + j, M - j - 1) * bin(L + M - j, M + j); });
}

LaurentPoly comp_rhs(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(bin(2 * L + M - n, 2 * L + 1) * bin(L, n), n * (n + 1));
    return r;
}

LaurentPoly comp2_lhs(std::int64_t L, std::int64_t M) {
    return alternating(
        L + M + 1, [](std::int64_t j) { return j * (5 * j + 3) / 2; },
        [&](std::int64_t j) { return bin(L + M + j + 1, M - j) * bin(L + M - j, M + j); });
}

LaurentPoly comp2_rhs(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(bin(2 * L + M - n + 1, 2 * L + 1) * bin(L, n), n * (n + 1));
    return r;
}

LaurentPoly shifted_square_sum(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(bin(2 * L + M - n - 1, 2 * L - 1) * bin(L - 1, n), n * n);
    return r;
}

LaurentPoly vanishing_companion(std::int64_t L, std::int64_t M) {
    return alternating(
               L + M + 1, [](std::int64_t j) { return 5 * j * (j + 1) / 2; },
               [&](std::int64_t j) { return bin(L + M + j, M - j - 1) * bin(L + M - j - 1, M + j); })
        .shifted(L + 1);
}

LaurentPoly shifted_two_binomial_lhs(std::int64_t L, std::int64_t M) {
    return alternating(
        L + M + 1, [](std::int64_t j) { return j * (5 * j + 1) / 2; },
        [&](std::int64_t j) { return bin(L + M + j, M - j) * bin(L + M - j - 1, M + j); });
}

LaurentPoly rr1_doubly_bounded(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) {
        for (std::int64_t i = 0; i + n <= L; ++i) {
            r.add_scaled(bin(2 * L + M - n - i, 2 * L) * bin(2 * L - 2 * i - n, n) * bin(L - i - n, i), n * n + i * (L + n));
        }
    }
    return r;
}

LaurentPoly rr2_doubly_bounded(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) {
        for (std::int64_t i = 0; i + n <= L; ++i) {
            r.add_scaled(bin(2 * L + M - i - n, 2 * L) * bin(2 * L - 2 * i - n - 1, n) * bin(L - i - n - 1, i),
                         n * (n + 1) + i * (L + n + 1));
        }
    }
    return r;
}

LaurentPoly ag_doubly_bounded(std::int64_t k, std::int64_t L, std::int64_t M) {
    if (k < 2) throw std::invalid_argument("ag_doubly_bounded needs k >= 2");
    // variables n_1..n_{k-1}, i
    Vec caps(static_cast<std::size_t>(k), 2 * L);
    caps.back() = L;
    LaurentPoly r;
    box_walk(caps, [&](const Vec& v) {
        const std::int64_t i = v.back();
        Vec N(static_cast<std::size_t>(k + 1), 0);  // N[j] = n_j + ... + n_{k-1}, N[k] = 0
        for (std::int64_t j = k - 1; j >= 1; --j) N[j] = N[j + 1] + v[j - 1];
        Vec Nt(static_cast<std::size_t>(k + 1), 0);  // Nt[j] = N_1 + ... + N_{j-1}
        for (std::int64_t j = 2; j <= k; ++j) Nt[j] = Nt[j - 1] + N[j - 1];
        std::int64_t E = i * (L + Nt[k]);
        for (std::int64_t j = 1; j <= k - 1; ++j) E += N[j] * N[j];
        LaurentPoly t = bin(2 * L + M - N[1] - i, 2 * L) * bin(L - i * (k - 1) - Nt[k], i);
        for (std::int64_t j = 1; j <= k - 1 && !t.is_zero(); ++j) {
            t = t * bin(2 * L - 2 * i * j - N[j] - N[j + 1] - 2 * Nt[j], v[j - 1]);
        }
        if (!t.is_zero()) r.add_scaled(t, E);
    });
    return r;
}

LaurentPoly h32_in_ni(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t i = 0; i <= L; ++i) {
        for (std::int64_t n = 0; n <= i; ++n) {
            r.add_scaled(bin(2 * L + M - i, 2 * L) * bin(L + i - n - 1, 2 * i - 1) * bin(i - 1, n), i * i + n * n);
        }
    }
    return r;
}

LaurentPoly h32_in_m(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t m1 = 0; m1 <= L; ++m1) {
        for (std::int64_t m2 = 0; m2 <= m1; ++m2) {
            const std::int64_t s = m1 - m2 - 1;
            r.add_scaled(bin(2 * L + M - m1, 2 * L) * bin(L + m2, 2 * m1 - 1) * bin(m1 - 1, m2), m1 * m1 + s * s);
        }
    }
    return r;
}

LaurentPoly h31_in_m(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t m1 = 0; m1 <= L; ++m1) {
        for (std::int64_t m2 = 0; m2 <= m1; ++m2) {
            const std::int64_t s = m1 - m2 - 1;
            r.add_scaled(bin(L + M + m1, 2 * L) * bin(L + m2, 2 * m1 - 1) * bin(m1 - 1, m2), (L - m1) * (L - m1) + s * s);
        }
    }
    return r;
}

LaurentPoly h31_in_ni(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t i = 0; i <= L; ++i) {
        for (std::int64_t n = 0; n <= L; ++n) {
            r.add_scaled(bin(2 * L + M - i, 2 * L) * bin(2 * L - i - n - 1, 2 * L - 2 * i - 1) * bin(L - i - 1, n),
                         i * i + n * n);
        }
    }
    return r;
}

LaurentPoly even_seed_rhs(std::int64_t L, std::int64_t M) { return bin(L + M, M, 2); }

LaurentPoly euler_bounded(std::int64_t L) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(bin(L, n), n * L);
    return r;
}

LaurentPoly rr_bounded(std::int64_t L) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(bin(L, n), n * n);
    return r;
}

LaurentPoly ismail_product(std::int64_t L) {
    if (L < 1) throw std::invalid_argument("ismail_product needs L >= 1");
    LaurentPoly r = LaurentPoly::one() + LaurentPoly::monomial(L);
    for (std::int64_t k = 1; k <= L - 1; ++k) r = r * (LaurentPoly::one() + LaurentPoly::monomial(2 * k));
    return r;
}

LaurentPoly rr1_single(std::int64_t L) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) {
        for (std::int64_t i = 0; i + n <= L; ++i) r.add_scaled(bin(2 * L - 2 * i - n, n) * bin(L - i - n, i), n * n + i * (L + n));
    }
    return r;
}

LaurentPoly rr2_single(std::int64_t L) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) {
        for (std::int64_t i = 0; i + n <= L; ++i) {
            r.add_scaled(bin(2 * L - 2 * i - n - 1, n) * bin(L - i - n - 1, i), n * (n + 1) + i * (L + n + 1));
        }
    }
    return r;
}

LaurentPoly odd_isolated_rhs(std::int64_t L) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(bin(L, n), n * (n + 1));
    return r;
}

LaurentPoly ftilde_75(std::int64_t M) {
    LaurentPoly r;
    box_walk({M, M, M, M}, [&](const Vec& m) {
        const std::int64_t m1 = m[0], m2 = m[1], m3 = m[2], m4 = m[3];
        LaurentPoly t = bin(m1 + m2 - m3, 2 * m2);
        if (t.is_zero()) return;
        t = t * bin(m2 + m3 - m4, 2 * m3) * bin(m3, m4);
        if (t.is_zero()) return;
        // (q)_{2M} / ((q)_{M-m1} (q)_{2m1}) = [2M, 2m1] (1-q^{M-m1+1}) ... (1-q^{2M-2m1})
        t = t * bin(2 * M, 2 * m1);
        for (std::int64_t k = M - m1 + 1; k <= 2 * M - 2 * m1; ++k) t = t * (LaurentPoly::one() - LaurentPoly::monomial(k));
        r.add_scaled(t, m1 * m1 + (m1 - m2) * (m1 - m2) + m3 * m3 + m4 * m4);
    });
    return r;
}

LaurentPoly ftilde_72(std::int64_t M) {
    LaurentPoly r;
    const Vec caps{M, M, M, M};
    box_walk(caps, [&](const Vec& v) {
        const std::int64_t n1 = v[0], n2 = v[1], m3 = v[2], m4 = v[3];
        const std::int64_t rest = M - m3 - n1 - n2;
        if (rest < 0 || m4 > m3) return;
        // (q)_{2M} / ((q)_{rest} (q)_{n1} (q)_{n2} (q)_{2 m3}) with rest + n1 + n2 + 2m3 = M + m3 <= 2M
        LaurentPoly t = bin(rest + n1, n1) * bin(rest + n1 + n2, n2) * bin(rest + n1 + n2 + 2 * m3, 2 * m3);
        for (std::int64_t k = M + m3 + 1; k <= 2 * M; ++k) t = t * (LaurentPoly::one() - LaurentPoly::monomial(k));
        t = t * bin(m3, m4);
        const std::int64_t a = n1 + n2 + m3, b = n2 + m3;
        r.add_scaled(t, a * a + b * b + m3 * m3 + m4 * m4);
    });
    return r;
}

LaurentPoly nn_sum(int which, std::int64_t n) {
    LaurentPoly r;
    switch (which) {
        case 0:
            for (std::int64_t m1 = 0; m1 <= n; ++m1) r.add_scaled(bin(n, m1), m1 * n);
            break;
        case 1:
            for (std::int64_t m1 = 0; m1 <= n; ++m1) {
                for (std::int64_t m2 = 0; m2 <= m1; ++m2) {
                    r.add_scaled(bin(n + m2, 2 * m1) * bin(m1, m2), (n - m1) * (n - m1) + (m1 - m2) * (m1 - m2));
                }
            }
            break;
        case 2:
        case 4:
            for (std::int64_t m1 = 0; m1 <= n; ++m1) {
                for (std::int64_t m2 = 0; 2 * m2 <= m1; ++m2) {
                    for (std::int64_t m3 = 0; m3 <= m2; ++m3) {
                        const std::int64_t e = n * (n - m1) + (which == 2 ? m2 * (m2 + m3) : m2 * m2 + m3 * m3);
                        r.add_scaled(bin(n, m1) * bin(m1, 2 * m2) * bin(m2, m3), e);
                    }
                }
            }
            break;
        case 3:
            for (std::int64_t m1 = 0; m1 <= n; ++m1) r.add_scaled(bin(n, m1), m1 * m1);
            break;
        default:
            throw std::invalid_argument("nn_sum: index out of range");
    }
    return r;
}

TruncatedSeries rr_series(int which, std::int64_t T) {
    SeriesSum s(T);
    for (std::int64_t n = 0; n * n <= T; ++n) s.add(which == 1 ? n * n : n * (n + 1), {{n}}, {});
    return s.value();
}

namespace {

// sum over n_1..n_{k-1} of q^{N_1^2+...+N_{k-1}^2} / prod (q)_{n_j}, last denominator at base `last_base`.
TruncatedSeries andrews_gordon_type(std::int64_t k, std::int64_t T, std::int64_t last_base) {
    if (k < 2) throw std::invalid_argument("multisum needs k >= 2");
    SeriesSum s(T);
    const std::int64_t R = isqrt(T);
    box_walk(Vec(static_cast<std::size_t>(k - 1), R), [&](const Vec& n) {
        std::int64_t E = 0, N = 0;
        std::vector<Poch> den;
        for (std::int64_t j = k - 2; j >= 0; --j) {
            N += n[static_cast<std::size_t>(j)];
            E += N * N;
        }
        for (std::int64_t j = 0; j < k - 1; ++j) den.push_back({n[static_cast<std::size_t>(j)], j == k - 2 ? last_base : 1});
        s.add(E, den, {});
    });
    return s.value();
}

}  // namespace

TruncatedSeries ag_sum(std::int64_t k, std::int64_t T) { return andrews_gordon_type(k, T, 1); }
TruncatedSeries bressoud_sum(std::int64_t k, std::int64_t T) { return andrews_gordon_type(k, T, 2); }

namespace {

// Shared shape of the Fibonacci families over m_1..m_{k-2}.
//  split_first: (q)_{m1}(q)_{2m2} head instead of (q)_{2m1}
//  cross_last : last square m_{k-2}^2 replaced by m_{k-3} m_{k-2}
//  last_base  : base of the final binomial [m_{k-3}, m_{k-2}]
TruncatedSeries fib_shape(std::int64_t k, std::int64_t T, bool split_first, bool cross_last, std::int64_t last_base) {
    const std::int64_t d = k - 2;
    if (d < 2 || (split_first && d < 3)) throw std::invalid_argument("Fibonacci family index too small");
    SeriesSum s(T);
    const std::int64_t R = isqrt(T);
    box_walk(Vec(static_cast<std::size_t>(d), R), [&](const Vec& v) {
        auto m = [&](std::int64_t j) { return v[static_cast<std::size_t>(j - 1)]; };
        std::int64_t E = 0;
        for (std::int64_t j = 1; j <= d; ++j) E += m(j) * m(j);
        if (split_first) E += 2 * m(1) * m(2) + m(2) * m(2);  // (m1+m2)^2 + m2^2 in place of m1^2 + m2^2
        if (cross_last) E += m(d - 1) * m(d) - m(d) * m(d);
        std::vector<Poch> den;
        std::vector<Bin> bins;
        std::int64_t first_product = 2;
        if (split_first) {
            den = {{m(1)}, {2 * m(2)}};
            first_product = 3;
        } else {
            den = {{2 * m(1)}};
        }
        for (std::int64_t j = first_product; j <= d - 1; ++j) bins.push_back({m(j - 1) + m(j) - m(j + 1), 2 * m(j)});
        bins.push_back({m(d - 1), m(d), last_base});
        s.add(E, den, bins);
    });
    return s.value();
}

}  // namespace

TruncatedSeries fib_sum(int variant, std::int64_t k, std::int64_t T) {
    switch (variant) {
        case 1: return fib_shape(k, T, false, false, 1);
        case 2: return fib_shape(k, T, false, true, 1);
        case 3: return fib_shape(k, T, true, false, 1);
        case 4: return fib_shape(k, T, true, true, 1);
        default: throw std::invalid_argument("Fibonacci variant must be 1..4");
    }
}

TruncatedSeries even_fib_sum(int family, std::int64_t k, std::int64_t T) {
    if (family == 1) return fib_shape(k, T, false, false, 2);
    if (family != 2) throw std::invalid_argument("even Fibonacci family must be 1 or 2");
    if (k >= 5) return fib_shape(k, T, true, false, 2);
    if (k != 4) throw std::invalid_argument("second even Fibonacci family needs k >= 4");
    SeriesSum s(T);
    const std::int64_t R = isqrt(T);
    box_walk({R, R}, [&](const Vec& m) {
        s.add((m[0] + m[1]) * (m[0] + m[1]) + m[1] * m[1], {{m[0]}, {m[1], 2}}, {});
    });
    return s.value();
}

TruncatedSeries display_75(bool reciprocal, std::int64_t T) {
    SeriesSum s(T);
    const std::int64_t R = isqrt(T);
    box_walk({R, 2 * R, R, R}, [&](const Vec& m) {
        const std::int64_t E = m[0] * m[0] + (m[0] - m[1]) * (m[0] - m[1]) + m[2] * m[2] + (reciprocal ? m[2] * m[3] : m[3] * m[3]);
        s.add(E, {{2 * m[0]}}, {{m[0] + m[1] - m[2], 2 * m[1]}, {m[1] + m[2] - m[3], 2 * m[2]}, {m[2], m[3]}});
    });
    return s.value();
}

TruncatedSeries display_72(bool reciprocal, std::int64_t T) {
    SeriesSum s(T);
    const std::int64_t R = isqrt(T);
    box_walk({R, R, R, R}, [&](const Vec& v) {
        const std::int64_t n1 = v[0], n2 = v[1], m3 = v[2], m4 = v[3];
        const std::int64_t a = n1 + n2 + m3, b = n2 + m3;
        const std::int64_t E = a * a + b * b + m3 * m3 + (reciprocal ? m3 * m4 : m4 * m4);
        s.add(E, {{n1}, {n2}, {2 * m3}}, {{m3, m4}});
    });
    return s.value();
}

TruncatedSeries kk1_sum(bool reciprocal, std::int64_t k, std::int64_t T) {
    if (k < 3) throw std::invalid_argument("(k, k-1) family needs k >= 3");
    const std::int64_t d = k - 1;
    SeriesSum s(T);
    const std::int64_t R = isqrt(T);
    Vec caps;
    for (std::int64_t j = 1; j <= d; ++j) caps.push_back(j * R);
    box_walk(caps, [&](const Vec& v) {
        auto m = [&](std::int64_t j) { return j == 0 ? 0 : v[static_cast<std::size_t>(j - 1)]; };
        std::int64_t E = 0;
        for (std::int64_t j = 1; j <= d; ++j) E += (m(j) - m(j - 1)) * (m(j) - m(j - 1));
        if (reciprocal) {
            const std::int64_t Md = m(d) - m(d - 1);
            E -= Md * Md + m(d - 1) * Md;
        }
        std::vector<Bin> bins;
        for (std::int64_t j = 2; j <= d - 1; ++j) bins.push_back({m(j - 1) + m(j + 1), 2 * m(j)});
        bins.push_back({m(d - 1), m(d)});
        for (const auto& b : bins) {
            if (b.bottom < 0 || b.bottom > b.top) return;
        }
        s.add(E, {{2 * m(1)}}, bins);
    });
    return s.value();
}

}  // namespace burgetree::oracle
