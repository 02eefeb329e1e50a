#include <map>
#include <stdexcept>
#include <string>

#include "burgetree/errors.hpp"
#include "burgetree/qcombinat.hpp"

namespace burgetree {

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
    std::int64_t d = p / q;
    if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
    return d;
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) { return -floor_div(-p, q); }

LaurentPoly b_kernel(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b) {
    const LaurentPoly& x = qbinomial_ref(L + M + a - b, L + a);
    if (x.is_zero()) return {};
    const LaurentPoly& y = qbinomial_ref(L + M - a + b, L - a);
    if (y.is_zero()) return {};
    return x * y;
}

namespace {

std::int64_t integral_exponent(const Rational& e, const char* what, std::int64_t j) {
    if (!e.is_integer()) {
        throw DomainError(std::string(what) + ": exponent " + e.to_string() + " at j=" + std::to_string(j) +
                          " is not an integer");
    }
    return e.num();
}

}  // namespace

LaurentPoly g_poly(std::int64_t N, std::int64_t M, const Rational& alpha, const Rational& beta, std::int64_t K) {
    if (K < 1) throw std::invalid_argument("g_poly: K must be positive");
    LaurentPoly r;
    if (M + N < 0) return r;
    for (std::int64_t j = ceil_div(-M, K); j <= floor_div(N, K); ++j) {
        const LaurentPoly& bin = qbinomial_ref(M + N, N - K * j);
        if (bin.is_zero()) continue;
        const Rational e = Rational(K * j) * ((alpha + beta) * Rational(j) + alpha - beta) / Rational(2);
        r.add_scaled(bin, integral_exponent(e, "g_poly", j), (j % 2 == 0) ? 1 : -1);
    }
    return r;
}

LaurentPoly d_poly(std::int64_t K, std::int64_t i, std::int64_t N, std::int64_t M, const Rational& alpha,
                   const Rational& beta) {
    if (K < 1) throw std::invalid_argument("d_poly: K must be positive");
    LaurentPoly r;
    if (M + N < 0) return r;
    const Rational s = alpha + beta;
    // first part: 0 <= M-Kj <= M+N
    for (std::int64_t j = ceil_div(-N, K); j <= floor_div(M, K); ++j) {
        const LaurentPoly& bin = qbinomial_ref(M + N, M - K * j);
        if (bin.is_zero()) continue;
        const Rational e = Rational(j) * (s * Rational(K * j) + Rational(K) * beta - s * Rational(i));
        r.add_scaled(bin, integral_exponent(e, "d_poly", j), 1);
    }
    // second part: 0 <= M-Kj-i <= M+N
    for (std::int64_t j = ceil_div(-N - i, K); j <= floor_div(M - i, K); ++j) {
        const LaurentPoly& bin = qbinomial_ref(M + N, M - K * j - i);
        if (bin.is_zero()) continue;
        const Rational e = (s * Rational(j) + beta) * Rational(K * j + i);
        r.add_scaled(bin, integral_exponent(e, "d_poly", j), -1);
    }
    return r;
}

BorweinSplit borwein_split(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("borwein_split: n must be nonnegative");
    LaurentPoly prod = LaurentPoly::one();
    for (std::int64_t k = 1; k <= n; ++k) {
        for (std::int64_t e : {3 * k - 2, 3 * k - 1}) {
            LaurentPoly f = prod;
            f.add_scaled(prod, e, -1);
            prod = std::move(f);
        }
    }
    std::map<std::int64_t, Integer> parts[3];
    prod.for_each_term([&](std::int64_t e, const Integer& c) {
        const std::int64_t r = e % 3;
        parts[r][e / 3] = (r == 0) ? c : -c;
    });
    return {LaurentPoly::from_map(parts[0]), LaurentPoly::from_map(parts[1]), LaurentPoly::from_map(parts[2])};
}

}  // namespace burgetree
