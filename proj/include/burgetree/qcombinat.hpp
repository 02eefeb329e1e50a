#pragma once

#include <cstdint>

#include "burgetree/laurent_poly.hpp"
#include "burgetree/rational.hpp"

namespace burgetree {

// Gaussian binomial [n over m] evaluated at q^base_exp; zero unless 0 <= m <= n.
LaurentPoly qbinomial(std::int64_t n, std::int64_t m, std::int64_t base_exp = 1);
// Memoised base-q value; the reference stays valid for the life of the process.
const LaurentPoly& qbinomial_ref(std::int64_t n, std::int64_t m);

// (q^base_exp; q^base_exp)_n
LaurentPoly q_poch(std::int64_t n, std::int64_t base_exp = 1);

// B(L,M,a,b) = [L+M+a-b over L+a] [L+M-a+b over L-a]
LaurentPoly b_kernel(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b);

// sum_j (-1)^j q^{K j ((alpha+beta) j + alpha - beta) / 2} [M+N over N-Kj]
LaurentPoly g_poly(std::int64_t N, std::int64_t M, const Rational& alpha, const Rational& beta, std::int64_t K);

// Hook-difference generating function D_{K,i}(N,M; alpha, beta):
// sum_j q^{j((alpha+beta)Kj + K beta - (alpha+beta) i)} [M+N over M-Kj]
//     - q^{((alpha+beta)j + beta)(Kj + i)} [M+N over M-Kj-i]
LaurentPoly d_poly(std::int64_t K, std::int64_t i, std::int64_t N, std::int64_t M, const Rational& alpha,
                   const Rational& beta);

// (q,q^2;q^3)_n = A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3)
struct BorweinSplit {
    LaurentPoly a, b, c;
};
BorweinSplit borwein_split(std::int64_t n);

// floor and ceiling of p/q for q > 0
std::int64_t floor_div(std::int64_t p, std::int64_t q);
std::int64_t ceil_div(std::int64_t p, std::int64_t q);

}  // namespace burgetree
