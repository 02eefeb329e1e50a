#pragma once

// Explicit sum sides written out term by term, independent of the lattice
// machinery in the fermionic module.

#include <cstdint>

#include "burgetree/laurent_poly.hpp"
#include "burgetree/truncated_series.hpp"

namespace burgetree::oracle {

// Doubly bounded finite sums, (L, M).
LaurentPoly square_sum_bounded(std::int64_t L, std::int64_t M);    // sum q^{n^2} [2L+M-n, 2L][L, n]
LaurentPoly comp_lhs(std::int64_t L, std::int64_t M);
LaurentPoly comp_rhs(std::int64_t L, std::int64_t M);
LaurentPoly comp2_lhs(std::int64_t L, std::int64_t M);
LaurentPoly comp2_rhs(std::int64_t L, std::int64_t M);
LaurentPoly shifted_square_sum(std::int64_t L, std::int64_t M);    // sum q^{n^2} [2L+M-n-1, 2L-1][L-1, n]
LaurentPoly vanishing_companion(std::int64_t L, std::int64_t M);   // the zero added to pass between the two shifted forms
LaurentPoly shifted_two_binomial_lhs(std::int64_t L, std::int64_t M);
LaurentPoly rr1_doubly_bounded(std::int64_t L, std::int64_t M);    // (n, i) sum of the (3,1) reciprocal family
LaurentPoly rr2_doubly_bounded(std::int64_t L, std::int64_t M);    // (n, i) sum for the q -> 1/q partner of H_{3,1}
LaurentPoly ag_doubly_bounded(std::int64_t k, std::int64_t L, std::int64_t M);  // (k+1, 1) reciprocal family
LaurentPoly h32_in_ni(std::int64_t L, std::int64_t M);
LaurentPoly h32_in_m(std::int64_t L, std::int64_t M);
LaurentPoly h31_in_m(std::int64_t L, std::int64_t M);
LaurentPoly h31_in_ni(std::int64_t L, std::int64_t M);
LaurentPoly even_seed_rhs(std::int64_t L, std::int64_t M);         // [L+M, M] at q^2

// One-bound polynomials.
LaurentPoly euler_bounded(std::int64_t L);         // sum q^{nL} [L, n]
LaurentPoly rr_bounded(std::int64_t L);            // sum q^{n^2} [L, n]
LaurentPoly ismail_product(std::int64_t L);        // (1 + q^L)(-q^2; q^2)_{L-1}
LaurentPoly rr1_single(std::int64_t L);
LaurentPoly rr2_single(std::int64_t L);
LaurentPoly odd_isolated_rhs(std::int64_t L);      // sum q^{n(n+1)} [L, n]
LaurentPoly ftilde_75(std::int64_t M);
LaurentPoly ftilde_72(std::int64_t M);
// Five explicit G(n,n) sums, index 0..4 in the order
// (1/2,1,2) (1,4/3,3) (5/4,3/2,4) (1,3/2,2) (3/2,7/4,4).
LaurentPoly nn_sum(int which, std::int64_t n);

// Series to order T.
TruncatedSeries rr_series(int which, std::int64_t T);  // which = 1: q^{n^2}, 2: q^{n(n+1)} over (q)_n
TruncatedSeries ag_sum(std::int64_t k, std::int64_t T);
TruncatedSeries bressoud_sum(std::int64_t k, std::int64_t T);
// Fibonacci families; variant 1..4 as in the statements, k >= 4 (3, 4 need k >= 5).
TruncatedSeries fib_sum(int variant, std::int64_t k, std::int64_t T);
// Even-modulus Fibonacci families: first (k >= 4) and second (k >= 4, k = 4 being the extension).
TruncatedSeries even_fib_sum(int family, std::int64_t k, std::int64_t T);
// Four-fold displays for (7,5) and (7,2); reciprocal selects the f variant.
TruncatedSeries display_75(bool reciprocal, std::int64_t T);
TruncatedSeries display_72(bool reciprocal, std::int64_t T);
// (k, k-1) family in M_j = m_j - m_{j-1} coordinates, k >= 3.
TruncatedSeries kk1_sum(bool reciprocal, std::int64_t k, std::int64_t T);

std::int64_t fibonacci(std::int64_t k);

}  // namespace burgetree::oracle
