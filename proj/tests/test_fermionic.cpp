#include <doctest.h>

#include <numeric>

#include "burgetree/burge.hpp"
#include "burgetree/fermionic.hpp"
#include "burgetree/qcombinat.hpp"
#include "verify/oracles.hpp"

using namespace burgetree;

namespace {
LaurentPoly P(std::initializer_list<std::pair<std::int64_t, std::int64_t>> t) { return LaurentPoly::from_terms(t); }
}  // namespace

TEST_CASE("F at the smallest pair") {
    CHECK(eval_F({2, 1}, 1, 1) == P({{0, 1}, {1, 2}, {2, 1}}));
    for (std::int64_t L = 0; L <= 5; ++L) {
        for (std::int64_t M = 0; M <= 5; ++M) {
            LaurentPoly lower, upper;
            for (std::int64_t m = 0; m <= L; ++m) {
                lower.add_scaled(qbinomial(2 * L + M - m, 2 * L) * qbinomial(L, m), m * m);
                upper.add_scaled(qbinomial(L + M + m, 2 * L) * qbinomial(L, m), m * m + L * L - 2 * L * m);
            }
            CHECK(eval_F({2, 1}, L, M) == lower);
            CHECK(eval_F({2, 1}, L, M) == upper);
        }
    }
}

TEST_CASE("families at L = 0") {
    for (std::int64_t a = 2; a <= 7; ++a) {
        for (std::int64_t b = 1; b < a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (std::int64_t M = 0; M <= 4; ++M) {
                CHECK(eval_F({a, b}, 0, M) == LaurentPoly::one());
                CHECK(eval_f({a, b}, 0, M) == LaurentPoly::one());
                CHECK(eval_I({a, b}, 0, M) == LaurentPoly::one());
            }
            if (a >= 3) {
                const LaurentPoly h = eval_H({a, b}, 0, 0);
                CHECK((h.is_zero() || h.is_monomial()));
            }
        }
    }
}

TEST_CASE("f family") {
    // [3,2][1,0] + q [2,2][1,1]
    CHECK(eval_f({2, 1}, 1, 1) == P({{0, 1}, {1, 2}, {2, 1}}));
    for (std::int64_t L = 0; L <= 4; ++L) {
        for (std::int64_t M = 0; M <= 4; ++M) CHECK(eval_f({3, 1}, L, M) == oracle::rr1_doubly_bounded(L, M));
    }
}

TEST_CASE("H family") {
    CHECK(eval_H({2, 1}, 1, 1) == P({{0, 1}, {1, 1}}));
    for (std::int64_t L = 0; L <= 4; ++L) {
        for (std::int64_t M = 0; M <= 4; ++M) CHECK(eval_H({3, 2}, L, M) == oracle::h32_in_m(L, M));
    }
}

TEST_CASE("I family") {
    CHECK(eval_I({2, 1}, 1, 1) == P({{0, 1}, {1, 2}, {2, 1}}));
    for (std::int64_t L = 0; L <= 5; ++L) {
        for (std::int64_t M = 0; M <= 5; ++M) CHECK(bosonic_eval(even_spec({3, 2}), L, M) == eval_I({3, 2}, L, M));
    }
}

TEST_CASE("limits") {
    CHECK(eval_limit_M({2, 1}, Family::F, 2) == P({{0, 1}, {1, 1}, {2, 1}, {4, 1}}));
    CHECK(eval_limit_M({2, 1}, Family::f, 2) == P({{0, 1}, {2, 1}, {3, 1}, {4, 1}}));
    for (std::int64_t M = 0; M <= 4; ++M) {
        CHECK(eval_limit_L({7, 5}, Family::F, M) == oracle::ftilde_75(M));
        CHECK(eval_limit_L({7, 2}, Family::F, M) == oracle::ftilde_72(M));
    }
    const TruncatedSeries rr = eval_limit_both({2, 1}, Family::F, 10);
    const std::int64_t expect[] = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6};
    REQUIRE(rr.order() == 10);
    for (std::int64_t k = 0; k <= 10; ++k) CHECK(rr.coeff(k) == Integer(expect[k]));
    CHECK_THROWS(eval_limit_both({2, 1}, Family::F, -1));
}

TEST_CASE("lattice points are listed in lexicographic order") {
    const FermionicSpec s = FermionicSpec::make({7, 5}, Family::F, BoundMode::double_bounded);
    const auto pts = lattice_points(s, 3, 2);
    REQUIRE_FALSE(pts.empty());
    for (std::size_t k = 1; k < pts.size(); ++k) CHECK(pts[k - 1].m < pts[k].m);
    CHECK(eval_double(s, 3, 2) == eval_F({7, 5}, 3, 2));
}
