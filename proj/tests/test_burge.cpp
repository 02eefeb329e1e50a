#include <doctest.h>

#include "burgetree/burge.hpp"
#include "burgetree/errors.hpp"
#include "burgetree/fermionic.hpp"
#include "burgetree/qcombinat.hpp"
#include "verify/oracles.hpp"

using namespace burgetree;

namespace {
LaurentPoly P(std::initializer_list<std::pair<std::int64_t, std::int64_t>> t) { return LaurentPoly::from_terms(t); }
BosonicSpec plain(std::int64_t a, std::int64_t b, Rational c2, Rational c1) { return {a, b, 0, 0, c2, c1, Rational(0), true}; }
}  // namespace

TEST_CASE("alternating sums") {
    CHECK(bosonic_eval(plain(1, 1, Rational(3, 2), Rational(1, 2)), 1, 1) == P({{0, 1}, {1, 1}}));
    CHECK(bosonic_eval(plain(2, 1, Rational(5, 2), Rational(1, 2)), 1, 1) == P({{0, 1}, {1, 2}, {2, 1}}));
    for (std::int64_t M = 0; M <= 4; ++M) CHECK(bosonic_eval(thmmain_spec({2, 1}), 0, M) == LaurentPoly::one());
    BosonicSpec shifted = plain(2, 1, Rational(5, 2), Rational(1, 2));
    shifted.c0 = Rational(3);
    CHECK(bosonic_eval(shifted, 0, 2) == LaurentPoly::monomial(3));
    CHECK_THROWS_AS(bosonic_eval(plain(1, 1, Rational(1, 2), Rational(0)), 1, 1), DomainError);
}

TEST_CASE("bosonic coefficient sets") {
    const BosonicSpec s = thmmain_spec({7, 5});
    CHECK(s.c2 == Rational(71, 2));
    CHECK(s.c1 == Rational(1, 2));
    CHECK(mainrecip_spec({7, 5}).c2 == Rational(69, 2));
    CHECK(even_spec({7, 5}).c2 == Rational(35));
    CHECK_THROWS_AS(thmmain2_spec({2, 1}), DomainError);
}

TEST_CASE("single transform steps") {
    const PolyFamily diag = [](std::int64_t L, std::int64_t M) { return qbinomial(L + M, M); };
    CHECK(transform_step(Direction::B2, diag, 1, 1) == P({{0, 1}, {1, 2}, {2, 1}}));
    const PolyFamily one = [](std::int64_t, std::int64_t) { return LaurentPoly::one(); };
    for (std::int64_t M = 0; M <= 4; ++M) CHECK(transform_step(Direction::B1, one, 0, M) == LaurentPoly::one());
}

TEST_CASE("transform side condition") {
    for (std::int64_t a = 0; a <= 3; ++a) {
        for (std::int64_t b = 0; b <= 3; ++b) {
            for (std::int64_t L = 0; L <= 3; ++L) {
                for (std::int64_t M = 0; M <= 3; ++M) CHECK(condition_check(L, M, a, b));
            }
        }
    }
    CHECK(condition_check(0, 2, 0, 1));
    // Every instance where the transform identity breaks must be flagged, and some must exist.
    int broken = 0;
    for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
            const PolyFamily k = [a, b](std::int64_t x, std::int64_t y) { return b_kernel(x, y, a, b); };
            for (std::int64_t L = 0; L <= 3; ++L) {
                for (std::int64_t M = 0; M <= 3; ++M) {
                    if (transform_step(Direction::B1, k, L, M) != b_kernel(L, M, a + b, b).shifted(b * b)) {
                        ++broken;
                        CHECK_FALSE(condition_check(L, M, a, b));
                    }
                }
            }
        }
    }
    CHECK(broken > 0);
}

TEST_CASE("tree walks") {
    for (std::int64_t L = 0; L <= 5; ++L) {
        for (std::int64_t M = 0; M <= 5; ++M) {
            CHECK(tree_walk({3, 1}, Family::F, L, M) == eval_F({3, 1}, L, M));
            CHECK(tree_walk({2, 1}, Family::F, L, M) == oracle::square_sum_bounded(L, M));
        }
    }
    for (std::int64_t L = 0; L <= 4; ++L) {
        for (std::int64_t M = 0; M <= 4; ++M) {
            CHECK(tree_walk({3, 2}, Family::H, L, M) == eval_H({3, 2}, L, M));
            CHECK(tree_walk({3, 2}, Family::H, L, M) == oracle::h32_in_ni(L, M));
        }
    }
    CHECK_THROWS(tree_walk({3, 1}, Family::f, 1, 1));
}

TEST_CASE("walk path of (7,5)") {
    const auto path = walk_path({7, 5});
    REQUIRE(path.size() == 3);
    CHECK(path[0].direction == Direction::B2);
    CHECK(path[0].child == CoprimePair{5, 2});
    CHECK(path[1].direction == Direction::B1);
    CHECK(path[1].child == CoprimePair{3, 2});
    CHECK(path[2].direction == Direction::B2);
    CHECK(path[2].child == CoprimePair{2, 1});
    CHECK(walk_path({2, 1}).empty());
}

TEST_CASE("parity dispatch picks the working linear term") {
    // The other choice of linear coefficient must break the identity somewhere.
    for (CoprimePair p : {CoprimePair{5, 2}, CoprimePair{5, 3}, CoprimePair{7, 3}, CoprimePair{7, 4}}) {
        const BosonicSpec good = thmmain2_spec(p);
        BosonicSpec other = good;
        const BarPair bp = bar_pair(p);
        const Rational alt = thmmain2_uses_abar(p) ? Rational(4 * p.a * bp.bbar + 1, 2) : Rational(4 * bp.abar * p.b + 1, 2);
        other.c1 = alt;
        bool differs = false;
        for (std::int64_t L = 0; L <= 5 && !differs; ++L) {
            for (std::int64_t M = 0; M <= 5 && !differs; ++M) {
                CHECK(bosonic_eval(good, L, M) == eval_H(p, L, M));
                differs = bosonic_eval(other, L, M) != eval_H(p, L, M);
            }
        }
        CHECK(differs);
    }
}
