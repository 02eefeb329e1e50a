#include <doctest.h>

#include "burgetree/cfmachine.hpp"
#include "burgetree/errors.hpp"

using namespace burgetree;
using V = std::vector<std::int64_t>;

TEST_CASE("coprime pairs") {
    CHECK(CoprimePair::valid(7, 5));
    CHECK_FALSE(CoprimePair::valid(6, 4));
    CHECK_FALSE(CoprimePair::valid(3, 3));
    CHECK_FALSE(CoprimePair::valid(3, 0));
    CHECK_THROWS_AS(CoprimePair::make(4, 2), DomainError);
}

TEST_CASE("continued fraction expansions") {
    const CFData c75 = cf_expand({7, 5});
    CHECK(c75.quotients == V{2, 2});
    CHECK(c75.d == 4);
    const CFData c75b = cf_expand({7, 5}, Representation::last_is_one);
    CHECK(c75b.quotients == V{2, 1, 1});
    CHECK(c75b.d == 4);
    CHECK(cf_expand({2, 1}).quotients == V{1});
    CHECK(cf_expand({2, 1}).d == 1);
    // (5/3 - 1)^{-1} = 3/2 = [1, 2] = [1, 1, 1]
    CHECK(cf_expand({5, 3}).quotients == V{1, 2});
    CHECK(cf_expand({5, 3}, Representation::last_is_one).quotients == V{1, 1, 1});
    CHECK(cf_expand({5, 3}).d == 3);
}

TEST_CASE("toggling the representation") {
    CHECK(cf_toggle_rep(cf_expand({7, 5})).quotients == V{2, 1, 1});
    CHECK(cf_toggle_rep(cf_expand({7, 5}, Representation::last_is_one)).quotients == V{2, 2});
    const CFData c41 = cf_expand({4, 1});
    CHECK(c41.quotients == V{3});
    CHECK(cf_toggle_rep(c41).quotients == V{2, 1});
    CHECK_THROWS_AS(cf_toggle_rep(cf_expand({2, 1})), DomainError);
    const V q{2, 1, 1};
    CHECK(cf_value(q) == std::pair<std::int64_t, std::int64_t>{5, 2});
}

TEST_CASE("incidence and Cartan matrices") {
    const CartanData c = build_cartan(cf_expand({7, 5}, Representation::last_is_one));
    const std::int64_t rows[4][4] = {{0, 1, 0, 0}, {1, 1, -1, 0}, {0, 1, 1, -1}, {0, 0, 1, 1}};
    REQUIRE(c.d == 4);
    for (std::int64_t j = 1; j <= 4; ++j) {
        for (std::int64_t k = 1; k <= 4; ++k) {
            CHECK(c.incidence(j, k) == rows[j - 1][k - 1]);
            CHECK(c.cartan(j, k) == (j == k ? 2 : 0) - rows[j - 1][k - 1]);
        }
    }
    const CartanData c21 = build_cartan(cf_expand({2, 1}));
    CHECK(c21.d == 1);
    CHECK(c21.incidence(1, 1) == 1);
    CHECK(c21.cartan(1, 1) == 1);
}

TEST_CASE("n from m and quadratic forms") {
    const CartanData c = build_cartan(cf_expand({7, 5}, Representation::last_is_one));
    CHECK(mn_solve(c, 5, V{0, 0, 0, 0}) == V{5, 0, 0, 0});
    CHECK(mn_solve(c, 3, V{1, 1, 1, 0}) == V{2, -1, 0, 1});
    CHECK(quad_form(c, V{1, 1, 0, 0}, QuadVariant::full) == 1);
    CHECK(quad_form(c, V{0, 0, 0, 0}, QuadVariant::full) == 0);
    CHECK(quad_form(c, V{0, 0, 0, 0}, QuadVariant::barred) == 0);
    CHECK_THROWS(mn_solve(c, 1, V{1, 1}));
}

TEST_CASE("bar pairs") {
    CHECK(bar_pair({19, 12}) == BarPair{8, 5});
    CHECK(bar_pair({19, 7}) == BarPair{8, 3});
    CHECK(bar_pair({3, 1}) == BarPair{1, 0});
    CHECK(bar_pair({3, 2}) == BarPair{1, 1});
}
