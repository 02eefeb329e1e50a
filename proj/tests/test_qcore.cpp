#include <doctest.h>

#include "burgetree/errors.hpp"
#include "burgetree/integer.hpp"
#include "burgetree/laurent_poly.hpp"
#include "burgetree/rational.hpp"
#include "burgetree/truncated_series.hpp"

using namespace burgetree;

namespace {
LaurentPoly P(std::initializer_list<std::pair<std::int64_t, std::int64_t>> t) { return LaurentPoly::from_terms(t); }
}  // namespace

TEST_CASE("integer arithmetic spills past 64 bits exactly") {
    Integer x = Integer::from_string("9223372036854775807");
    x += Integer(1);
    CHECK(x.to_string() == "9223372036854775808");
    CHECK_FALSE(x.fits_int64());
    Integer y = x * x;
    CHECK(y.to_string() == "85070591730234615865843651857942052864");
    y -= x * x;
    CHECK(y.is_zero());
    CHECK(y.fits_int64());
    CHECK((Integer(-3) * Integer(7)).to_string() == "-21");
    CHECK(Integer::from_string("-170141183460469231731687303715884105728").sign() < 0);
}

TEST_CASE("polynomial arithmetic") {
    const LaurentPoly one_q = P({{0, 1}, {1, 1}});
    CHECK(lp_arith(one_q, one_q, LpOp::mul) == P({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(lp_arith(one_q, -one_q, LpOp::add).is_zero());
    CHECK(lp_arith(one_q, LaurentPoly::monomial(-1), LpOp::scale_by_monomial) == P({{-1, 1}, {0, 1}}));
    CHECK_THROWS_AS(lp_arith(one_q, one_q, LpOp::scale_by_monomial), std::invalid_argument);
    CHECK((one_q - one_q).term_count() == 0);
}

TEST_CASE("zero coefficients are never stored") {
    const LaurentPoly p = P({{-2, 0}, {0, 5}, {3, 0}});
    CHECK(p.min_exponent() == 0);
    CHECK(p.max_exponent() == 0);
    CHECK(p == LaurentPoly::monomial(0, 5));
    const LaurentPoly q = P({{0, 1}, {1, -1}}) + P({{1, 1}});
    CHECK(q == LaurentPoly::one());
    CHECK(q.to_string() == "0:1");
}

TEST_CASE("q -> 1/q") {
    CHECK(lp_inverse_q(P({{0, 1}, {1, 2}, {2, 1}})) == P({{-2, 1}, {-1, 2}, {0, 1}}));
    CHECK(lp_inverse_q(LaurentPoly()).is_zero());
    CHECK(P({{1, 1}, {2, 3}}).substitute_power(3) == P({{3, 1}, {6, 3}}));
}

TEST_CASE("series from product factors") {
    std::vector<SeriesFactor> parts;
    for (std::int64_t e = 1; e <= 5; ++e) parts.push_back({e, -1});
    const TruncatedSeries p = ts_from_factors(parts, 5);
    const std::int64_t expect[] = {1, 1, 2, 3, 5, 7};
    for (std::int64_t k = 0; k <= 5; ++k) CHECK(p.coeff(k) == Integer(expect[k]));
    CHECK(ts_from_factors({{1, +1}}, 3) == TruncatedSeries::from_poly(P({{0, 1}, {1, -1}}), 3));
    CHECK(ts_from_factors({}, 4) == TruncatedSeries::one(4));
    CHECK(ts_from_factors({}, 4).order() == 4);
}

TEST_CASE("polynomial against truncated series") {
    const TruncatedSeries s = TruncatedSeries::from_poly(P({{0, 1}, {1, 1}, {2, 1}}), 2);
    CHECK_FALSE(ts_equal_to(P({{0, 1}, {1, 1}}), s));
    CHECK(ts_equal_to(P({{0, 1}, {1, 1}, {2, 1}}), s));
    CHECK(ts_equal_to(LaurentPoly(), TruncatedSeries(3)));
    CHECK_THROWS(ts_equal_to(LaurentPoly::monomial(-1), s));
    CHECK_THROWS(TruncatedSeries::from_poly(LaurentPoly::monomial(-1), 2));
}

TEST_CASE("rationals") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK(Rational(4, 2).is_integer());
    CHECK_THROWS(Rational::parse("1/x"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational(1, 0));
}
