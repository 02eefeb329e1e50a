#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "burgetree/integer.hpp"

namespace burgetree {

// Laurent polynomial in q with arbitrary-precision integer coefficients.
//
// Stored densely from the lowest to the highest nonzero exponent. Both ends are
// always nonzero (the zero polynomial is empty), so two values are equal iff
// their stored data are equal.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t low, std::vector<Integer> coeffs);
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(std::int64_t exponent, Integer coeff = 1);
    static LaurentPoly from_terms(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms);
    static LaurentPoly from_map(const std::map<std::int64_t, Integer>& terms);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }
    // Exponent range of the nonzero terms; undefined for the zero polynomial.
    std::int64_t min_exponent() const noexcept { return low_; }
    std::int64_t max_exponent() const noexcept { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    Integer coeff(std::int64_t exponent) const;
    std::size_t term_count() const;
    std::map<std::int64_t, Integer> terms() const;
    void for_each_term(const std::function<void(std::int64_t, const Integer&)>& fn) const;
    // Dense view: element k is the coefficient of q^(min_exponent()+k).
    const std::vector<Integer>& dense() const noexcept { return coeffs_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // this += c * q^shift * p
    void add_scaled(const LaurentPoly& p, std::int64_t shift, const Integer& c = 1);
    LaurentPoly shifted(std::int64_t k) const;        // q^k * p
    LaurentPoly scaled(const Integer& c) const;       // c * p
    LaurentPoly substitute_power(std::int64_t k) const;  // p(q^k), k >= 1
    LaurentPoly inverse_q() const;                     // p(1/q)
    LaurentPoly truncated(std::int64_t max_exponent) const;  // drop terms above max_exponent

    // "e:c e:c ..." in increasing exponent order, nonzero terms only; "" for zero.
    std::string to_string() const;

private:
    void trim();

    std::int64_t low_ = 0;
    std::vector<Integer> coeffs_;
};

// a * b with every term above max_exponent discarded (computed without forming them).
LaurentPoly mul_truncated(const LaurentPoly& a, const LaurentPoly& b, std::int64_t max_exponent);

enum class LpOp { add, sub, mul, scale_by_monomial };
// Scale-by-monomial requires b to be a monomial; throws std::invalid_argument otherwise.
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op);
LaurentPoly lp_inverse_q(const LaurentPoly& p);

}  // namespace burgetree
