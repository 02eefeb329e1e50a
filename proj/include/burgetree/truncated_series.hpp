#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burgetree/integer.hpp"
#include "burgetree/laurent_poly.hpp"

namespace burgetree {

// Power series in q known exactly on exponents 0..order().
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::int64_t order);
    TruncatedSeries(std::int64_t order, std::vector<Integer> coeffs);
    static TruncatedSeries one(std::int64_t order);
    // Rejects polynomials with negative exponents; terms above order are dropped.
    static TruncatedSeries from_poly(const LaurentPoly& p, std::int64_t order);

    std::int64_t order() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Integer& coeff(std::int64_t k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    LaurentPoly to_poly() const;
    std::string to_string() const;  // nonzero terms as "e:c" pairs

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    // Multiply in place by (1 - q^e)^{-1}, i.e. 1 + q^e + q^{2e} + ...
    void divide_by_one_minus(std::int64_t e);
    // Multiply in place by (1 - q^e).
    void multiply_by_one_minus(std::int64_t e);

private:
    std::vector<Integer> coeffs_;
};

struct SeriesFactor {
    std::int64_t exponent;  // e >= 1
    int sign;               // +1: (1 - q^e), -1: 1 / (1 - q^e)
};

TruncatedSeries ts_from_factors(const std::vector<SeriesFactor>& factors, std::int64_t order);
// Rejects p with negative exponents.
bool ts_equal_to(const LaurentPoly& p, const TruncatedSeries& s);
// 1 / (q^step; q^step)_n truncated at order.
TruncatedSeries reciprocal_poch(std::int64_t n, std::int64_t step, std::int64_t order);

}  // namespace burgetree
