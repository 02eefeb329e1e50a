#include "burgetree/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace burgetree {

TruncatedSeries::TruncatedSeries(std::int64_t order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::int64_t order, std::vector<Integer> coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::one(std::int64_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, std::int64_t order) {
    TruncatedSeries s(order);
    if (p.is_zero()) return s;
    if (p.min_exponent() < 0) throw std::invalid_argument("series from a polynomial with negative exponents");
    p.for_each_term([&](std::int64_t e, const Integer& c) {
        if (e <= order) s.coeffs_[static_cast<std::size_t>(e)] = c;
    });
    return s;
}

LaurentPoly TruncatedSeries::to_poly() const { return LaurentPoly(0, coeffs_); }

std::string TruncatedSeries::to_string() const { return to_poly().to_string(); }

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::int64_t order = std::min(a.order(), b.order());
    const LaurentPoly prod = mul_truncated(a.to_poly(), b.to_poly(), order);
    return TruncatedSeries::from_poly(prod, order);
}

void TruncatedSeries::divide_by_one_minus(std::int64_t e) {
    if (e < 1) throw std::invalid_argument("factor exponent must be positive");
    const auto step = static_cast<std::size_t>(e);
    for (std::size_t k = step; k < coeffs_.size(); ++k) coeffs_[k] += coeffs_[k - step];
}

void TruncatedSeries::multiply_by_one_minus(std::int64_t e) {
    if (e < 1) throw std::invalid_argument("factor exponent must be positive");
    const auto step = static_cast<std::size_t>(e);
    for (std::size_t k = coeffs_.size(); k-- > step;) coeffs_[k] -= coeffs_[k - step];
}

TruncatedSeries ts_from_factors(const std::vector<SeriesFactor>& factors, std::int64_t order) {
    for (const auto& f : factors) {
        if (f.exponent < 1) throw std::invalid_argument("factor exponent must be positive");
        if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("factor sign must be +1 or -1");
    }
    TruncatedSeries s = TruncatedSeries::one(order);
    for (const auto& f : factors) {
        if (f.exponent > order) continue;
        if (f.sign > 0) {
            s.multiply_by_one_minus(f.exponent);
        } else {
            s.divide_by_one_minus(f.exponent);
        }
    }
    return s;
}

bool ts_equal_to(const LaurentPoly& p, const TruncatedSeries& s) {
    if (!p.is_zero() && p.min_exponent() < 0) throw std::invalid_argument("polynomial has negative exponents");
    for (std::int64_t k = 0; k <= s.order(); ++k) {
        if (p.coeff(k) != s.coeff(k)) return false;
    }
    return true;
}

TruncatedSeries reciprocal_poch(std::int64_t n, std::int64_t step, std::int64_t order) {
    if (n < 0) throw std::invalid_argument("q-Pochhammer length must be nonnegative");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (std::int64_t k = 1; k <= n && k * step <= order; ++k) s.divide_by_one_minus(k * step);
    return s;
}

}  // namespace burgetree
