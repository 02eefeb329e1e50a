#include "burgetree/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace burgetree {

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, Integer coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) {
        p.low_ = exponent;
        p.coeffs_.push_back(std::move(coeff));
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_scaled(one(), e, c);
    return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<std::int64_t, Integer>& terms) {
    if (terms.empty()) return {};
    const std::int64_t lo = terms.begin()->first;
    const std::int64_t hi = terms.rbegin()->first;
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
    return LaurentPoly(lo, std::move(c));
}

void LaurentPoly::trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1].is_zero()) --last;
    coeffs_.resize(last);
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        low_ += static_cast<std::int64_t>(first);
    }
}

Integer LaurentPoly::coeff(std::int64_t exponent) const {
    if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return !c.is_zero(); }));
}

std::map<std::int64_t, Integer> LaurentPoly::terms() const {
    std::map<std::int64_t, Integer> out;
    for_each_term([&](std::int64_t e, const Integer& c) { out.emplace(e, c); });
    return out;
}

void LaurentPoly::for_each_term(const std::function<void(std::int64_t, const Integer&)>& fn) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) fn(low_ + static_cast<std::int64_t>(k), coeffs_[k]);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& p, std::int64_t shift, const Integer& c) {
    if (p.is_zero() || c.is_zero()) return;
    if (this == &p) {
        const LaurentPoly copy = p;
        add_scaled(copy, shift, c);
        return;
    }
    const std::int64_t plo = p.low_ + shift;
    const std::int64_t phi = p.max_exponent() + shift;
    if (coeffs_.empty()) {
        low_ = plo;
        coeffs_.assign(p.coeffs_.size(), Integer());
    } else {
        const std::int64_t lo = std::min(low_, plo);
        const std::int64_t hi = std::max(max_exponent(), phi);
        if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer());
        low_ = lo;
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    }
    const std::size_t off = static_cast<std::size_t>(plo - low_);
    const bool unit = c.fits_int64() && c.to_int64() == 1;
    const bool neg_unit = c.fits_int64() && c.to_int64() == -1;
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
        if (unit) {
            coeffs_[off + k] += p.coeffs_[k];
        } else if (neg_unit) {
            coeffs_[off + k] -= p.coeffs_[k];
        } else {
            coeffs_[off + k].add_product(p.coeffs_[k], c);
        }
    }
    trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    add_scaled(rhs, 0, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    add_scaled(rhs, 0, -1);
    return *this;
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& c : a.coeffs_) c.negate();
    return a;
}

namespace {

bool all_small(const std::vector<Integer>& v, std::size_t& bits) {
    bits = 0;
    for (const auto& c : v) {
        if (!c.fits_int64()) return false;
        bits = std::max(bits, c.bit_length());
    }
    return true;
}

std::size_t bits_of(std::size_t n) { return n == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(n)); }

}  // namespace

LaurentPoly mul_truncated(const LaurentPoly& a, const LaurentPoly& b, std::int64_t max_exponent) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::int64_t low = a.min_exponent() + b.min_exponent();
    const std::int64_t high = std::min(a.max_exponent() + b.max_exponent(), max_exponent);
    if (high < low) return {};
    const auto& x = a.dense();
    const auto& y = b.dense();
    const std::size_t len = static_cast<std::size_t>(high - low + 1);
    std::vector<Integer> out(len);
    std::size_t bx = 0, by = 0;
    const bool small = all_small(x, bx) && all_small(y, by);
    if (small && bx + by + bits_of(std::min(x.size(), y.size())) <= 125) {
        std::vector<std::int64_t> xs(x.size()), ys(y.size());
        for (std::size_t i = 0; i < x.size(); ++i) xs[i] = x[i].to_int64();
        for (std::size_t j = 0; j < y.size(); ++j) ys[j] = y[j].to_int64();
        std::vector<__int128> acc(len, 0);
        for (std::size_t i = 0; i < xs.size() && i < len; ++i) {
            if (xs[i] == 0) continue;
            const __int128 xi = xs[i];
            const std::size_t jmax = std::min(ys.size(), len - i);
            for (std::size_t j = 0; j < jmax; ++j) acc[i + j] += xi * ys[j];
        }
        for (std::size_t k = 0; k < len; ++k) out[k] = Integer(acc[k]);
    } else {
        for (std::size_t i = 0; i < x.size() && i < len; ++i) {
            if (x[i].is_zero()) continue;
            const std::size_t jmax = std::min(y.size(), len - i);
            for (std::size_t j = 0; j < jmax; ++j) out[i + j].add_product(x[i], y[j]);
        }
    }
    return LaurentPoly(low, std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return mul_truncated(a, b, a.max_exponent() + b.max_exponent());
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
    if (c.is_zero()) return {};
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t k) const {
    if (k < 1) throw std::invalid_argument("substitute_power: exponent must be positive");
    if (k == 1 || is_zero()) return *this;
    std::vector<Integer> c((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return LaurentPoly(low_ * k, std::move(c));
}

LaurentPoly LaurentPoly::inverse_q() const {
    if (is_zero()) return {};
    std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-max_exponent(), std::move(c));
}

LaurentPoly LaurentPoly::truncated(std::int64_t max_exp) const {
    if (is_zero() || max_exp >= max_exponent()) return *this;
    if (max_exp < low_) return {};
    std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + (max_exp - low_ + 1));
    return LaurentPoly(low_, std::move(c));
}

std::string LaurentPoly::to_string() const {
    std::string s;
    for_each_term([&](std::int64_t e, const Integer& c) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e);
        s += ':';
        s += c.to_string();
    });
    return s;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op) {
    switch (op) {
        case LpOp::add: return a + b;
        case LpOp::sub: return a - b;
        case LpOp::mul: return a * b;
        case LpOp::scale_by_monomial:
            if (!b.is_monomial()) throw std::invalid_argument("scale-by-monomial: second operand is not a monomial");
            return a.shifted(b.min_exponent()).scaled(b.coeff(b.min_exponent()));
    }
    throw std::invalid_argument("lp_arith: unknown operation");
}

LaurentPoly lp_inverse_q(const LaurentPoly& p) { return p.inverse_q(); }

}  // namespace burgetree
