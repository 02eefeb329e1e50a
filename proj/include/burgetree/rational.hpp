#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace burgetree {

// Exact rational with 64-bit parts, always in lowest terms with den > 0.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    // Accepts "p", "p/q" and "-p/q".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    // Throws DomainError unless the value is an integer.
    std::int64_t to_integer(const char* context) const;
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace burgetree
