#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace burgetree {

// Signed arbitrary-precision integer. Values that fit in int64 are held
// inline; larger ones spill to a heap-allocated GMP integer and are demoted
// back whenever a result fits again, so the representation is unique.
class Integer {
public:
    Integer() noexcept = default;
    Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
    Integer(int v) noexcept : small_(v) {}           // NOLINT(google-explicit-constructor)
    explicit Integer(__int128 v);
    static Integer from_string(std::string_view text);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept : small_(other.small_), big_(other.big_) { other.big_ = nullptr; }
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept;
    ~Integer();

    bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
    int sign() const noexcept;
    bool fits_int64() const noexcept { return big_ == nullptr; }
    std::int64_t to_int64() const;  // throws std::overflow_error if it does not fit
    // Number of significant bits of |value| (0 for zero).
    std::size_t bit_length() const noexcept;
    std::string to_string() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    // this += a * b
    void add_product(const Integer& a, const Integer& b);
    void negate() noexcept;

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator-(Integer a) { a.negate(); return a; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

private:
    struct Big;
    void promote();
    void normalize() noexcept;

    std::int64_t small_ = 0;
    Big* big_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace burgetree
