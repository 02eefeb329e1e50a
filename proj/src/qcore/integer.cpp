#include "burgetree/integer.hpp"

#include <gmp.h>

#include <memory>
#include <ostream>
#include <stdexcept>

namespace burgetree {

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP slong must be 64-bit");

struct Integer::Big {
    mpz_t v;
    Big() { mpz_init(v); }
    Big(const Big& o) { mpz_init_set(v, o.v); }
    Big& operator=(const Big&) = delete;
    ~Big() { mpz_clear(v); }
};

namespace {

void set_from_i128(mpz_t out, __int128 x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1u : static_cast<unsigned __int128>(x);
    mpz_set_ui(out, static_cast<unsigned long>(u >> 64));
    mpz_mul_2exp(out, out, 64);
    mpz_add_ui(out, out, static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    if (neg) mpz_neg(out, out);
}

}  // namespace

Integer::Integer(__int128 v) {
    if (v >= INT64_MIN && v <= INT64_MAX) {
        small_ = static_cast<std::int64_t>(v);
        return;
    }
    big_ = new Big();
    set_from_i128(big_->v, v);
}

Integer Integer::from_string(std::string_view text) {
    std::string s(text);
    Integer r;
    r.big_ = new Big();
    if (s.empty() || mpz_set_str(r.big_->v, s.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    r.normalize();
    return r;
}

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = new Big(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    if (other.big_) {
        if (big_) {
            mpz_set(big_->v, other.big_->v);
        } else {
            big_ = new Big(*other.big_);
        }
    } else {
        delete big_;
        big_ = nullptr;
    }
    small_ = other.small_;
    return *this;
}

Integer& Integer::operator=(Integer&& other) noexcept {
    if (this == &other) return *this;
    delete big_;
    small_ = other.small_;
    big_ = other.big_;
    other.big_ = nullptr;
    return *this;
}

Integer::~Integer() { delete big_; }

int Integer::sign() const noexcept {
    if (big_) return mpz_sgn(big_->v);
    return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

std::size_t Integer::bit_length() const noexcept {
    if (big_) return mpz_sizeinbase(big_->v, 2);
    if (small_ == 0) return 0;
    const std::uint64_t u = small_ < 0 ? static_cast<std::uint64_t>(-(small_ + 1)) + 1u : static_cast<std::uint64_t>(small_);
    return 64 - static_cast<std::size_t>(__builtin_clzll(u));
}

std::string Integer::to_string() const {
    if (!big_) return std::to_string(small_);
    std::unique_ptr<char, void (*)(void*)> buf(mpz_get_str(nullptr, 10, big_->v), [](void* p) {
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(p, 0);
    });
    return std::string(buf.get());
}

void Integer::promote() {
    if (big_) return;
    big_ = new Big();
    mpz_set_si(big_->v, small_);
}

void Integer::normalize() noexcept {
    if (big_ && mpz_fits_slong_p(big_->v)) {
        small_ = mpz_get_si(big_->v);
        delete big_;
        big_ = nullptr;
    }
    if (big_) small_ = 0;
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t r;
        if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    promote();
    if (rhs.big_) {
        mpz_add(big_->v, big_->v, rhs.big_->v);
    } else if (rhs.small_ >= 0) {
        mpz_add_ui(big_->v, big_->v, static_cast<unsigned long>(rhs.small_));
    } else {
        mpz_sub_ui(big_->v, big_->v, static_cast<unsigned long>(-(rhs.small_ + 1)) + 1ul);
    }
    normalize();
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    promote();
    if (rhs.big_) {
        mpz_sub(big_->v, big_->v, rhs.big_->v);
    } else if (rhs.small_ >= 0) {
        mpz_sub_ui(big_->v, big_->v, static_cast<unsigned long>(rhs.small_));
    } else {
        mpz_add_ui(big_->v, big_->v, static_cast<unsigned long>(-(rhs.small_ + 1)) + 1ul);
    }
    normalize();
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
        *this = Integer(static_cast<__int128>(small_) * rhs.small_);
        return *this;
    }
    promote();
    if (rhs.big_) {
        mpz_mul(big_->v, big_->v, rhs.big_->v);
    } else {
        mpz_mul_si(big_->v, big_->v, rhs.small_);
    }
    normalize();
    return *this;
}

void Integer::add_product(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        std::int64_t p, r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    promote();
    Integer pa(a);
    pa.promote();
    if (b.big_) {
        mpz_addmul(big_->v, pa.big_->v, b.big_->v);
    } else if (b.small_ >= 0) {
        mpz_addmul_ui(big_->v, pa.big_->v, static_cast<unsigned long>(b.small_));
    } else {
        mpz_submul_ui(big_->v, pa.big_->v, static_cast<unsigned long>(-(b.small_ + 1)) + 1ul);
    }
    normalize();
}

void Integer::negate() noexcept {
    if (big_) {
        mpz_neg(big_->v, big_->v);
        normalize();
        return;
    }
    if (small_ == INT64_MIN) {
        big_ = new Big();
        mpz_set_si(big_->v, small_);
        mpz_neg(big_->v, big_->v);
        small_ = 0;
        return;
    }
    small_ = -small_;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return mpz_cmp(a.big_->v, b.big_->v) == 0;
    return false;  // representation is unique
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    int c;
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    if (a.big_ && b.big_) {
        c = mpz_cmp(a.big_->v, b.big_->v);
    } else if (a.big_) {
        c = mpz_cmp_si(a.big_->v, b.small_);
    } else {
        c = -mpz_cmp_si(b.big_->v, a.small_);
    }
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace burgetree
