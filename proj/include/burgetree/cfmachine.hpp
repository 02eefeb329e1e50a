#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace burgetree {

// Coprime integers with 1 <= b < a.
struct CoprimePair {
    std::int64_t a = 2;
    std::int64_t b = 1;

    // Throws DomainError if the invariant fails.
    static CoprimePair make(std::int64_t a, std::int64_t b);
    static bool valid(std::int64_t a, std::int64_t b);
    std::string to_string() const;
    friend auto operator<=>(const CoprimePair&, const CoprimePair&) = default;
};

enum class Representation {
    last_at_least_two,  // canonical: final quotient >= 2
    last_is_one,        // final quotient 1
};

struct CFData {
    CoprimePair pair;
    std::vector<std::int64_t> quotients;  // a_0 .. a_n
    std::vector<std::int64_t> t;          // t_0 .. t_{n+1}, partial sums
    std::int64_t d = 0;                   // t_{n+1}
    Representation rep = Representation::last_at_least_two;

    std::int64_t order() const { return static_cast<std::int64_t>(quotients.size()) - 1; }
};

// Expansion of (a/b - 1)^{sign(a - 2b)}.
CFData cf_expand(CoprimePair p, Representation rep = Representation::last_at_least_two);
// [c_0..c_n] <-> [c_0..c_n - 1, 1]; throws DomainError for (2,1).
CFData cf_toggle_rep(const CFData& c);

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::int64_t d) : d_(d), v_(static_cast<std::size_t>(d * d), 0) {}
    std::int64_t size() const noexcept { return d_; }
    // 1-based access
    std::int64_t& operator()(std::int64_t j, std::int64_t k) { return v_[static_cast<std::size_t>((j - 1) * d_ + (k - 1))]; }
    std::int64_t operator()(std::int64_t j, std::int64_t k) const { return v_[static_cast<std::size_t>((j - 1) * d_ + (k - 1))]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::int64_t d_ = 0;
    std::vector<std::int64_t> v_;
};

struct CartanData {
    std::int64_t d = 0;
    IntMatrix incidence;
    IntMatrix cartan;
    std::vector<std::int64_t> tau;     // (2,...,2,1)
    std::vector<std::int64_t> taubar;  // 3 - tau
    std::vector<bool> block_start;     // index j (0-based) starts a tadpole block
};

CartanData build_cartan(const CFData& c);

// n_j = L delta_{j,1} - sum_k C_{jk} m_k
std::vector<std::int64_t> mn_solve(const CartanData& c, std::int64_t L, std::span<const std::int64_t> m);

enum class QuadVariant { full, barred };
// full: m C m; barred: m-bar C m with m-bar = (m_1, ..., m_{d-1}, 0).
std::int64_t quad_form(const CartanData& c, std::span<const std::int64_t> m, QuadVariant variant);

struct BarPair {
    std::int64_t abar = 0;
    std::int64_t bbar = 0;
    friend bool operator==(const BarPair&, const BarPair&) = default;
};

BarPair bar_pair(CoprimePair p);

// Value of the finite continued fraction [c_0, ..., c_k] as numerator/denominator in lowest terms.
std::pair<std::int64_t, std::int64_t> cf_value(std::span<const std::int64_t> c);

}  // namespace burgetree
