#include "burgetree/cfmachine.hpp"

#include <numeric>
#include <stdexcept>

#include "burgetree/errors.hpp"

namespace burgetree {

bool CoprimePair::valid(std::int64_t a, std::int64_t b) { return b >= 1 && b < a && std::gcd(a, b) == 1; }

CoprimePair CoprimePair::make(std::int64_t a, std::int64_t b) {
    if (!valid(a, b)) {
        throw DomainError("(" + std::to_string(a) + "," + std::to_string(b) + ") is not a coprime pair with 1 <= b < a");
    }
    return CoprimePair{a, b};
}

std::string CoprimePair::to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

namespace {

void fill_partial_sums(CFData& c) {
    c.t.assign(1, 0);
    for (auto q : c.quotients) c.t.push_back(c.t.back() + q);
    c.d = c.t.back();
}

}  // namespace

CFData cf_expand(CoprimePair p, Representation rep) {
    p = CoprimePair::make(p.a, p.b);
    CFData c;
    c.pair = p;
    c.rep = rep;
    std::int64_t num, den;
    if (p.a < 2 * p.b) {
        num = p.b;
        den = p.a - p.b;
    } else if (p.a > 2 * p.b) {
        num = p.a - p.b;
        den = p.b;
    } else {
        num = den = 1;
    }
    while (den != 0) {
        c.quotients.push_back(num / den);
        const std::int64_t r = num % den;
        num = den;
        den = r;
    }
    // Euclid leaves the final quotient >= 2 unless the value is exactly 1.
    if (rep == Representation::last_is_one && c.quotients.back() >= 2) {
        c.quotients.back() -= 1;
        c.quotients.push_back(1);
    }
    if (c.quotients.size() == 1 && c.quotients[0] == 1) c.rep = Representation::last_at_least_two;
    fill_partial_sums(c);
    return c;
}

CFData cf_toggle_rep(const CFData& c) {
    if (c.quotients.size() == 1 && c.quotients[0] == 1) throw DomainError("the pair (2,1) has a single representation");
    CFData r = c;
    if (r.quotients.back() == 1) {
        r.quotients.pop_back();
        r.quotients.back() += 1;
        r.rep = Representation::last_at_least_two;
    } else {
        r.quotients.back() -= 1;
        r.quotients.push_back(1);
        r.rep = Representation::last_is_one;
    }
    fill_partial_sums(r);
    return r;
}

CartanData build_cartan(const CFData& c) {
    CartanData out;
    const std::int64_t d = c.d;
    out.d = d;
    out.incidence = IntMatrix(d);
    out.cartan = IntMatrix(d);
    std::vector<bool> is_t(static_cast<std::size_t>(d) + 2, false);
    for (std::size_t i = 1; i < c.t.size(); ++i) is_t[static_cast<std::size_t>(c.t[i])] = true;
    auto delta = [](std::int64_t x, std::int64_t y) -> std::int64_t { return x == y ? 1 : 0; };
    for (std::int64_t j = 1; j <= d; ++j) {
        for (std::int64_t k = 1; k <= d; ++k) {
            const std::int64_t v = is_t[static_cast<std::size_t>(j)] ? delta(j, k + 1) + delta(j, k) - delta(j, k - 1)
                                                                      : delta(j, k + 1) + delta(j, k - 1);
            out.incidence(j, k) = v;
            out.cartan(j, k) = 2 * delta(j, k) - v;
        }
    }
    out.tau.assign(static_cast<std::size_t>(d), 2);
    out.tau.back() = 1;
    for (auto t : out.tau) out.taubar.push_back(3 - t);
    out.block_start.assign(static_cast<std::size_t>(d), false);
    for (std::size_t i = 0; i + 1 < c.t.size(); ++i) out.block_start[static_cast<std::size_t>(c.t[i])] = true;
    return out;
}

std::vector<std::int64_t> mn_solve(const CartanData& c, std::int64_t L, std::span<const std::int64_t> m) {
    if (static_cast<std::int64_t>(m.size()) != c.d) throw std::invalid_argument("mn_solve: vector length differs from d");
    std::vector<std::int64_t> n(static_cast<std::size_t>(c.d));
    for (std::int64_t j = 1; j <= c.d; ++j) {
        std::int64_t s = (j == 1) ? L : 0;
        for (std::int64_t k = 1; k <= c.d; ++k) s -= c.cartan(j, k) * m[static_cast<std::size_t>(k - 1)];
        n[static_cast<std::size_t>(j - 1)] = s;
    }
    return n;
}

std::int64_t quad_form(const CartanData& c, std::span<const std::int64_t> m, QuadVariant variant) {
    if (static_cast<std::int64_t>(m.size()) != c.d) throw std::invalid_argument("quad_form: vector length differs from d");
    const std::int64_t rows = (variant == QuadVariant::full) ? c.d : c.d - 1;
    std::int64_t s = 0;
    for (std::int64_t j = 1; j <= rows; ++j) {
        for (std::int64_t k = 1; k <= c.d; ++k) {
            s += m[static_cast<std::size_t>(j - 1)] * c.cartan(j, k) * m[static_cast<std::size_t>(k - 1)];
        }
    }
    return s;
}

std::pair<std::int64_t, std::int64_t> cf_value(std::span<const std::int64_t> c) {
    if (c.empty()) throw std::invalid_argument("cf_value: empty continued fraction");
    // evaluate from the back: x = c_k, then x = c_i + 1/x
    std::int64_t num = c.back(), den = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        const std::int64_t n2 = c[i] * num + den;
        den = num;
        num = n2;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

BarPair bar_pair(CoprimePair p) {
    p = CoprimePair::make(p.a, p.b);
    if (p.b == 1) return {1, 0};
    if (p.b == p.a - 1) return {1, 1};
    const CFData c = cf_expand(p, Representation::last_at_least_two);
    std::vector<std::int64_t> head(c.quotients.begin(), c.quotients.end() - 1);
    const auto [num, den] = cf_value(head);
    if (p.a < 2 * p.b) return {num + den, num};  // [1, a_0..a_{n-1}] = 1 + den/num
    return {num + den, den};                     // [a_0+1, a_1..a_{n-1}] = 1 + num/den
}

}  // namespace burgetree
