#include "burgetree/burge.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "burgetree/errors.hpp"
#include "burgetree/qcombinat.hpp"

namespace burgetree {

namespace {

struct JRange {
    std::int64_t lo;
    std::int64_t hi;
};

// j with |c j + s| <= bound; c == 0 gives either everything or nothing.
bool abs_range(std::int64_t c, std::int64_t s, std::int64_t bound, JRange& out, bool& unbounded) {
    unbounded = false;
    if (bound < 0) return false;
    if (c == 0) {
        if (s < -bound || s > bound) return false;
        unbounded = true;
        return true;
    }
    if (c > 0) {
        out = {ceil_div(-bound - s, c), floor_div(bound - s, c)};
    } else {
        out = {ceil_div(s - bound, -c), floor_div(s + bound, -c)};
    }
    return out.lo <= out.hi;
}

}  // namespace

LaurentPoly bosonic_eval(const BosonicSpec& spec, std::int64_t L, std::int64_t M) {
    if (spec.a == 0 && spec.b == 0) throw std::invalid_argument("bosonic sum with a = b = 0 is infinite");
    JRange ra{}, rb{};
    bool ua = false, ub = false;
    if (!abs_range(spec.a, spec.abar, L, ra, ua)) return {};
    if (!abs_range(spec.b, spec.bbar, M, rb, ub)) return {};
    JRange r = ua ? rb : (ub ? ra : JRange{std::max(ra.lo, rb.lo), std::min(ra.hi, rb.hi)});
    LaurentPoly out;
    for (std::int64_t j = r.lo; j <= r.hi; ++j) {
        const LaurentPoly k = b_kernel(L, M, spec.a * j + spec.abar, spec.b * j + spec.bbar);
        if (k.is_zero()) continue;
        const Rational e = spec.c2 * Rational(j * j) + spec.c1 * Rational(j) + spec.c0;
        if (!e.is_integer()) {
            throw DomainError("bosonic sum: exponent " + e.to_string() + " at j=" + std::to_string(j) + " is not an integer");
        }
        const bool negative = spec.alternating && (j % 2 != 0);
        out.add_scaled(k, e.num(), negative ? -1 : 1);
    }
    return out;
}

BosonicSpec thmmain_spec(CoprimePair p) {
    p = CoprimePair::make(p.a, p.b);
    return {p.a, p.b, 0, 0, Rational(2 * p.a * p.b + 1, 2), Rational(1, 2), Rational(0), true};
}

BosonicSpec mainrecip_spec(CoprimePair p) {
    p = CoprimePair::make(p.a, p.b);
    return {p.a, p.b, 0, 0, Rational(2 * p.a * p.b - 1, 2), Rational(1, 2), Rational(0), true};
}

bool thmmain2_uses_abar(CoprimePair p) {
    p = CoprimePair::make(p.a, p.b);
    if (p.a == 2 && p.b == 1) throw DomainError("the bar-shifted sum excludes (2,1)");
    const bool even = cf_expand(p).order() % 2 == 0;
    return (p.a < 2 * p.b) ? even : !even;
}

BosonicSpec thmmain2_spec(CoprimePair p) {
    const bool use_abar = thmmain2_uses_abar(p);
    const BarPair bp = bar_pair(p);
    const std::int64_t lin = use_abar ? 4 * bp.abar * p.b + 1 : 4 * p.a * bp.bbar + 1;
    return {p.a, p.b, bp.abar, bp.bbar, Rational(2 * p.a * p.b + 1, 2), Rational(lin, 2), Rational(bp.abar * bp.bbar), true};
}

BosonicSpec even_spec(CoprimePair p) {
    p = CoprimePair::make(p.a, p.b);
    return {p.a, p.b, 0, 0, Rational(p.a * p.b), Rational(0), Rational(0), true};
}

LaurentPoly transform_step(Direction direction, const PolyFamily& inner, std::int64_t L, std::int64_t M) {
    LaurentPoly out;
    if (L < 0 || M < 0) return out;
    for (std::int64_t i = 0; i <= std::min(L, M); ++i) {
        const LaurentPoly& kernel = qbinomial_ref(2 * L + M - i, 2 * L);
        if (kernel.is_zero()) continue;
        const LaurentPoly p = (direction == Direction::B1) ? inner(L - i, i) : inner(i, L - i);
        if (p.is_zero()) continue;
        out.add_scaled(kernel * p, i * i);
    }
    return out;
}

bool condition_check(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b) {
    const bool first = (-L + a <= -b) && (-b <= L + a) && (L + a < b) && (b <= M);
    const bool second = (-L - a <= b) && (b <= L - a) && (L - a < -b) && (-b <= M);
    return !first && !second;
}

namespace {

WalkLabel label_of(CoprimePair p) {
    return {cf_expand(p).order() % 2 == 0, p.a < 2 * p.b};
}

}  // namespace

std::vector<WalkStep> walk_path(CoprimePair p) {
    p = CoprimePair::make(p.a, p.b);
    std::vector<WalkStep> path;
    while (!(p.a == 2 && p.b == 1)) {
        WalkStep s;
        s.pair = p;
        s.label = label_of(p);
        if (p.a < 2 * p.b) {
            s.direction = Direction::B2;
            s.child = {p.b, p.a - p.b};
        } else {
            s.direction = Direction::B1;
            s.child = {p.a - p.b, p.b};
        }
        s.child_label = label_of(s.child);
        path.push_back(s);
        p = s.child;
    }
    return path;
}

LaurentPoly seed_F(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(qbinomial_ref(2 * L + M - n, 2 * L) * qbinomial_ref(L, n), n * n);
    return r;
}

LaurentPoly seed_I(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L; ++n) r.add_scaled(qbinomial_ref(2 * L + M - n, 2 * L) * qbinomial(L, n, 2), n * n);
    return r;
}

LaurentPoly seed_H(std::int64_t L, std::int64_t M) {
    LaurentPoly r;
    for (std::int64_t n = 0; n <= L - 1; ++n) {
        r.add_scaled(qbinomial_ref(2 * L + M - n - 1, 2 * L - 1) * qbinomial_ref(L - 1, n), n * n);
    }
    return r;
}

namespace {

using WalkKey = std::tuple<std::int64_t, std::int64_t, int, std::int64_t, std::int64_t>;

class WalkCache {
public:
    bool find(const WalkKey& k, LaurentPoly& out) {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const WalkKey& k, const LaurentPoly& v) {
        std::unique_lock lock(mutex_);
        map_.emplace(k, v);
    }

private:
    std::shared_mutex mutex_;
    std::map<WalkKey, LaurentPoly> map_;
};

WalkCache& walk_cache() {
    static WalkCache c;
    return c;
}

}  // namespace

LaurentPoly tree_walk(CoprimePair p, Family family, std::int64_t L, std::int64_t M) {
    if (family == Family::f) throw DomainError("the tree walk covers the F, H and I families");
    if (L < 0 || M < 0) return {};
    p = CoprimePair::make(p.a, p.b);
    const WalkKey key{p.a, p.b, static_cast<int>(family), L, M};
    LaurentPoly out;
    if (walk_cache().find(key, out)) return out;
    if (p.a == 2 && p.b == 1) {
        switch (family) {
            case Family::F: out = seed_F(L, M); break;
            case Family::H: out = seed_H(L, M); break;
            case Family::I: out = seed_I(L, M); break;
            case Family::f: break;
        }
    } else if (p.a < 2 * p.b) {
        const CoprimePair child{p.b, p.a - p.b};
        out = transform_step(Direction::B2, [&](std::int64_t x, std::int64_t y) { return tree_walk(child, family, x, y); }, L, M);
    } else {
        const CoprimePair child{p.a - p.b, p.b};
        out = transform_step(Direction::B1, [&](std::int64_t x, std::int64_t y) { return tree_walk(child, family, x, y); }, L, M);
    }
    walk_cache().insert(key, out);
    return out;
}

}  // namespace burgetree
