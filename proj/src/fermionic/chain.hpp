#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace burgetree::detail {

inline __int128 isqrt128(__int128 x) {
    if (x <= 0) return 0;
    auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline __int128 floor_div128(__int128 a, __int128 b) {
    __int128 q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

struct Window {
    std::int64_t lo;
    std::int64_t hi;
};

// Nonnegative integers y with y^2 + p y + r <= 0.
inline Window quad_window(__int128 p, __int128 r) {
    const __int128 disc = p * p - 4 * r;
    if (disc < 0) return {1, 0};
    const __int128 s = isqrt128(disc);
    __int128 lo = floor_div128(-p - s, 2) - 1;
    __int128 hi = floor_div128(-p + s, 2) + 2;
    if (lo < 0) lo = 0;
    auto f = [&](__int128 y) { return y * y + p * y + r; };
    while (lo <= hi && f(lo) > 0) ++lo;
    while (hi >= lo && f(hi) > 0) --hi;
    return {static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
}

// One square in a sum-of-squares form: y^2 at a block start, else (prev - y - shift)^2.
struct ChainTerm {
    bool start = true;
    std::int64_t shift = 0;
};

// Depth-first enumeration of y_0..y_{k-1} >= 0 (stored at ys[offset..]) with
//   sum_i term_i(y) <= fixed + per_first * y_0.
// For y_0 the "prev" value is anchor.
struct Chain {
    std::vector<ChainTerm> terms;
    std::int64_t anchor = 0;
    std::int64_t fixed = 0;
    std::int64_t per_first = 0;

    template <class Admit, class Visit>
    void run(std::vector<std::int64_t>& ys, std::size_t offset, Admit& admit, Visit& visit) const {
        walk(ys, offset, 0, 0, admit, visit);
    }

private:
    template <class Admit, class Visit>
    void walk(std::vector<std::int64_t>& ys, std::size_t offset, std::size_t pos, __int128 used, Admit& admit,
              Visit& visit) const {
        if (pos == terms.size()) {
            visit();
            return;
        }
        const ChainTerm& t = terms[pos];
        __int128 tp = 0, tr = 0;  // term(y) = y^2 + tp y + tr
        if (!t.start) {
            const __int128 prev = (pos == 0) ? anchor : ys[offset + pos - 1];
            const __int128 c = prev - t.shift;
            tp = -2 * c;
            tr = c * c;
        }
        Window w;
        if (pos == 0) {
            w = quad_window(tp - per_first, tr + used - fixed);
        } else {
            w = quad_window(tp, tr + used - fixed - static_cast<__int128>(per_first) * ys[offset]);
        }
        for (std::int64_t y = w.lo; y <= w.hi; ++y) {
            ys[offset + pos] = y;
            if (!admit(offset + pos)) continue;
            walk(ys, offset, pos + 1, used + static_cast<__int128>(y) * y + tp * y + tr, admit, visit);
        }
    }
};

}  // namespace burgetree::detail
