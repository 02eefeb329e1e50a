#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "burgetree/cfmachine.hpp"
#include "burgetree/fermionic.hpp"
#include "burgetree/laurent_poly.hpp"
#include "burgetree/rational.hpp"

namespace burgetree {

// sum_j (-1)^j q^{c2 j^2 + c1 j + c0} B(L, M, a j + abar, b j + bbar)
struct BosonicSpec {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t abar = 0;
    std::int64_t bbar = 0;
    Rational c2;
    Rational c1;
    Rational c0;
    bool alternating = true;
};

LaurentPoly bosonic_eval(const BosonicSpec& spec, std::int64_t L, std::int64_t M);

// Exponent (2ab+1) j^2/2 + j/2 with kernel B(L,M,aj,bj); equals F_{a,b}(L,M).
BosonicSpec thmmain_spec(CoprimePair p);
// Exponent (2ab-1) j^2/2 + j/2; equals f_{a,b}(L,M).
BosonicSpec mainrecip_spec(CoprimePair p);
// Bar-shifted kernel B(L,M,aj+abar,bj+bbar) with the parity-dependent linear term; equals H_{a,b}(L,M).
BosonicSpec thmmain2_spec(CoprimePair p);
// Exponent ab j^2; equals I_{a,b}(L,M).
BosonicSpec even_spec(CoprimePair p);
// true when the bar-shifted sum uses the linear coefficient 4 abar b + 1 (otherwise 4 a bbar + 1).
bool thmmain2_uses_abar(CoprimePair p);

using PolyFamily = std::function<LaurentPoly(std::int64_t, std::int64_t)>;

enum class Direction { B1, B2 };

// B1: sum_i q^{i^2} [2L+M-i over 2L] inner(L-i, i)
// B2: sum_i q^{i^2} [2L+M-i over 2L] inner(i, L-i)
LaurentPoly transform_step(Direction direction, const PolyFamily& inner, std::int64_t L, std::int64_t M);

// Parameter condition under which the transforms map B(.,.,a,b) to q^{b^2} B(L,M,a+b,b).
bool condition_check(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b);

struct WalkLabel {
    bool even_order = true;  // order of the continued fraction is even
    bool less = true;        // a < 2b
};

struct WalkStep {
    CoprimePair pair;
    WalkLabel label;
    Direction direction = Direction::B1;
    CoprimePair child;
    WalkLabel child_label;
};

// Reduction path from p down to (2,1): (a,b) -> (b,a-b) via B2 when a < 2b,
// (a,b) -> (a-b,b) via B1 when a > 2b.
std::vector<WalkStep> walk_path(CoprimePair p);

// Value of family F, H or I at (L,M) obtained purely by transforming the
// (2,1) seed along walk_path. Memoised process-wide.
LaurentPoly tree_walk(CoprimePair p, Family family, std::int64_t L, std::int64_t M);

// Seeds at (2,1).
LaurentPoly seed_F(std::int64_t L, std::int64_t M);
LaurentPoly seed_H(std::int64_t L, std::int64_t M);
LaurentPoly seed_I(std::int64_t L, std::int64_t M);

}  // namespace burgetree
