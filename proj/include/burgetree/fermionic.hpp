#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "burgetree/cfmachine.hpp"
#include "burgetree/laurent_poly.hpp"
#include "burgetree/truncated_series.hpp"

namespace burgetree {

enum class Family { F, f, H, I };

enum class BoundMode {
    double_bounded,  // (L, M)
    limit_M,         // M -> infinity, normalised by (q)_{2L}; polynomial in L
    limit_L,         // L -> infinity, normalised by (q)_{2M}; polynomial in M
    limit_both,      // both infinite; series to order T
};

// Which of the two summation forms to use. The lower form needs a <= 2b and
// the upper form a >= 2b; they overlap only for (2,1).
enum class FormChoice { automatic, lower, upper };

struct EvalOptions {
    Representation rep = Representation::last_at_least_two;
    FormChoice form = FormChoice::automatic;
    // Extra room added to every enumeration bound. Results must not depend on it.
    std::int64_t search_slack = 0;
};

struct FermionicSpec {
    CoprimePair pair;
    Family family = Family::F;
    BoundMode mode = BoundMode::double_bounded;
    CFData cf;
    CartanData cartan;
    EvalOptions options;

    static FermionicSpec make(CoprimePair pair, Family family, BoundMode mode, const EvalOptions& options = {});
    bool upper_form() const;
};

struct LatticePoint {
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> n;
    std::int64_t weight_exponent = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Contributing points of a double-bounded or limit_M sum in m-coordinates,
// in lexicographic order of m.
std::vector<LatticePoint> lattice_points(const FermionicSpec& spec, std::int64_t L, std::int64_t M);

LaurentPoly eval_double(const FermionicSpec& spec, std::int64_t L, std::int64_t M);
// limit_M: bound is L; limit_L: bound is M; limit_both: bound is the series order T.
std::variant<LaurentPoly, TruncatedSeries> eval_limit(const FermionicSpec& spec, std::int64_t bound);

LaurentPoly eval_F(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& options = {});
LaurentPoly eval_f(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& options = {});
LaurentPoly eval_H(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& options = {});
LaurentPoly eval_I(CoprimePair p, std::int64_t L, std::int64_t M, const EvalOptions& options = {});

// Typed shorthands for eval_limit.
LaurentPoly eval_limit_M(CoprimePair p, Family family, std::int64_t L, const EvalOptions& options = {});
LaurentPoly eval_limit_L(CoprimePair p, Family family, std::int64_t M, const EvalOptions& options = {});
TruncatedSeries eval_limit_both(CoprimePair p, Family family, std::int64_t T, const EvalOptions& options = {});

// (q)_top / prod_i (q)_{parts_i}; requires parts >= 0 with sum <= top.
LaurentPoly poch_quotient(std::int64_t top, const std::vector<std::int64_t>& parts);

}  // namespace burgetree
