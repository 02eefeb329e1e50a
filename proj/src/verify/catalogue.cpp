#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "burgetree/burge.hpp"
#include "burgetree/cfmachine.hpp"
#include "burgetree/errors.hpp"
#include "burgetree/fermionic.hpp"
#include "burgetree/qcombinat.hpp"
#include "burgetree/verify.hpp"
#include "oracles.hpp"

namespace burgetree {

namespace {

using I64 = std::int64_t;

std::vector<CoprimePair> pairs_upto(I64 a_min, I64 a_max) {
    std::vector<CoprimePair> out;
    for (I64 a = std::max<I64>(a_min, 2); a <= a_max; ++a) {
        for (I64 b = 1; b < a; ++b) {
            if (std::gcd(a, b) == 1) out.push_back({a, b});
        }
    }
    return out;
}

std::vector<Params> pair_lm_grid(I64 a_min, I64 a_max, I64 lm_max) {
    std::vector<Params> g;
    for (auto p : pairs_upto(a_min, a_max)) {
        for (I64 L = 0; L <= lm_max; ++L) {
            for (I64 M = 0; M <= lm_max; ++M) g.push_back({p.a, p.b, L, M});
        }
    }
    return g;
}

std::vector<Params> pair_n_grid(I64 a_min, I64 a_max, I64 n_max) {
    std::vector<Params> g;
    for (auto p : pairs_upto(a_min, a_max)) {
        for (I64 n = 0; n <= n_max; ++n) g.push_back({p.a, p.b, n});
    }
    return g;
}

std::vector<Params> lm_grid(I64 lm_max) {
    std::vector<Params> g;
    for (I64 L = 0; L <= lm_max; ++L) {
        for (I64 M = 0; M <= lm_max; ++M) g.push_back({L, M});
    }
    return g;
}

std::vector<Params> n_grid(I64 lo, I64 n_max) {
    std::vector<Params> g;
    for (I64 n = lo; n <= n_max; ++n) g.push_back({n});
    return g;
}

bool nonneg(const Params& p, std::size_t from = 0) {
    return std::all_of(p.begin() + static_cast<std::ptrdiff_t>(from), p.end(), [](I64 x) { return x >= 0; });
}

bool pair_ok(const Params& p, I64 a_min = 2) { return p.size() >= 2 && p[0] >= a_min && CoprimePair::valid(p[0], p[1]); }

CoprimePair pair_of(const Params& p) { return CoprimePair::make(p[0], p[1]); }

PolyCheck pc(std::string label, LaurentPoly lhs, LaurentPoly rhs) { return {std::move(label), std::move(lhs), std::move(rhs)}; }
SeriesCheck sc(std::string label, TruncatedSeries lhs, TruncatedSeries rhs) { return {std::move(label), std::move(lhs), std::move(rhs)}; }
PositivityCheck nc(std::string label, LaurentPoly v) { return {std::move(label), std::move(v)}; }

BosonicSpec spec_of(I64 a, I64 b, I64 abar, I64 bbar, Rational c2, Rational c1, Rational c0 = Rational(0)) {
    return {a, b, abar, bbar, c2, c1, c0, true};
}

// sum_j (-1)^j q^{(c2n j^2 + c1n j)/2} [2N over N - s j - r]
LaurentPoly single_bounded(I64 c2n, I64 c1n, I64 s, I64 r, I64 N) {
    LaurentPoly out;
    if (s == 0) throw std::invalid_argument("single_bounded needs s != 0");
    for (I64 j = -2 * N - 2; j <= 2 * N + 2; ++j) {
        const LaurentPoly k = qbinomial(2 * N, N - s * j - r);
        if (k.is_zero()) continue;
        const I64 e2 = c2n * j * j + c1n * j;
        if (e2 % 2 != 0) throw DomainError("single_bounded: odd exponent numerator");
        out.add_scaled(k, e2 / 2, (j % 2 != 0) ? -1 : 1);
    }
    return out;
}

// (alpha, beta) of the large-M bar-shifted G and the overall power q^{abar bbar}.
struct BarG {
    Rational alpha;
    Rational beta;
    I64 N;
    I64 M;
    I64 shift;
};

BarG bar_g(CoprimePair p, I64 L) {
    const BarPair bp = bar_pair(p);
    BarG g;
    if (thmmain2_uses_abar(p)) {
        g.alpha = Rational(p.b) - Rational(2 * bp.abar * p.b, p.a);
        g.beta = Rational(p.b) + Rational(1, p.a) + Rational(2 * bp.abar * p.b, p.a);
    } else {
        g.alpha = Rational(p.b - 2 * bp.bbar);
        g.beta = Rational(p.b) + Rational(1, p.a) + Rational(2 * bp.bbar);
    }
    g.N = L + bp.abar;
    g.M = L - bp.abar;
    g.shift = bp.abar * bp.bbar;
    return g;
}

LaurentPoly bar_g_value(CoprimePair p, I64 L) {
    const BarG g = bar_g(p, L);
    return g_poly(g.N, g.M, g.alpha, g.beta, p.a).shifted(g.shift);
}

BosonicSpec reciprocal_spec(const BosonicSpec& s) {
    BosonicSpec r = s;
    r.c2 = Rational(2 * s.a * s.b) - s.c2;
    r.c1 = Rational(2 * (s.a * s.bbar + s.abar * s.b)) - s.c1;
    r.c0 = Rational(2 * s.abar * s.bbar) - s.c0;
    return r;
}

TruncatedSeries as_series(const LaurentPoly& p, I64 T) { return TruncatedSeries::from_poly(p.truncated(T), T); }

// Product side checked two ways, then compared with each sum side.
std::vector<Check> series_against_product(I64 A, I64 B, I64 T, std::vector<std::pair<std::string, TruncatedSeries>> sums) {
    std::vector<Check> out;
    const TruncatedSeries prod = product_series(A, B, T);
    out.push_back(sc("product: factors vs triple-product sum", prod, triple_product_sum(A, B, T)));
    for (auto& [label, s] : sums) out.push_back(sc(label + " = product", std::move(s), prod));
    return out;
}

// Outside 0 < i < K and alpha + beta < K the closed form takes negative or
// identically zero values, so it cannot count partitions there.
bool hook_domain(const Params& p) {
    if (p.size() != 6) return false;
    const I64 K = p[0], al = p[1], be = p[2], i = p[3], N = p[4], M = p[5];
    if (al < 1 || be < 1 || N < 0 || M < 0 || i <= 0 || i >= K || al + be >= K) return false;
    return be - i <= N - M && N - M <= K - al - i;
}

const std::vector<std::pair<I64, I64>> kSeriesPairs{{3, 2}, {5, 2}, {5, 3}, {7, 2}, {7, 5}};

std::vector<IdentityCase> build() {
    std::vector<IdentityCase> cs;
    auto add = [&](IdentityCase c) { cs.push_back(std::move(c)); };

    // ---- main family F ----
    add({"F.bosonic_equals_fermionic", "thmmain",
         "sum_j (-1)^j q^{j((2ab+1)j+1)/2} B(L,M,aj,bj) = F_{a,b}(L,M)", CaseKind::polynomial, {"a", "b", "L", "M"},
         "coprime 1 <= b < a <= a_max (8), 0 <= L,M <= lm_max (8)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(2, b.a(8), b.lm(8)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{pc("bosonic = fermionic", bosonic_eval(thmmain_spec(pr), p[2], p[3]), eval_F(pr, p[2], p[3]))};
         }});
    add({"F.tree_walk", "thmmain", "transform-tree value of F_{a,b}(L,M) = lattice sum = bosonic sum", CaseKind::polynomial,
         {"a", "b", "L", "M"}, "coprime 1 <= b < a <= a_max (8), 0 <= L,M <= lm_max (8)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(2, b.a(8), b.lm(8)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             const LaurentPoly tw = tree_walk(pr, Family::F, p[2], p[3]);
             return std::vector<Check>{pc("tree = fermionic", tw, eval_F(pr, p[2], p[3])),
                                       pc("bosonic = tree", bosonic_eval(thmmain_spec(pr), p[2], p[3]), tw)};
         }});

    // ---- bar-shifted family H ----
    add({"H.bosonic_equals_fermionic", "thmmain2",
         "sum_j (-1)^j q^{j((2ab+1)j+c)/2+abar bbar} B(L,M,aj+abar,bj+bbar) = H_{a,b}(L,M), c = 4 abar b+1 or 4 a bbar+1 by parity",
         CaseKind::polynomial, {"a", "b", "L", "M"}, "coprime 1 <= b < a, 3 <= a <= a_max (8), 0 <= L,M <= lm_max (8)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p, 3) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(3, b.a(8), b.lm(8)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{pc("bosonic = fermionic", bosonic_eval(thmmain2_spec(pr), p[2], p[3]), eval_H(pr, p[2], p[3]))};
         }});
    add({"H.tree_walk", "thmmain2", "transform-tree value of H_{a,b}(L,M) = lattice sum", CaseKind::polynomial,
         {"a", "b", "L", "M"}, "coprime 1 <= b < a, 3 <= a <= a_max (8), 0 <= L,M <= lm_max (8)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p, 3) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(3, b.a(8), b.lm(8)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{pc("tree = fermionic", tree_walk(pr, Family::H, p[2], p[3]), eval_H(pr, p[2], p[3]))};
         }});
    add({"H.reciprocal", "thmmain2",
         "q -> 1/q partner: bosonic sum with 2ab - c2, 2(a bbar + abar b) - c1, 2 abar bbar - c0 = q^{2LM} H_{a,b}(L,M;1/q)",
         CaseKind::polynomial, {"a", "b", "L", "M"}, "coprime 1 <= b < a, 3 <= a <= a_max (8), 0 <= L,M <= lm_max (6)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p, 3) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(3, b.a(8), b.lm(6)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             const LaurentPoly h = eval_H(pr, p[2], p[3]);
             return std::vector<Check>{pc("reciprocal bosonic = q^{2LM} H(1/q)", bosonic_eval(reciprocal_spec(thmmain2_spec(pr)), p[2], p[3]),
                                          h.inverse_q().shifted(2 * p[2] * p[3]))};
         }});
    add({"H.base_3_2", "thmmain2",
         "sum_j (-1)^j q^{j(13j+9)/2+1} B(L,M,3j+1,2j+1) = sum_{i,n} q^{i^2+n^2} [2L+M-i,2L][L+i-n-1,2i-1][i-1,n] = H_{3,2}(L,M)",
         CaseKind::polynomial, {"L", "M"}, "0 <= L,M <= lm_max (8)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(8)); },
         [](const Params& p) {
             const LaurentPoly h = eval_H({3, 2}, p[0], p[1]);
             const LaurentPoly lhs = bosonic_eval(spec_of(3, 2, 1, 1, Rational(13, 2), Rational(9, 2), Rational(1)), p[0], p[1]);
             return std::vector<Check>{pc("bosonic = (i,n) sum", lhs, oracle::h32_in_ni(p[0], p[1])),
                                       pc("(i,n) sum = (m1,m2) sum", oracle::h32_in_ni(p[0], p[1]), oracle::h32_in_m(p[0], p[1])),
                                       pc("lattice sum = (m1,m2) sum", h, oracle::h32_in_m(p[0], p[1]))};
         }});
    add({"H.base_3_1", "thmmain2",
         "sum_j (-1)^j q^{j(7j+1)/2} B(L,M,3j+1,j) = sum q^{(L-m1)^2+(m1-m2-1)^2} [L+M+m1,2L][L+m2,2m1-1][m1-1,m2] = H_{3,1}(L,M); "
         "its q -> 1/q partner sum_j (-1)^j q^{j(5j+3)/2} B(L,M,3j+1,j) = (n,i) sum",
         CaseKind::polynomial, {"L", "M"}, "0 <= L,M <= lm_max (8)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(8)); },
         [](const Params& p) {
             const I64 L = p[0], M = p[1];
             const LaurentPoly h = eval_H({3, 1}, L, M);
             const LaurentPoly lhs = bosonic_eval(spec_of(3, 1, 1, 0, Rational(7, 2), Rational(1, 2)), L, M);
             const LaurentPoly partner = bosonic_eval(spec_of(3, 1, 1, 0, Rational(5, 2), Rational(3, 2)), L, M);
             return std::vector<Check>{pc("bosonic = (m1,m2) sum", lhs, oracle::h31_in_m(L, M)),
                                       pc("(m1,m2) sum = (i,n) sum", oracle::h31_in_m(L, M), oracle::h31_in_ni(L, M)),
                                       pc("lattice sum = (m1,m2) sum", h, oracle::h31_in_m(L, M)),
                                       pc("partner bosonic = (n,i) sum", partner, oracle::rr2_doubly_bounded(L, M)),
                                       pc("partner = q^{2LM} H(1/q)", partner, h.inverse_q().shifted(2 * L * M))};
         }});

    // ---- even moduli ----
    add({"I.bosonic_equals_fermionic", "even", "sum_j (-1)^j q^{ab j^2} B(L,M,aj,bj) = I_{a,b}(L,M)", CaseKind::polynomial,
         {"a", "b", "L", "M"}, "coprime 1 <= b < a <= a_max (8), 0 <= L,M <= lm_max (8)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(2, b.a(8), b.lm(8)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{pc("bosonic = fermionic", bosonic_eval(even_spec(pr), p[2], p[3]), eval_I(pr, p[2], p[3]))};
         }});
    add({"I.tree_walk", "even", "transform-tree value of I_{a,b}(L,M) = lattice sum", CaseKind::polynomial, {"a", "b", "L", "M"},
         "coprime 1 <= b < a <= a_max (8), 0 <= L,M <= lm_max (8)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(2, b.a(8), b.lm(8)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{pc("tree = fermionic", tree_walk(pr, Family::I, p[2], p[3]), eval_I(pr, p[2], p[3]))};
         }});
    add({"I.seed", "even", "sum_j (-1)^j q^{j^2} B(L,M,j,j) = [L+M, M]_{q^2}", CaseKind::polynomial, {"L", "M"},
         "0 <= L,M <= lm_max (10)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(10)); },
         [](const Params& p) {
             const LaurentPoly lhs = bosonic_eval(spec_of(1, 1, 0, 0, Rational(1), Rational(0)), p[0], p[1]);
             return std::vector<Check>{pc("bosonic = q^2-binomial", lhs, oracle::even_seed_rhs(p[0], p[1]))};
         }});

    // ---- corollaries ----
    add({"f.bosonic_equals_fermionic", "corollaries", "sum_j (-1)^j q^{j((2ab-1)j+1)/2} B(L,M,aj,bj) = f_{a,b}(L,M)",
         CaseKind::polynomial, {"a", "b", "L", "M"}, "coprime 1 <= b < a <= a_max (8), 0 <= L,M <= lm_max (8)",
         [](const Params& p) { return p.size() == 4 && pair_ok(p) && nonneg(p, 2); },
         [](const Budget& b) { return pair_lm_grid(2, b.a(8), b.lm(8)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{pc("bosonic = fermionic", bosonic_eval(mainrecip_spec(pr), p[2], p[3]), eval_f(pr, p[2], p[3]))};
         }});
    add({"F.large_M", "corollaries", "G(L,L; b, b+1/a, a) = sum_j (-1)^j q^{j((2ab+1)j+1)/2} [2L, L-aj] = F_{a,b}(L)",
         CaseKind::polynomial, {"a", "b", "L"}, "coprime 1 <= b < a <= a_max (8), 0 <= L <= n_max (15)",
         [](const Params& p) { return p.size() == 3 && pair_ok(p) && p[2] >= 0; },
         [](const Budget& b) { return pair_n_grid(2, b.a(8), b.n(15)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             const I64 L = p[2];
             const LaurentPoly g = g_poly(L, L, Rational(pr.b), Rational(pr.b) + Rational(1, pr.a), pr.a);
             return std::vector<Check>{pc("G = alternating sum", g, single_bounded(2 * pr.a * pr.b + 1, 1, pr.a, 0, L)),
                                       pc("G = fermionic", g, eval_limit_M(pr, Family::F, L))};
         }});
    add({"F.large_L", "corollaries", "G(M,M; a, a+1/b, b) = sum_j (-1)^j q^{j((2ab+1)j+1)/2} [2M, M-bj] = F~_{a,b}(M)",
         CaseKind::polynomial, {"a", "b", "M"}, "coprime 1 <= b < a <= a_max (8), 0 <= M <= n_max (15)",
         [](const Params& p) { return p.size() == 3 && pair_ok(p) && p[2] >= 0; },
         [](const Budget& b) { return pair_n_grid(2, b.a(8), b.n(15)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             const I64 M = p[2];
             const LaurentPoly g = g_poly(M, M, Rational(pr.a), Rational(pr.a) + Rational(1, pr.b), pr.b);
             return std::vector<Check>{pc("G = alternating sum", g, single_bounded(2 * pr.a * pr.b + 1, 1, pr.b, 0, M)),
                                       pc("G = fermionic", g, eval_limit_L(pr, Family::F, M))};
         }});
    add({"f.large_M", "corollaries", "G(L,L; b-1/a, b, a) = sum_j (-1)^j q^{j((2ab-1)j+1)/2} [2L, L-aj] = f_{a,b}(L)",
         CaseKind::polynomial, {"a", "b", "L"}, "coprime 1 <= b < a <= a_max (8), 0 <= L <= n_max (15)",
         [](const Params& p) { return p.size() == 3 && pair_ok(p) && p[2] >= 0; },
         [](const Budget& b) { return pair_n_grid(2, b.a(8), b.n(15)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             const I64 L = p[2];
             const LaurentPoly g = g_poly(L, L, Rational(pr.b) - Rational(1, pr.a), Rational(pr.b), pr.a);
             return std::vector<Check>{pc("G = alternating sum", g, single_bounded(2 * pr.a * pr.b - 1, 1, pr.a, 0, L)),
                                       pc("G = fermionic", g, eval_limit_M(pr, Family::f, L))};
         }});
    add({"f.large_L", "corollaries", "G(M,M; a-1/b, a, b) = sum_j (-1)^j q^{j((2ab-1)j+1)/2} [2M, M-bj] = f~_{a,b}(M)",
         CaseKind::polynomial, {"a", "b", "M"}, "coprime 1 <= b < a <= a_max (8), 0 <= M <= n_max (15)",
         [](const Params& p) { return p.size() == 3 && pair_ok(p) && p[2] >= 0; },
         [](const Budget& b) { return pair_n_grid(2, b.a(8), b.n(15)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             const I64 M = p[2];
             const LaurentPoly g = g_poly(M, M, Rational(pr.a) - Rational(1, pr.b), Rational(pr.a), pr.b);
             return std::vector<Check>{pc("G = alternating sum", g, single_bounded(2 * pr.a * pr.b - 1, 1, pr.b, 0, M)),
                                       pc("G = fermionic", g, eval_limit_L(pr, Family::f, M))};
         }});
    add({"H.large_M", "corollaries", "q^{abar bbar} G(L+abar, L-abar; alpha, beta, a) = H_{a,b}(L), (alpha, beta) chosen by parity",
         CaseKind::polynomial, {"a", "b", "L"}, "coprime 1 <= b < a, 3 <= a <= a_max (8), 0 <= L <= n_max (15)",
         [](const Params& p) { return p.size() == 3 && pair_ok(p, 3) && p[2] >= 0; },
         [](const Budget& b) { return pair_n_grid(3, b.a(8), b.n(15)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{pc("G = fermionic", bar_g_value(pr, p[2]), eval_limit_M(pr, Family::H, p[2]))};
         }});
    add({"G.bounded_euler_and_rr", "corollaries",
         "G(L,L;1/2,1,2) = sum q^{nL}[L,n]; G(L,L;1,3/2,2) = sum q^{n^2}[L,n]; G(L,L;1/2,3/2,2) = (1+q^L)(-q^2;q^2)_{L-1}",
         CaseKind::polynomial, {"L"}, "0 <= L <= n_max (15)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; },
         [](const Budget& b) { return n_grid(0, b.n(15)); },
         [](const Params& p) {
             const I64 L = p[0];
             std::vector<Check> out{
                 pc("euler: G = sum", g_poly(L, L, Rational(1, 2), Rational(1), 2), oracle::euler_bounded(L)),
                 pc("euler: sum = f_{2,1}(L)", oracle::euler_bounded(L), eval_limit_M({2, 1}, Family::f, L)),
                 pc("rr: G = sum", g_poly(L, L, Rational(1), Rational(3, 2), 2), oracle::rr_bounded(L)),
                 pc("rr: sum = F_{2,1}(L)", oracle::rr_bounded(L), eval_limit_M({2, 1}, Family::F, L))};
             if (L >= 1) out.push_back(pc("product: G = product", g_poly(L, L, Rational(1, 2), Rational(3, 2), 2), oracle::ismail_product(L)));
             return out;
         }});
    add({"G.rogers_ramanujan_bounded", "corollaries",
         "G(L,L;1,2/3,3) = sum q^{n^2+i(L+n)}[2L-2i-n,n][L-i-n,i]; G(L+1,L-1;1/3,4/3,3) = sum q^{n(n+1)+i(L+n+1)}[2L-2i-n-1,n][L-i-n-1,i]",
         CaseKind::polynomial, {"L"}, "0 <= L <= n_max (15)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; },
         [](const Budget& b) { return n_grid(0, b.n(15)); },
         [](const Params& p) {
             const I64 L = p[0];
             const LaurentPoly g1 = g_poly(L, L, Rational(1), Rational(2, 3), 3);
             const LaurentPoly g2 = g_poly(L + 1, L - 1, Rational(1, 3), Rational(4, 3), 3);
             return std::vector<Check>{pc("first: G = alternating sum", g1, single_bounded(5, 1, 3, 0, L)),
                                       pc("first: G = double sum", g1, oracle::rr1_single(L)),
                                       pc("first: G = f_{3,1}(L)", g1, eval_limit_M({3, 1}, Family::f, L)),
                                       pc("second: G = alternating sum", g2, single_bounded(5, 3, 3, 1, L)),
                                       pc("second: G = double sum", g2, oracle::rr2_single(L))};
         }});
    add({"G.rogers_ramanujan_doubly_bounded", "corollaries",
         "sum_j (-1)^j q^{j(5j+1)/2} B(L,M,3j,j) = sum q^{n^2+i(L+n)}[2L+M-n-i,2L][2L-2i-n,n][L-i-n,i] = f_{3,1}(L,M); "
         "sum_j (-1)^j q^{j(5j+3)/2} B(L,M,3j+1,j) = sum q^{n(n+1)+i(L+n+1)}[2L+M-i-n,2L][2L-2i-n-1,n][L-i-n-1,i]",
         CaseKind::polynomial, {"L", "M"}, "0 <= L,M <= lm_max (8)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(8)); },
         [](const Params& p) {
             const I64 L = p[0], M = p[1];
             const LaurentPoly b1 = bosonic_eval(spec_of(3, 1, 0, 0, Rational(5, 2), Rational(1, 2)), L, M);
             const LaurentPoly b2 = bosonic_eval(spec_of(3, 1, 1, 0, Rational(5, 2), Rational(3, 2)), L, M);
             EvalOptions two_ones;
             two_ones.rep = Representation::last_is_one;
             return std::vector<Check>{pc("first: bosonic = (n,i) sum", b1, oracle::rr1_doubly_bounded(L, M)),
                                       pc("first: (n,i) sum = f_{3,1} with cf [1,1]", oracle::rr1_doubly_bounded(L, M), eval_f({3, 1}, L, M, two_ones)),
                                       pc("first: (n,i) sum = f_{3,1} with cf [2]", oracle::rr1_doubly_bounded(L, M), eval_f({3, 1}, L, M)),
                                       pc("second: bosonic = (n,i) sum", b2, oracle::rr2_doubly_bounded(L, M))};
         }});
    add({"f.andrews_gordon_doubly_bounded", "corollaries",
         "sum_j (-1)^j q^{j((2k+1)j+1)/2} B(L,M,(k+1)j,j) = (n_1..n_{k-1}, i) sum = f_{k+1,1}(L,M)", CaseKind::polynomial,
         {"k", "L", "M"}, "2 <= k <= 4, 0 <= L,M <= lm_max (6)",
         [](const Params& p) { return p.size() == 3 && p[0] >= 2 && nonneg(p); },
         [](const Budget& b) {
             std::vector<Params> g;
             for (I64 k = 2; k <= 4; ++k) {
                 for (auto& lm : lm_grid(b.lm(6))) g.push_back({k, lm[0], lm[1]});
             }
             return g;
         },
         [](const Params& p) {
             const I64 k = p[0], L = p[1], M = p[2];
             const LaurentPoly lhs = bosonic_eval(mainrecip_spec({k + 1, 1}), L, M);
             const LaurentPoly rhs = oracle::ag_doubly_bounded(k, L, M);
             return std::vector<Check>{pc("bosonic = multisum", lhs, rhs), pc("multisum = f_{k+1,1}", rhs, eval_f({k + 1, 1}, L, M))};
         }});
    add({"F.large_L_displays", "corollaries", "four-fold sums for F~_{7,5}(M) and F~_{7,2}(M) = lattice sums", CaseKind::polynomial,
         {"M"}, "0 <= M <= n_max (6)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; },
         [](const Budget& b) { return n_grid(0, b.n(6)); },
         [](const Params& p) {
             const I64 M = p[0];
             return std::vector<Check>{pc("(7,5) display = lattice", oracle::ftilde_75(M), eval_limit_L({7, 5}, Family::F, M)),
                                       pc("(7,2) display = lattice", oracle::ftilde_72(M), eval_limit_L({7, 2}, Family::F, M))};
         }});

    // ---- kernel identities and companions ----
    add({"kernel.diagonal_sum", "comp", "sum_j (-1)^j q^{j(3j+1)/2} B(L,M,j,j) = [L+M, M]", CaseKind::polynomial, {"L", "M"},
         "0 <= L,M <= lm_max (12)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(12)); },
         [](const Params& p) {
             return std::vector<Check>{pc("bosonic = binomial", bosonic_eval(spec_of(1, 1, 0, 0, Rational(3, 2), Rational(1, 2)), p[0], p[1]),
                                          qbinomial(p[0] + p[1], p[1]))};
         }});
    add({"kernel.rr_doubly_bounded", "comp",
         "sum_j (-1)^j q^{j(5j+1)/2} B(L,M,2j,j) = sum q^{n^2}[2L+M-n,2L][L,n], reached from the diagonal sum by either transform",
         CaseKind::polynomial, {"L", "M"}, "0 <= L,M <= lm_max (12)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(12)); },
         [](const Params& p) {
             const I64 L = p[0], M = p[1];
             const LaurentPoly rhs = oracle::square_sum_bounded(L, M);
             const PolyFamily seed = [](I64 x, I64 y) { return qbinomial(x + y, y); };
             return std::vector<Check>{
                 pc("bosonic = sum", bosonic_eval(spec_of(2, 1, 0, 0, Rational(5, 2), Rational(1, 2)), L, M), rhs),
                 pc("first transform of the diagonal sum", transform_step(Direction::B1, seed, L, M), rhs),
                 pc("second transform of the diagonal sum", transform_step(Direction::B2, seed, L, M), rhs),
                 pc("sum = F_{2,1}(L,M)", rhs, eval_F({2, 1}, L, M))};
         }});
    add({"kernel.odd_companions", "comp",
         "sum_j (-1)^j q^{j(5j+3)/2}[L+M+j,M-j-1][L+M-j,M+j] = sum q^{n(n+1)}[2L+M-n,2L+1][L,n]; the +1 variant likewise; "
         "second = first + q^M (square sum)",
         CaseKind::polynomial, {"L", "M"}, "0 <= L,M <= lm_max (12)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(12)); },
         [](const Params& p) {
             const I64 L = p[0], M = p[1];
             const LaurentPoly c1 = oracle::comp_lhs(L, M);
             const LaurentPoly c2 = oracle::comp2_lhs(L, M);
             return std::vector<Check>{pc("first: alternating = sum", c1, oracle::comp_rhs(L, M)),
                                       pc("second: alternating = sum", c2, oracle::comp2_rhs(L, M)),
                                       pc("second = first + q^M square sum", c2,
                                          c1 + bosonic_eval(spec_of(2, 1, 0, 0, Rational(5, 2), Rational(1, 2)), L, M).shifted(M))};
         }});
    add({"kernel.shifted_rr", "comp",
         "sum_j (-1)^j q^{j(5j+1)/2} B(L,M,2j+1,j) = sum q^{n^2}[2L+M-n-1,2L-1][L-1,n] = two-binomial form; companion sum vanishes",
         CaseKind::polynomial, {"L", "M"}, "0 <= L,M <= lm_max (12)", [](const Params& p) { return p.size() == 2 && nonneg(p); },
         [](const Budget& b) { return lm_grid(b.lm(12)); },
         [](const Params& p) {
             const I64 L = p[0], M = p[1];
             const LaurentPoly rhs = oracle::shifted_square_sum(L, M);
             const LaurentPoly lhs = bosonic_eval(spec_of(2, 1, 1, 0, Rational(5, 2), Rational(1, 2)), L, M);
             return std::vector<Check>{pc("bosonic = sum", lhs, rhs), pc("companion = 0", oracle::vanishing_companion(L, M), LaurentPoly()),
                                       pc("two-binomial form = sum", oracle::shifted_two_binomial_lhs(L, M), rhs),
                                       pc("bosonic + companion = two-binomial form", lhs + oracle::vanishing_companion(L, M),
                                          oracle::shifted_two_binomial_lhs(L, M)),
                                       pc("sum = H_{2,1}(L,M)", rhs, eval_H({2, 1}, L, M))};
         }});
    add({"G.odd_isolated", "comp", "G(L+1,L;1/2,2,2) = sum_j (-1)^j q^{j(5j+3)/2}[2L+1,L-2j] = sum q^{n(n+1)}[L,n]",
         CaseKind::polynomial, {"L"}, "0 <= L <= n_max (12)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; },
         [](const Budget& b) { return n_grid(0, b.n(12)); },
         [](const Params& p) {
             const I64 L = p[0];
             LaurentPoly alt;
             for (I64 j = -L - 1; j <= L + 1; ++j) alt.add_scaled(qbinomial(2 * L + 1, L - 2 * j), j * (5 * j + 3) / 2, (j % 2) ? -1 : 1);
             const LaurentPoly g = g_poly(L + 1, L, Rational(1, 2), Rational(2), 2);
             return std::vector<Check>{pc("G = alternating", g, alt), pc("G = sum", g, oracle::odd_isolated_rhs(L))};
         }});
    add({"kernel.diagonal_large_L", "comp",
         "sum_j (-1)^j q^{j(3j+1)/2}[2M,M-j] = (q)_{2M}/(q)_M; sum_j (-1)^j q^{j(5j+1)/2}[2M,M-j] = (q)_{2M}/(q)_M sum q^{n^2}[M,n]",
         CaseKind::polynomial, {"M"}, "0 <= M <= n_max (12)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; },
         [](const Budget& b) { return n_grid(0, b.n(12)); },
         [](const Params& p) {
             const I64 M = p[0];
             LaurentPoly ratio = LaurentPoly::one();
             for (I64 k = M + 1; k <= 2 * M; ++k) ratio = ratio * (LaurentPoly::one() - LaurentPoly::monomial(k));
             return std::vector<Check>{pc("three-halves = ratio", single_bounded(3, 1, 1, 0, M), ratio),
                                       pc("five-halves = ratio * square sum", single_bounded(5, 1, 1, 0, M), ratio * oracle::rr_bounded(M)),
                                       pc("five-halves = F~_{2,1}(M)", single_bounded(5, 1, 1, 0, M), eval_limit_L({2, 1}, Family::F, M))};
         }});

    // ---- series ----
    auto t_only = [](const Budget& b) { return std::vector<Params>{{b.t(60)}}; };
    add({"series.andrews_gordon", "series", "sum q^{N_1^2+..+N_{k-1}^2}/prod (q)_{n_j} = (q^k,q^{k+1},q^{2k+1};q^{2k+1})/(q)",
         CaseKind::series, {"k", "T"}, "2 <= k <= 4, T = order (60)", [](const Params& p) { return p.size() == 2 && p[0] >= 2 && p[1] >= 0; },
         [](const Budget& b) { return std::vector<Params>{{2, b.t(60)}, {3, b.t(60)}, {4, b.t(60)}}; },
         [](const Params& p) {
             const I64 k = p[0], T = p[1];
             return series_against_product(k, 2 * k + 1, T, {{"multisum", oracle::ag_sum(k, T)}, {"F_{k,1} series", eval_limit_both({k, 1}, Family::F, T)}});
         }});
    add({"series.bressoud", "series", "sum q^{N_1^2+..+N_{k-1}^2}/((q)_{n_1}..(q^2;q^2)_{n_{k-1}}) = (q^k,q^k,q^{2k};q^{2k})/(q)",
         CaseKind::series, {"k", "T"}, "2 <= k <= 3, T = order (60)", [](const Params& p) { return p.size() == 2 && p[0] >= 2 && p[1] >= 0; },
         [](const Budget& b) { return std::vector<Params>{{2, b.t(60)}, {3, b.t(60)}}; },
         [](const Params& p) {
             const I64 k = p[0], T = p[1];
             return series_against_product(k, 2 * k, T, {{"multisum", oracle::bressoud_sum(k, T)}, {"I_{k,1} series", eval_limit_both({k, 1}, Family::I, T)}});
         }});
    auto pair_t_grid = [](const Budget& b) {
        std::vector<Params> g;
        for (auto [a, bb] : kSeriesPairs) g.push_back({a, bb, b.t(60)});
        return g;
    };
    auto pair_t_domain = [](const Params& p) { return p.size() == 3 && pair_ok(p) && p[2] >= 0; };
    add({"series.F", "series", "F_{a,b} lattice series = (q^{ab},q^{ab+1},q^{2ab+1};q^{2ab+1})/(q)", CaseKind::series, {"a", "b", "T"},
         "(a,b) in {(3,2),(5,2),(5,3),(7,2),(7,5)}, T = order (60)", pair_t_domain, pair_t_grid,
         [](const Params& p) {
             const auto pr = pair_of(p);
             const I64 ab = pr.a * pr.b;
             return series_against_product(ab, 2 * ab + 1, p[2], {{"lattice series", eval_limit_both(pr, Family::F, p[2])}});
         }});
    add({"series.f", "series", "f_{a,b} lattice series = (q^{ab-1},q^{ab},q^{2ab-1};q^{2ab-1})/(q)", CaseKind::series, {"a", "b", "T"},
         "(a,b) in {(3,2),(5,2),(5,3),(7,2),(7,5)}, T = order (60)", pair_t_domain, pair_t_grid,
         [](const Params& p) {
             const auto pr = pair_of(p);
             const I64 ab = pr.a * pr.b;
             return series_against_product(ab - 1, 2 * ab - 1, p[2], {{"lattice series", eval_limit_both(pr, Family::f, p[2])}});
         }});
    add({"series.I", "series", "I_{a,b} lattice series = (q^{ab},q^{ab},q^{2ab};q^{2ab})/(q)", CaseKind::series, {"a", "b", "T"},
         "(a,b) in {(3,2),(5,2),(5,3),(7,2),(7,5)}, T = order (60)", pair_t_domain, pair_t_grid,
         [](const Params& p) {
             const auto pr = pair_of(p);
             const I64 ab = pr.a * pr.b;
             return series_against_product(ab, 2 * ab, p[2], {{"lattice series", eval_limit_both(pr, Family::I, p[2])}});
         }});
    add({"series.display_7_5", "series", "explicit four-fold sums for (7,5): moduli 71 and 69", CaseKind::series, {"T"},
         "T = order (60)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; }, t_only,
         [](const Params& p) {
             const I64 T = p[0];
             auto out = series_against_product(35, 71, T, {{"display", oracle::display_75(false, T)}, {"F lattice", eval_limit_both({7, 5}, Family::F, T)}});
             auto more = series_against_product(34, 69, T, {{"reciprocal display", oracle::display_75(true, T)}, {"f lattice", eval_limit_both({7, 5}, Family::f, T)}});
             out.insert(out.end(), more.begin(), more.end());
             return out;
         }});
    add({"series.display_7_2", "series", "explicit four-fold sums for (7,2): moduli 29 and 27", CaseKind::series, {"T"},
         "T = order (60)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; }, t_only,
         [](const Params& p) {
             const I64 T = p[0];
             auto out = series_against_product(14, 29, T, {{"display", oracle::display_72(false, T)}, {"F lattice", eval_limit_both({7, 2}, Family::F, T)}});
             auto more = series_against_product(13, 27, T, {{"reciprocal display", oracle::display_72(true, T)}, {"f lattice", eval_limit_both({7, 2}, Family::f, T)}});
             out.insert(out.end(), more.begin(), more.end());
             return out;
         }});
    add({"series.fibonacci", "series",
         "Fibonacci families: variants 1,2 at (F_k,F_{k-1}) with moduli 2F_kF_{k-1} +- 1, variants 3,4 at (F_k,F_{k-2}) with 2F_kF_{k-2} +- 1",
         CaseKind::series, {"variant", "k", "T"}, "variant 1..4, k in {5,6}, T = order (60)",
         [](const Params& p) { return p.size() == 3 && p[0] >= 1 && p[0] <= 4 && p[1] >= (p[0] <= 2 ? 4 : 5) && p[2] >= 0; },
         [](const Budget& b) {
             std::vector<Params> g;
             for (I64 v = 1; v <= 4; ++v) {
                 for (I64 k = 5; k <= 6; ++k) g.push_back({v, k, b.t(60)});
             }
             return g;
         },
         [](const Params& p) {
             const I64 v = p[0], k = p[1], T = p[2];
             const CoprimePair pr{oracle::fibonacci(k), oracle::fibonacci(v <= 2 ? k - 1 : k - 2)};
             const I64 X = pr.a * pr.b;
             const bool plus = (v % 2 == 1);
             const TruncatedSeries lattice = eval_limit_both(pr, plus ? Family::F : Family::f, T);
             return plus ? series_against_product(X, 2 * X + 1, T, {{"multisum", oracle::fib_sum(static_cast<int>(v), k, T)}, {"lattice", lattice}})
                         : series_against_product(X - 1, 2 * X - 1, T, {{"multisum", oracle::fib_sum(static_cast<int>(v), k, T)}, {"lattice", lattice}});
         }});
    add({"series.even_fibonacci", "series",
         "even-modulus Fibonacci families: (F_k,F_{k-1}) with modulus 2F_kF_{k-1}, (F_k,F_{k-2}) with modulus 2F_kF_{k-2}",
         CaseKind::series, {"family", "k", "T"}, "family 1..2, k in {4,5}, T = order (60)",
         [](const Params& p) { return p.size() == 3 && (p[0] == 1 || p[0] == 2) && p[1] >= 4 && p[2] >= 0; },
         [](const Budget& b) {
             std::vector<Params> g;
             for (I64 f = 1; f <= 2; ++f) {
                 for (I64 k = 4; k <= 5; ++k) g.push_back({f, k, b.t(60)});
             }
             return g;
         },
         [](const Params& p) {
             const I64 fam = p[0], k = p[1], T = p[2];
             const CoprimePair pr{oracle::fibonacci(k), oracle::fibonacci(fam == 1 ? k - 1 : k - 2)};
             const I64 X = pr.a * pr.b;
             return series_against_product(X, 2 * X, T, {{"multisum", oracle::even_fib_sum(static_cast<int>(fam), k, T)},
                                                        {"I lattice", eval_limit_both(pr, Family::I, T)}});
         }});
    add({"series.k_k_minus_1", "series", "(k,k-1) families in difference coordinates: moduli 2k(k-1)+1 and 2k(k-1)-1", CaseKind::series,
         {"k", "T"}, "3 <= k <= 4, T = order (60)", [](const Params& p) { return p.size() == 2 && p[0] >= 3 && p[1] >= 0; },
         [](const Budget& b) { return std::vector<Params>{{3, b.t(60)}, {4, b.t(60)}}; },
         [](const Params& p) {
             const I64 k = p[0], T = p[1], X = k * (k - 1);
             auto out = series_against_product(X, 2 * X + 1, T, {{"multisum", oracle::kk1_sum(false, k, T)}, {"F lattice", eval_limit_both({k, k - 1}, Family::F, T)}});
             auto more = series_against_product(X - 1, 2 * X - 1, T, {{"reciprocal multisum", oracle::kk1_sum(true, k, T)}, {"f lattice", eval_limit_both({k, k - 1}, Family::f, T)}});
             out.insert(out.end(), more.begin(), more.end());
             return out;
         }});
    add({"series.rogers_ramanujan", "series",
         "sum q^{n^2}/(q)_n and sum q^{n(n+1)}/(q)_n against modulus-5 products, and as the large-L limits of the bounded double sums",
         CaseKind::series, {"T"}, "T = order (60)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; }, t_only,
         [](const Params& p) {
             const I64 T = p[0];
             auto out = series_against_product(2, 5, T, {{"first sum", oracle::rr_series(1, T)},
                                                         {"first bounded sum at L=T+1", as_series(oracle::rr1_single(T + 1), T)},
                                                         {"f_{3,1} lattice", eval_limit_both({3, 1}, Family::f, T)}});
             auto more = series_against_product(1, 5, T, {{"second sum", oracle::rr_series(2, T)},
                                                          {"second bounded sum at L=T+1", as_series(oracle::rr2_single(T + 1), T)}});
             out.insert(out.end(), more.begin(), more.end());
             return out;
         }});

    // ---- positivity ----
    add({"positivity.G_integer_beta_family", "positivity", "G(L,L; b, b+1/a, a) has nonnegative coefficients", CaseKind::positivity,
         {"a", "b", "L"}, "coprime 1 <= b < a <= a_max (8), 0 <= L <= n_max (25)",
         [](const Params& p) { return p.size() == 3 && pair_ok(p) && p[2] >= 0; },
         [](const Budget& b) { return pair_n_grid(2, b.a(8), b.n(25)); },
         [](const Params& p) {
             const auto pr = pair_of(p);
             return std::vector<Check>{nc("G", g_poly(p[2], p[2], Rational(pr.b), Rational(pr.b) + Rational(1, pr.a), pr.a))};
         }});
    add({"positivity.G_bar_shifted_family", "positivity", "G(L+abar, L-abar; alpha, beta, a) has nonnegative coefficients",
         CaseKind::positivity, {"a", "b", "L"}, "coprime 1 <= b < a, 3 <= a <= a_max (8), 0 <= L <= n_max (20)",
         [](const Params& p) { return p.size() == 3 && pair_ok(p, 3) && p[2] >= 0; },
         [](const Budget& b) { return pair_n_grid(3, b.a(8), b.n(20)); },
         [](const Params& p) { return std::vector<Check>{nc("G", bar_g_value(pair_of(p), p[2]))}; }});
    add({"positivity.borwein", "positivity",
         "(q,q^2;q^3)_n = A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3) with A_n, B_n, C_n nonnegative (empirical) and equal to their G forms",
         CaseKind::positivity, {"n"}, "0 <= n <= n_max (30)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; },
         [](const Budget& b) { return n_grid(0, b.n(30)); },
         [](const Params& p) {
             const I64 n = p[0];
             const BorweinSplit s = borwein_split(n);
             LaurentPoly prod = LaurentPoly::one();
             for (I64 k = 1; k <= n; ++k) {
                 prod = prod * (LaurentPoly::one() - LaurentPoly::monomial(3 * k - 2));
                 prod = prod * (LaurentPoly::one() - LaurentPoly::monomial(3 * k - 1));
             }
             const LaurentPoly rebuilt = s.a.substitute_power(3) - s.b.substitute_power(3).shifted(1) - s.c.substitute_power(3).shifted(2);
             std::vector<Check> out{pc("split reconstructs the product", rebuilt, prod), nc("A_n", s.a), nc("B_n", s.b), nc("C_n", s.c),
                                    pc("A_n = G(n,n;4/3,5/3,3)", s.a, g_poly(n, n, Rational(4, 3), Rational(5, 3), 3))};
             if (n >= 1) {
                 out.push_back(pc("B_n = G(n+1,n-1;2/3,7/3,3)", s.b, g_poly(n + 1, n - 1, Rational(2, 3), Rational(7, 3), 3)));
                 out.push_back(pc("C_n = G(n+1,n-1;1/3,8/3,3)", s.c, g_poly(n + 1, n - 1, Rational(1, 3), Rational(8, 3), 3)));
             }
             return out;
         }});

    // ---- G(n,n) sums with noninteger parameters ----
    add({"nn.explicit_sums", "section8",
         "G(n,n;alpha,beta,K) for (1/2,1,2) (1,4/3,3) (5/4,3/2,4) (1,3/2,2) (3/2,7/4,4) equals its explicit positive sum",
         CaseKind::polynomial, {"which", "n"}, "which 0..4, 0 <= n <= n_max (12)",
         [](const Params& p) { return p.size() == 2 && p[0] >= 0 && p[0] <= 4 && p[1] >= 0; },
         [](const Budget& b) {
             std::vector<Params> g;
             for (I64 w = 0; w <= 4; ++w) {
                 for (I64 n = 0; n <= b.n(12); ++n) g.push_back({w, n});
             }
             return g;
         },
         [](const Params& p) {
             static const Rational al[5] = {Rational(1, 2), Rational(1), Rational(5, 4), Rational(1), Rational(3, 2)};
             static const Rational be[5] = {Rational(1), Rational(4, 3), Rational(3, 2), Rational(3, 2), Rational(7, 4)};
             static const I64 K[5] = {2, 3, 4, 2, 4};
             const auto w = static_cast<std::size_t>(p[0]);
             const LaurentPoly g = g_poly(p[1], p[1], al[w], be[w], K[w]);
             return std::vector<Check>{pc("G = sum", g, oracle::nn_sum(static_cast<int>(w), p[1])), nc("G", g)};
         }});
    add({"nn.borwein_positivity", "section8", "G(n,n;4/3,5/3,3) has nonnegative coefficients (no sum form known)", CaseKind::positivity,
         {"n"}, "0 <= n <= n_max (12)", [](const Params& p) { return p.size() == 1 && p[0] >= 0; },
         [](const Budget& b) { return n_grid(0, b.n(12)); },
         [](const Params& p) { return std::vector<Check>{nc("G", g_poly(p[0], p[0], Rational(4, 3), Rational(5, 3), 3))}; }});

    // ---- hook differences ----
    add({"hook.partition_count", "hookp",
         "D_{K,i}(N,M;alpha,beta) = generating function of partitions in the N x M box with the two diagonal hook-difference bounds",
         CaseKind::polynomial, {"K", "alpha", "beta", "i", "N", "M"},
         "K in {3,4,5}, alpha,beta in {1,2}, 0 <= N,M <= lm_max (6), beta-i <= N-M <= K-alpha-i, 0 < i < K, alpha+beta < K",
         [](const Params& p) { return hook_domain(p); },
         [](const Budget& b) {
             std::vector<Params> g;
             const I64 lm = b.lm(6);
             for (I64 K = 3; K <= 5; ++K) {
                 for (I64 al = 1; al <= 2; ++al) {
                     for (I64 be = 1; be <= 2; ++be) {
                         for (I64 N = 0; N <= lm; ++N) {
                             for (I64 M = 0; M <= lm; ++M) {
                                 for (I64 i = be - (N - M); i <= K - al - (N - M); ++i) {
                                     Params q{K, al, be, i, N, M};
                                     if (hook_domain(q)) g.push_back(std::move(q));
                                 }
                             }
                         }
                     }
                 }
             }
             return g;
         },
         [](const Params& p) {
             return std::vector<Check>{pc("formula = enumeration", d_poly(p[0], p[3], p[4], p[5], Rational(p[1]), Rational(p[2])),
                                          partition_oracle(p[0], p[3], p[4], p[5], p[1], p[2]))};
         }});
    add({"hook.G_specialisation", "hookp", "D_{2K,K}(N,M;alpha,beta) = G(N,M;alpha,beta,K)", CaseKind::polynomial,
         {"K", "two_alpha", "two_beta", "N", "M"}, "K in {2,3}, 2 alpha, 2 beta in {1..4}, 0 <= N,M <= lm_max (6)",
         [](const Params& p) { return p.size() == 5 && p[0] >= 1 && p[1] >= 0 && p[2] >= 0 && p[3] >= 0 && p[4] >= 0; },
         [](const Budget& b) {
             std::vector<Params> g;
             const I64 lm = b.lm(6);
             for (I64 K = 2; K <= 3; ++K) {
                 for (I64 a2 = 1; a2 <= 4; ++a2) {
                     for (I64 b2 = 1; b2 <= 4; ++b2) {
                         if ((K * a2) % 2 != 0 || (K * b2) % 2 != 0) continue;
                         for (I64 N = 0; N <= lm; ++N) {
                             for (I64 M = 0; M <= lm; ++M) g.push_back({K, a2, b2, N, M});
                         }
                     }
                 }
             }
             return g;
         },
         [](const Params& p) {
             const Rational al(p[1], 2), be(p[2], 2);
             return std::vector<Check>{pc("D = G", d_poly(2 * p[0], p[0], p[3], p[4], al, be), g_poly(p[3], p[4], al, be, p[0]))};
         }});

    return cs;
}

}  // namespace

const std::vector<IdentityCase>& identity_catalogue() {
    static const std::vector<IdentityCase> cases = build();
    return cases;
}

const IdentityCase& find_case(const std::string& id) {
    for (const auto& c : identity_catalogue()) {
        if (c.id == id) return c;
    }
    throw std::out_of_range("unknown identity case: " + id);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"thmmain", "thmmain2", "even", "corollaries", "series", "positivity", "section8", "comp", "hookp"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

}  // namespace burgetree
