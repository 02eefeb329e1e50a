#include "properties.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "burgetree/burge.hpp"
#include "burgetree/cfmachine.hpp"
#include "burgetree/fermionic.hpp"
#include "burgetree/qcombinat.hpp"
#include "burgetree/verify.hpp"
#include "verify/oracles.hpp"

namespace burgetree::props {

namespace {

using I64 = std::int64_t;

template <class... Ts>
std::string where(const char* what, Ts... xs) {
    std::ostringstream os;
    os << what << " at (";
    const char* sep = "";
    ((os << sep << xs, sep = ","), ...);
    os << ")";
    return os.str();
}

std::vector<CoprimePair> pairs_upto(I64 a_max) {
    std::vector<CoprimePair> out;
    for (I64 a = 2; a <= a_max; ++a) {
        for (I64 b = 1; b < a; ++b) {
            if (std::gcd(a, b) == 1) out.push_back({a, b});
        }
    }
    return out;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<I64> low(-4, 4), len(0, 6), coef(-1000000000000LL, 1000000000000LL);
    std::vector<Integer> c;
    const I64 n = len(rng);
    for (I64 k = 0; k < n; ++k) c.emplace_back(coef(rng));
    return LaurentPoly(low(rng), std::move(c));
}

LaurentPoly poch(I64 n) {
    LaurentPoly p = LaurentPoly::one();
    for (I64 k = 1; k <= n; ++k) p = p * (LaurentPoly::one() - LaurentPoly::monomial(k));
    return p;
}

std::vector<Property> build() {
    std::vector<Property> ps;

    ps.push_back({"qcore", "ring axioms on random polynomials", [] {
                      std::mt19937_64 rng(20260101);
                      for (int t = 0; t < 300; ++t) {
                          const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
                          if ((a * b) * c != a * (b * c)) return where("associativity", t);
                          if (a * (b + c) != a * b + a * c) return where("distributivity", t);
                          if (a * b != b * a || a + b != b + a) return where("commutativity", t);
                          if (a - a != LaurentPoly()) return where("additive inverse", t);
                      }
                      return std::string();
                  }});
    ps.push_back({"qcore", "inverse_q is a ring homomorphism", [] {
                      std::mt19937_64 rng(7);
                      for (int t = 0; t < 300; ++t) {
                          const LaurentPoly a = random_poly(rng), b = random_poly(rng);
                          if (lp_inverse_q(a * b) != lp_inverse_q(a) * lp_inverse_q(b)) return where("product", t);
                          if (lp_inverse_q(a + b) != lp_inverse_q(a) + lp_inverse_q(b)) return where("sum", t);
                          if (lp_inverse_q(lp_inverse_q(a)) != a) return where("involution", t);
                      }
                      return std::string();
                  }});
    ps.push_back({"qcore", "product over parts = +-1 mod 5 counts restricted partitions", [] {
                      const I64 T = 20;
                      std::vector<SeriesFactor> f;
                      for (I64 e = 1; e <= T; ++e) {
                          if (e % 5 == 1 || e % 5 == 4) f.push_back({e, -1});
                      }
                      const TruncatedSeries s = ts_from_factors(f, T);
                      // brute force: partitions of n into parts = +-1 mod 5
                      std::function<I64(I64, I64)> cnt = [&](I64 n, I64 max_part) -> I64 {
                          if (n == 0) return 1;
                          I64 c = 0;
                          for (I64 p = std::min(n, max_part); p >= 1; --p) {
                              if (p % 5 == 1 || p % 5 == 4) c += cnt(n - p, p);
                          }
                          return c;
                      };
                      for (I64 n = 0; n <= T; ++n) {
                          if (s.coeff(n) != Integer(cnt(n, n))) return where("coefficient", n);
                      }
                      const I64 expect[11] = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6};
                      for (I64 n = 0; n <= 10; ++n) {
                          if (s.coeff(n) != Integer(expect[n])) return where("frozen prefix", n);
                      }
                      return std::string();
                  }});

    ps.push_back({"qcombinat", "both Pascal recurrences, 0 <= m <= n <= 20", [] {
                      for (I64 n = 1; n <= 20; ++n) {
                          for (I64 m = 0; m <= n; ++m) {
                              const LaurentPoly lhs = qbinomial(n, m);
                              if (lhs != qbinomial(n - 1, m - 1) + qbinomial(n - 1, m).shifted(m)) return where("first", n, m);
                              if (lhs != qbinomial(n - 1, m - 1).shifted(n - m) + qbinomial(n - 1, m)) return where("second", n, m);
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"qcombinat", "binomial reciprocity, n <= 15", [] {
                      for (I64 n = 0; n <= 15; ++n) {
                          for (I64 m = 0; m <= n; ++m) {
                              if (lp_inverse_q(qbinomial(n, m)) != qbinomial(n, m).shifted(m * (m - n))) return where("reciprocity", n, m);
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"qcombinat", "kernel symmetries and reciprocity, L,M <= 8", [] {
                      for (I64 L = 0; L <= 8; ++L) {
                          for (I64 M = 0; M <= 8; ++M) {
                              for (I64 a = -L; a <= L; ++a) {
                                  for (I64 b = -M; b <= M; ++b) {
                                      const LaurentPoly k = b_kernel(L, M, a, b);
                                      if (k != b_kernel(M, L, b, a)) return where("swap", L, M, a, b);
                                      if (k != b_kernel(L, M, -a, -b)) return where("negation", L, M, a, b);
                                      if (lp_inverse_q(k) != k.shifted(2 * a * b - 2 * L * M)) return where("reciprocity", L, M, a, b);
                                  }
                              }
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"qcombinat", "kernel large-M window against [2L, L-a]", [] {
                      for (I64 L = 0; L <= 4; ++L) {
                          for (I64 M = 10; M <= 14; ++M) {
                              for (I64 a = -L; a <= L; ++a) {
                                  for (I64 b = -3; b <= 3; ++b) {
                                      const LaurentPoly lhs = (b_kernel(L, M, a, b) * poch(2 * L)).truncated(M - std::abs(b));
                                      const LaurentPoly rhs = qbinomial(2 * L, L - a).truncated(M - std::abs(b));
                                      if (lhs != rhs) return where("window", L, M, a, b);
                                  }
                              }
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"qcombinat", "G symmetry, reflection and both recurrences", [] {
                      const Rational halves[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
                      for (I64 K = 2; K <= 4; K += 2) {
                          for (I64 N = 0; N <= 6; ++N) {
                              for (I64 M = 0; M <= 6; ++M) {
                                  for (const Rational& al : halves) {
                                      for (const Rational& be : halves) {
                                          const LaurentPoly g = g_poly(N, M, al, be, K);
                                          if (g != g_poly(M, N, be, al, K)) return where("symmetry", K, N, M);
                                          const Rational al2 = Rational(K - N + M) - al, be2 = Rational(K + N - M) - be;
                                          if (lp_inverse_q(g) != g_poly(N, M, al2, be2, K).shifted(-M * N)) return where("reflection", K, N, M);
                                          if (N >= 1 && M >= 1) {
                                              const LaurentPoly r1 = g_poly(N, M - 1, al, be, K) + g_poly(N - 1, M, al + Rational(1), be - Rational(1), K).shifted(M);
                                              const LaurentPoly r2 = g_poly(N - 1, M, al, be, K) + g_poly(N, M - 1, al - Rational(1), be + Rational(1), K).shifted(N);
                                              if (g != r1) return where("first recurrence", K, N, M);
                                              if (g != r2) return where("second recurrence", K, N, M);
                                          }
                                      }
                                  }
                              }
                          }
                      }
                      return std::string();
                  }});

    ps.push_back({"cfmachine", "d independent of the representation, a <= 20", [] {
                      for (auto p : pairs_upto(20)) {
                          if (p.a == 2) continue;
                          if (cf_expand(p).d != cf_expand(p, Representation::last_is_one).d) return where("d", p.a, p.b);
                      }
                      return std::string();
                  }});
    ps.push_back({"cfmachine", "bar pairs of (a,b) and (a,a-b), a <= 20", [] {
                      for (auto p : pairs_upto(20)) {
                          if (p.a < 3 || 2 * p.b > p.a) continue;
                          const BarPair x = bar_pair(p), y = bar_pair({p.a, p.a - p.b});
                          if (x.abar != y.abar || x.abar != x.bbar + y.bbar) return where("bar relation", p.a, p.b);
                      }
                      return std::string();
                  }});
    ps.push_back({"cfmachine", "abar against 2 bbar follows a against 2b, a <= 20", [] {
                      for (auto p : pairs_upto(20)) {
                          if (p.a < 3) continue;
                          const BarPair x = bar_pair(p);
                          if (p.a < 2 * p.b && !(x.abar <= 2 * x.bbar)) return where("a<2b", p.a, p.b);
                          if (p.a >= 2 * p.b && !(x.abar >= 2 * x.bbar)) return where("a>=2b", p.a, p.b);
                      }
                      return std::string();
                  }});
    ps.push_back({"cfmachine", "toggling the representation edits only the final tadpole block", [] {
                      for (auto p : pairs_upto(20)) {
                          if (p.a == 2) continue;
                          const CFData c2 = cf_expand(p);
                          const CFData c1 = cf_toggle_rep(c2);
                          const CartanData x = build_cartan(c2), y = build_cartan(c1);
                          const I64 d = x.d;
                          if (y.d != d || d < 2) return where("dimension", p.a, p.b);
                          for (I64 j = 1; j <= d; ++j) {
                              for (I64 k = 1; k <= d; ++k) {
                                  I64 expect = x.incidence(j, k);
                                  if (j == d - 1 && k == d - 1) expect = 1;
                                  if (j == d - 1 && k == d) expect = -1;
                                  if (y.incidence(j, k) != expect) return where("incidence entry", p.a, p.b, j, k);
                              }
                          }
                          if (x.incidence(d - 1, d - 1) != 0 || x.incidence(d - 1, d) != 1) return where("original block", p.a, p.b);
                      }
                      return std::string();
                  }});

    ps.push_back({"fermionic", "F and f independent of the representation, a <= 9, L,M <= 6", [] {
                      EvalOptions one;
                      one.rep = Representation::last_is_one;
                      for (auto p : pairs_upto(9)) {
                          if (p.a == 2) continue;
                          for (I64 L = 0; L <= 6; ++L) {
                              for (I64 M = 0; M <= 6; ++M) {
                                  if (eval_F(p, L, M) != eval_F(p, L, M, one)) return where("F", p.a, p.b, L, M);
                                  if (eval_f(p, L, M) != eval_f(p, L, M, one)) return where("f", p.a, p.b, L, M);
                              }
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"fermionic", "both summation forms agree at (2,1), L,M <= 8", [] {
                      EvalOptions lo, up;
                      lo.form = FormChoice::lower;
                      up.form = FormChoice::upper;
                      for (I64 L = 0; L <= 8; ++L) {
                          for (I64 M = 0; M <= 8; ++M) {
                              if (eval_F({2, 1}, L, M, lo) != eval_F({2, 1}, L, M, up)) return where("F_{2,1}", L, M);
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"fermionic", "enlarging every search bound by 3 changes nothing", [] {
                      EvalOptions wide;
                      wide.search_slack = 3;
                      for (auto p : pairs_upto(7)) {
                          for (I64 L = 0; L <= 4; ++L) {
                              for (I64 M = 0; M <= 4; ++M) {
                                  if (eval_F(p, L, M) != eval_F(p, L, M, wide)) return where("F", p.a, p.b, L, M);
                                  if (eval_f(p, L, M) != eval_f(p, L, M, wide)) return where("f", p.a, p.b, L, M);
                                  if (eval_I(p, L, M) != eval_I(p, L, M, wide)) return where("I", p.a, p.b, L, M);
                                  if (p.a >= 3 && eval_H(p, L, M) != eval_H(p, L, M, wide)) return where("H", p.a, p.b, L, M);
                              }
                          }
                          if (eval_limit_both(p, Family::F, 25) != eval_limit_both(p, Family::F, 25, wide)) return where("F series", p.a, p.b);
                          if (eval_limit_L(p, Family::F, 4) != eval_limit_L(p, Family::F, 4, wide)) return where("F large L", p.a, p.b);
                      }
                      return std::string();
                  }});
    ps.push_back({"fermionic", "F(L,M) (q)_{2L} agrees with the large-M limit up to q^M", [] {
                      for (auto p : pairs_upto(7)) {
                          for (I64 L = 0; L <= 4; ++L) {
                              const LaurentPoly lim = eval_limit_M(p, Family::F, L);
                              for (I64 M = 0; M <= 10; ++M) {
                                  if ((eval_F(p, L, M) * poch(2 * L)).truncated(M) != lim.truncated(M)) return where("window", p.a, p.b, L, M);
                              }
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"fermionic", "lattice sums have nonnegative coefficients, a <= 8, L,M <= 6", [] {
                      for (auto p : pairs_upto(8)) {
                          for (I64 L = 0; L <= 6; ++L) {
                              for (I64 M = 0; M <= 6; ++M) {
                                  for (Family f : {Family::F, Family::f, Family::H, Family::I}) {
                                      if (f == Family::H && p.a < 3) continue;
                                      LaurentPoly v;
                                      switch (f) {
                                          case Family::F: v = eval_F(p, L, M); break;
                                          case Family::f: v = eval_f(p, L, M); break;
                                          case Family::H: v = eval_H(p, L, M); break;
                                          case Family::I: v = eval_I(p, L, M); break;
                                      }
                                      if (!positivity_scan(v).nonneg) return where("negative coefficient", p.a, p.b, L, M);
                                  }
                              }
                          }
                      }
                      return std::string();
                  }});

    ps.push_back({"burge", "bosonic = tree walk = lattice sum, a <= 6, L,M <= 5", [] {
                      for (auto p : pairs_upto(6)) {
                          for (I64 L = 0; L <= 5; ++L) {
                              for (I64 M = 0; M <= 5; ++M) {
                                  const LaurentPoly f = eval_F(p, L, M);
                                  if (bosonic_eval(thmmain_spec(p), L, M) != f) return where("bosonic F", p.a, p.b, L, M);
                                  if (tree_walk(p, Family::F, L, M) != f) return where("tree F", p.a, p.b, L, M);
                                  if (tree_walk(p, Family::I, L, M) != eval_I(p, L, M)) return where("tree I", p.a, p.b, L, M);
                                  if (p.a >= 3 && tree_walk(p, Family::H, L, M) != eval_H(p, L, M)) return where("tree H", p.a, p.b, L, M);
                              }
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"burge", "single transforms on kernel families wherever the condition holds", [] {
                      for (I64 a = -3; a <= 3; ++a) {
                          for (I64 b = -3; b <= 3; ++b) {
                              const PolyFamily k1 = [a, b](I64 x, I64 y) { return b_kernel(x, y, a, b); };
                              const PolyFamily k2 = [a, b](I64 x, I64 y) { return b_kernel(x, y, b, a); };
                              for (I64 L = 0; L <= 4; ++L) {
                                  for (I64 M = 0; M <= 4; ++M) {
                                      if (!condition_check(L, M, a, b)) continue;
                                      const LaurentPoly rhs = b_kernel(L, M, a + b, b).shifted(b * b);
                                      if (transform_step(Direction::B1, k1, L, M) != rhs) return where("first transform", a, b, L, M);
                                      if (transform_step(Direction::B2, k2, L, M) != rhs) return where("second transform", a, b, L, M);
                                  }
                              }
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"burge", "odd companions and their sum rule, L,M <= 8", [] {
                      for (I64 L = 0; L <= 8; ++L) {
                          for (I64 M = 0; M <= 8; ++M) {
                              const LaurentPoly c1 = oracle::comp_lhs(L, M), c2 = oracle::comp2_lhs(L, M);
                              if (c1 != oracle::comp_rhs(L, M)) return where("first", L, M);
                              if (c2 != oracle::comp2_rhs(L, M)) return where("second", L, M);
                              if (c2 != c1 + oracle::square_sum_bounded(L, M).shifted(M)) return where("sum rule", L, M);
                          }
                      }
                      return std::string();
                  }});

    ps.push_back({"verify", "campaign reports identical across thread counts", [] {
                      CampaignOptions o1, o4;
                      o1.jobs = 1;
                      o4.jobs = 4;
                      o1.budget.a_max = o4.budget.a_max = 5;
                      o1.budget.lm_max = o4.budget.lm_max = 4;
                      o1.budget.n_max = o4.budget.n_max = 8;
                      o1.budget.order = o4.budget.order = 20;
                      const std::vector<std::string> suites{"thmmain", "series", "hookp"};
                      const std::string x = render_reports(run_campaign(suites, o1), ReportFormat::json, true);
                      const std::string y = render_reports(run_campaign(suites, o4), ReportFormat::json, true);
                      return x == y ? std::string() : std::string("canonical reports differ");
                  }});
    ps.push_back({"verify", "product side agrees when computed two ways", [] {
                      for (I64 B = 2; B <= 40; ++B) {
                          for (I64 A = 1; A < B; ++A) {
                              if (product_series(A, B, 40) != triple_product_sum(A, B, 40)) return where("product", A, B);
                          }
                      }
                      return std::string();
                  }});
    ps.push_back({"verify", "partition enumeration with vacuous constraints fills the box", [] {
                      for (I64 N = 0; N <= 6; ++N) {
                          for (I64 M = 0; M <= 6; ++M) {
                              if (partition_oracle(100, 50, N, M, 1, 1) != qbinomial(N + M, M)) return where("box", N, M);
                          }
                      }
                      return std::string();
                  }});
    return ps;
}

}  // namespace

const std::vector<Property>& all_properties() {
    static const std::vector<Property> ps = build();
    return ps;
}

}  // namespace burgetree::props
