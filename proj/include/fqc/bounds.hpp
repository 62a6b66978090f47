#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqc/closure.hpp"
#include "fqc/generators.hpp"
#include "fqc/staircase.hpp"

namespace fqc {

using BigInt = boost::multiprecision::cpp_int;

BigInt bigpow(BigInt base, int exp);

/// Exact nonnegative rational.  den == 0 encodes inf (num > 0) or an
/// undefined 0/0 ratio; both only ever appear as report ratios.
struct Fraction {
  BigInt num = 0;
  BigInt den = 1;
};

Fraction make_fraction(BigInt num, BigInt den);
Fraction frac_add(const Fraction& a, const Fraction& b);
Fraction frac_mul(const Fraction& a, const Fraction& b);
bool frac_leq(const Fraction& a, const Fraction& b);
bool frac_eq(const Fraction& a, const Fraction& b);
std::string frac_to_string(const Fraction& f);  // "p/q", "inf", "nan"
Fraction frac_from_string(const std::string& s);

/// Outcome of one exact inequality check, lhs <= rhs.
/// Advisory reports are informational (unproved or hypothesis-free variants)
/// and never drive a failure exit on their own.
struct BoundReport {
  std::string theorem_id;
  long long q = 0;
  int n = 0;
  int d = -1;  // -1 when not applicable
  BigInt lhs = 0;
  BigInt rhs = 0;
  bool holds = false;
  bool advisory = false;
  nlohmann::json details = nlohmann::json::object();

  /// lhs / rhs: at most 1/1 when the bound holds, larger means violation.
  Fraction ratio() const;
};

/// |S_{<=d}| * |Y| <= HF(Y, d) * q^n with S the box staircase of GF(q)^n.
/// The staircase count uses the closed form; tests pin it to the
/// materialized staircase.
BoundReport verify_size_bound(const PointSet& y, int d, const Caps& caps = {});

/// |S_{<=d}| * |cl_d(Y)| <= q^n * |Y|, plus the chain
/// HF(cl_d(Y), d) = HF(Y, d) <= |Y| recomputed from scratch.
BoundReport verify_closure_bound(const PointSet& y, int d, const Caps& caps = {});

/// For Y inside a product set E = E_1 x ... x E_n:
/// reports[0] checks |B_{<=d}| * |cl_d(Y) ∩ E| <= |E| * |Y| (asserted),
/// reports[1] the same with the unrestricted grid closure (advisory; it can
/// genuinely fail, see the bundled regression instance).
/// B is the box staircase with sides |E_i|.
std::vector<BoundReport> verify_product_closure_bound(
    const std::vector<std::vector<std::uint32_t>>& factors, const PointSet& y, int d,
    const Caps& caps = {});

/// |S^m_{<=d}| * |Y| <= HF^m(Y, d) * q^n with S^m the multiplicity staircase.
BoundReport verify_multiplicity_set_bound(const PointSet& y, int d, int m,
                                          const Caps& caps = {});

/// HF^l(GF(q)^n, d) * |cl_d^{l,m}(Y)| <= q^n * C(m+n-1, n) * |Y|, with each
/// link of the underlying chain recomputed.
BoundReport verify_multiplicity_closure_bound(const PointSet& y, int d, int l, int m,
                                              const Caps& caps = {});

/// HF^m(Y, d1) * C(n+d2, n) <= HF^m(Y, d2) * C(n+d1, n) for d1 >= d2.
BoundReport verify_hilbert_growth(const PointSet& y, int d1, int d2, int m = 1,
                                  const Caps& caps = {});

/// When lambda * d < |X| * (m - l + 1) + l - 1 for X on the curve, the whole
/// curve lies in cl_d^{l,m}(X).  lhs counts curve points missing from the
/// closure.  An unmet hypothesis downgrades the report to advisory.
BoundReport verify_schwartz_zippel_mult(const CurveSpec& curve, const PointSet& x, int d,
                                        int l, int m, const Caps& caps = {});

struct KakeyaResult {
  bool hypothesis_ok = false;
  std::vector<Point> offenders;  // points of X with no valid witness
  BoundReport report;            // meaningful only when hypothesis_ok
};

/// |X| * tau^n <= (tau + lambda*(q-1))^n * |Y| after rechecking, point by
/// point, that the recorded witness curve passes through the point, has
/// degree <= lambda and meets Y in at least tau points.
/// `chain` = (l, m, d) additionally emits the advisory consequence
/// C(l+n-1, n) * |X| <= C(m+n-1, n) * |Y| for parameters satisfying
/// lambda*d < tau*(m-l+1)+l-1 and d >= n(q-1)+(l-1)q.
KakeyaResult verify_statistical_kakeya(
    const InstanceBundle& bundle, int lambda, int tau,
    std::optional<std::tuple<int, int, int>> chain = std::nullopt, const Caps& caps = {});

struct PartialLinesResult {
  bool hypothesis_ok = false;
  std::vector<Point> offenders;
  BoundReport factorial_form;              // |X| <= n! * 2^n * |Y|
  BoundReport rational_form;               // |X| * q^n <= (3q-2)^n * |Y|
  std::optional<BoundReport> alpha_form;   // |X| * tau^n <= (tau+q-1)^n * |Y|
  std::string tighter;                     // "factorial" or "rational"
};

/// Line-family corollaries; requires 2*tau >= q.  `alpha` = (a, b) checks the
/// sample-size hypothesis tau^b >= q^a exactly and then the bound
/// instantiated at tau, which is at least as strong as the q^alpha form.
PartialLinesResult verify_partial_lines_corollaries(
    const InstanceBundle& bundle, std::optional<std::pair<int, int>> alpha = std::nullopt,
    const Caps& caps = {});

BoundReport splus_growth_report(const std::vector<Exponent>& s, int n, int d);
BoundReport union_subadditivity_report(const std::vector<PointSet>& parts, int d,
                                       const Caps& caps = {});
BoundReport closure_axioms_report(const PointSet& x, const PointSet& y, int d,
                                  const Caps& caps = {});

enum class Monotonicity { kConstant, kIncreasing, kDecreasing, kNone };
std::string to_string(Monotonicity m);

/// Nonnegative rational tables on the lattice {0..box_1} x ... x {0..box_n},
/// stored mixed-radix with the last coordinate fastest.
struct LatticeFunctions {
  std::vector<int> box;
  std::vector<Fraction> mu, f, g;
};

/// Correlation-inequality check: verifies separately that
/// (a) mu is log-supermodular: mu(x)mu(y) <= mu(x join y) mu(x meet y),
/// (b) f and g are monotone in the same direction (each may be constant),
/// (c) (sum mu f)(sum mu g) <= (sum mu)(sum mu f g).
/// (c) is evaluated even when (a) or (b) fails; hypotheses_hold reports
/// (a) && (b).  Indicators of lower sets are decreasing, so the aligned
/// decreasing pair is accepted on a par with the increasing one.
struct FkgReport {
  bool mu_log_supermodular = false;
  Monotonicity f_trend = Monotonicity::kNone;
  Monotonicity g_trend = Monotonicity::kNone;
  bool aligned = false;
  bool hypotheses_hold = false;
  bool inequality_holds = false;
  Fraction sum_mu, sum_muf, sum_mug, sum_mufg;
  Fraction lhs, rhs;
};

FkgReport fkg_check(const LatticeFunctions& fns, long long cell_cap = kDefaultLatticeCap);

enum class SweepMode { kSizeBound, kClosureBound };

/// One bound check for a single masked subset of the lex-ordered grid.
struct SweepResult {
  SweepMode mode = SweepMode::kSizeBound;
  long long q = 0;
  int n = 0;
  int dmin = 0;
  int dmax = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  long long instances = 0;   // subsets considered
  long long violations = 0;
  std::vector<BoundReport> reports;  // ordered by (d, mask)
  BoundReport worst;                 // maximal lhs/rhs, ties to the earliest
};

/// Exhaustive over all 2^(q^n) subsets when q^n <= 16; otherwise `sample`
/// random masks are drawn from the seed (q^n <= 64 required).
SweepResult exhaustive_sweep(FieldPtr field, int n, int dmin, int dmax, SweepMode mode,
                             std::optional<long long> sample = std::nullopt,
                             std::uint64_t seed = 0, const Caps& caps = {});

}  // namespace fqc
