#include "fqc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqc {
namespace {

nlohmann::json big_to_json(const BigInt& v);

long long checked_grid(const FiniteField& f, int n, const Caps& caps) {
  return grid_size(f, n, caps.grid);
}

nlohmann::json point_to_json(const Point& x) {
  nlohmann::json j = nlohmann::json::array();
  for (auto v : x) j.push_back(v);
  return j;
}

}  // namespace

BigInt bigpow(BigInt base, int exp) {
  if (exp < 0) throw std::invalid_argument("bigpow needs exp >= 0");
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

Fraction make_fraction(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) return Fraction{num > 0 ? BigInt(1) : BigInt(0), 0};
  if (num == 0) return Fraction{0, 1};
  BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
  return Fraction{num / g, den / g};
}

Fraction frac_add(const Fraction& a, const Fraction& b) {
  return make_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

Fraction frac_mul(const Fraction& a, const Fraction& b) {
  return make_fraction(a.num * b.num, a.den * b.den);
}

bool frac_leq(const Fraction& a, const Fraction& b) {
  if (a.den == 0 || b.den == 0) throw std::domain_error("comparison with inf/nan ratio");
  return a.num * b.den <= b.num * a.den;
}

bool frac_eq(const Fraction& a, const Fraction& b) {
  return a.num == b.num && a.den == b.den;
}

std::string frac_to_string(const Fraction& f) {
  if (f.den == 0) return f.num > 0 ? "inf" : "nan";
  if (f.den == 1) return f.num.str();
  return f.num.str() + "/" + f.den.str();
}

namespace {

// Strict decimal integer with optional sign; BigInt's own parser is lax
// (it accepts "" and stray hex prefixes), so validate before converting.
BigInt parse_big(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw std::invalid_argument("malformed integer: '" + s + "'");
  return BigInt(s);
}

}  // namespace

Fraction frac_from_string(const std::string& s) {
  if (s == "inf") return Fraction{1, 0};
  if (s == "nan") return Fraction{0, 0};
  const auto slash = s.find('/');
  if (slash == std::string::npos) return make_fraction(parse_big(s), 1);
  return make_fraction(parse_big(s.substr(0, slash)), parse_big(s.substr(slash + 1)));
}

Fraction BoundReport::ratio() const { return make_fraction(lhs, rhs); }

namespace {

// ratio comparison for worst-instance tracking: nan (0/0) counts as 0,
// inf beats everything.
bool ratio_strictly_greater(const BoundReport& a, const BoundReport& b) {
  const bool a_inf = a.rhs == 0 && a.lhs > 0;
  const bool b_inf = b.rhs == 0 && b.lhs > 0;
  if (a_inf || b_inf) return a_inf && !b_inf;
  const BigInt an = a.rhs == 0 ? BigInt(0) : a.lhs;
  const BigInt ad = a.rhs == 0 ? BigInt(1) : a.rhs;
  const BigInt bn = b.rhs == 0 ? BigInt(0) : b.lhs;
  const BigInt bd = b.rhs == 0 ? BigInt(1) : b.rhs;
  return an * bd > bn * ad;
}

}  // namespace

BoundReport verify_size_bound(const PointSet& y, int d, const Caps& caps) {
  if (d < 0) throw std::invalid_argument("size bound needs d >= 0");
  const FiniteField& f = *y.field();
  BoundReport r;
  r.theorem_id = "size-bound";
  r.q = f.q();
  r.n = y.n();
  r.d = d;
  const long long qn = checked_grid(f, y.n(), caps);
  const long long hf = hilbert_function(y, d, 1, caps.matrix);
  const long long space_hf = box_count_le(f.q(), y.n(), d);
  r.lhs = BigInt(space_hf) * BigInt(y.size());
  r.rhs = BigInt(hf) * BigInt(qn);
  r.holds = r.lhs <= r.rhs;
  r.details = {{"space_hf", space_hf}, {"hf", hf}, {"set_size", y.size()}, {"grid", qn}};
  return r;
}

BoundReport verify_closure_bound(const PointSet& y, int d, const Caps& caps) {
  if (d < 0) throw std::invalid_argument("closure bound needs d >= 0");
  const FiniteField& f = *y.field();
  BoundReport r;
  r.theorem_id = "closure-bound";
  r.q = f.q();
  r.n = y.n();
  r.d = d;
  const long long qn = checked_grid(f, y.n(), caps);
  const ClosureResult cl = closure(y, d, caps);
  const long long space_hf = box_count_le(f.q(), y.n(), d);
  // Chain behind the bound: HF(cl, e) = HF(Y, e) at every degree e <= d,
  // and HF(Y, d) <= |Y|.
  const HilbertProfile prof_y = hilbert_profile(y, d, 1, caps.matrix);
  const HilbertProfile prof_cl = hilbert_profile(cl.output, d, 1, caps.matrix);
  const bool chain_equal = prof_y.values == prof_cl.values;
  const long long hf_y = prof_y.values.back();
  const bool chain_le = hf_y <= static_cast<long long>(y.size());
  r.lhs = BigInt(space_hf) * BigInt(cl.output.size());
  r.rhs = BigInt(qn) * BigInt(y.size());
  r.holds = (r.lhs <= r.rhs) && chain_equal && chain_le;
  r.details = {{"space_hf", space_hf},      {"closure_size", cl.output.size()},
               {"set_size", y.size()},      {"grid", qn},
               {"hf_closure", prof_cl.values}, {"hf_set", prof_y.values},
               {"chain_equal", chain_equal}, {"chain_le", chain_le}};
  return r;
}

std::vector<BoundReport> verify_product_closure_bound(
    const std::vector<std::vector<std::uint32_t>>& factors, const PointSet& y, int d,
    const Caps& caps) {
  if (d < 0) throw std::invalid_argument("product closure bound needs d >= 0");
  const PointSet e = product_set(y.field(), factors);
  if (e.n() != y.n()) throw std::invalid_argument("product set arity mismatch");
  if (!y.subset_of(e))
    throw std::invalid_argument("product closure bound needs Y inside the product set");
  const FiniteField& f = *y.field();

  // Sorted factor sizes give the box staircase of E; its degree counts are
  // the Hilbert function of the product set.
  std::vector<int> box;
  for (const auto& fac : factors) {
    std::vector<std::uint32_t> vals(fac.begin(), fac.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    box.push_back(static_cast<int>(vals.size()) - 1);
  }
  long long box_hf = 0;
  for (const auto& a : monomials_up_to_boxed(y.n(), d, box)) {
    (void)a;
    ++box_hf;
  }

  const ClosureResult cl = closure(y, d, caps);
  const PointSet cl_in_e = cl.output.intersect(e);

  BoundReport inside;
  inside.theorem_id = "product-closure-bound";
  inside.q = f.q();
  inside.n = y.n();
  inside.d = d;
  inside.lhs = BigInt(box_hf) * BigInt(cl_in_e.size());
  inside.rhs = BigInt(e.size()) * BigInt(y.size());
  inside.holds = inside.lhs <= inside.rhs;
  inside.details = {{"product_hf", box_hf},
                    {"closure_in_product", cl_in_e.size()},
                    {"closure_size", cl.output.size()},
                    {"product_size", e.size()},
                    {"set_size", y.size()},
                    {"variant", "closure intersected with the product set"}};

  BoundReport ambient = inside;
  ambient.theorem_id = "product-closure-bound-ambient";
  ambient.advisory = true;
  ambient.lhs = BigInt(box_hf) * BigInt(cl.output.size());
  ambient.holds = ambient.lhs <= ambient.rhs;
  ambient.details["variant"] = "closure over the full grid (informational; can fail)";
  return {inside, ambient};
}

BoundReport verify_multiplicity_set_bound(const PointSet& y, int d, int m,
                                          const Caps& caps) {
  if (d < 0 || m < 1) throw std::invalid_argument("multiplicity set bound needs d >= 0, m >= 1");
  const FiniteField& f = *y.field();
  BoundReport r;
  r.theorem_id = "mult-set-bound";
  r.q = f.q();
  r.n = y.n();
  r.d = d;
  const long long qn = checked_grid(f, y.n(), caps);
  const long long space_hf = multiplicity_count_le(f.q(), y.n(), m, d);
  const long long hf = hilbert_function(y, d, m, caps.matrix);
  r.lhs = BigInt(space_hf) * BigInt(y.size());
  r.rhs = BigInt(hf) * BigInt(qn);
  r.holds = r.lhs <= r.rhs;
  r.details = {{"m", m}, {"space_hf", space_hf}, {"hf", hf}, {"set_size", y.size()}, {"grid", qn}};
  return r;
}

BoundReport verify_multiplicity_closure_bound(const PointSet& y, int d, int l, int m,
                                              const Caps& caps) {
  if (d < 0 || l < 1 || m < 1)
    throw std::invalid_argument("multiplicity closure bound needs d >= 0, l >= 1, m >= 1");
  const FiniteField& f = *y.field();
  BoundReport r;
  r.theorem_id = "mult-closure-bound";
  r.q = f.q();
  r.n = y.n();
  r.d = d;
  const long long qn = checked_grid(f, y.n(), caps);
  const ClosureResult cl = multiplicity_closure(y, d, l, m, caps);
  const PointSet& x = cl.output;
  const long long space_hf_l = multiplicity_count_le(f.q(), y.n(), l, d);
  const long long hf_l_x = hilbert_function(x, d, l, caps.matrix);
  const long long hf_m_y = hilbert_function(y, d, m, caps.matrix);
  const long long quotient = binomial(m + y.n() - 1, y.n());
  r.lhs = BigInt(space_hf_l) * BigInt(x.size());
  r.rhs = BigInt(qn) * BigInt(quotient) * BigInt(y.size());
  // Each link of the chain behind the headline bound.
  const bool link_set_bound = r.lhs <= BigInt(hf_l_x) * BigInt(qn);
  const bool link_transfer = hf_l_x <= hf_m_y;
  const bool link_rows = hf_m_y <= quotient * static_cast<long long>(y.size());
  r.holds = (r.lhs <= r.rhs) && link_set_bound && link_transfer && link_rows;
  r.details = {{"l", l},
               {"m", m},
               {"closure_size", x.size()},
               {"space_hf_l", space_hf_l},
               {"hf_l_closure", hf_l_x},
               {"hf_m_set", hf_m_y},
               {"quotient_dim", quotient},
               {"link_set_bound", link_set_bound},
               {"link_transfer", link_transfer},
               {"link_rows", link_rows}};
  return r;
}

BoundReport verify_hilbert_growth(const PointSet& y, int d1, int d2, int m,
                                  const Caps& caps) {
  if (d2 < 0 || d1 < d2) throw std::invalid_argument("hilbert growth needs d1 >= d2 >= 0");
  if (m < 1) throw std::invalid_argument("hilbert growth needs m >= 1");
  BoundReport r;
  r.theorem_id = "hilbert-growth";
  r.q = y.field()->q();
  r.n = y.n();
  r.d = d1;
  const long long hf1 = hilbert_function(y, d1, m, caps.matrix);
  const long long hf2 = hilbert_function(y, d2, m, caps.matrix);
  r.lhs = BigInt(hf1) * BigInt(binomial(y.n() + d2, y.n()));
  r.rhs = BigInt(hf2) * BigInt(binomial(y.n() + d1, y.n()));
  r.holds = r.lhs <= r.rhs;
  r.details = {{"d1", d1}, {"d2", d2}, {"m", m}, {"hf_d1", hf1}, {"hf_d2", hf2}};
  return r;
}

BoundReport verify_schwartz_zippel_mult(const CurveSpec& curve, const PointSet& x, int d,
                                        int l, int m, const Caps& caps) {
  if (d < 0 || l < 1 || m < 1)
    throw std::invalid_argument("schwartz-zippel check needs d >= 0, l >= 1, m >= 1");
  require_same_field(*curve.field, *x.field(), "schwartz-zippel check");
  const PointSet image = curve_points(curve);
  if (!x.subset_of(image))
    throw std::invalid_argument("schwartz-zippel check needs X on the curve");
  BoundReport r;
  r.theorem_id = "schwartz-zippel-mult";
  r.q = curve.field->q();
  r.n = curve.n;
  r.d = d;
  const long long lam_d = static_cast<long long>(curve.degree_bound) * d;
  const long long threshold =
      static_cast<long long>(x.size()) * (m - l + 1) + l - 1;
  const bool hypothesis = lam_d < threshold;
  const ClosureResult cl = multiplicity_closure(x, d, l, m, caps);
  long long missing = 0;
  for (const auto& pt : image.points())
    if (!cl.output.contains(pt)) ++missing;
  r.lhs = missing;
  r.rhs = 0;
  r.holds = missing == 0;
  r.advisory = !hypothesis;  // unproved without the degree hypothesis
  r.details = {{"l", l},
               {"m", m},
               {"lambda", curve.degree_bound},
               {"hypothesis_met", hypothesis},
               {"lambda_d", lam_d},
               {"threshold", threshold},
               {"curve_size", image.size()},
               {"sample_size", x.size()},
               {"closure_size", cl.output.size()},
               {"missing", missing}};
  return r;
}

namespace {

int effective_curve_degree(const CurveSpec& c) {
  int deg = 0;
  for (const auto& comp : c.components)
    for (std::size_t j = 0; j < comp.size(); ++j)
      if (comp[j] != 0) deg = std::max(deg, static_cast<int>(j));
  return deg;
}

std::vector<Point> witness_offenders(const InstanceBundle& bundle, int lambda, int tau) {
  if (bundle.witness.size() != bundle.x.size())
    throw std::invalid_argument("bundle witness table misaligned with X");
  std::vector<Point> offenders;
  for (std::size_t i = 0; i < bundle.x.size(); ++i) {
    const Point& pt = bundle.x.points()[i];
    const std::size_t w = bundle.witness[i];
    if (w >= bundle.curves.size()) {
      offenders.push_back(pt);
      continue;
    }
    const CurveSpec& c = bundle.curves[w];
    if (effective_curve_degree(c) > lambda) {
      offenders.push_back(pt);
      continue;
    }
    const PointSet img = curve_points(c);
    if (!img.contains(pt) ||
        static_cast<int>(img.intersect(bundle.y).size()) < tau)
      offenders.push_back(pt);
  }
  return offenders;
}

}  // namespace

KakeyaResult verify_statistical_kakeya(const InstanceBundle& bundle, int lambda, int tau,
                                       std::optional<std::tuple<int, int, int>> chain,
                                       const Caps& caps) {
  if (lambda < 1 || tau < 1)
    throw std::invalid_argument("statistical kakeya needs lambda >= 1, tau >= 1");
  const FiniteField& f = *bundle.field;
  KakeyaResult result;
  result.offenders = witness_offenders(bundle, lambda, tau);
  result.hypothesis_ok = result.offenders.empty();

  BoundReport& r = result.report;
  r.theorem_id = "statistical-kakeya";
  r.q = f.q();
  r.n = bundle.n;
  const BigInt tau_n = bigpow(tau, bundle.n);
  const BigInt growth = bigpow(BigInt(tau) + BigInt(lambda) * (f.q() - 1), bundle.n);
  r.lhs = BigInt(bundle.x.size()) * tau_n;
  r.rhs = growth * BigInt(bundle.y.size());
  r.holds = r.lhs <= r.rhs;
  r.advisory = !result.hypothesis_ok;
  r.details = {{"lambda", lambda},
               {"tau", tau},
               {"x_size", bundle.x.size()},
               {"y_size", bundle.y.size()},
               {"hypothesis_ok", result.hypothesis_ok},
               {"realized_ratio",
                frac_to_string(make_fraction(BigInt(bundle.x.size()), BigInt(bundle.y.size())))},
               {"bound_constant", frac_to_string(make_fraction(growth, tau_n))}};
  if (!result.offenders.empty()) {
    nlohmann::json off = nlohmann::json::array();
    for (std::size_t i = 0; i < result.offenders.size() && i < 16; ++i)
      off.push_back(point_to_json(result.offenders[i]));
    r.details["offenders"] = off;
  }

  if (chain) {
    const auto [l, m, d] = *chain;
    if (l < 1 || m < 1 || d < 0)
      throw std::invalid_argument("chain parameters need l >= 1, m >= 1, d >= 0");
    const long long need = static_cast<long long>(tau) * (m - l + 1) + l - 1;
    const int stab = bundle.n * (static_cast<int>(f.q()) - 1) + (l - 1) * static_cast<int>(f.q());
    if (static_cast<long long>(lambda) * d >= need || d < stab)
      throw std::invalid_argument(
          "chain parameters must satisfy lambda*d < tau*(m-l+1)+l-1 and d >= n(q-1)+(l-1)q");
    (void)caps;
    const BigInt chain_lhs =
        BigInt(binomial(l + bundle.n - 1, bundle.n)) * BigInt(bundle.x.size());
    const BigInt chain_rhs =
        BigInt(binomial(m + bundle.n - 1, bundle.n)) * BigInt(bundle.y.size());
    r.details["chain"] = {{"l", l},
                          {"m", m},
                          {"d", d},
                          {"lhs", big_to_json(chain_lhs)},
                          {"rhs", big_to_json(chain_rhs)},
                          {"holds", chain_lhs <= chain_rhs}};
    if (result.hypothesis_ok && chain_lhs > chain_rhs) r.holds = false;
  }
  return result;
}

PartialLinesResult verify_partial_lines_corollaries(const InstanceBundle& bundle,
                                                    std::optional<std::pair<int, int>> alpha,
                                                    const Caps& caps) {
  (void)caps;
  const FiniteField& f = *bundle.field;
  const int tau = bundle.tau;
  const int q = static_cast<int>(f.q());
  if (2 * tau < q)
    throw std::invalid_argument("partial lines corollaries need tau >= q/2");
  for (const auto& c : bundle.curves)
    if (effective_curve_degree(c) > 1)
      throw std::invalid_argument("partial lines corollaries need a line family");

  PartialLinesResult result;
  result.offenders = witness_offenders(bundle, 1, tau);
  result.hypothesis_ok = result.offenders.empty();

  BigInt factorial = 1;
  for (int i = 2; i <= bundle.n; ++i) factorial *= i;
  const BigInt qn = bigpow(q, bundle.n);

  BoundReport& fa = result.factorial_form;
  fa.theorem_id = "partial-lines";
  fa.q = q;
  fa.n = bundle.n;
  fa.lhs = BigInt(bundle.x.size());
  fa.rhs = factorial * bigpow(2, bundle.n) * BigInt(bundle.y.size());
  fa.holds = fa.lhs <= fa.rhs;
  fa.advisory = !result.hypothesis_ok;
  fa.details = {{"form", "factorial"},
                {"tau", tau},
                {"x_size", bundle.x.size()},
                {"y_size", bundle.y.size()},
                {"hypothesis_ok", result.hypothesis_ok}};

  BoundReport& ra = result.rational_form;
  ra = fa;
  ra.details["form"] = "rational";
  ra.lhs = BigInt(bundle.x.size()) * qn;
  ra.rhs = bigpow(3 * q - 2, bundle.n) * BigInt(bundle.y.size());
  ra.holds = ra.lhs <= ra.rhs;

  // Tighter constant on |X| / |Y|: n! 2^n versus ((3q-2)/q)^n.
  result.tighter =
      bigpow(3 * q - 2, bundle.n) < factorial * bigpow(2, bundle.n) * qn ? "rational"
                                                                         : "factorial";
  fa.details["tighter"] = result.tighter;
  ra.details["tighter"] = result.tighter;

  if (alpha) {
    const auto [a, b] = *alpha;
    if (a < 1 || b < 1) throw std::invalid_argument("alpha must be a positive rational a/b");
    const bool sample_ok = bigpow(tau, b) >= bigpow(q, a);
    BoundReport al;
    al.theorem_id = "partial-lines";
    al.q = q;
    al.n = bundle.n;
    al.lhs = BigInt(bundle.x.size()) * bigpow(tau, bundle.n);
    al.rhs = bigpow(BigInt(tau) + (q - 1), bundle.n) * BigInt(bundle.y.size());
    al.holds = al.lhs <= al.rhs;
    al.advisory = !result.hypothesis_ok || !sample_ok;
    al.details = {{"form", "alpha"},
                  {"alpha_num", a},
                  {"alpha_den", b},
                  {"sample_hypothesis_ok", sample_ok},
                  {"tau", tau},
                  {"hypothesis_ok", result.hypothesis_ok}};
    result.alpha_form = std::move(al);
  }
  return result;
}

BoundReport splus_growth_report(const std::vector<Exponent>& s, int n, int d) {
  const SPlusGrowthReport g = check_splus_growth(s, n, d);
  BoundReport r;
  r.theorem_id = "splus-growth";
  r.q = 0;
  r.n = n;
  r.d = d;
  r.lhs = BigInt(n + d + 1) * BigInt(g.s_count);
  r.rhs = BigInt(d + 1) * BigInt(g.splus_count);
  r.holds = r.lhs <= r.rhs;
  r.details = {{"s_count", g.s_count}, {"splus_count", g.splus_count}};
  return r;
}

BoundReport union_subadditivity_report(const std::vector<PointSet>& parts, int d,
                                       const Caps& caps) {
  const UnionReport u = union_subadditivity_check(parts, d, caps.matrix);
  BoundReport r;
  r.theorem_id = "union-subadditivity";
  r.q = parts.front().field()->q();
  r.n = parts.front().n();
  r.d = d;
  r.lhs = u.lhs;
  r.rhs = u.rhs;
  r.holds = u.holds;
  r.details = {{"parts", parts.size()}};
  return r;
}

BoundReport closure_axioms_report(const PointSet& x, const PointSet& y, int d,
                                  const Caps& caps) {
  const ClosureAxiomsReport a = closure_axioms_check(x, y, d, caps);
  BoundReport r;
  r.theorem_id = "closure-axioms";
  r.q = x.field()->q();
  r.n = x.n();
  r.d = d;
  long long failed = 0;
  failed += !a.extensive_x;
  failed += !a.extensive_y;
  failed += !a.monotone;
  failed += !a.idempotent_x;
  failed += !a.hilbert_match;
  r.lhs = failed;
  r.rhs = 0;
  r.holds = a.holds;
  r.details = {{"extensive_x", a.extensive_x},
               {"extensive_y", a.extensive_y},
               {"monotone_applicable", a.monotone_applicable},
               {"monotone", a.monotone},
               {"idempotent", a.idempotent_x},
               {"hilbert_match", a.hilbert_match},
               {"hf_x", a.hf_x},
               {"hf_closure", a.hf_clx}};
  return r;
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::kConstant: return "constant";
    case Monotonicity::kIncreasing: return "increasing";
    case Monotonicity::kDecreasing: return "decreasing";
    case Monotonicity::kNone: return "none";
  }
  return "none";
}

namespace {

void decode_cell(long long idx, const std::vector<int>& box, std::vector<int>& out) {
  for (int i = static_cast<int>(box.size()) - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % (box[i] + 1));
    idx /= box[i] + 1;
  }
}

long long encode_cell(const std::vector<int>& coords, const std::vector<int>& box) {
  long long idx = 0;
  for (std::size_t i = 0; i < box.size(); ++i) idx = idx * (box[i] + 1) + coords[i];
  return idx;
}

Monotonicity trend_of(const std::vector<Fraction>& h, const std::vector<int>& box,
                      long long cells) {
  bool rises = false, falls = false;
  std::vector<int> coords(box.size());
  for (long long idx = 0; idx < cells; ++idx) {
    decode_cell(idx, box, coords);
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (coords[i] == box[i]) continue;
      ++coords[i];
      const long long up = encode_cell(coords, box);
      --coords[i];
      const bool le = frac_leq(h[idx], h[up]);
      const bool ge = frac_leq(h[up], h[idx]);
      if (le && !ge) rises = true;
      if (ge && !le) falls = true;
    }
  }
  if (!rises && !falls) return Monotonicity::kConstant;
  if (rises && !falls) return Monotonicity::kIncreasing;
  if (falls && !rises) return Monotonicity::kDecreasing;
  return Monotonicity::kNone;
}

}  // namespace

FkgReport fkg_check(const LatticeFunctions& fns, long long cell_cap) {
  const int n = static_cast<int>(fns.box.size());
  if (n < 1) throw std::invalid_argument("fkg check needs a nonempty box");
  long long cells = 1;
  for (int b : fns.box) {
    if (b < 0) throw std::invalid_argument("fkg box caps must be >= 0");
    cells *= b + 1;
    if (cells > cell_cap)
      throw CapExceededError("fkg lattice exceeds cell cap " + std::to_string(cell_cap));
  }
  for (const auto* h : {&fns.mu, &fns.f, &fns.g}) {
    if (static_cast<long long>(h->size()) != cells)
      throw std::invalid_argument("fkg table size does not match the box");
    for (const auto& v : *h)
      if (v.den <= 0 || v.num < 0)
        throw std::invalid_argument("fkg tables must be nonnegative rationals");
  }

  FkgReport report;
  // (a) log-supermodularity over the support of mu.
  std::vector<long long> support;
  for (long long i = 0; i < cells; ++i)
    if (fns.mu[i].num != 0) support.push_back(i);
  report.mu_log_supermodular = true;
  std::vector<int> cx(n), cy(n), cj(n), cm(n);
  for (std::size_t a = 0; a < support.size() && report.mu_log_supermodular; ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      decode_cell(support[a], fns.box, cx);
      decode_cell(support[b], fns.box, cy);
      for (int i = 0; i < n; ++i) {
        cj[i] = std::max(cx[i], cy[i]);
        cm[i] = std::min(cx[i], cy[i]);
      }
      const Fraction left = frac_mul(fns.mu[support[a]], fns.mu[support[b]]);
      const Fraction right = frac_mul(fns.mu[encode_cell(cj, fns.box)],
                                      fns.mu[encode_cell(cm, fns.box)]);
      if (!frac_leq(left, right)) {
        report.mu_log_supermodular = false;
        break;
      }
    }

  // (b) aligned monotonicity.
  report.f_trend = trend_of(fns.f, fns.box, cells);
  report.g_trend = trend_of(fns.g, fns.box, cells);
  const auto ok_up = [](Monotonicity t) {
    return t == Monotonicity::kConstant || t == Monotonicity::kIncreasing;
  };
  const auto ok_down = [](Monotonicity t) {
    return t == Monotonicity::kConstant || t == Monotonicity::kDecreasing;
  };
  report.aligned = (ok_up(report.f_trend) && ok_up(report.g_trend)) ||
                   (ok_down(report.f_trend) && ok_down(report.g_trend));
  report.hypotheses_hold = report.mu_log_supermodular && report.aligned;

  // (c) the inequality itself, exact.
  Fraction sum_mu{0, 1}, sum_muf{0, 1}, sum_mug{0, 1}, sum_mufg{0, 1};
  for (long long i = 0; i < cells; ++i) {
    sum_mu = frac_add(sum_mu, fns.mu[i]);
    sum_muf = frac_add(sum_muf, frac_mul(fns.mu[i], fns.f[i]));
    sum_mug = frac_add(sum_mug, frac_mul(fns.mu[i], fns.g[i]));
    sum_mufg = frac_add(sum_mufg, frac_mul(fns.mu[i], frac_mul(fns.f[i], fns.g[i])));
  }
  report.sum_mu = sum_mu;
  report.sum_muf = sum_muf;
  report.sum_mug = sum_mug;
  report.sum_mufg = sum_mufg;
  report.lhs = frac_mul(sum_muf, sum_mug);
  report.rhs = frac_mul(sum_mu, sum_mufg);
  report.inequality_holds = frac_leq(report.lhs, report.rhs);
  return report;
}

SweepResult exhaustive_sweep(FieldPtr field, int n, int dmin, int dmax, SweepMode mode,
                             std::optional<long long> sample, std::uint64_t seed,
                             const Caps& caps) {
  if (dmin < 0 || dmax < dmin) throw std::invalid_argument("sweep needs 0 <= dmin <= dmax");
  const long long gs = grid_size(*field, n, std::min<long long>(caps.grid, 64));
  SweepResult result;
  result.mode = mode;
  result.q = field->q();
  result.n = n;
  result.dmin = dmin;
  result.dmax = dmax;
  result.seed = seed;
  result.exhaustive = !sample.has_value();

  std::vector<std::uint64_t> masks;
  if (result.exhaustive) {
    if (gs > 16)
      throw std::invalid_argument("exhaustive sweep needs q^n <= 16; pass a sample size");
    masks.resize(std::size_t{1} << gs);
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
  } else {
    if (*sample < 1) throw std::invalid_argument("sample size must be >= 1");
    Rng rng(seed);
    const std::uint64_t all =
        gs == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << gs) - 1);
    masks.reserve(*sample);
    for (long long i = 0; i < *sample; ++i) masks.push_back(rng.next() & all);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  }
  result.instances = static_cast<long long>(masks.size());

  const PointSet grid = full_grid(field, n, caps.grid);
  const char* tid = mode == SweepMode::kSizeBound ? "size-bound" : "closure-bound";
  bool first = true;
  for (int d = dmin; d <= dmax; ++d) {
    const long long space_hf = box_count_le(field->q(), n, d);
    for (const std::uint64_t mask : masks) {
      std::vector<Point> pts;
      for (long long i = 0; i < gs; ++i)
        if (mask & (std::uint64_t{1} << i)) pts.push_back(grid.points()[i]);
      const PointSet y(field, n, std::move(pts));
      BoundReport r;
      r.theorem_id = tid;
      r.q = field->q();
      r.n = n;
      r.d = d;
      if (mode == SweepMode::kSizeBound) {
        r.lhs = BigInt(space_hf) * BigInt(y.size());
        r.rhs = BigInt(hilbert_function(y, d, 1, caps.matrix)) * BigInt(gs);
      } else {
        const ClosureResult cl = closure(y, d, caps);
        r.lhs = BigInt(space_hf) * BigInt(cl.output.size());
        r.rhs = BigInt(gs) * BigInt(y.size());
      }
      r.holds = r.lhs <= r.rhs;
      r.details = {{"mask", mask}};
      if (!r.holds) ++result.violations;
      if (first || ratio_strictly_greater(r, result.worst)) {
        result.worst = r;
        first = false;
      }
      result.reports.push_back(std::move(r));
    }
  }
  return result;
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

}  // namespace

}  // namespace fqc
