#include "fqc/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace fqc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("rng bound must be >= 1");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % bound;
}

CurveSpec make_curve(FieldPtr field, std::vector<std::vector<std::uint32_t>> components,
                     int degree_bound) {
  if (!field) throw std::invalid_argument("curve needs a field");
  if (components.empty()) throw std::invalid_argument("curve needs components");
  if (degree_bound < 1) throw std::invalid_argument("curve degree bound must be >= 1");
  for (const auto& comp : components) {
    if (comp.empty() || static_cast<int>(comp.size()) > degree_bound + 1)
      throw std::invalid_argument("curve component degree exceeds the bound");
    for (auto c : comp)
      if (!field->is_element(c)) throw std::invalid_argument("curve coefficient out of field");
  }
  return CurveSpec{std::move(field), static_cast<int>(components.size()), degree_bound,
                   std::move(components)};
}

Point curve_point(const CurveSpec& curve, std::uint32_t lambda) {
  const FiniteField& F = *curve.field;
  Point x(curve.n);
  for (int i = 0; i < curve.n; ++i) {
    // Horner evaluation of the component at lambda.
    std::uint32_t acc = 0;
    const auto& comp = curve.components[i];
    for (std::size_t j = comp.size(); j-- > 0;) acc = F.add(F.mul(acc, lambda), comp[j]);
    x[i] = acc;
  }
  return x;
}

PointSet curve_points(const CurveSpec& curve) {
  std::vector<Point> pts;
  pts.reserve(curve.field->q());
  for (std::uint32_t lambda = 0; lambda < curve.field->q(); ++lambda)
    pts.push_back(curve_point(curve, lambda));
  return PointSet(curve.field, curve.n, std::move(pts));
}

CurveSpec line_spec(FieldPtr field, const Point& base, const Point& dir) {
  if (base.size() != dir.size() || base.empty())
    throw std::invalid_argument("line needs base and direction of equal arity");
  if (std::all_of(dir.begin(), dir.end(), [](std::uint32_t v) { return v == 0; }))
    throw std::invalid_argument("line direction must be nonzero");
  std::vector<std::vector<std::uint32_t>> comps(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) comps[i] = {base[i], dir[i]};
  return make_curve(std::move(field), std::move(comps), 1);
}

PointSet line_points(FieldPtr field, const Point& base, const Point& dir) {
  return curve_points(line_spec(std::move(field), base, dir));
}

namespace {

// Canonical identity of the point set of a line: the lex-smallest point
// together with the direction scaled to leading coefficient 1.
std::pair<Point, Point> line_key(const FiniteField& F, const Point& base, const Point& dir) {
  std::size_t first = 0;
  while (dir[first] == 0) ++first;
  const std::uint32_t s = F.inv(dir[first]);
  Point ndir(dir.size());
  for (std::size_t i = 0; i < dir.size(); ++i) ndir[i] = F.mul(dir[i], s);
  Point least = base;
  for (std::uint32_t lambda = 0; lambda < F.q(); ++lambda) {
    Point x(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      x[i] = F.add(base[i], F.mul(lambda, ndir[i]));
    least = std::min(least, x);
  }
  return {least, ndir};
}

std::vector<Point> sample_tau(const PointSet& pts, int tau, Rng& rng) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<Point> out;
  out.reserve(tau);
  for (int i = 0; i < tau; ++i) out.push_back(pts.points()[order[i]]);
  return out;
}

std::vector<std::size_t> assign_witnesses(const PointSet& x,
                                          const std::vector<CurveSpec>& curves) {
  std::map<Point, std::size_t> first_curve;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    // Keep the point set alive for the whole loop: .points() returns a
    // reference into it.
    const PointSet cpts = curve_points(curves[c]);
    for (const auto& pt : cpts.points()) first_curve.emplace(pt, c);
  }
  std::vector<std::size_t> w;
  w.reserve(x.size());
  for (const auto& pt : x.points()) w.push_back(first_curve.at(pt));
  return w;
}

}  // namespace

InstanceBundle partial_lines_instance(FieldPtr field, int n, int count, int tau,
                                      std::uint64_t seed) {
  if (n < 1 || count < 1) throw std::invalid_argument("need n >= 1 and count >= 1");
  const FiniteField& F = *field;
  if (tau < 1 || tau > static_cast<int>(F.q()))
    throw std::invalid_argument("tau must lie in [1, q]");
  Rng rng(seed);
  std::vector<CurveSpec> lines;
  std::set<std::pair<Point, Point>> seen;
  PointSet x(field, n), y(field, n);
  long long attempts = 0;
  const long long attempt_cap = 1000 + 200LL * count;
  while (static_cast<int>(lines.size()) < count) {
    if (++attempts > attempt_cap)
      throw std::invalid_argument("could not find " + std::to_string(count) +
                                  " distinct lines in " + F.description() + "^" +
                                  std::to_string(n));
    Point base(n), dir(n);
    for (int i = 0; i < n; ++i) base[i] = rng.field_element(F);
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      dir[i] = rng.field_element(F);
      if (dir[i] != 0) zero = false;
    }
    if (zero) continue;
    if (!seen.insert(line_key(F, base, dir)).second) continue;
    CurveSpec line = line_spec(field, base, dir);
    const PointSet pts = curve_points(line);
    x = x.unite(pts);
    y = y.unite(PointSet(field, n, sample_tau(pts, tau, rng)));
    lines.push_back(std::move(line));
  }
  InstanceBundle bundle{field, n, tau, seed, std::move(lines), std::move(x), std::move(y), {}};
  bundle.witness = assign_witnesses(bundle.x, bundle.curves);
  return bundle;
}

InstanceBundle nikodym_instance(FieldPtr field, int n, int tau, std::uint64_t seed,
                                long long cap) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const FiniteField& F = *field;
  if (tau < 1 || tau > static_cast<int>(F.q()))
    throw std::invalid_argument("tau must lie in [1, q]");
  Rng rng(seed);
  PointSet grid = full_grid(field, n, cap);
  std::vector<CurveSpec> lines;
  lines.reserve(grid.size());
  std::vector<Point> sampled;
  std::vector<std::size_t> witness;
  witness.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point& anchor = grid.points()[i];
    Point dir(n);
    bool zero = true;
    while (zero) {
      for (int j = 0; j < n; ++j) {
        dir[j] = rng.field_element(F);
        if (dir[j] != 0) zero = false;
      }
    }
    CurveSpec line = line_spec(field, anchor, dir);
    for (auto& pt : sample_tau(curve_points(line), tau, rng)) sampled.push_back(std::move(pt));
    witness.push_back(i);
    lines.push_back(std::move(line));
  }
  PointSet y(field, n, std::move(sampled));
  return InstanceBundle{field, n,        tau,          seed, std::move(lines),
                        std::move(grid), std::move(y), std::move(witness)};
}

PointSet product_set(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& factors) {
  if (factors.empty()) throw std::invalid_argument("product set needs factors");
  const int n = static_cast<int>(factors.size());
  for (const auto& f : factors) {
    if (f.empty()) throw std::invalid_argument("product set factor is empty");
    for (auto v : f)
      if (!field->is_element(v)) throw std::invalid_argument("factor value out of field");
  }
  std::vector<Point> pts;
  Point cur(n);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) cur[i] = factors[i][idx[i]];
    pts.push_back(cur);
    int i = n - 1;
    while (i >= 0 && idx[i] + 1 == factors[i].size()) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return PointSet(field, n, std::move(pts));
}

}  // namespace fqc
