#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fqc/point_set.hpp"

namespace fqc {

/// Deterministic random source.  Wraps std::mt19937_64 (whose output stream
/// is fixed by the standard) and draws bounded values by rejection, so the
/// same seed produces the same bundle on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  std::uint32_t field_element(const FiniteField& f) {
    return static_cast<std::uint32_t>(below(f.q()));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

/// Parametric curve lambda -> (C_1(lambda), ..., C_n(lambda)) with univariate
/// components of degree <= degree_bound, coefficients little-endian.
struct CurveSpec {
  FieldPtr field;
  int n = 0;
  int degree_bound = 1;
  std::vector<std::vector<std::uint32_t>> components;
};

CurveSpec make_curve(FieldPtr field, std::vector<std::vector<std::uint32_t>> components,
                     int degree_bound);

Point curve_point(const CurveSpec& curve, std::uint32_t lambda);

/// Image of the parameter range, deduplicated (q points for a line).
PointSet curve_points(const CurveSpec& curve);

/// The line {base + lambda * dir}; dir must be nonzero.
CurveSpec line_spec(FieldPtr field, const Point& base, const Point& dir);
PointSet line_points(FieldPtr field, const Point& base, const Point& dir);

/// A generated family of witness curves with sampled subsets.
/// X is the union of the curves (or the full grid for the grid variant),
/// Y the union of the per-curve samples, and witness[i] is the index of a
/// curve through X.points()[i] whose sample has tau points.
struct InstanceBundle {
  FieldPtr field;
  int n = 0;
  int tau = 0;
  std::uint64_t seed = 0;
  std::vector<CurveSpec> curves;
  PointSet x, y;
  std::vector<std::size_t> witness;
};

/// `count` distinct random lines, each contributing a random tau-subset.
InstanceBundle partial_lines_instance(FieldPtr field, int n, int count, int tau,
                                      std::uint64_t seed);

/// One random line through every grid point; Y collects a random tau-subset
/// of each line.  The sampled points need not include the line's anchor.
InstanceBundle nikodym_instance(FieldPtr field, int n, int tau, std::uint64_t seed,
                                long long cap = kDefaultGridCap);

/// E_1 x ... x E_n from per-coordinate value lists.
PointSet product_set(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& factors);

}  // namespace fqc
