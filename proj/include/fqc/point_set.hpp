#pragma once

#include <cstdint>
#include <vector>

#include "fqc/finite_field.hpp"
#include "fqc/limits.hpp"
#include "fqc/polynomial.hpp"

namespace fqc {

/// A finite subset of GF(q)^n.  Points are kept sorted lexicographically by
/// coordinate encodings and deduplicated, so equal sets compare equal and
/// every derived enumeration is deterministic.
class PointSet {
 public:
  /// Detached empty set (no field); only used as a placeholder inside
  /// aggregate results before assignment.
  PointSet() = default;
  PointSet(FieldPtr field, int n);
  PointSet(FieldPtr field, int n, std::vector<Point> points);

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }

  bool contains(const Point& x) const;
  bool subset_of(const PointSet& o) const;
  PointSet unite(const PointSet& o) const;
  PointSet intersect(const PointSet& o) const;
  PointSet with_point(const Point& x) const;

  bool operator==(const PointSet& o) const;
  bool operator!=(const PointSet& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  int n_;
  std::vector<Point> points_;
};

/// Number of points q^n, guarded by the cap.
long long grid_size(const FiniteField& field, int n, long long cap = kDefaultGridCap);

/// All of GF(q)^n in lexicographic order.
PointSet full_grid(FieldPtr field, int n, long long cap = kDefaultGridCap);

/// Subset of the lex-ordered grid selected by mask bit i <-> grid point i.
PointSet grid_subset(FieldPtr field, int n, std::uint64_t mask, long long cap = kDefaultGridCap);

}  // namespace fqc
