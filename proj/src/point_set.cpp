#include "fqc/point_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fqc {

PointSet::PointSet(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (!field_) throw std::invalid_argument("point set needs a field");
  if (n_ < 1) throw std::invalid_argument("point set needs n >= 1");
}

PointSet::PointSet(FieldPtr field, int n, std::vector<Point> points)
    : PointSet(std::move(field), n) {
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != n_)
      throw std::invalid_argument("point has wrong arity");
    for (auto v : x)
      if (!field_->is_element(v))
        throw std::invalid_argument("coordinate " + std::to_string(v) + " is not in " +
                                    field_->description());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
}

bool PointSet::contains(const Point& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

bool PointSet::subset_of(const PointSet& o) const {
  require_same_field(*field_, *o.field_, "subset test");
  if (n_ != o.n_) throw std::invalid_argument("subset test: arity mismatch");
  return std::includes(o.points_.begin(), o.points_.end(), points_.begin(), points_.end());
}

PointSet PointSet::unite(const PointSet& o) const {
  require_same_field(*field_, *o.field_, "union");
  if (n_ != o.n_) throw std::invalid_argument("union: arity mismatch");
  std::vector<Point> merged;
  merged.reserve(points_.size() + o.points_.size());
  std::set_union(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
                 std::back_inserter(merged));
  PointSet out(field_, n_);
  out.points_ = std::move(merged);
  return out;
}

PointSet PointSet::intersect(const PointSet& o) const {
  require_same_field(*field_, *o.field_, "intersection");
  if (n_ != o.n_) throw std::invalid_argument("intersection: arity mismatch");
  std::vector<Point> common;
  std::set_intersection(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
                        std::back_inserter(common));
  PointSet out(field_, n_);
  out.points_ = std::move(common);
  return out;
}

PointSet PointSet::with_point(const Point& x) const {
  auto pts = points_;
  pts.push_back(x);
  return PointSet(field_, n_, std::move(pts));
}

bool PointSet::operator==(const PointSet& o) const {
  return same_field(*field_, *o.field_) && n_ == o.n_ && points_ == o.points_;
}

long long grid_size(const FiniteField& field, int n, long long cap) {
  if (n < 1) throw std::invalid_argument("grid needs n >= 1");
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= field.q();
    if (total > cap)
      throw CapExceededError("grid of size q^n = " + field.description() + "^" +
                             std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  return total;
}

PointSet full_grid(FieldPtr field, int n, long long cap) {
  const long long total = grid_size(*field, n, cap);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(total));
  Point cur(n, 0);
  const std::uint32_t q = field->q();
  while (true) {
    pts.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] + 1 == q) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  PointSet out(field, n, std::move(pts));
  return out;
}

PointSet grid_subset(FieldPtr field, int n, std::uint64_t mask, long long cap) {
  const PointSet grid = full_grid(field, n, std::min(cap, 64LL));
  std::vector<Point> pts;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) pts.push_back(grid.points()[i]);
  return PointSet(field, n, std::move(pts));
}

}  // namespace fqc
