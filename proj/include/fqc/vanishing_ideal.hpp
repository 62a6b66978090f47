#pragma once

#include <vector>

#include "fqc/gf_matrix.hpp"
#include "fqc/limits.hpp"
#include "fqc/point_set.hpp"
#include "fqc/staircase.hpp"

namespace fqc {

/// Multiplicity evaluation matrix of Y at degree d.  Rows are indexed by
/// (point, multi-index i with |i| <= m-1), points in set order and
/// multi-indices in ascending grlex; columns by all monomials of degree <= d
/// in ascending grlex.  Entry: D^i(x^a) evaluated at the point.
GfMatrix evaluation_matrix(const PointSet& y, int d, int m = 1,
                           long long cap = kDefaultMatrixCap);

/// The degree-<= d slice of the order-m vanishing ideal of `source`,
/// presented by a canonical reduced kernel basis.  Each basis element is
/// monic with a distinct grlex-largest monomial and vanishes to order >= m
/// at every source point.  rank + basis.size() == columns.size().
struct IdealSlice {
  PointSet source;
  int d = 0;
  int m = 1;
  std::vector<Exponent> columns;   // all monomials of degree <= d, grlex ascending
  std::vector<Polynomial> basis;
  long long rank = 0;
};

IdealSlice ideal_slice(const PointSet& y, int d, int m = 1,
                       long long cap = kDefaultMatrixCap);

/// Dimension of the span of degree-<= d evaluations (with Hasse derivatives
/// up to order m-1), computed as the row rank of the evaluation matrix.
long long hilbert_function(const PointSet& y, int d, int m = 1,
                           long long cap = kDefaultMatrixCap);

/// Monomials whose evaluation columns are independent of all grlex-smaller
/// accepted columns; built incrementally degree by degree and stopped once
/// C(m+n-1, n) * |Y| monomials are accepted.  The result is a lower set and
/// its degree-<= d counts reproduce hilbert_function(y, d, m).
Staircase standard_monomials(const PointSet& y, int m = 1,
                             long long cap = kDefaultMatrixCap);

struct HilbertProfile {
  int m = 1;
  int dmax = 0;
  std::vector<long long> values;  // values[d] for d = 0..dmax
};

HilbertProfile hilbert_profile(const PointSet& y, int dmax, int m = 1,
                               long long cap = kDefaultMatrixCap);

/// Same values from a single elimination: since columns are grlex (hence
/// degree) ascending, the rank of the degree-<= e column prefix is the number
/// of pivot columns with index below C(e+n, n).
HilbertProfile hilbert_profile_single_pass(const PointSet& y, int dmax, int m = 1,
                                           long long cap = kDefaultMatrixCap);

/// Checks HF(union, d) <= sum of HF(part, d).
struct UnionReport {
  long long lhs = 0;  // HF of the union
  long long rhs = 0;  // sum over parts
  bool holds = false;
};

UnionReport union_subadditivity_check(const std::vector<PointSet>& parts, int d,
                                      long long cap = kDefaultMatrixCap);

}  // namespace fqc
