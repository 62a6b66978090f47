#pragma once

#include <vector>

#include "fqc/limits.hpp"
#include "fqc/vanishing_ideal.hpp"

namespace fqc {

/// Result of a closure computation over the full grid GF(q)^n.
/// output = { x : every kernel basis element of the order-m vanishing ideal
/// slice at degree d vanishes to order >= l at x }.
struct ClosureResult {
  PointSet input;
  int d = 0;
  int l = 1;
  int m = 1;
  IdealSlice slice;
  PointSet output;
};

ClosureResult multiplicity_closure(const PointSet& y, int d, int l, int m,
                                   const Caps& caps = {});

/// Plain degree-d closure: l = m = 1.
ClosureResult closure(const PointSet& y, int d, const Caps& caps = {});

/// Closure-operator checks for the plain closure at one degree:
/// containment of the input, monotonicity (when x is a subset of y),
/// idempotence, and agreement of the Hilbert function of input and closure
/// at every degree e <= d.
struct ClosureAxiomsReport {
  bool extensive_x = false;
  bool extensive_y = false;
  bool monotone_applicable = false;  // requires x subset of y
  bool monotone = false;
  bool idempotent_x = false;
  std::vector<long long> hf_x, hf_clx;  // degree e = 0..d
  bool hilbert_match = false;
  bool holds = false;
};

ClosureAxiomsReport closure_axioms_check(const PointSet& x, const PointSet& y, int d,
                                         const Caps& caps = {});

/// When the degree-d closure of X fills the grid and d < q, the dimension
/// count C(d+n, n) <= |X| must hold.
struct WholeSpaceReport {
  bool is_whole_space = false;
  long long lhs = 0;  // C(d+n, n)
  long long rhs = 0;  // |X|
  bool holds = false; // vacuously true when the closure is proper
};

WholeSpaceReport whole_space_degree_check(const PointSet& x, int d, const Caps& caps = {});

}  // namespace fqc
