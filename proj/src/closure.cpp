#include "fqc/closure.hpp"

#include <stdexcept>

namespace fqc {

ClosureResult multiplicity_closure(const PointSet& y, int d, int l, int m,
                                   const Caps& caps) {
  if (d < 0) throw std::invalid_argument("closure needs d >= 0");
  if (l < 1 || m < 1) throw std::invalid_argument("closure needs l >= 1 and m >= 1");
  const FiniteField& F = *y.field();
  const int n = y.n();
  ClosureResult result{y, d, l, m, ideal_slice(y, d, m, caps.matrix), PointSet(y.field(), n)};

  // All Hasse derivatives of the basis up to order l-1, evaluated over the
  // grid with shared power tables.
  std::vector<Polynomial> probes;
  const auto derivs = monomials_up_to(n, l - 1);
  for (const auto& poly : result.slice.basis)
    for (const auto& i : derivs) {
      Polynomial dp = hasse_derivative(poly, i);
      if (!dp.is_zero()) probes.push_back(std::move(dp));
    }

  const PointSet grid = full_grid(y.field(), n, caps.grid);
  std::vector<std::vector<std::uint32_t>> pow(F.q());
  for (std::uint32_t v = 0; v < F.q(); ++v) {
    pow[v].resize(d + 1);
    pow[v][0] = 1;
    for (int k = 1; k <= d; ++k) pow[v][k] = F.mul(pow[v][k - 1], v);
  }

  std::vector<Point> kept;
  for (const auto& x : grid.points()) {
    bool all_vanish = true;
    for (const auto& probe : probes) {
      std::uint32_t acc = 0;
      for (const auto& [a, c] : probe.terms()) {
        std::uint32_t t = c;
        for (int j = 0; j < n; ++j)
          if (a[j] != 0) t = F.mul(t, pow[x[j]][a[j]]);
        acc = F.add(acc, t);
      }
      if (acc != 0) {
        all_vanish = false;
        break;
      }
    }
    if (all_vanish) kept.push_back(x);
  }
  result.output = PointSet(y.field(), n, std::move(kept));
  return result;
}

ClosureResult closure(const PointSet& y, int d, const Caps& caps) {
  return multiplicity_closure(y, d, 1, 1, caps);
}

ClosureAxiomsReport closure_axioms_check(const PointSet& x, const PointSet& y, int d,
                                         const Caps& caps) {
  require_same_field(*x.field(), *y.field(), "closure axioms");
  if (x.n() != y.n()) throw std::invalid_argument("closure axioms: arity mismatch");
  ClosureAxiomsReport r;
  const PointSet clx = closure(x, d, caps).output;
  const PointSet cly = closure(y, d, caps).output;
  r.extensive_x = x.subset_of(clx);
  r.extensive_y = y.subset_of(cly);
  r.monotone_applicable = x.subset_of(y);
  r.monotone = !r.monotone_applicable || clx.subset_of(cly);
  r.idempotent_x = closure(clx, d, caps).output == clx;
  for (int e = 0; e <= d; ++e) {
    r.hf_x.push_back(hilbert_function(x, e, 1, caps.matrix));
    r.hf_clx.push_back(hilbert_function(clx, e, 1, caps.matrix));
  }
  r.hilbert_match = r.hf_x == r.hf_clx;
  r.holds = r.extensive_x && r.extensive_y && r.monotone && r.idempotent_x && r.hilbert_match;
  return r;
}

WholeSpaceReport whole_space_degree_check(const PointSet& x, int d, const Caps& caps) {
  if (d < 0 || d >= static_cast<int>(x.field()->q()))
    throw std::invalid_argument("whole space check needs 0 <= d < q");
  WholeSpaceReport r;
  const ClosureResult cl = closure(x, d, caps);
  r.is_whole_space = cl.output.size() ==
                     static_cast<std::size_t>(grid_size(*x.field(), x.n(), caps.grid));
  r.lhs = count_monomials_up_to(x.n(), d);
  r.rhs = static_cast<long long>(x.size());
  r.holds = !r.is_whole_space || r.lhs <= r.rhs;
  return r;
}

}  // namespace fqc
