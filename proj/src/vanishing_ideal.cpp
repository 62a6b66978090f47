#include "fqc/vanishing_ideal.hpp"

#include <stdexcept>
#include <string>

namespace fqc {
namespace {

// D^i(x^a) at x: zero unless i <= a componentwise, else
// prod_j C(a_j, i_j) mod p times x^(a - i).
std::uint32_t derived_monomial_value(const FiniteField& F, const Exponent& a,
                                     const Exponent& i, const Point& x,
                                     const std::vector<std::vector<std::uint32_t>>& pow) {
  std::uint32_t binom = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (i[j] > a[j]) return 0;
    binom = static_cast<std::uint32_t>(
        std::uint64_t{binom} * binomial_mod_p(a[j], i[j], F.p()) % F.p());
  }
  if (binom == 0) return 0;
  std::uint32_t v = F.from_int(binom);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] - i[j] > 0) v = F.mul(v, pow[x[j]][a[j] - i[j]]);
  return v;
}

// pow[v][k] = v^k for every field element v and 0 <= k <= maxexp.
std::vector<std::vector<std::uint32_t>> power_table(const FiniteField& F, int maxexp) {
  std::vector<std::vector<std::uint32_t>> pow(F.q());
  for (std::uint32_t v = 0; v < F.q(); ++v) {
    pow[v].resize(maxexp + 1);
    pow[v][0] = 1;
    for (int k = 1; k <= maxexp; ++k) pow[v][k] = F.mul(pow[v][k - 1], v);
  }
  return pow;
}

void require_params(int d, int m) {
  if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
  if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
}

}  // namespace

GfMatrix evaluation_matrix(const PointSet& y, int d, int m, long long cap) {
  require_params(d, m);
  const FiniteField& F = *y.field();
  const int n = y.n();
  const auto columns = monomials_up_to(n, d);
  const auto derivs = monomials_up_to(n, m - 1);
  const long long rows = static_cast<long long>(y.size()) * static_cast<long long>(derivs.size());
  if (rows * static_cast<long long>(columns.size()) > cap)
    throw CapExceededError("evaluation matrix of " + std::to_string(rows) + "x" +
                           std::to_string(columns.size()) + " entries exceeds cap " +
                           std::to_string(cap));
  const auto pow = power_table(F, d);
  GfMatrix mat(F, static_cast<std::size_t>(rows), columns.size());
  std::size_t r = 0;
  for (const auto& x : y.points())
    for (const auto& i : derivs) {
      for (std::size_t c = 0; c < columns.size(); ++c)
        mat.at(r, c) = derived_monomial_value(F, columns[c], i, x, pow);
      ++r;
    }
  return mat;
}

IdealSlice ideal_slice(const PointSet& y, int d, int m, long long cap) {
  IdealSlice slice{y, d, m, monomials_up_to(y.n(), d), {}, 0};
  const auto vectors = kernel_basis(evaluation_matrix(y, d, m, cap));
  slice.rank = static_cast<long long>(slice.columns.size()) -
               static_cast<long long>(vectors.size());
  slice.basis.reserve(vectors.size());
  for (const auto& v : vectors) {
    Polynomial poly(y.field(), y.n());
    for (std::size_t c = 0; c < slice.columns.size(); ++c)
      if (v[c] != 0) poly.set_coefficient(slice.columns[c], v[c]);
    slice.basis.push_back(std::move(poly));
  }
  return slice;
}

long long hilbert_function(const PointSet& y, int d, int m, long long cap) {
  require_params(d, m);
  if (y.empty()) return 0;
  return static_cast<long long>(gf_rank(evaluation_matrix(y, d, m, cap)));
}

Staircase standard_monomials(const PointSet& y, int m, long long cap) {
  require_params(0, m);
  const FiniteField& F = *y.field();
  const int n = y.n();
  if (y.empty()) return make_staircase(n, {});
  const auto derivs = monomials_up_to(n, m - 1);
  const std::size_t rows = y.size() * derivs.size();
  const long long target = binomial(m + n - 1, n) * static_cast<long long>(y.size());
  // Degree past which the quotient dimension is provably exhausted.
  const int dcap = n * (static_cast<int>(F.q()) - 1) + (m - 1) * static_cast<int>(F.q());
  if (static_cast<long long>(rows) * (dcap + 1) > cap)
    throw CapExceededError("standard monomial search exceeds matrix cap");

  const auto pow = power_table(F, dcap);
  // Incremental column echelon: reduced[k] has its leading nonzero entry at
  // row lead[k], normalized to 1, and rows < lead[k] cleared.
  std::vector<std::vector<std::uint32_t>> reduced;
  std::vector<std::size_t> lead;
  std::vector<Exponent> accepted;

  for (int s = 0; s <= dcap && static_cast<long long>(accepted.size()) < target; ++s) {
    for (const auto& a : monomials_of_degree(n, s)) {
      std::vector<std::uint32_t> col(rows);
      std::size_t r = 0;
      for (const auto& x : y.points())
        for (const auto& i : derivs) col[r++] = derived_monomial_value(F, a, i, x, pow);
      // Reduce against accepted columns.
      for (std::size_t k = 0; k < reduced.size(); ++k) {
        const std::uint32_t f = col[lead[k]];
        if (f == 0) continue;
        for (std::size_t row = 0; row < rows; ++row)
          col[row] = F.sub(col[row], F.mul(f, reduced[k][row]));
      }
      std::size_t nz = 0;
      while (nz < rows && col[nz] == 0) ++nz;
      if (nz == rows) continue;  // dependent: a is a leading monomial of the ideal
      const std::uint32_t s0 = F.inv(col[nz]);
      if (s0 != 1)
        for (std::size_t row = nz; row < rows; ++row) col[row] = F.mul(col[row], s0);
      reduced.push_back(std::move(col));
      lead.push_back(nz);
      accepted.push_back(a);
      if (static_cast<long long>(accepted.size()) == target) break;
    }
  }
  if (static_cast<long long>(accepted.size()) != target)
    throw std::logic_error("standard monomial search missed its quotient dimension");
  return make_staircase(n, std::move(accepted));
}

HilbertProfile hilbert_profile(const PointSet& y, int dmax, int m, long long cap) {
  require_params(dmax, m);
  HilbertProfile profile{m, dmax, {}};
  profile.values.reserve(dmax + 1);
  for (int d = 0; d <= dmax; ++d) profile.values.push_back(hilbert_function(y, d, m, cap));
  return profile;
}

HilbertProfile hilbert_profile_single_pass(const PointSet& y, int dmax, int m,
                                           long long cap) {
  require_params(dmax, m);
  HilbertProfile profile{m, dmax, {}};
  profile.values.reserve(dmax + 1);
  if (y.empty()) {
    profile.values.assign(dmax + 1, 0);
    return profile;
  }
  GfMatrix mat = evaluation_matrix(y, dmax, m, cap);
  const std::vector<std::size_t> pivots = reduced_row_echelon(mat);
  std::size_t used = 0;
  for (int e = 0; e <= dmax; ++e) {
    const auto prefix = static_cast<std::size_t>(count_monomials_up_to(y.n(), e));
    while (used < pivots.size() && pivots[used] < prefix) ++used;
    profile.values.push_back(static_cast<long long>(used));
  }
  return profile;
}

UnionReport union_subadditivity_check(const std::vector<PointSet>& parts, int d,
                                      long long cap) {
  if (parts.empty()) throw std::invalid_argument("union check needs at least one part");
  PointSet all = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) all = all.unite(parts[i]);
  UnionReport r;
  r.lhs = hilbert_function(all, d, 1, cap);
  for (const auto& part : parts) r.rhs += hilbert_function(part, d, 1, cap);
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace fqc
