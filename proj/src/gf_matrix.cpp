#include "fqc/gf_matrix.hpp"

#include <algorithm>

namespace fqc {

std::vector<std::size_t> reduced_row_echelon(GfMatrix& m) {
  const FiniteField& F = *m.field;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pr = r;
    while (pr < m.rows && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const std::uint32_t s = F.inv(m.at(r, c));
    if (s != 1)
      for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const std::uint32_t f = m.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t gf_rank(GfMatrix m) { return reduced_row_echelon(m).size(); }

std::vector<std::vector<std::uint32_t>> kernel_basis(GfMatrix m) {
  const FiniteField& F = *m.field;
  const auto pivots = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] > f) break;  // echelon rows are zero right of their pivot row start
      v[pivots[i]] = F.neg(m.at(i, f));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fqc
