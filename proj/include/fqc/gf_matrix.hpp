#pragma once

#include <cstdint>
#include <vector>

#include "fqc/finite_field.hpp"

namespace fqc {

/// Dense row-major matrix over a finite field.  All elimination is exact.
struct GfMatrix {
  const FiniteField* field = nullptr;  // non-owning
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> a;

  GfMatrix() = default;
  GfMatrix(const FiniteField& f, std::size_t r, std::size_t c)
      : field(&f), rows(r), cols(c), a(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// In-place reduced row echelon form.  Columns are scanned left to right and
/// the pivot row is the first row with a nonzero entry, so the result is
/// canonical.  Returns the pivot column indices in ascending order.
std::vector<std::size_t> reduced_row_echelon(GfMatrix& m);

std::size_t gf_rank(GfMatrix m);

/// Canonical kernel basis from the reduced echelon form: one vector per free
/// column f, with entry 1 at f and the pivot-column back-substitutions below.
/// Each vector's largest-index nonzero entry is at its free column.
std::vector<std::vector<std::uint32_t>> kernel_basis(GfMatrix m);

}  // namespace fqc
