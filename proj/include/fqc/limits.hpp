#pragma once

#include <stdexcept>
#include <string>

namespace fqc {

// Default resource ceilings for desk-scale runs.  Every enumeration of a grid
// or allocation of an evaluation matrix checks one of these first and throws
// CapExceededError instead of grinding or exhausting memory.
inline constexpr long long kDefaultGridCap = 10'000'000;     // grid points (q^n)
inline constexpr long long kDefaultMatrixCap = 100'000'000;  // matrix entries
inline constexpr long long kDefaultStaircaseCap = 1'000'000; // materialized exponents
inline constexpr long long kDefaultLatticeCap = 4'096;       // FKG lattice cells

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
  long long grid = kDefaultGridCap;
  long long matrix = kDefaultMatrixCap;
};

}  // namespace fqc
