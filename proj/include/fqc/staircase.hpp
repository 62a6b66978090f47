#pragma once

#include <cstdint>
#include <vector>

#include "fqc/limits.hpp"
#include "fqc/monomial.hpp"

namespace fqc {

/// A finite set of exponent vectors, stored sorted in ascending grlex order
/// with duplicates removed.  Not required to be a lower set; use
/// is_lower_set to test.
struct Staircase {
  int n = 0;
  std::vector<Exponent> members;

  std::size_t size() const { return members.size(); }
  bool contains(const Exponent& a) const;
};

/// Validates arity and entries >= 0, sorts and dedupes.
Staircase make_staircase(int n, std::vector<Exponent> members);

/// The box {0..q-1}^n, i.e. the exponents surviving reduction by x_i^q = x_i.
Staircase box_staircase(std::uint32_t q, int n, long long cap = kDefaultStaircaseCap);

/// Exponents a with sum_i floor(a_i / q) <= m - 1.  Cardinality is
/// C(m+n-1, n) * q^n.
Staircase multiplicity_staircase(std::uint32_t q, int n, int m,
                                 long long cap = kDefaultStaircaseCap);

/// Number of members of total degree <= d; requires d >= 0.
long long staircase_count_le(const Staircase& s, int d);

/// Closed-form |{a in {0..q-1}^n : |a| <= d}|, no materialization.
long long box_count_le(std::uint32_t q, int n, int d);

/// Closed-form count of multiplicity_staircase members of degree <= d.
long long multiplicity_count_le(std::uint32_t q, int n, int m, int d);

/// Downward closed: a in S and b <= a componentwise imply b in S.
bool is_lower_set(const Staircase& s);

/// Upward closed within the box {0..box_i}^n.
bool is_upper_set_in_box(const Staircase& s, const std::vector<int>& box);

/// S+ = S union (S + e_1) union ... union (S + e_n), sorted grlex.
std::vector<Exponent> s_plus(const std::vector<Exponent>& s);

/// Checks (d+1) * |(S+)_{<= d+1}| >= (n+d+1) * |S_{<= d}| as exact integers.
struct SPlusGrowthReport {
  long long s_count = 0;       // |S_{<= d}|
  long long splus_count = 0;   // |(S+)_{<= d+1}|
  long long lhs = 0;           // (d+1) * splus_count
  long long rhs = 0;           // (n+d+1) * s_count
  bool holds = false;          // lhs >= rhs
};
SPlusGrowthReport check_splus_growth(const std::vector<Exponent>& s, int n, int d);

}  // namespace fqc
