#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fqc {

/// Exponent vector of a monomial x1^a1 ... xn^an; entries are >= 0.
using Exponent = std::vector<int>;

int degree(const Exponent& a);

/// Graded lexicographic order: lower total degree first; within a degree,
/// a < b when a_j < b_j at the first index j where they differ.  This makes
/// x1 the largest variable of each degree: (0,1) < (1,0).
std::strong_ordering grlex_compare(const Exponent& a, const Exponent& b);

struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return grlex_compare(a, b) < 0;
  }
};

/// All exponents in n variables of total degree <= d, ascending grlex.
std::vector<Exponent> monomials_up_to(int n, int d);

/// Same, restricted to a_i <= box[i] componentwise.
std::vector<Exponent> monomials_up_to_boxed(int n, int d, const std::vector<int>& box);

/// Exponents of total degree exactly s, ascending grlex.
std::vector<Exponent> monomials_of_degree(int n, int s);

/// Number of monomials in n variables of degree <= d, i.e. C(d+n, n).
long long count_monomials_up_to(int n, int d);

/// Exact binomial coefficient; throws std::overflow_error past 2^63.
long long binomial(long long n, long long k);

/// C(a, b) mod p by Lucas reduction on base-p digits.
std::uint32_t binomial_mod_p(long long a, long long b, std::uint32_t p);

}  // namespace fqc
