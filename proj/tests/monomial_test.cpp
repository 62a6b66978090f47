#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fqc/monomial.hpp"

using namespace fqc;

namespace {

// Independent binomial oracle via Pascal's rule in exact long arithmetic.
long long pascal(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

}  // namespace

TEST_CASE("degree sums entries") {
  CHECK(degree({}) == 0);
  CHECK(degree({0, 0}) == 0);
  CHECK(degree({2, 3, 1}) == 6);
}

TEST_CASE("grlex order: frozen small comparisons") {
  CHECK(grlex_compare({0, 1}, {1, 0}) < 0);   // x2 < x1
  CHECK(grlex_compare({1, 0}, {0, 1}) > 0);
  CHECK(grlex_compare({0, 2}, {1, 1}) < 0);
  CHECK(grlex_compare({1, 1}, {2, 0}) < 0);
  CHECK(grlex_compare({2, 0}, {0, 3}) < 0);   // degree dominates
  CHECK(grlex_compare({1, 1}, {1, 1}) == 0);
  CHECK(grlex_compare({0, 0, 1}, {0, 1, 0}) < 0);
  CHECK(grlex_compare({0, 1, 0}, {1, 0, 0}) < 0);
}

TEST_CASE("monomials_up_to emits the documented ascending sequence") {
  CHECK(monomials_up_to(1, 2) ==
        std::vector<Exponent>{{0}, {1}, {2}});
  CHECK(monomials_up_to(2, 1) ==
        std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(monomials_up_to(2, 2) ==
        std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});
  CHECK(monomials_up_to(3, 1) ==
        std::vector<Exponent>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("monomial enumeration is sorted, complete, duplicate-free") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 5; ++d) {
      const auto ms = monomials_up_to(n, d);
      CHECK(static_cast<long long>(ms.size()) == count_monomials_up_to(n, d));
      CHECK(static_cast<long long>(ms.size()) == pascal(d + n, n));
      CHECK(std::is_sorted(ms.begin(), ms.end(), GrlexLess{}));
      std::set<Exponent> uniq(ms.begin(), ms.end());
      CHECK(uniq.size() == ms.size());
      for (const auto& a : ms) {
        CHECK(static_cast<int>(a.size()) == n);
        CHECK(degree(a) <= d);
        CHECK(*std::min_element(a.begin(), a.end()) >= 0);
      }
    }
  }
}

TEST_CASE("monomials_of_degree slices concatenate to monomials_up_to") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 4; ++d) {
      std::vector<Exponent> cat;
      for (int s = 0; s <= d; ++s) {
        const auto slice = monomials_of_degree(n, s);
        for (const auto& a : slice) CHECK(degree(a) == s);
        cat.insert(cat.end(), slice.begin(), slice.end());
      }
      CHECK(cat == monomials_up_to(n, d));
    }
  }
}

TEST_CASE("boxed enumeration filters componentwise") {
  const auto ms = monomials_up_to_boxed(2, 2, {1, 1});
  CHECK(ms == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  // A large box changes nothing.
  CHECK(monomials_up_to_boxed(2, 3, {10, 10}) == monomials_up_to(2, 3));
  // Degree cap still applies inside the box.
  const auto tight = monomials_up_to_boxed(2, 1, {2, 2});
  CHECK(tight == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  // Brute-force cross-check.
  for (int d = 0; d <= 6; ++d) {
    std::vector<Exponent> expect;
    for (const auto& a : monomials_up_to(3, d))
      if (a[0] <= 2 && a[1] <= 1 && a[2] <= 3) expect.push_back(a);
    CHECK(monomials_up_to_boxed(3, d, {2, 1, 3}) == expect);
  }
}

TEST_CASE("binomial: frozen values and Pascal cross-check") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(50, 25) == 126410606437752LL);
  CHECK(binomial(10, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  for (long long n = 0; n <= 40; ++n)
    for (long long k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal(n, k));
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("count_monomials_up_to equals C(d+n, n)") {
  CHECK(count_monomials_up_to(2, 2) == 6);
  CHECK(count_monomials_up_to(3, 0) == 1);
  CHECK(count_monomials_up_to(1, 9) == 10);
  CHECK(count_monomials_up_to(4, 7) == pascal(11, 4));
}

TEST_CASE("binomial_mod_p matches the exact binomial reduced mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (long long a = 0; a <= 30; ++a)
      for (long long b = 0; b <= 30; ++b)
        CHECK(binomial_mod_p(a, b, p) ==
              static_cast<std::uint32_t>(pascal(a, b) % p));
  }
  // Lucas handles arguments far beyond 64-bit factorials.
  CHECK(binomial_mod_p(1'000'000, 500'000, 2) ==
        ((1'000'000 & 500'000) == 500'000 ? 1u : 0u));
  CHECK(binomial_mod_p(7, 9, 5) == 0);
}

TEST_CASE("grlex_compare rejects mixed arities") {
  CHECK_THROWS_AS(grlex_compare({1, 2}, {1, 2, 3}), std::invalid_argument);
}
