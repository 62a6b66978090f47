#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "fqc/staircase.hpp"

using namespace fqc;

TEST_CASE("make_staircase sorts, dedupes, validates") {
  auto s = make_staircase(2, {{1, 0}, {0, 0}, {1, 0}, {0, 1}});
  CHECK(s.members == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(s.size() == 3);
  CHECK(s.contains({0, 1}));
  CHECK_FALSE(s.contains({1, 1}));
  CHECK_THROWS_AS(make_staircase(2, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_staircase(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("box staircase is the full grid of exponents below q") {
  auto s = box_staircase(2, 2);
  CHECK(s.members == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(box_staircase(3, 1).members == std::vector<Exponent>{{0}, {1}, {2}});
  CHECK(box_staircase(4, 3).size() == 64);
  CHECK(is_lower_set(box_staircase(3, 2)));
}

TEST_CASE("multiplicity staircase has cardinality C(m+n-1,n) * q^n") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        auto s = multiplicity_staircase(q, n, m);
        long long qn = 1;
        for (int i = 0; i < n; ++i) qn *= q;
        CHECK(static_cast<long long>(s.size()) ==
              binomial(m + n - 1, n) * qn);
        CHECK(is_lower_set(s));
        // Membership rule check on every member plus a boundary outsider.
        for (const auto& a : s.members) {
          int carries = 0;
          for (int v : a) carries += v / static_cast<int>(q);
          CHECK(carries <= m - 1);
        }
        Exponent outside(n, 0);
        outside[0] = static_cast<int>(q) * m;  // m carries in one coordinate
        CHECK_FALSE(s.contains(outside));
      }
    }
  }
  // m = 1 degenerates to the box.
  CHECK(multiplicity_staircase(3, 2, 1).members == box_staircase(3, 2).members);
}

TEST_CASE("frozen multiplicity staircase for q=2, n=2, m=2") {
  auto s = multiplicity_staircase(2, 2, 2);
  CHECK(s.size() == 12);  // C(3,2) * 4
  // Exactly the exponents with floor(a/2)+floor(b/2) <= 1.
  std::vector<Exponent> expect;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      if (a / 2 + b / 2 <= 1) expect.push_back({a, b});
  std::sort(expect.begin(), expect.end(), GrlexLess{});
  CHECK(s.members == expect);
}

TEST_CASE("closed-form counts match the materialized staircases") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (int n = 1; n <= 3; ++n) {
      auto s = box_staircase(q, n);
      const int stab = n * (static_cast<int>(q) - 1);
      for (int d = 0; d <= stab + 2; ++d)
        CHECK(box_count_le(q, n, d) == staircase_count_le(s, d));
    }
  }
  for (std::uint32_t q : {2u, 3u}) {
    for (int n = 1; n <= 2; ++n) {
      for (int m = 1; m <= 3; ++m) {
        auto s = multiplicity_staircase(q, n, m);
        const int stab = n * (static_cast<int>(q) - 1) +
                         (m - 1) * static_cast<int>(q);
        for (int d = 0; d <= stab + 2; ++d)
          CHECK(multiplicity_count_le(q, n, m, d) == staircase_count_le(s, d));
      }
    }
  }
}

TEST_CASE("closed-form counts saturate at enormous degrees") {
  CHECK(box_count_le(3, 2, 1'000'000'000) == 9);
  CHECK(box_count_le(2, 3, 100) == 8);
  CHECK(multiplicity_count_le(3, 2, 2, 1'000'000'000) == 3 * 9);
  CHECK(multiplicity_count_le(2, 2, 3, 1 << 29) == binomial(4, 2) * 4);
}

TEST_CASE("lower-set and upper-set-in-box predicates") {
  CHECK(is_lower_set(make_staircase(2, {{0, 0}, {0, 1}, {1, 0}})));
  CHECK_FALSE(is_lower_set(make_staircase(2, {{0, 0}, {1, 1}})));
  CHECK(is_lower_set(make_staircase(2, {})));
  // {(1,1)} is upward closed inside the box {0,1}^2.
  CHECK(is_upper_set_in_box(make_staircase(2, {{1, 1}}), {1, 1}));
  CHECK_FALSE(is_upper_set_in_box(make_staircase(2, {{0, 1}}), {1, 1}));
  // Complement duality inside a box: S lower iff box\S upper.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Exponent> in, out;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        (rng() & 1 ? in : out).push_back({a, b});
    auto s_in = make_staircase(2, in);
    auto s_out = make_staircase(2, out);
    CHECK(is_lower_set(s_in) == is_upper_set_in_box(s_out, {2, 2}));
  }
}

TEST_CASE("s_plus adds one step in each coordinate direction") {
  CHECK(s_plus({{0, 0}}) ==
        std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(s_plus({}) == std::vector<Exponent>{});
  auto sp = s_plus({{0, 0}, {0, 1}});
  CHECK(sp == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}});
  CHECK(std::is_sorted(sp.begin(), sp.end(), GrlexLess{}));
}

TEST_CASE("growth inequality: frozen tight case and random instances") {
  // S = {(0,0)}, d = 0: lhs = 1*3, rhs = 3*1 -- tight.
  auto r = check_splus_growth({{0, 0}}, 2, 0);
  CHECK(r.s_count == 1);
  CHECK(r.splus_count == 3);
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 3);
  CHECK(r.holds);

  // Holds for arbitrary finite exponent sets, not only lower sets.
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    // Exponent entries are drawn from {0..6}, so n = 1 offers only 7
    // distinct vectors; keep the target reachable.
    const int size = 1 + static_cast<int>(rng() % (n == 1 ? 6 : 12));
    std::set<Exponent> uniq;
    while (static_cast<int>(uniq.size()) < size) {
      Exponent a(n);
      for (int& v : a) v = static_cast<int>(rng() % 7);
      uniq.insert(a);
    }
    std::vector<Exponent> s(uniq.begin(), uniq.end());
    for (int d = 0; d <= 8; ++d) {
      auto rep = check_splus_growth(s, n, d);
      CHECK(rep.lhs == (d + 1) * rep.splus_count);
      CHECK(rep.rhs == (n + d + 1) * rep.s_count);
      CHECK(rep.holds);
    }
  }
}

TEST_CASE("staircase_count_le counts by degree") {
  auto s = make_staircase(2, {{0, 0}, {0, 1}, {2, 1}});
  CHECK(staircase_count_le(s, 0) == 1);
  CHECK(staircase_count_le(s, 1) == 2);
  CHECK(staircase_count_le(s, 2) == 2);
  CHECK(staircase_count_le(s, 3) == 3);
  CHECK(staircase_count_le(s, 99) == 3);
}

TEST_CASE("cap guards enormous materializations") {
  CHECK_THROWS_AS(box_staircase(65536, 4, 1'000'000), CapExceededError);
  CHECK_NOTHROW(box_staircase(16, 2, 1'000'000));
}
