#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fqc/vanishing_ideal.hpp"
#include "test_support.hpp"

using namespace fqc;

namespace {

PointSet diag3() {
  auto f = make_field(3);
  return PointSet(f, 2, {{0, 0}, {1, 1}, {2, 2}});
}

}  // namespace

TEST_CASE("evaluation matrix: frozen single-point rows") {
  auto f = make_field(2);
  PointSet y(f, 2, {{0, 0}});
  auto m1 = evaluation_matrix(y, 1);
  REQUIRE(m1.rows == 1);
  REQUIRE(m1.cols == 3);  // 1, y, x
  CHECK(m1.a == std::vector<std::uint32_t>{1, 0, 0});

  // Order-2 derivatives at the origin give the identity on {1, y, x}.
  auto m2 = evaluation_matrix(y, 1, 2);
  REQUIRE(m2.rows == 3);
  REQUIRE(m2.cols == 3);
  CHECK(m2.a == std::vector<std::uint32_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});
}

TEST_CASE("evaluation matrix: frozen multiplicity rows over GF(3)") {
  auto f = make_field(3);
  PointSet y(f, 1, {{1}});
  auto m = evaluation_matrix(y, 2, 2);
  REQUIRE(m.rows == 2);   // multi-indices (0) and (1)
  REQUIRE(m.cols == 3);   // 1, x, x^2
  // Row (0): values 1, 1, 1.  Row (1): C(a,1) x^{a-1} at 1 -> 0, 1, 2.
  CHECK(m.a == std::vector<std::uint32_t>{1, 1, 1, 0, 1, 2});

  auto slice = ideal_slice(y, 2, 2);
  CHECK(slice.rank == 2);
  REQUIRE(slice.basis.size() == 1);
  // (x-1)^2 = x^2 + x + 1 over GF(3), monic in its leading monomial.
  Polynomial want(f, 1);
  want.add_term({2}, 1);
  want.add_term({1}, 1);
  want.add_term({0}, 1);
  CHECK(slice.basis[0] == want);
}

TEST_CASE("ideal slice: frozen two-point line over GF(3)") {
  auto f = make_field(3);
  PointSet y(f, 2, {{0, 0}, {1, 1}});
  auto slice = ideal_slice(y, 1);
  CHECK(slice.rank == 2);
  CHECK(slice.columns ==
        std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  REQUIRE(slice.basis.size() == 1);
  Polynomial want(f, 2);  // x + 2y vanishes on the diagonal
  want.add_term({1, 0}, 1);
  want.add_term({0, 1}, 2);
  CHECK(slice.basis[0] == want);
  // Basis members vanish on the sources.
  for (const auto& b : slice.basis)
    for (const auto& pt : y.points()) CHECK(b.evaluate(pt) == 0);
}

TEST_CASE("ideal slice basis is canonical: monic, distinct leads, kernel-sized") {
  std::mt19937_64 seeds(5);
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng(seeds());
    auto f = trial % 2 ? make_field(3) : make_field(2, 2);
    auto y = test::random_subset(rng, f, 2, 1 + trial % 5);
    const int d = trial % 3;
    auto slice = ideal_slice(y, d, 1 + trial % 2);
    CHECK(slice.rank + static_cast<long long>(slice.basis.size()) ==
          static_cast<long long>(slice.columns.size()));
    std::set<Exponent, GrlexLess> leads;
    for (const auto& b : slice.basis) {
      CHECK(b.leading_coefficient() == 1);
      CHECK(leads.insert(b.leading_exponent()).second);
      CHECK(b.degree() <= d);
      const int m = slice.m;
      for (const auto& pt : y.points()) CHECK(vanishes_to_order(b, pt, m));
    }
  }
}

TEST_CASE("Hilbert function: frozen profiles") {
  auto prof = hilbert_profile(diag3(), 3);
  CHECK(prof.values == std::vector<long long>{1, 2, 3, 3});

  auto f2 = make_field(2);
  auto grid = full_grid(f2, 2);
  CHECK(hilbert_profile(grid, 2).values == std::vector<long long>{1, 3, 4});

  // Empty set: the zero space at every degree.
  PointSet empty(f2, 2);
  CHECK(hilbert_function(empty, 2) == 0);
  CHECK(hilbert_profile(empty, 2).values == std::vector<long long>{0, 0, 0});
  CHECK(hilbert_profile_single_pass(empty, 2).values ==
        std::vector<long long>{0, 0, 0});
}

TEST_CASE("rank route agrees with an independent elimination for prime fields") {
  std::mt19937_64 seeds(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    auto f = make_field(p);
    Rng rng(seeds());
    const int n = 1 + trial % 2;
    auto y = test::random_subset(rng, f, n, 1 + trial % 6);
    const int d = trial % 4;
    const int m = 1 + trial % 2;
    auto mat = evaluation_matrix(y, d, m);
    std::vector<std::vector<long long>> rows(mat.rows,
                                             std::vector<long long>(mat.cols));
    for (std::size_t r = 0; r < mat.rows; ++r)
      for (std::size_t c = 0; c < mat.cols; ++c) rows[r][c] = mat.at(r, c);
    CHECK(gf_rank(mat) == test::naive_rank_mod_p(rows, p));
    CHECK(hilbert_function(y, d, m) == static_cast<long long>(test::naive_rank_mod_p(rows, p)));
  }
}

TEST_CASE("standard monomials: frozen diagonal staircase") {
  auto s = standard_monomials(diag3());
  CHECK(s.members == std::vector<Exponent>{{0, 0}, {0, 1}, {0, 2}});
  CHECK(is_lower_set(s));

  // Full small grid: the staircase is the whole box.
  auto f2 = make_field(2);
  CHECK(standard_monomials(full_grid(f2, 2)).members ==
        box_staircase(2, 2).members);

  CHECK(standard_monomials(PointSet(f2, 2)).members.empty());
}

TEST_CASE("staircase counts reproduce the Hilbert function at every degree") {
  // The two routes are algorithmically independent: fresh matrix ranks
  // versus the incremental accepted-column staircase.
  std::mt19937_64 seeds(23);
  for (int trial = 0; trial < 35; ++trial) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5}[trial % 4];
    auto f = q == 4 ? make_field(2, 2) : make_field(q);
    Rng rng(seeds());
    const int n = 1 + trial % 2;
    const int m = 1 + trial % 3;
    auto y = test::random_subset(rng, f, n, 1 + trial % 4);
    auto s = standard_monomials(y, m);
    CHECK(is_lower_set(s));
    CHECK(static_cast<long long>(s.size()) ==
          binomial(m + n - 1, n) * static_cast<long long>(y.size()));
    const int dstab = n * (static_cast<int>(q) - 1) + (m - 1) * static_cast<int>(q);
    for (int d = 0; d <= dstab; ++d)
      CHECK(hilbert_function(y, d, m) == staircase_count_le(s, d));
  }
}

TEST_CASE("single-pass profile equals the per-degree rank profile") {
  std::mt19937_64 seeds(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 5, 9}[trial % 4];
    auto f = q == 9 ? make_field(3, 2) : make_field(q);
    Rng rng(seeds());
    const int n = 1 + trial % 2;
    const int m = 1 + trial % 2;
    auto y = test::random_subset(rng, f, n, 1 + trial % 5);
    const int dmax = 2 * (static_cast<int>(q) - 1) + 2;
    auto slow = hilbert_profile(y, dmax, m);
    auto fast = hilbert_profile_single_pass(y, dmax, m);
    CHECK(slow.values == fast.values);
    CHECK(fast.m == m);
    CHECK(fast.dmax == dmax);
  }
}

TEST_CASE("Hilbert function saturates at the point count") {
  auto f = make_field(3);
  PointSet y(f, 2, {{0, 0}, {1, 2}, {2, 1}, {1, 1}});
  const int dstab = 2 * 2;  // n(q-1)
  CHECK(hilbert_function(y, dstab) == static_cast<long long>(y.size()));
  CHECK(hilbert_function(y, dstab + 3) == static_cast<long long>(y.size()));
  // Multiplicity saturation: C(m+n-1, n) |Y|.
  const int m = 2;
  CHECK(hilbert_function(y, dstab + (m - 1) * 3, m) ==
        binomial(m + 2 - 1, 2) * static_cast<long long>(y.size()));
}

TEST_CASE("union subadditivity: frozen and random") {
  auto f = make_field(3);
  PointSet a(f, 2, {{0, 0}});
  PointSet b(f, 2, {{1, 1}});
  auto rep = union_subadditivity_check({a, b}, 1);
  CHECK(rep.lhs == 2);
  CHECK(rep.rhs == 2);
  CHECK(rep.holds);

  std::mt19937_64 seeds(43);
  for (int trial = 0; trial < 25; ++trial) {
    Rng rng(seeds());
    auto ff = make_field(trial % 2 ? 2u : 3u);
    std::vector<PointSet> parts;
    for (int k = 0; k < 2 + trial % 3; ++k)
      parts.push_back(test::random_subset(rng, ff, 2, 1 + trial % 4));
    auto r = union_subadditivity_check(parts, trial % 4);
    CHECK(r.holds);
    CHECK(r.lhs <= r.rhs);
  }
}

TEST_CASE("echelon form is canonical and kernel vectors annihilate") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = make_field(trial % 2 ? 5u : 2u, trial % 2 ? 1u : 2u);
    GfMatrix m(*f, 3 + trial % 3, 4 + trial % 3);
    for (auto& v : m.a) v = static_cast<std::uint32_t>(rng() % f->q());
    GfMatrix orig = m;
    auto pivots = reduced_row_echelon(m);
    CHECK(pivots.size() == gf_rank(orig));
    // Idempotence: a second pass changes nothing.
    GfMatrix again = m;
    reduced_row_echelon(again);
    CHECK(again.a == m.a);
    // Pivot columns are unit vectors.
    for (std::size_t k = 0; k < pivots.size(); ++k)
      for (std::size_t r = 0; r < m.rows; ++r)
        CHECK(m.at(r, pivots[k]) == (r == k ? 1u : 0u));
    // Kernel basis members are annihilated by the original matrix.
    auto kb = kernel_basis(orig);
    CHECK(kb.size() + pivots.size() == orig.cols);
    for (const auto& v : kb)
      for (std::size_t r = 0; r < orig.rows; ++r) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < orig.cols; ++c)
          acc = f->add(acc, f->mul(orig.at(r, c), v[c]));
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("point sets validate and normalize") {
  auto f = make_field(2);
  PointSet y(f, 2, {{1, 1}, {0, 0}, {1, 1}});
  CHECK(y.size() == 2);
  CHECK(y.points() == std::vector<Point>{{0, 0}, {1, 1}});
  CHECK(y.contains({1, 1}));
  CHECK_FALSE(y.contains({0, 1}));
  CHECK_THROWS_AS(PointSet(f, 2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(f, 2, {{0}}), std::invalid_argument);

  auto grid = full_grid(f, 2);
  CHECK(grid.size() == 4);
  CHECK(y.subset_of(grid));
  CHECK(y.unite(PointSet(f, 2, {{0, 1}})).size() == 3);
  CHECK(y.intersect(grid) == y);
  CHECK(grid_subset(f, 2, 0b1001).points() ==
        std::vector<Point>{{0, 0}, {1, 1}});
  CHECK(grid_size(*f, 2) == 4);
  CHECK_THROWS_AS(grid_size(*make_field(2, 16), 3), CapExceededError);
}
