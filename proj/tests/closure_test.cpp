#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fqc/closure.hpp"
#include "test_support.hpp"

using namespace fqc;

TEST_CASE("degree-d closure matches the brute-force ideal oracle: GF(2)^2, all subsets") {
  // The oracle enumerates every polynomial with box exponents and degree
  // <= d, keeps those vanishing on Y, and intersects their zero sets.
  auto f = make_field(2);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    auto y = grid_subset(f, 2, mask);
    for (int d = 0; d <= 2; ++d) {
      auto expect = test::brute_force_closure(y, d);
      auto got = closure(y, d);
      CHECK(got.output == expect);
      CHECK(got.input == y);
      CHECK(got.d == d);
    }
  }
}

TEST_CASE("degree-d closure matches the brute-force oracle: GF(3)^2 samples") {
  auto f = make_field(3);
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 12; ++trial) {
    const std::uint64_t mask = rng() % 512;
    auto y = grid_subset(f, 2, mask);
    for (int d = 0; d <= 2; ++d)
      CHECK(closure(y, d).output == test::brute_force_closure(y, d));
  }
}

TEST_CASE("frozen closures") {
  auto f3 = make_field(3);
  // Two diagonal points pull in the third point of the line at d = 1.
  PointSet two(f3, 2, {{0, 0}, {1, 1}});
  CHECK(closure(two, 1).output ==
        PointSet(f3, 2, {{0, 0}, {1, 1}, {2, 2}}));
  // At d = 2 the pair is already closed.
  CHECK(closure(two, 2).output == two);
  // The 2x2 corner grid spans all degree-1 evaluations: closure is everything.
  PointSet corners(f3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(closure(corners, 1).output == full_grid(f3, 2));
  CHECK(closure(corners, 2).output == corners);
  // d = 0: any nonempty set blows up to the whole grid.
  CHECK(closure(PointSet(f3, 2, {{2, 1}}), 0).output == full_grid(f3, 2));
  // Empty input stays empty: the slice contains 1, which never vanishes.
  CHECK(closure(PointSet(f3, 2), 1).output == PointSet(f3, 2));
}

TEST_CASE("closure is extensive, monotone, idempotent (axioms report)") {
  std::mt19937_64 seeds(515);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5}[trial % 4];
    auto f = q == 4 ? make_field(2, 2) : make_field(q);
    Rng rng(seeds());
    const int n = 1 + trial % 2;
    auto y = test::random_subset(rng, f, n, 1 + trial % 5);
    auto x = test::random_subset(rng, f, n, 1);
    auto xy = x.unite(y);
    const int d = trial % static_cast<int>(q);
    auto rep = closure_axioms_check(x, xy, d);
    CHECK(rep.monotone_applicable);
    CHECK(rep.extensive_x);
    CHECK(rep.extensive_y);
    CHECK(rep.monotone);
    CHECK(rep.idempotent_x);
    CHECK(rep.hilbert_match);
    CHECK(rep.holds);
    REQUIRE(rep.hf_x.size() == static_cast<std::size_t>(d + 1));
    CHECK(rep.hf_x == rep.hf_clx);
  }
}

TEST_CASE("closing preserves the Hilbert function up to the closing degree") {
  auto f = make_field(3);
  PointSet y(f, 2, {{0, 0}, {1, 1}});
  auto cl = closure(y, 1).output;
  REQUIRE(cl.size() == 3);
  auto py = hilbert_profile(y, 1);
  auto pc = hilbert_profile(cl, 1);
  CHECK(py.values == pc.values);
  // Beyond d they may differ; here HF(Y,2)=2 < HF(cl,2)=3.
  CHECK(hilbert_function(y, 2) == 2);
  CHECK(hilbert_function(cl, 2) == 3);
}

TEST_CASE("multiplicity closure: frozen small cases") {
  // Order-2 testing of an order-1 ideal slice kills every point.
  auto f2 = make_field(2);
  PointSet one(f2, 1, {{0}});
  auto r = multiplicity_closure(one, 1, 2, 1);
  CHECK(r.output.empty());
  CHECK(r.l == 2);
  CHECK(r.m == 1);

  // Matching orders keep the single point fixed at d = 2.
  PointSet origin(f2, 2, {{0, 0}});
  CHECK(multiplicity_closure(origin, 2, 2, 2).output == origin);

  // l = m = 1 coincides with the plain closure.
  auto f3 = make_field(3);
  std::mt19937_64 seeds(99);
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng(seeds());
    auto y = test::random_subset(rng, f3, 2, 1 + trial % 4);
    for (int d = 0; d <= 2; ++d)
      CHECK(multiplicity_closure(y, d, 1, 1).output == closure(y, d).output);
  }
}

TEST_CASE("multiplicity closure is extensive when l <= m") {
  std::mt19937_64 seeds(124);
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng(seeds());
    auto f = make_field(trial % 2 ? 3u : 2u);
    auto y = test::random_subset(rng, f, 2, 1 + trial % 3);
    for (int m = 1; m <= 2; ++m)
      for (int l = 1; l <= m; ++l)
        for (int d = 0; d <= 2; ++d) {
          auto r = multiplicity_closure(y, d, l, m);
          CHECK(y.subset_of(r.output));
          // Raising the test order l shrinks the output.
          if (l > 1) {
            auto weaker = multiplicity_closure(y, d, l - 1, m);
            CHECK(r.output.subset_of(weaker.output));
          }
        }
  }
}

TEST_CASE("membership rule: output is exactly the order-l vanishing locus of the basis") {
  auto f = make_field(3);
  PointSet y(f, 2, {{0, 0}, {1, 2}});
  auto r = multiplicity_closure(y, 2, 2, 2);
  auto grid = full_grid(f, 2);
  for (const auto& pt : grid.points()) {
    bool all = true;
    for (const auto& b : r.slice.basis)
      if (!vanishes_to_order(b, pt, r.l)) all = false;
    CHECK(all == r.output.contains(pt));
  }
}

TEST_CASE("any d+1 collinear points recover the whole line at degree d") {
  auto f = make_field(5);
  // Line y = 2x + 1.
  std::vector<Point> line;
  for (std::uint32_t t = 0; t < 5; ++t) line.push_back({t, f->add(f->mul(2, t), 1)});
  PointSet whole(f, 2, line);
  for (int d = 1; d <= 3; ++d) {
    PointSet part(f, 2, std::vector<Point>(line.begin(), line.begin() + d + 1));
    auto cl = closure(part, d).output;
    CHECK(whole.subset_of(cl));
  }
  // d points do not suffice at degree d: two points stay put at degree 2.
  PointSet two(f, 2, {line[0], line[1]});
  CHECK(closure(two, 2).output == two);
}

TEST_CASE("whole-space dimension count") {
  auto f = make_field(3);
  // cl_1({0,1}^2) is the whole plane, so C(1+2,2) = 3 <= 4 must hold.
  PointSet corners(f, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto rep = whole_space_degree_check(corners, 1);
  CHECK(rep.is_whole_space);
  CHECK(rep.lhs == 3);
  CHECK(rep.rhs == 4);
  CHECK(rep.holds);

  // A proper closure reports vacuous success.
  PointSet two(f, 2, {{0, 0}, {1, 1}});
  auto rep2 = whole_space_degree_check(two, 1);
  CHECK_FALSE(rep2.is_whole_space);
  CHECK(rep2.holds);

  // Random instances never falsify the count for d < q.
  std::mt19937_64 seeds(2026);
  for (int trial = 0; trial < 25; ++trial) {
    Rng rng(seeds());
    const std::uint32_t q = trial % 2 ? 2u : 3u;
    auto ff = make_field(q);
    auto x = test::random_subset(rng, ff, 2, 1 + trial % 6);
    for (int d = 0; d < static_cast<int>(q); ++d)
      CHECK(whole_space_degree_check(x, d).holds);
  }
}

TEST_CASE("parameter validation") {
  auto f = make_field(2);
  PointSet y(f, 2, {{0, 0}});
  CHECK_THROWS_AS(multiplicity_closure(y, -1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_closure(y, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_closure(y, 1, 1, 0), std::invalid_argument);
}
