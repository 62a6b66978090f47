#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fqc/polynomial.hpp"
#include "test_support.hpp"

using namespace fqc;

namespace {

Polynomial from_terms(FieldPtr f, int n,
                      std::vector<std::pair<Exponent, std::uint32_t>> ts) {
  Polynomial p(f, n);
  for (auto& [a, c] : ts) p.add_term(a, c);
  return p;
}

}  // namespace

TEST_CASE("term bookkeeping: sparse storage, grlex order, zero erasure") {
  auto f = make_field(3);
  auto p = from_terms(f, 2, {{{1, 0}, 2}, {{0, 0}, 1}, {{1, 0}, 1}});
  // 2x + 1 + x = 3x + 1 = 1 over GF(3): the x term cancels.
  CHECK(p.term_count() == 1);
  CHECK(p.coefficient({0, 0}) == 1);
  CHECK(p.coefficient({1, 0}) == 0);
  CHECK(p.degree() == 0);

  p.set_coefficient({2, 1}, 2);
  CHECK(p.degree() == 3);
  CHECK(p.leading_exponent() == Exponent{2, 1});
  CHECK(p.leading_coefficient() == 2);
  p.set_coefficient({2, 1}, 0);
  CHECK(p.term_count() == 1);
}

TEST_CASE("zero polynomial: sentinel degree and guarded accessors") {
  auto f = make_field(2);
  Polynomial z(f, 3);
  CHECK(z.is_zero());
  CHECK(z.degree() == kZeroPolyDegree);
  CHECK(kZeroPolyDegree == -1);
  CHECK_THROWS_AS(z.leading_exponent(), std::logic_error);
  CHECK(z.evaluate({0, 1, 1}) == 0);
}

TEST_CASE("arithmetic: frozen identities in small characteristic") {
  auto f2 = make_field(2);
  auto x = Polynomial::monomial(f2, {1, 0}, 1);
  auto y = Polynomial::monomial(f2, {0, 1}, 1);
  auto sum = x + y;
  auto square = sum * sum;
  // Freshman's dream: (x+y)^2 = x^2 + y^2 over GF(2).
  CHECK(square == from_terms(f2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));

  auto f3 = make_field(3);
  auto p = from_terms(f3, 2, {{{2, 1}, 1}, {{0, 0}, 2}});  // x^2 y + 2
  CHECK(p.evaluate({1, 2}) == 1);                          // 1*2 + 2 = 4 = 1
  CHECK(p.evaluate({0, 0}) == 2);
  CHECK((p - p).is_zero());
  CHECK(p.scaled(2) == from_terms(f3, 2, {{{2, 1}, 2}, {{0, 0}, 1}}));
  CHECK(p.scaled(0).is_zero());
}

TEST_CASE("evaluation agrees with direct power computation") {
  auto f = make_field(2, 2);  // GF(4)
  auto p = from_terms(f, 2, {{{2, 1}, 2}, {{1, 0}, 3}, {{0, 0}, 1}});
  for (auto a : f->elements())
    for (auto b : f->elements()) {
      std::uint32_t want = f->add(
          f->add(f->mul(2, f->mul(f->pow(a, 2), b)), f->mul(3, a)), 1);
      CHECK(p.evaluate({a, b}) == want);
    }
}

TEST_CASE("Hasse derivatives: frozen small cases") {
  auto f3 = make_field(3);
  auto x2 = Polynomial::monomial(f3, {2, 0}, 1);
  // D^(1,0) x^2 = C(2,1) x = 2x.
  CHECK(hasse_derivative(x2, {1, 0}) ==
        from_terms(f3, 2, {{{1, 0}, 2}}));
  // D^(2,0) x^2 = C(2,2) = 1: survives in every characteristic.
  CHECK(hasse_derivative(x2, {2, 0}) ==
        from_terms(f3, 2, {{{0, 0}, 1}}));
  auto xy = Polynomial::monomial(f3, {1, 1}, 1);
  CHECK(hasse_derivative(xy, {1, 1}) ==
        from_terms(f3, 2, {{{0, 0}, 1}}));
  CHECK(hasse_derivative(xy, {2, 0}).is_zero());

  // Characteristic kills the classical derivative but not the Hasse one:
  // over GF(2), D^(1,0) x^2 = 2x = 0 while D^(2,0) x^2 = 1.
  auto f2 = make_field(2);
  auto x2b = Polynomial::monomial(f2, {2, 0}, 1);
  CHECK(hasse_derivative(x2b, {1, 0}).is_zero());
  CHECK(hasse_derivative(x2b, {2, 0}) ==
        from_terms(f2, 2, {{{0, 0}, 1}}));
}

TEST_CASE("Taylor identity: P(x+t) = sum_i D^i P(x) t^i") {
  // Independent oracle for every Hasse derivative at once: evaluate both
  // sides at random points x and shifts t.
  std::mt19937_64 rng(41);
  for (auto [p_, e_] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    auto f = make_field(p_, e_);
    for (int n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 8; ++trial) {
        Rng tr(rng());
        auto poly = test::random_polynomial(tr, f, n, 4, 5);
        Point x(n), t(n), xt(n);
        for (int i = 0; i < n; ++i) {
          x[i] = static_cast<std::uint32_t>(rng() % f->q());
          t[i] = static_cast<std::uint32_t>(rng() % f->q());
          xt[i] = f->add(x[i], t[i]);
        }
        std::uint32_t rhs = 0;
        for (const auto& i : monomials_up_to(n, std::max(poly.degree(), 0))) {
          auto di = hasse_derivative(poly, i);
          if (di.is_zero()) continue;
          std::uint32_t ti = 1;
          for (int j = 0; j < n; ++j) ti = f->mul(ti, f->pow(t[j], i[j]));
          rhs = f->add(rhs, f->mul(di.evaluate(x), ti));
        }
        CHECK(poly.evaluate(xt) == rhs);
      }
    }
  }
}

TEST_CASE("vanishing order: frozen example and multiplicativity") {
  auto f3 = make_field(3);
  // (x-1)^2 (y+1) vanishes to order exactly 3 at (1, 2).
  auto xm1 = from_terms(f3, 2, {{{1, 0}, 1}, {{0, 0}, 2}});
  auto yp1 = from_terms(f3, 2, {{{0, 1}, 1}, {{0, 0}, 1}});
  auto p = xm1 * xm1 * yp1;
  CHECK(p.evaluate({1, 2}) == 0);
  auto vo = order_at(p, {1, 2});
  CHECK_FALSE(vo.infinite);
  CHECK_FALSE(vo.capped);
  CHECK(vo.order == 3);
  CHECK(vanishes_to_order(p, {1, 2}, 3));
  CHECK_FALSE(vanishes_to_order(p, {1, 2}, 4));
  CHECK(vanishes_to_order(p, {1, 2}, 0));

  // Nonvanishing point has order 0.
  CHECK(order_at(p, {0, 0}).order == 0);

  // ord(PQ) = ord(P) + ord(Q) at a common point.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = make_field(trial % 2 ? 3u : 5u);
    Rng tr(rng());
    auto a = test::random_polynomial(tr, f, 2, 3, 4);
    auto b = test::random_polynomial(tr, f, 2, 3, 4);
    if (a.is_zero() || b.is_zero()) continue;
    Point x{static_cast<std::uint32_t>(rng() % f->q()),
            static_cast<std::uint32_t>(rng() % f->q())};
    auto oa = order_at(a, x), ob = order_at(b, x), oab = order_at(a * b, x);
    REQUIRE_FALSE(oa.capped);
    REQUIRE_FALSE(ob.capped);
    REQUIRE_FALSE(oab.capped);
    CHECK(oab.order == oa.order + ob.order);
  }
}

TEST_CASE("vanishing order: zero polynomial and cap reporting") {
  auto f = make_field(2);
  Polynomial z(f, 2);
  auto vo = order_at(z, {0, 0});
  CHECK(vo.infinite);
  CHECK(vanishes_to_order(z, {1, 1}, 1000));

  // A capped probe reports capped rather than fabricating an order.
  auto x = Polynomial::monomial(f, {4, 0}, 1);  // vanishes to order 4 at 0
  auto capped = order_at(x, {0, 0}, 2);
  CHECK(capped.capped);
  CHECK(capped.order == 2);
  auto uncapped = order_at(x, {0, 0});
  CHECK_FALSE(uncapped.capped);
  CHECK(uncapped.order == 4);
}

TEST_CASE("cross-field operations are rejected") {
  auto a = Polynomial::monomial(make_field(2), {1}, 1);
  auto b = Polynomial::monomial(make_field(3), {1}, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}
