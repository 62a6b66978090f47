#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fqc/finite_field.hpp"
#include "fqc/monomial.hpp"

namespace fqc {

/// A point of GF(q)^n; entries are field element encodings.
using Point = std::vector<std::uint32_t>;

/// Degree reported for the zero polynomial.  A sentinel below every real
/// degree, so `degree() <= d` keeps the zero polynomial in every slice.
inline constexpr int kZeroPolyDegree = -1;

/// Sparse multivariate polynomial over a fixed finite field.  Terms are kept
/// in ascending grlex order with nonzero coefficients only.
class Polynomial {
 public:
  Polynomial(FieldPtr field, int nvars);

  static Polynomial monomial(FieldPtr field, const Exponent& a, std::uint32_t coef);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Exponent, std::uint32_t, GrlexLess>& terms() const { return terms_; }

  /// kZeroPolyDegree for the zero polynomial.
  int degree() const;
  /// Grlex-largest exponent; throws std::logic_error on the zero polynomial.
  const Exponent& leading_exponent() const;
  std::uint32_t leading_coefficient() const;

  std::uint32_t coefficient(const Exponent& a) const;
  /// Setting a zero coefficient erases the term.
  void set_coefficient(const Exponent& a, std::uint32_t c);
  void add_term(const Exponent& a, std::uint32_t c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::uint32_t c) const;
  bool operator==(const Polynomial& o) const;

  std::uint32_t evaluate(const Point& x) const;

 private:
  FieldPtr field_;
  int nvars_;
  std::map<Exponent, std::uint32_t, GrlexLess> terms_;
};

/// Hasse derivative D^i P: the coefficient of t^i in P(x + t).  Termwise,
/// x^a maps to C(a, i) x^{a-i} with the binomial taken componentwise mod p.
Polynomial hasse_derivative(const Polynomial& poly, const Exponent& i);

/// Order of vanishing of P at a point: the smallest |i| with D^i P(x) != 0.
struct VanishingOrder {
  bool infinite = false;  // zero polynomial
  bool capped = false;    // search stopped: order >= `order` (= cap)
  int order = 0;
};

/// For nonzero P the order is at most deg P, so the search ends; `cap`
/// bounds the probe anyway and is reported honestly when hit.
VanishingOrder order_at(const Polynomial& poly, const Point& x, int cap = 128);

/// True when every Hasse derivative of order < ell vanishes at x.
bool vanishes_to_order(const Polynomial& poly, const Point& x, int ell);

}  // namespace fqc
