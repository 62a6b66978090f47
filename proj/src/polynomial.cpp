#include "fqc/polynomial.hpp"

#include <stdexcept>

namespace fqc {

Polynomial::Polynomial(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
  if (nvars_ < 1) throw std::invalid_argument("polynomial needs nvars >= 1");
}

Polynomial Polynomial::monomial(FieldPtr field, const Exponent& a, std::uint32_t coef) {
  Polynomial p(std::move(field), static_cast<int>(a.size()));
  p.set_coefficient(a, coef);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return kZeroPolyDegree;
  return fqc::degree(terms_.rbegin()->first);
}

const Exponent& Polynomial::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading exponent");
  return terms_.rbegin()->first;
}

std::uint32_t Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

std::uint32_t Polynomial::coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::set_coefficient(const Exponent& a, std::uint32_t c) {
  if (static_cast<int>(a.size()) != nvars_)
    throw std::invalid_argument("exponent has wrong arity");
  for (int v : a)
    if (v < 0) throw std::invalid_argument("exponent has a negative entry");
  if (!field_->is_element(c)) throw std::invalid_argument("coefficient out of field range");
  if (c == 0)
    terms_.erase(a);
  else
    terms_[a] = c;
}

void Polynomial::add_term(const Exponent& a, std::uint32_t c) {
  set_coefficient(a, field_->add(coefficient(a), c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_field(*field_, *o.field_, "polynomial add");
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial add: arity mismatch");
  Polynomial out = *this;
  for (const auto& [a, c] : o.terms_) out.add_term(a, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_field(*field_, *o.field_, "polynomial sub");
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial sub: arity mismatch");
  Polynomial out = *this;
  for (const auto& [a, c] : o.terms_) out.add_term(a, field_->neg(c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_field(*field_, *o.field_, "polynomial mul");
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial mul: arity mismatch");
  Polynomial out(field_, nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Exponent s(nvars_);
      for (int i = 0; i < nvars_; ++i) s[i] = a[i] + b[i];
      out.add_term(s, field_->mul(ca, cb));
    }
  return out;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  Polynomial out(field_, nvars_);
  for (const auto& [a, ca] : terms_) out.set_coefficient(a, field_->mul(ca, c));
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_field(*field_, *o.field_) && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::uint32_t Polynomial::evaluate(const Point& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong arity");
  const FiniteField& F = *field_;
  std::uint32_t acc = 0;
  for (const auto& [a, c] : terms_) {
    std::uint32_t t = c;
    for (int i = 0; i < nvars_; ++i)
      if (a[i] != 0) t = F.mul(t, F.pow(x[i], static_cast<std::uint64_t>(a[i])));
    acc = F.add(acc, t);
  }
  return acc;
}

Polynomial hasse_derivative(const Polynomial& poly, const Exponent& i) {
  if (static_cast<int>(i.size()) != poly.nvars())
    throw std::invalid_argument("derivative multi-index has wrong arity");
  const FiniteField& F = *poly.field();
  Polynomial out(poly.field(), poly.nvars());
  for (const auto& [a, c] : poly.terms()) {
    std::uint32_t factor = 1;
    bool dead = false;
    for (int j = 0; j < poly.nvars() && !dead; ++j) {
      if (i[j] < 0) throw std::invalid_argument("derivative multi-index has a negative entry");
      if (i[j] > a[j]) {
        dead = true;
        break;
      }
      factor = static_cast<std::uint32_t>(
          std::uint64_t{factor} * binomial_mod_p(a[j], i[j], F.p()) % F.p());
    }
    if (dead || factor == 0) continue;
    Exponent b(poly.nvars());
    for (int j = 0; j < poly.nvars(); ++j) b[j] = a[j] - i[j];
    out.add_term(b, F.mul(c, F.from_int(factor)));
  }
  return out;
}

VanishingOrder order_at(const Polynomial& poly, const Point& x, int cap) {
  if (poly.is_zero()) return {true, false, 0};
  if (cap < 1) throw std::invalid_argument("order probe cap must be >= 1");
  const int limit = std::min(cap, poly.degree() + 1);
  // Grlex enumeration is degree-ascending, so the first hit has minimal |i|.
  for (const auto& i : monomials_up_to(poly.nvars(), limit - 1))
    if (hasse_derivative(poly, i).evaluate(x) != 0) return {false, false, degree(i)};
  if (limit < poly.degree() + 1) return {false, true, cap};
  // Unreachable for nonzero polynomials: the derivative by a maximal-degree
  // exponent is a nonzero constant.
  throw std::logic_error("vanishing order search exhausted");
}

bool vanishes_to_order(const Polynomial& poly, const Point& x, int ell) {
  if (poly.is_zero()) return true;
  for (const auto& i : monomials_up_to(poly.nvars(), ell - 1))
    if (hasse_derivative(poly, i).evaluate(x) != 0) return false;
  return true;
}

}  // namespace fqc
