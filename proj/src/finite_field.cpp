#include "fqc/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqc {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Dense little-endian polynomials over GF(p), used only for modulus
// validation and selection.
using Poly = std::vector<std::uint32_t>;

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  const int db = poly_deg(b);
  for (int i = poly_deg(a); i >= db; --i) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      std::uint64_t t = a[i - db + j] + (p - b[j]) * c % p;
      a[i - db + j] = static_cast<std::uint32_t>(t % p);
    }
  }
  a.resize(db > 0 ? db : 1, 0);
  return a;
}

bool is_zero_poly(const Poly& a) { return poly_deg(a) < 0; }

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& mod, std::uint32_t p) {
  const int deg = poly_deg(mod);
  if (deg < 1) return false;
  for (int dg = 1; 2 * dg <= deg; ++dg) {
    std::uint64_t count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g(dg + 1, 0);
      std::uint64_t t = k;
      for (int i = 0; i < dg; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[dg] = 1;
      if (is_zero_poly(poly_rem(mod, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e)
    : FiniteField(p, e, std::vector<std::uint32_t>{}) {}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p_));
  if (e_ < 1) throw std::invalid_argument("field extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    q *= p_;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (e_ == 1) {
    if (!modulus_.empty())
      throw std::invalid_argument("modulus is only meaningful for extension fields");
  } else if (modulus_.empty()) {
    // Smallest base-p encoding of the non-leading coefficients wins.
    for (std::uint64_t k = 0;; ++k) {
      if (k >= q_) throw std::logic_error("no irreducible modulus found");
      Poly cand(e_ + 1, 0);
      std::uint64_t t = k;
      for (std::uint32_t i = 0; i < e_; ++i) {
        cand[i] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      cand[e_] = 1;
      if (is_irreducible(cand, p_)) {
        modulus_ = std::move(cand);
        break;
      }
    }
  } else {
    if (modulus_.size() != e_ + 1)
      throw std::invalid_argument("modulus must have length e+1");
    for (auto c : modulus_)
      if (c >= p_) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus_, p_))
      throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p_) + ")");
  }
  init_tables();
}

void FiniteField::init_tables() {
  if (q_ <= 256) {
    add_tab_.resize(std::size_t{q_} * q_);
    mul_tab_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t s;
        if (e_ == 1) {
          s = (a + b) % p_;
        } else {
          std::uint32_t x = a, y = b, out = 0, base = 1;
          for (std::uint32_t i = 0; i < e_; ++i) {
            out += (x % p_ + y % p_) % p_ * base;
            x /= p_;
            y /= p_;
            base *= p_;
          }
          s = out;
        }
        add_tab_[std::size_t{a} * q_ + b] = s;
        mul_tab_[std::size_t{a} * q_ + b] = mul_slow(a, b);
      }
  }
  if (q_ <= 4096) {
    inv_tab_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_tab_[a] = pow(a, q_ - 2);
  }
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_tab_.empty()) return add_tab_[std::size_t{a} * q_ + b];
  if (e_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, base = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += (a % p_ + b % p_) % p_ * base;
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t out = 0, base = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * base;
    a /= p_;
    base *= p_;
  }
  return out;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  std::vector<std::uint32_t> da = digits(a), db = digits(b);
  std::vector<std::uint32_t> conv(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      conv[i + j] = static_cast<std::uint32_t>((conv[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  }
  // Reduce by the monic modulus.
  for (int i = static_cast<int>(conv.size()) - 1; i >= static_cast<int>(e_); --i) {
    const std::uint64_t c = conv[i];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j <= e_; ++j) {
      std::uint64_t t = conv[i - e_ + j] + (p_ - modulus_[j]) * c % p_;
      conv[i - e_ + j] = static_cast<std::uint32_t>(t % p_);
    }
  }
  conv.resize(e_);
  return from_digits(conv);
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_tab_.empty()) return mul_tab_[std::size_t{a} * q_ + b];
  return mul_slow(a, b);
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t result = 1, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in " + description());
  if (!inv_tab_.empty()) return inv_tab_[a];
  return pow(a, q_ - 2);
}

std::uint32_t FiniteField::div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

std::uint32_t FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> FiniteField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> ds(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    ds[i] = a % p_;
    a /= p_;
  }
  return ds;
}

std::uint32_t FiniteField::from_digits(const std::vector<std::uint32_t>& ds) const {
  if (ds.size() != e_) throw std::invalid_argument("digit vector has wrong length");
  std::uint32_t out = 0, base = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (ds[i] >= p_) throw std::invalid_argument("digit out of range");
    out += ds[i] * base;
    base *= p_;
  }
  return out;
}

std::vector<std::uint32_t> FiniteField::elements() const {
  std::vector<std::uint32_t> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
  return out;
}

std::string FiniteField::description() const {
  if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e) {
  return std::make_shared<const FiniteField>(p, e);
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus) {
  return std::make_shared<const FiniteField>(p, e, modulus);
}

bool same_field(const FiniteField& a, const FiniteField& b) { return a == b; }

void require_same_field(const FiniteField& a, const FiniteField& b, const char* where) {
  if (!same_field(a, b))
    throw std::invalid_argument(std::string(where) + ": field mismatch (" + a.description() +
                                " vs " + b.description() + ")");
}

}  // namespace fqc
