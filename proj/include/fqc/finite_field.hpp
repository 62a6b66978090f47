#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fqc {

/// Arithmetic in GF(p^e), q = p^e <= 2^16.
///
/// Elements are encoded as integers in [0, q).  The encoding is the base-p
/// digit expansion: the element with digits (c0, c1, ..., c_{e-1}) is the
/// residue class of c0 + c1*x + ... + c_{e-1}*x^{e-1} modulo the field
/// modulus.  For prime fields (e = 1) this is plain arithmetic mod p.
///
/// The modulus is a monic irreducible polynomial of degree e over GF(p),
/// stored as a little-endian coefficient vector of length e+1 (empty for
/// e = 1).  When no modulus is supplied, the one with the smallest base-p
/// encoding of its non-leading coefficients is selected; the search is
/// exhaustive, as is the irreducibility test (trial division by every monic
/// polynomial of degree at most e/2).
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  FiniteField(std::uint32_t p, std::uint32_t e);
  FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Length e+1 and monic for extension fields, empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool is_element(std::uint32_t a) const { return a < q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Throws std::domain_error on a = 0.
  std::uint32_t inv(std::uint32_t a) const;
  /// Throws std::domain_error on b = 0.
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

  /// Image of an integer under Z -> GF(p) -> GF(p^e); handles negatives.
  std::uint32_t from_int(long long v) const;

  /// Base-p digits of an element, little-endian, length e.
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& ds) const;

  /// All q elements in encoding order 0, 1, ..., q-1.
  std::vector<std::uint32_t> elements() const;

  std::string description() const;  // "GF(9)", "GF(2^4)" style

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }
  bool operator!=(const FiniteField& o) const { return !(*this == o); }

 private:
  void init_tables();
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  // Lookup tables are built once at construction; kept only for small q.
  std::vector<std::uint32_t> add_tab_;  // q*q when q <= 256
  std::vector<std::uint32_t> mul_tab_;  // q*q when q <= 256
  std::vector<std::uint32_t> inv_tab_;  // q when q <= 4096
};

using FieldPtr = std::shared_ptr<const FiniteField>;

FieldPtr make_field(std::uint32_t p, std::uint32_t e = 1);
FieldPtr make_field(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus);

/// Structural equality of the two fields (p, e and modulus).
bool same_field(const FiniteField& a, const FiniteField& b);
/// Throws std::invalid_argument when the fields differ.
void require_same_field(const FiniteField& a, const FiniteField& b, const char* where);

}  // namespace fqc
