#include "fqc/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace fqc {

int degree(const Exponent& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

std::strong_ordering grlex_compare(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("grlex_compare: mixed arities");
  const int da = degree(a), db = degree(b);
  if (da != db) return da <=> db;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) return a[j] <=> b[j];
  return std::strong_ordering::equal;
}

namespace {

// Emits exponents of total degree exactly s with caps, in ascending grlex
// order within the degree (first coordinate ascending, then recursively).
void emit_degree(int n, int s, const std::vector<int>* box, Exponent& cur, int pos,
                 std::vector<Exponent>& out) {
  if (pos == n - 1) {
    if (box && s > (*box)[pos]) return;
    cur[pos] = s;
    out.push_back(cur);
    return;
  }
  const int hi = box ? std::min(s, (*box)[pos]) : s;
  for (int v = 0; v <= hi; ++v) {
    cur[pos] = v;
    emit_degree(n, s - v, box, cur, pos + 1, out);
  }
}

std::vector<Exponent> enumerate(int n, int d, const std::vector<int>* box) {
  if (n < 1) throw std::invalid_argument("monomial enumeration needs n >= 1");
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent cur(n, 0);
  for (int s = 0; s <= d; ++s) emit_degree(n, s, box, cur, 0, out);
  return out;
}

}  // namespace

std::vector<Exponent> monomials_up_to(int n, int d) { return enumerate(n, d, nullptr); }

std::vector<Exponent> monomials_of_degree(int n, int s) {
  if (n < 1) throw std::invalid_argument("monomial enumeration needs n >= 1");
  std::vector<Exponent> out;
  if (s < 0) return out;
  Exponent cur(n, 0);
  emit_degree(n, s, nullptr, cur, 0, out);
  return out;
}

std::vector<Exponent> monomials_up_to_boxed(int n, int d, const std::vector<int>& box) {
  if (static_cast<int>(box.size()) != n)
    throw std::invalid_argument("box has wrong arity");
  return enumerate(n, d, &box);
}

long long count_monomials_up_to(int n, int d) {
  if (d < 0) return 0;
  return binomial(static_cast<long long>(d) + n, n);
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
      throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<long long>(acc);
}

std::uint32_t binomial_mod_p(long long a, long long b, std::uint32_t p) {
  if (b < 0 || a < 0 || b > a) return 0;
  std::uint64_t result = 1;
  while (a > 0 || b > 0) {
    const long long ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    result = result * static_cast<std::uint64_t>(binomial(ad, bd) % p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace fqc
