#include "fqc/staircase.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fqc {

bool Staircase::contains(const Exponent& a) const {
  return std::binary_search(members.begin(), members.end(), a, GrlexLess{});
}

Staircase make_staircase(int n, std::vector<Exponent> members) {
  if (n < 1) throw std::invalid_argument("staircase needs n >= 1");
  for (const auto& a : members) {
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("staircase member has wrong arity");
    for (int v : a)
      if (v < 0) throw std::invalid_argument("staircase member has a negative entry");
  }
  std::sort(members.begin(), members.end(), GrlexLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Staircase{n, std::move(members)};
}

Staircase box_staircase(std::uint32_t q, int n, long long cap) {
  if (q < 2 || n < 1) throw std::invalid_argument("box staircase needs q >= 2, n >= 1");
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > cap)
      throw CapExceededError("box staircase of size q^n exceeds cap " + std::to_string(cap));
  }
  std::vector<int> box(n, static_cast<int>(q) - 1);
  return Staircase{n, monomials_up_to_boxed(n, n * (static_cast<int>(q) - 1), box)};
}

Staircase multiplicity_staircase(std::uint32_t q, int n, int m, long long cap) {
  if (q < 2 || n < 1 || m < 1)
    throw std::invalid_argument("multiplicity staircase needs q >= 2, n >= 1, m >= 1");
  long long total = binomial(m + n - 1, n);
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > cap)
      throw CapExceededError("multiplicity staircase size exceeds cap " + std::to_string(cap));
  }
  // a = q*c + r with r in the box and |c| <= m-1.
  const auto carries = monomials_up_to(n, m - 1);
  std::vector<int> box(n, static_cast<int>(q) - 1);
  const auto rems = monomials_up_to_boxed(n, n * (static_cast<int>(q) - 1), box);
  std::vector<Exponent> members;
  members.reserve(static_cast<std::size_t>(total));
  for (const auto& c : carries)
    for (const auto& r : rems) {
      Exponent a(n);
      for (int i = 0; i < n; ++i) a[i] = static_cast<int>(q) * c[i] + r[i];
      members.push_back(std::move(a));
    }
  std::sort(members.begin(), members.end(), GrlexLess{});
  return Staircase{n, std::move(members)};
}

long long staircase_count_le(const Staircase& s, int d) {
  if (d < 0) throw std::invalid_argument("staircase count needs d >= 0");
  long long count = 0;
  for (const auto& a : s.members) {
    if (degree(a) > d) continue;
    ++count;
  }
  return count;
}

long long box_count_le(std::uint32_t q, int n, int d) {
  if (q < 2 || n < 1) throw std::invalid_argument("box count needs q >= 2, n >= 1");
  if (d < 0) return 0;
  // The count is constant past total degree n(q-1); clamping keeps the
  // binomials small for arbitrarily large d.
  d = static_cast<int>(std::min<long long>(d, static_cast<long long>(n) * (q - 1)));
  // Inclusion-exclusion over coordinates pushed past q-1.
  long long total = 0;
  for (int j = 0; j <= n; ++j) {
    const long long rest = static_cast<long long>(d) - static_cast<long long>(j) * q;
    if (rest < 0) break;
    const long long term = binomial(n, j) * binomial(rest + n, n);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

long long multiplicity_count_le(std::uint32_t q, int n, int m, int d) {
  if (m < 1) throw std::invalid_argument("multiplicity count needs m >= 1");
  if (q < 2 || n < 1)
    throw std::invalid_argument("multiplicity count needs q >= 2, n >= 1");
  if (d < 0) return 0;
  // Constant past n(q-1) + (m-1)q, where every carry pattern is exhausted.
  const long long stab =
      static_cast<long long>(n) * (q - 1) + static_cast<long long>(m - 1) * q;
  d = static_cast<int>(std::min<long long>(d, stab));
  // Split a = q*c + r; carries of weight s contribute a box count at d - q*s.
  long long total = 0;
  for (int s = 0; s <= m - 1; ++s) {
    const long long rest = static_cast<long long>(d) - static_cast<long long>(s) * q;
    if (rest < 0) break;
    total += binomial(s + n - 1, n - 1) * box_count_le(q, n, static_cast<int>(rest));
  }
  return total;
}

bool is_lower_set(const Staircase& s) {
  for (const auto& a : s.members) {
    for (int i = 0; i < s.n; ++i) {
      if (a[i] == 0) continue;
      Exponent b = a;
      --b[i];
      if (!s.contains(b)) return false;
    }
  }
  return true;
}

bool is_upper_set_in_box(const Staircase& s, const std::vector<int>& box) {
  if (static_cast<int>(box.size()) != s.n) throw std::invalid_argument("box has wrong arity");
  for (const auto& a : s.members) {
    for (int i = 0; i < s.n; ++i) {
      if (a[i] >= box[i]) continue;
      Exponent b = a;
      ++b[i];
      if (!s.contains(b)) return false;
    }
  }
  return true;
}

std::vector<Exponent> s_plus(const std::vector<Exponent>& s) {
  std::set<Exponent, GrlexLess> out;
  for (const auto& a : s) {
    out.insert(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      Exponent b = a;
      ++b[i];
      out.insert(b);
    }
  }
  return {out.begin(), out.end()};
}

SPlusGrowthReport check_splus_growth(const std::vector<Exponent>& s, int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("splus growth needs n >= 1, d >= 0");
  for (const auto& a : s)
    if (static_cast<int>(a.size()) != n)
      throw std::invalid_argument("splus growth: member has wrong arity");
  SPlusGrowthReport r;
  for (const auto& a : make_staircase(n, s).members)
    if (degree(a) <= d) ++r.s_count;
  for (const auto& a : s_plus(s))
    if (degree(a) <= d + 1) ++r.splus_count;
  r.lhs = static_cast<long long>(d + 1) * r.splus_count;
  r.rhs = static_cast<long long>(n + d + 1) * r.s_count;
  r.holds = r.lhs >= r.rhs;
  return r;
}

}  // namespace fqc
