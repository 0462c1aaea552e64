#pragma once

#include <cstdint>
#include <numeric>
#include <optional>

#include <boost/rational.hpp>

#include "gauss/lattice.hpp"

namespace gauss {

/// Number of elements whose order equals the exponent.
inline std::uint64_t phi_group(const Group& g) {
  const auto orders = g.element_orders();
  return static_cast<std::uint64_t>(
      std::count(orders.begin(), orders.end(), g.exponent()));
}

/// phi of a subgroup, evaluated on the members with orders inherited from the parent.
inline std::uint64_t phi_of(const Group& g, const Subgroup& h) {
  std::uint64_t exp = 1;
  h.members.for_each([&](Element e) { exp = std::lcm(exp, g.order_of(e)); });
  std::uint64_t count = 0;
  h.members.for_each([&](Element e) { count += g.order_of(e) == exp ? 1 : 0; });
  return count;
}

/// |G| (1 - p^-(r-s+1)) for an abelian p-group of the given type, where r-s+1
/// is the number of parts attaining the largest exponent.
inline std::uint64_t phi_abelian_p_closed_form(const AbelianType& type) {
  if (type.parts.empty()) throw Error(ErrorKind::InvalidParameter, "type has no parts");
  const auto first = nt::as_prime_power(type.parts.front());
  if (!first) throw Error(ErrorKind::InvalidParameter, "parts must be prime powers");
  const std::uint64_t p = first->prime;
  std::uint64_t largest = 0;
  for (auto q : type.parts) {
    const auto pp = nt::as_prime_power(q);
    if (!pp) throw Error(ErrorKind::InvalidParameter, "parts must be prime powers");
    if (pp->prime != p) throw Error(ErrorKind::MixedPrimes, "type mixes primes " + std::to_string(p) + " and " + std::to_string(pp->prime));
    largest = std::max(largest, q);
  }
  const auto top_count = static_cast<unsigned>(std::count(type.parts.begin(), type.parts.end(), largest));
  const std::uint64_t order = type.order();
  return order - order / nt::ipow(p, top_count);
}

/// phi(D_{2n}): 1 for n = 1, 3 for n = 2 (Klein four-group), 0 for odd n >= 3,
/// and the classical phi(n) for even n >= 4.
inline std::uint64_t phi_dihedral_closed_form(std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "dihedral closed form needs n >= 1");
  if (n == 1) return 1;
  if (n == 2) return 3;
  if (n % 2 == 1) return 0;
  return nt::totient(n);
}

/// Sum of phi(H) over H in the lattice of G contained in `within`.
inline std::uint64_t s_value_within(const Group& g, const Lattice& l, const Subgroup& within) {
  std::uint64_t s = 0;
  for (const auto& h : l.subgroups()) {
    if (h.order <= within.order && within.order % h.order == 0 && h.is_subgroup_of(within)) s += phi_of(g, h);
  }
  return s;
}

/// S(G) = sum of phi(H) over every subgroup H.
inline std::uint64_t s_value(const Group& g, const Lattice& l) {
  std::uint64_t s = 0;
  for (const auto& h : l.subgroups()) s += phi_of(g, h);
  return s;
}

/// Sum of the classical phi(|C|) over cyclic subgroups C. Every element
/// generates exactly one of them, so this always equals |G|.
inline std::uint64_t cyclic_sum(const Group& g) {
  std::uint64_t s = 0;
  for (const auto& c : cyclic_subgroups(g)) s += nt::totient(c.order);
  return s;
}

struct GaussSummary {
  std::uint64_t group_order = 0;
  std::uint64_t phi = 0;
  std::uint64_t s_value = 0;
  std::uint64_t cyclic_sum = 0;
  bool in_class_c = false;
  std::uint64_t subgroup_count = 0;

  friend bool operator==(const GaussSummary&, const GaussSummary&) = default;
};

inline bool is_in_class_c(const GaussSummary& summary) { return summary.s_value == summary.group_order; }

/// S(D_{2n}): 2n for odd n, otherwise 3n + (kn/2) prod (alpha_i + 1 - alpha_i/p_i)
/// with n = 2^k m and m = prod p_i^alpha_i. Evaluated in exact rationals.
inline std::uint64_t s_dihedral_closed_form(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "dihedral S closed form needs n >= 2");
  using Q = boost::rational<std::int64_t>;
  const auto k = static_cast<std::int64_t>(nt::log_p(nt::p_part(n, 2), 2));
  if (k == 0) return 2 * n;
  const std::uint64_t m = n / nt::p_part(n, 2);
  Q product(1);
  for (const auto& [p, alpha] : nt::factorize(m)) {
    const auto a = static_cast<std::int64_t>(alpha);
    product *= Q(a + 1) - Q(a, static_cast<std::int64_t>(p));
  }
  const auto sn = static_cast<std::int64_t>(n);
  const Q s = Q(3 * sn) + Q(k * sn, 2) * product;
  if (s.denominator() != 1) throw Error(ErrorKind::InvalidParameter, "non-integral dihedral closed form");
  return static_cast<std::uint64_t>(s.numerator());
}

enum class TwoGroupFamily { Dihedral, Quaternion, Semidihedral };

/// Closed forms for the 2-groups of order 2^n with a cyclic maximal subgroup:
/// S(D) = 2^{n+1} + (n-3) 2^{n-2}, S(Q) = (n+4) 2^{n-2}, S(SD) = (2n+9) 2^{n-3}.
/// D and Q accept n = 3, where both forms still agree with enumeration.
inline std::uint64_t s_two_group_closed_forms(TwoGroupFamily family, unsigned n) {
  switch (family) {
    case TwoGroupFamily::Dihedral:
      if (n < 3) throw Error(ErrorKind::InvalidParameter, "dihedral 2-group form needs n >= 3");
      return nt::ipow(2, n + 1) + (n - 3) * nt::ipow(2, n - 2);
    case TwoGroupFamily::Quaternion:
      if (n < 3) throw Error(ErrorKind::InvalidParameter, "quaternion form needs n >= 3");
      return (n + 4) * nt::ipow(2, n - 2);
    case TwoGroupFamily::Semidihedral:
      if (n < 4) throw Error(ErrorKind::InvalidParameter, "semidihedral form needs n >= 4");
      return (2 * n + 9) * nt::ipow(2, n - 3);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

/// n + n_p (p - 1): S(N) plus phi of each prime-order complement.
inline std::uint64_t s_semidirect_formula(std::uint64_t n, std::uint64_t p, std::uint64_t complement_count) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::InvalidParameter, "p must be prime");
  if (n < 1 || std::gcd(n, p) != 1) throw Error(ErrorKind::InvalidParameter, "needs gcd(n, p) = 1");
  return n + complement_count * (p - 1);
}

struct SemidirectWitness {
  Subgroup normal;      // cyclic normal Hall subgroup N
  Subgroup complement;  // a complement H of prime order
  std::uint64_t prime;  // |H|
};

/// Looks for a cyclic normal Hall subgroup N of prime index p whose complement
/// H acts fixed-point-freely (no 1 != x in N commutes with a generator of H).
/// Complements of a normal Hall subgroup are conjugate, so testing one suffices.
inline std::optional<SemidirectWitness> theorem8_applicable(const Group& g, const Lattice& l) {
  if (is_abelian(g)) return std::nullopt;
  const std::uint64_t n = g.order();
  for (const auto& normal : l.subgroups()) {
    if (normal.order <= 1 || normal.order == n) continue;
    const std::uint64_t p = n / normal.order;
    if (!nt::is_prime(p) || normal.order % p == 0) continue;
    if (!is_cyclic_subgroup(g, normal) || !is_normal(g, normal)) continue;
    const auto it = std::find_if(l.subgroups().begin(), l.subgroups().end(),
                                 [&](const Subgroup& s) { return s.order == p; });
    if (it == l.subgroups().end()) continue;
    Element h = 0;
    it->members.for_each([&](Element e) { h = h == 0 ? e : h; });
    bool fixed_point_free = true;
    normal.members.for_each([&](Element x) {
      if (x != 0 && g.mul(h, x) == g.mul(x, h)) fixed_point_free = false;
    });
    if (fixed_point_free) return SemidirectWitness{normal, *it, p};
  }
  return std::nullopt;
}

}  // namespace gauss
