#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gauss/group.hpp"

namespace gauss {

namespace detail {

inline void check_order(std::uint64_t order, const Limits& limits) {
  if (order > limits.max_order) {
    throw Error(ErrorKind::OrderOverflow,
                "order " + std::to_string(order) + " exceeds maximum " + std::to_string(limits.max_order));
  }
}

inline std::uint64_t checked_product(std::uint64_t a, std::uint64_t b, const Limits& limits) {
  if (b != 0 && a > limits.max_order / b) {
    throw Error(ErrorKind::OrderOverflow, "order exceeds maximum " + std::to_string(limits.max_order));
  }
  return a * b;
}

inline std::uint64_t pow2_exponent(std::uint64_t order, const char* family) {
  if (order == 0 || (order & (order - 1)) != 0) {
    throw Error(ErrorKind::InvalidParameter, std::string(family) + " order must be a power of 2");
  }
  return nt::log_p(order, 2);
}

/// Metacyclic group on normal forms x^i y^j (0 <= i < m, 0 <= j < k), index j*m + i,
/// with x^m = 1, y^k = x^s and y^-1 x y = x^t. Requires t^k = 1 and s*t = s (mod m).
inline Group metacyclic(std::uint64_t m, std::uint64_t k, std::uint64_t s, std::uint64_t t, GroupSpec spec) {
  const std::uint64_t n = m * k;
  // y x^c = x^{c u} y with u = t^-1 (mod m)
  std::uint64_t u = 1;
  if (m > 1) {
    u = 0;
    for (std::uint64_t c = 1; c < m; ++c) {
      if (t % m * c % m == 1) {
        u = c;
        break;
      }
    }
  }
  std::vector<std::uint64_t> upow(k, 1 % m);
  for (std::uint64_t b = 1; b < k; ++b) upow[b] = upow[b - 1] * u % m;

  std::vector<Element> table(n * n);
  for (std::uint64_t b = 0; b < k; ++b) {
    for (std::uint64_t a = 0; a < m; ++a) {
      const std::uint64_t row = b * m + a;
      for (std::uint64_t d = 0; d < k; ++d) {
        for (std::uint64_t c = 0; c < m; ++c) {
          std::uint64_t i = (a + c * upow[b]) % m;
          std::uint64_t j = b + d;
          if (j >= k) {
            j -= k;
            i = (i + s) % m;
          }
          table[row * n + d * m + c] = static_cast<Element>(j * m + i);
        }
      }
    }
  }
  return Group::from_table(n, std::move(table), Group::Check::Trusted, std::move(spec));
}

inline Group product_of_two(const Group& a, const Group& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x1 = 0; x1 < na; ++x1) {
    for (std::size_t x2 = 0; x2 < nb; ++x2) {
      const std::size_t row = x1 * nb + x2;
      for (std::size_t y1 = 0; y1 < na; ++y1) {
        const std::size_t p1 = a.mul(static_cast<Element>(x1), static_cast<Element>(y1));
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          const std::size_t p2 = b.mul(static_cast<Element>(x2), static_cast<Element>(y2));
          table[row * n + y1 * nb + y2] = static_cast<Element>(p1 * nb + p2);
        }
      }
    }
  }
  return Group::from_table(n, std::move(table), Group::Check::Trusted);
}

inline Group with_spec(Group g, GroupSpec spec) {
  std::vector<Element> table(g.table().begin(), g.table().end());
  return Group::from_table(g.order(), std::move(table), Group::Check::Trusted, std::move(spec));
}

}  // namespace detail

/// Cartesian product on lexicographically ordered tuples (first factor most
/// significant), multiplied componentwise. The all-zero tuple is index 0.
inline Group direct_product(const std::vector<Group>& factors, const Limits& limits = {}) {
  if (factors.empty()) throw Error(ErrorKind::InvalidParameter, "direct_product needs at least one factor");
  std::uint64_t order = 1;
  for (const auto& f : factors) order = detail::checked_product(order, f.order(), limits);
  Group acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = detail::product_of_two(acc, factors[i]);
  return acc;
}

inline Group construct(const GroupSpec& spec, const Limits& limits = {});

namespace detail {

inline Group build(const Cyclic& c, const GroupSpec& spec, const Limits& limits) {
  if (c.n < 1) throw Error(ErrorKind::InvalidParameter, "cyclic order must be >= 1");
  check_order(c.n, limits);
  const std::size_t n = c.n;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return Group::from_table(n, std::move(table), Group::Check::Trusted, spec);
}

inline Group build(const AbelianOfType& t, const GroupSpec& spec, const Limits& limits) {
  std::uint64_t order = 1;
  for (auto q : t.parts) {
    if (!nt::as_prime_power(q)) {
      throw Error(ErrorKind::InvalidParameter, "abelian part " + std::to_string(q) + " is not a prime power > 1");
    }
    order = checked_product(order, q, limits);
  }
  if (t.parts.empty()) return build(Cyclic{1}, spec, limits);
  std::vector<Group> cyclic;
  for (auto q : t.parts) cyclic.push_back(construct(GroupSpec{Cyclic{q}}, limits));
  return with_spec(direct_product(cyclic, limits), spec);
}

inline Group build(const Dihedral& d, const GroupSpec& spec, const Limits& limits) {
  if (d.n < 2) throw Error(ErrorKind::InvalidParameter, "dihedral needs n >= 2");
  checked_product(2, d.n, limits);
  return metacyclic(d.n, 2, 0, d.n - 1, spec);
}

inline Group build(const GeneralizedQuaternion& q, const GroupSpec& spec, const Limits& limits) {
  const auto e = pow2_exponent(q.order, "quaternion");
  if (e < 3) throw Error(ErrorKind::InvalidParameter, "generalized quaternion needs order 2^n with n >= 3");
  check_order(q.order, limits);
  const std::uint64_t m = q.order / 2;
  // y^2 = x^{m/2}, y^-1 x y = x^-1
  return metacyclic(m, 2, m / 2, m - 1, spec);
}

inline Group build(const Semidihedral& sd, const GroupSpec& spec, const Limits& limits) {
  const auto e = pow2_exponent(sd.order, "semidihedral");
  if (e < 4) throw Error(ErrorKind::InvalidParameter, "semidihedral needs order 2^n with n >= 4");
  check_order(sd.order, limits);
  const std::uint64_t m = sd.order / 2;
  return metacyclic(m, 2, 0, m / 2 - 1, spec);
}

inline Group build(const ModularMaximalCyclic& mm, const GroupSpec& spec, const Limits& limits) {
  if (!nt::is_prime(mm.p)) throw Error(ErrorKind::InvalidParameter, "modular group needs prime p");
  if (mm.n < 3) throw Error(ErrorKind::InvalidParameter, "modular group needs n >= 3");
  if (mm.p == 2 && mm.n < 4) {
    throw Error(ErrorKind::InvalidParameter, "M(2^3) coincides with D_8; modular group needs n >= 4 for p = 2");
  }
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < mm.n; ++i) order = checked_product(order, mm.p, limits);
  const std::uint64_t m = order / mm.p;
  return metacyclic(m, mm.p, 0, m / mm.p + 1, spec);
}

inline Group build(const HeisenbergP3& h, const GroupSpec& spec, const Limits& limits) {
  if (h.p == 2 || !nt::is_prime(h.p)) throw Error(ErrorKind::InvalidParameter, "Heisenberg group needs an odd prime");
  const std::uint64_t p = h.p;
  const std::uint64_t n = checked_product(checked_product(p, p, limits), p, limits);
  // (a, b, c) at index a + p b + p^2 c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
  std::vector<Element> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t a = x % p, b = x / p % p, c = x / (p * p);
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
      const std::uint64_t ra = (a + a2) % p;
      const std::uint64_t rb = (b + b2) % p;
      const std::uint64_t rc = (c + c2 + a * b2) % p;
      table[x * n + y] = static_cast<Element>(ra + p * rb + p * p * rc);
    }
  }
  return Group::from_table(n, std::move(table), Group::Check::Trusted, spec);
}

inline Group build(const DirectProduct& dp, const GroupSpec& spec, const Limits& limits) {
  if (dp.factors.empty()) throw Error(ErrorKind::InvalidParameter, "product needs at least one factor");
  std::vector<Group> groups;
  groups.reserve(dp.factors.size());
  for (const auto& f : dp.factors) groups.push_back(construct(f, limits));
  return with_spec(direct_product(groups, limits), spec);
}

inline Group build(const SemidirectCyclic& sd, const GroupSpec& spec, const Limits& limits) {
  if (!nt::is_prime(sd.p)) throw Error(ErrorKind::InvalidParameter, "sdp needs prime p");
  if (sd.n < 1 || std::gcd(sd.n, sd.p) != 1) throw Error(ErrorKind::InvalidParameter, "sdp needs gcd(n, p) = 1");
  if (nt::powmod(sd.t, sd.p, sd.n) != 1 % sd.n) throw Error(ErrorKind::InvalidParameter, "sdp needs t^p = 1 (mod n)");
  if (sd.t % sd.n == 1 % sd.n) throw Error(ErrorKind::InvalidParameter, "sdp needs t != 1 (mod n)");
  checked_product(sd.n, sd.p, limits);
  return metacyclic(sd.n, sd.p, 0, sd.t % sd.n, spec);
}

}  // namespace detail

/// Builds the group a spec describes. Elements are indexed by the canonical
/// normal form of each family (x^i y^j at j*|x| + i for the metacyclic ones).
inline Group construct(const GroupSpec& spec, const Limits& limits) {
  return std::visit([&](const auto& v) { return detail::build(v, spec, limits); }, spec.variant);
}

}  // namespace gauss
