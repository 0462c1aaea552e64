#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gauss/element_set.hpp"
#include "gauss/error.hpp"
#include "gauss/number_theory.hpp"

namespace gauss {

/// Size guards for the n x n table and for lattice enumeration.
struct Limits {
  std::size_t max_order = 20000;
  std::size_t max_subgroups = 200000;
};

struct GroupSpec;

struct Cyclic {
  std::uint64_t n;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};
/// Direct product of cyclic groups of the listed prime-power orders.
struct AbelianOfType {
  std::vector<std::uint64_t> parts;
  friend bool operator==(const AbelianOfType&, const AbelianOfType&) = default;
};
/// D_{2n}: order 2n.
struct Dihedral {
  std::uint64_t n;
  friend bool operator==(const Dihedral&, const Dihedral&) = default;
};
/// Q_{2^k}; the field is the group order 2^k.
struct GeneralizedQuaternion {
  std::uint64_t order;
  friend bool operator==(const GeneralizedQuaternion&, const GeneralizedQuaternion&) = default;
};
/// Semidihedral (quasi-dihedral) S_{2^k}; the field is the group order.
struct Semidihedral {
  std::uint64_t order;
  friend bool operator==(const Semidihedral&, const Semidihedral&) = default;
};
/// M(p^n) = <x, y | x^{p^{n-1}} = y^p = 1, y^-1 x y = x^{p^{n-2}+1}>.
struct ModularMaximalCyclic {
  std::uint64_t p;
  std::uint64_t n;
  friend bool operator==(const ModularMaximalCyclic&, const ModularMaximalCyclic&) = default;
};
/// Upper unitriangular 3x3 matrices over Z_p, p odd.
struct HeisenbergP3 {
  std::uint64_t p;
  friend bool operator==(const HeisenbergP3&, const HeisenbergP3&) = default;
};
struct DirectProduct {
  std::vector<GroupSpec> factors;
  friend bool operator==(const DirectProduct&, const DirectProduct&);
};
/// <x, y | x^n = y^p = 1, y^-1 x y = x^t>.
struct SemidirectCyclic {
  std::uint64_t n;
  std::uint64_t p;
  std::uint64_t t;
  friend bool operator==(const SemidirectCyclic&, const SemidirectCyclic&) = default;
};

struct GroupSpec {
  std::variant<Cyclic, AbelianOfType, Dihedral, GeneralizedQuaternion, Semidihedral,
               ModularMaximalCyclic, HeisenbergP3, DirectProduct, SemidirectCyclic>
      variant;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

inline bool operator==(const DirectProduct& a, const DirectProduct& b) { return a.factors == b.factors; }

/// Multiset of prime-power orders of the cyclic factors, sorted by (prime, power).
struct AbelianType {
  std::vector<std::uint64_t> parts;

  std::uint64_t order() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{1}, std::multiplies<>{});
  }

  /// Number of parts belonging to prime p.
  std::size_t rank(std::uint64_t p) const {
    return static_cast<std::size_t>(
        std::count_if(parts.begin(), parts.end(), [p](std::uint64_t q) { return q % p == 0; }));
  }

  /// Largest per-prime rank; 0 for the trivial group, 1 exactly when cyclic.
  std::size_t max_rank() const {
    std::map<std::uint64_t, std::size_t> per_prime;
    for (auto q : parts) ++per_prime[nt::factorize(q).front().prime];
    std::size_t r = 0;
    for (const auto& [p, c] : per_prime) r = std::max(r, c);
    return r;
  }

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

/// Throws NotAGroupError / IdentityNotZero unless `table` (row-major n x n) is
/// the Cayley table of a group with identity at index 0. Associativity is the
/// O(n^3) brute-force check.
inline void validate_cayley_table(std::size_t n, std::span<const Element> table) {
  if (n == 0) throw Error(ErrorKind::InvalidParameter, "empty table");
  if (table.size() != n * n) throw Error(ErrorKind::InvalidParameter, "table size is not n*n");
  for (std::size_t a = 0; a < n * n; ++a) {
    if (table[a] >= n) throw Error(ErrorKind::InvalidParameter, "table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a) {
      throw Error(ErrorKind::IdentityNotZero,
                  "index 0 is not the identity (row/column " + std::to_string(a) + ")");
    }
  }
  std::vector<std::size_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = table[r * n + c];
      if (seen[v] != n) throw NotAGroupError("latin-square row", {r, seen[v], c});
      seen[v] = c;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto v = table[r * n + c];
      if (seen[v] != n) throw NotAGroupError("latin-square column", {c, seen[v], r});
      seen[v] = r;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
          throw NotAGroupError("associativity", {a, b, c});
        }
      }
    }
  }
}

/// A finite group given by its Cayley table; index 0 is the identity.
/// Immutable once built. Element orders, inverses and the exponent are cached.
class Group {
 public:
  enum class Check { Full, Trusted };

  /// `Check::Trusted` skips validation and is meant for the constructors in
  /// construct.hpp, whose output is a group by construction.
  static Group from_table(std::size_t n, std::vector<Element> table, Check check = Check::Full,
                          std::optional<GroupSpec> spec = std::nullopt) {
    if (check == Check::Full) validate_cayley_table(n, table);
    return Group(n, std::move(table), std::move(spec));
  }

  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  /// Unchecked cached order; see element_order() for the checked form.
  std::uint64_t order_of(Element a) const noexcept { return orders_[a]; }
  std::span<const std::uint64_t> element_orders() const noexcept { return orders_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  std::span<const Element> table() const noexcept { return table_; }
  const std::optional<GroupSpec>& spec() const noexcept { return spec_; }

  Element power(Element a, std::uint64_t k) const noexcept {
    Element r = 0;
    for (std::uint64_t i = 0; i < k % orders_[a]; ++i) r = mul(r, a);
    return r;
  }

  ElementSet all_elements() const {
    ElementSet s(order_);
    for (std::size_t a = 0; a < order_; ++a) s.insert(static_cast<Element>(a));
    return s;
  }

 private:
  Group(std::size_t n, std::vector<Element> table, std::optional<GroupSpec> spec)
      : order_(n), table_(std::move(table)), inverse_(n), orders_(n, 0), spec_(std::move(spec)) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a * n + b] == 0) {
          inverse_[a] = static_cast<Element>(b);
          break;
        }
      }
    }
    // Walk <a> once per unvisited a and assign o(a^j) = k / gcd(j, k) to every power.
    std::vector<Element> powers;
    for (std::size_t a = 0; a < n; ++a) {
      if (orders_[a] != 0) continue;
      powers.clear();
      Element x = static_cast<Element>(a);
      powers.push_back(0);
      while (x != 0) {
        powers.push_back(x);
        x = mul(x, static_cast<Element>(a));
      }
      const std::uint64_t k = powers.size();
      for (std::uint64_t j = 0; j < k; ++j) {
        auto& o = orders_[powers[j]];
        if (o == 0) o = k / std::gcd(j, k);
      }
    }
    exponent_ = 1;
    for (auto o : orders_) exponent_ = std::lcm(exponent_, o);
  }

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  std::optional<GroupSpec> spec_;
};

inline std::uint64_t element_order(const Group& g, std::size_t a) {
  if (a >= g.order()) {
    throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(a) + " not below group order " +
                                                std::to_string(g.order()));
  }
  return g.order_of(static_cast<Element>(a));
}

inline std::uint64_t exponent(const Group& g) { return g.exponent(); }

inline bool is_cyclic(const Group& g) {
  const auto orders = g.element_orders();
  return std::any_of(orders.begin(), orders.end(), [&](std::uint64_t o) { return o == g.order(); });
}

inline bool is_abelian(const Group& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.mul(static_cast<Element>(a), static_cast<Element>(b)) !=
          g.mul(static_cast<Element>(b), static_cast<Element>(a))) {
        return false;
      }
    }
  }
  return true;
}

/// Primary decomposition of an abelian group recovered from its element-order
/// multiset. For each prime p, c_k = #{a : o(a) | p^k} = p^{sum_i min(alpha_i, k)},
/// so successive differences of log_p c_k count the parts with alpha_i >= k.
inline AbelianType abelian_type_from_orders(std::span<const std::uint64_t> orders, std::uint64_t group_order) {
  AbelianType type;
  for (const auto& [p, top] : nt::factorize(group_order)) {
    std::vector<unsigned> at_least;  // at_least[k-1] = #parts with alpha >= k
    unsigned prev = 0;
    for (unsigned k = 1; k <= top; ++k) {
      const std::uint64_t pk = nt::ipow(p, k);
      const auto count = static_cast<std::uint64_t>(
          std::count_if(orders.begin(), orders.end(), [&](std::uint64_t o) { return pk % o == 0; }));
      const unsigned e = nt::log_p(count, p);
      if (e == prev) break;
      at_least.push_back(e - prev);
      prev = e;
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const unsigned next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (unsigned i = 0; i < at_least[k] - next; ++i) type.parts.push_back(nt::ipow(p, static_cast<unsigned>(k + 1)));
    }
  }
  std::sort(type.parts.begin(), type.parts.end(), [](std::uint64_t a, std::uint64_t b) {
    const auto pa = nt::factorize(a).front().prime;
    const auto pb = nt::factorize(b).front().prime;
    return pa != pb ? pa < pb : a < b;
  });
  return type;
}

inline AbelianType abelian_invariants(const Group& g) {
  if (!is_abelian(g)) throw Error(ErrorKind::NotAbelian, "abelian_invariants needs an abelian group");
  return abelian_type_from_orders(g.element_orders(), g.order());
}

}  // namespace gauss
