#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gauss/group.hpp"

namespace gauss {

/// A subgroup of a parent group, as a membership bitset over the parent's
/// element indices. `generators` is some generating set (possibly empty for
/// the trivial subgroup); it is not canonical.
struct Subgroup {
  ElementSet members;
  std::uint64_t order = 0;
  std::vector<Element> generators;

  bool contains(Element e) const noexcept { return members.contains(e); }
  /// `generators`, or every member when no generating set was recorded.
  std::vector<Element> generating_set() const { return generators.empty() ? members.elements() : generators; }
  bool is_subgroup_of(const Subgroup& other) const noexcept { return members.is_subset_of(other.members); }
};

/// Order ascending, then lexicographic by member list.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return lex_less(a.members, b.members);
}

/// The complete subgroup lattice of a group, in canonical order.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t group_order, std::vector<Subgroup> subgroups)
      : group_order_(group_order), subgroups_(std::move(subgroups)) {
    std::sort(subgroups_.begin(), subgroups_.end(), canonical_less);
  }

  std::size_t group_order() const noexcept { return group_order_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  std::span<const Subgroup> subgroups() const noexcept { return subgroups_; }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const Subgroup& trivial() const { return subgroups_.front(); }
  const Subgroup& whole() const { return subgroups_.back(); }

  /// Position of the subgroup with exactly these members, if present.
  std::optional<std::size_t> find(const ElementSet& members) const {
    Subgroup probe{members, members.size(), {}};
    auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), probe, canonical_less);
    if (it == subgroups_.end() || it->members != members) return std::nullopt;
    return static_cast<std::size_t>(it - subgroups_.begin());
  }

 private:
  std::size_t group_order_ = 0;
  std::vector<Subgroup> subgroups_;
};

/// Smallest subgroup containing `seed`, by worklist closure under right
/// multiplication with the seed elements.
inline Subgroup generated_subgroup(const Group& g, std::span<const Element> seed) {
  for (auto e : seed) {
    if (e >= g.order()) throw Error(ErrorKind::IndexOutOfRange, "seed element " + std::to_string(e) + " out of range");
  }
  std::vector<Element> gens;
  for (auto e : seed) {
    if (e != 0 && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  Subgroup h{ElementSet(g.order()), 0, gens};
  std::vector<Element> work{0};
  h.members.insert(0);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (auto s : gens) {
      const Element x = g.mul(work[i], s);
      if (!h.members.contains(x)) {
        h.members.insert(x);
        work.push_back(x);
      }
    }
  }
  h.order = work.size();
  return h;
}

inline Subgroup generated_subgroup(const Group& g, std::initializer_list<Element> seed) {
  return generated_subgroup(g, std::span<const Element>(seed.begin(), seed.size()));
}

namespace detail {

/// For each element, the least index generating the same cyclic subgroup.
inline std::vector<Element> cyclic_representatives(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Element> rep(n, static_cast<Element>(n));
  std::vector<Element> powers;
  for (std::size_t a = 0; a < n; ++a) {
    if (rep[a] != n) continue;
    powers.clear();
    Element x = 0;
    do {
      powers.push_back(x);
      x = g.mul(x, static_cast<Element>(a));
    } while (x != 0);
    const std::uint64_t k = powers.size();
    Element best = static_cast<Element>(a);
    for (std::uint64_t j = 1; j <= k; ++j) {
      if (std::gcd(j, k) == 1) best = std::min(best, powers[j % k]);
    }
    for (std::uint64_t j = 1; j <= k; ++j) {
      if (std::gcd(j, k) == 1) rep[powers[j % k]] = best;
    }
  }
  return rep;
}

/// <K, g> by coset enumeration: the result is a union of right cosets K r,
/// closed under right multiplication by every generator.
inline Subgroup extend(const Group& g, const Subgroup& k, std::span<const Element> k_elements, Element x) {
  Subgroup h{k.members, k.order, k.generators};
  h.generators.push_back(x);
  std::vector<Element> reps{0};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (auto t : h.generators) {
      const Element y = g.mul(reps[i], t);
      if (h.members.contains(y)) continue;
      for (auto e : k_elements) h.members.insert(g.mul(e, y));
      reps.push_back(y);
    }
  }
  h.order = k.order * reps.size();
  return h;
}

}  // namespace detail

/// Every cyclic subgroup <a>, deduplicated, in canonical order.
inline std::vector<Subgroup> cyclic_subgroups(const Group& g) {
  const auto rep = detail::cyclic_representatives(g);
  std::vector<Subgroup> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (rep[a] != a) continue;
    const Element e = static_cast<Element>(a);
    out.push_back(generated_subgroup(g, std::span<const Element>(&e, 1)));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Complete subgroup lattice. Starting from the trivial subgroup, every
/// discovered K is extended to <K, g> for each cyclic representative g.
/// Every H > 1 equals <K, g> for a maximal K < H and g in H \ K, so this
/// reaches all subgroups. When |<K,g> : K| is prime, K is maximal in <K,g>
/// and every other g' in <K,g> \ K yields the same subgroup, so those are
/// skipped.
inline Lattice all_subgroups(const Group& g, const Limits& limits = {}) {
  const std::size_t n = g.order();
  const auto rep = detail::cyclic_representatives(g);
  std::vector<Element> reps;
  for (std::size_t a = 1; a < n; ++a) {
    if (rep[a] == a) reps.push_back(static_cast<Element>(a));
  }

  std::vector<Subgroup> subs;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  Subgroup trivial{ElementSet(n), 1, {}};
  trivial.members.insert(0);
  seen.emplace(trivial.members, 0);
  subs.push_back(std::move(trivial));

  std::vector<Element> k_elements;
  for (std::size_t qi = 0; qi < subs.size(); ++qi) {
    const Subgroup k = subs[qi];
    if (k.order == n) continue;
    k_elements = k.members.elements();
    ElementSet covered = k.members;
    for (auto x : reps) {
      if (covered.contains(x)) continue;
      Subgroup h = detail::extend(g, k, k_elements, x);
      if (nt::is_prime(h.order / k.order)) covered |= h.members;
      if (seen.contains(h.members)) continue;
      if (subs.size() >= limits.max_subgroups) {
        throw Error(ErrorKind::LatticeOverflow,
                    "more than " + std::to_string(limits.max_subgroups) + " subgroups");
      }
      seen.emplace(h.members, subs.size());
      subs.push_back(std::move(h));
    }
  }
  return Lattice(n, std::move(subs));
}

/// Proper subgroups contained in no other proper subgroup, in canonical order.
inline std::vector<Subgroup> maximal_subgroups(const Lattice& l) {
  std::vector<Subgroup> out;
  const auto subs = l.subgroups();
  if (subs.size() < 2) return out;
  // Any proper subgroup lies in a maximal one of strictly larger order, so a
  // descending sweep only has to test against maxima already found.
  for (std::size_t i = subs.size() - 1; i-- > 0;) {
    const auto& m = subs[i];
    const bool covered =
        std::any_of(out.begin(), out.end(), [&](const Subgroup& big) { return m.order < big.order && m.is_subgroup_of(big); });
    if (!covered) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Intersection of the maximal subgroups; the whole (trivial) group when there are none.
inline Subgroup frattini(const Lattice& l) {
  const auto maxima = maximal_subgroups(l);
  if (maxima.empty()) return l.whole();
  ElementSet meet = maxima.front().members;
  for (const auto& m : maxima) meet &= m.members;
  return l[*l.find(meet)];
}

inline bool is_normal(const Group& g, const Subgroup& h) {
  const auto gens = h.generating_set();
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto x = static_cast<Element>(a);
    for (auto s : gens) {
      if (!h.contains(g.mul(g.mul(x, s), g.inverse(x)))) return false;
    }
  }
  return true;
}

/// Subgroups K with |K||N| = |G| and K n N = 1.
inline std::vector<Subgroup> complements(const Group& g, const Subgroup& normal, const Lattice& l) {
  if (!is_normal(g, normal)) throw Error(ErrorKind::NotNormal, "complements needs a normal subgroup");
  std::vector<Subgroup> out;
  for (const auto& k : l.subgroups()) {
    if (k.order * normal.order != g.order()) continue;
    if ((k.members & normal.members).size() == 1) out.push_back(k);
  }
  return out;
}

/// Nilpotent iff every Sylow subgroup is unique.
inline bool is_nilpotent(const Group& g, const Lattice& l) {
  for (const auto& [p, e] : nt::factorize(g.order())) {
    const std::uint64_t sylow = nt::ipow(p, e);
    const auto count = std::count_if(l.subgroups().begin(), l.subgroups().end(),
                                     [&](const Subgroup& s) { return s.order == sylow; });
    if (count != 1) return false;
  }
  return true;
}

inline bool is_abelian_subgroup(const Group& g, const Subgroup& h) {
  const auto gens = h.generating_set();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto a = gens[i];
      const auto b = gens[j];
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

inline bool is_cyclic_subgroup(const Group& g, const Subgroup& h) {
  bool found = false;
  h.members.for_each([&](Element e) { found = found || g.order_of(e) == h.order; });
  return found;
}

/// Element orders of the members; orders are inherited from the parent.
inline std::vector<std::uint64_t> member_orders(const Group& g, const Subgroup& h) {
  std::vector<std::uint64_t> out;
  out.reserve(h.order);
  h.members.for_each([&](Element e) { out.push_back(g.order_of(e)); });
  return out;
}

/// Abelian invariants of an abelian subgroup, from the induced order statistics.
inline AbelianType subgroup_abelian_type(const Group& g, const Subgroup& h) {
  if (!is_abelian_subgroup(g, h)) throw Error(ErrorKind::NotAbelian, "subgroup is not abelian");
  return abelian_type_from_orders(member_orders(g, h), h.order);
}

/// The subgroup as a group in its own right; members are relabelled in
/// ascending parent index, so the identity stays at 0.
inline Group induced_group(const Group& g, const Subgroup& h) {
  const auto elems = h.members.elements();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const std::size_t m = elems.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local[g.mul(elems[i], elems[j])];
  }
  return Group::from_table(m, std::move(table), Group::Check::Trusted);
}

struct AbelianRankWitness {
  Subgroup subgroup;
  unsigned m;  // |A| = p^m
  unsigned r;  // rank of A
};

/// For |G| = p^n: an abelian subgroup with m + r >= n + 2, choosing the one
/// with the largest m + r (then largest m); nullopt if none exists.
inline std::optional<AbelianRankWitness> has_abelian_subgroup_rank(const Group& g, const Lattice& l) {
  const auto pp = nt::as_prime_power(g.order());
  if (!pp) throw Error(ErrorKind::NotPrimePower, "group order " + std::to_string(g.order()) + " is not a prime power");
  const auto [p, n] = *pp;
  std::optional<AbelianRankWitness> best;
  for (const auto& a : l.subgroups()) {
    if (!is_abelian_subgroup(g, a)) continue;
    const unsigned m = nt::log_p(a.order, p);
    const auto r = static_cast<unsigned>(subgroup_abelian_type(g, a).parts.size());
    if (m + r < n + 2) continue;
    if (!best || m + r > best->m + best->r || (m + r == best->m + best->r && m > best->m)) {
      best = AbelianRankWitness{a, m, r};
    }
  }
  return best;
}

}  // namespace gauss
