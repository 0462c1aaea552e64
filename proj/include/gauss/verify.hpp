#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gauss/construct.hpp"
#include "gauss/error.hpp"
#include "gauss/lattice.hpp"
#include "gauss/number_theory.hpp"
#include "gauss/parallel.hpp"
#include "gauss/report.hpp"
#include "gauss/spec_string.hpp"
#include "gauss/totient.hpp"

namespace gauss {

using Params = std::map<std::string, std::string>;

struct RunOptions {
  Limits limits;
  unsigned jobs = 1;
};

/// A group to scan: either a spec to construct or an already ingested table.
struct CorpusEntry {
  std::string id;
  std::optional<GroupSpec> spec;
  std::shared_ptr<const Group> group;

  static CorpusEntry of(GroupSpec s) {
    auto id = format_spec(s);
    return {std::move(id), std::move(s), nullptr};
  }
  static CorpusEntry of(std::string id, Group g) {
    return {std::move(id), std::nullopt, std::make_shared<const Group>(std::move(g))};
  }

  Group materialize(const Limits& limits) const { return group ? *group : construct(*spec, limits); }
};

inline GaussSummary summarize(const Group& g, const Lattice& l) {
  GaussSummary s;
  s.group_order = g.order();
  s.phi = phi_group(g);
  s.s_value = s_value(g, l);
  s.cyclic_sum = cyclic_sum(g);
  s.subgroup_count = l.size();
  s.in_class_c = is_in_class_c(s);
  return s;
}

inline GaussSummary summarize(const Group& g, const Limits& limits = {}) { return summarize(g, all_subgroups(g, limits)); }

// ---------------------------------------------------------------------------
// Built-in corpora

namespace detail {

inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

/// All abelian types of order n, parts sorted by (prime, power).
inline std::vector<std::vector<std::uint64_t>> abelian_types_of_order(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> acc{{}};
  for (const auto& [p, e] : nt::factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& prefix : acc) {
      // ascending powers within a prime
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        auto t = prefix;
        std::vector<unsigned> asc(it->rbegin(), it->rend());
        for (auto a : asc) t.push_back(nt::ipow(p, a));
        next.push_back(std::move(t));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

inline GroupSpec abelian_spec(std::vector<std::uint64_t> parts) {
  if (parts.empty()) return GroupSpec{Cyclic{1}};
  return GroupSpec{AbelianOfType{std::move(parts)}};
}

inline std::uint64_t spec_order(const GroupSpec& s);

struct OrderOf {
  std::uint64_t operator()(const Cyclic& c) const { return c.n; }
  std::uint64_t operator()(const AbelianOfType& a) const { return AbelianType{a.parts}.order(); }
  std::uint64_t operator()(const Dihedral& d) const { return 2 * d.n; }
  std::uint64_t operator()(const GeneralizedQuaternion& q) const { return q.order; }
  std::uint64_t operator()(const Semidihedral& s) const { return s.order; }
  std::uint64_t operator()(const ModularMaximalCyclic& m) const { return nt::ipow(m.p, static_cast<unsigned>(m.n)); }
  std::uint64_t operator()(const HeisenbergP3& h) const { return h.p * h.p * h.p; }
  std::uint64_t operator()(const SemidirectCyclic& s) const { return s.n * s.p; }
  std::uint64_t operator()(const DirectProduct& dp) const {
    std::uint64_t o = 1;
    for (const auto& f : dp.factors) o *= spec_order(f);
    return o;
  }
};

inline std::uint64_t spec_order(const GroupSpec& s) { return std::visit(OrderOf{}, s.variant); }

/// Flattened direct product of two specs.
inline GroupSpec product(const GroupSpec& a, const GroupSpec& b) {
  DirectProduct dp;
  for (const auto* s : {&a, &b}) {
    if (const auto* inner = std::get_if<DirectProduct>(&s->variant)) {
      dp.factors.insert(dp.factors.end(), inner->factors.begin(), inner->factors.end());
    } else {
      dp.factors.push_back(*s);
    }
  }
  return GroupSpec{std::move(dp)};
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (nt::is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace detail

inline std::vector<GroupSpec> cyclic_family(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 1; n <= max_order; ++n) out.push_back({Cyclic{n}});
  return out;
}

/// Every abelian type of order <= max_order, the trivial group included.
inline std::vector<GroupSpec> abelian_family(std::uint64_t max_order, bool p_groups_only = false) {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    if (p_groups_only && n > 1 && !nt::as_prime_power(n)) continue;
    for (auto& t : detail::abelian_types_of_order(n)) out.push_back(detail::abelian_spec(std::move(t)));
  }
  return out;
}

inline std::vector<GroupSpec> dihedral_family(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 2; 2 * n <= max_order; ++n) out.push_back({Dihedral{n}});
  return out;
}

inline std::vector<GroupSpec> quaternion_family(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t o = 8; o <= max_order; o *= 2) out.push_back({GeneralizedQuaternion{o}});
  return out;
}

inline std::vector<GroupSpec> semidihedral_family(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t o = 16; o <= max_order; o *= 2) out.push_back({Semidihedral{o}});
  return out;
}

inline std::vector<GroupSpec> modular_family(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (auto p : detail::primes_up_to(max_order)) {
    if (p * p * p > max_order) break;
    for (std::uint64_t n = p == 2 ? 4 : 3;; ++n) {
      const auto o = nt::ipow(p, static_cast<unsigned>(n));
      if (o > max_order) break;
      out.push_back({ModularMaximalCyclic{p, n}});
    }
  }
  return out;
}

inline std::vector<GroupSpec> heisenberg_family(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t p = 3; p * p * p <= max_order; ++p) {
    if (nt::is_prime(p)) out.push_back({HeisenbergP3{p}});
  }
  return out;
}

/// Non-abelian Z_n x| Z_p, one t per subgroup <t> of units of order p
/// (the smallest generator), which fixes the isomorphism type.
inline std::vector<GroupSpec> sdp_family(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 3; 2 * n <= max_order; ++n) {
    for (auto p : detail::primes_up_to(max_order / n)) {
      if (n % p == 0) continue;
      for (std::uint64_t t = 2; t < n; ++t) {
        if (nt::powmod(t, p, n) != 1) continue;
        std::uint64_t smallest = t;
        for (std::uint64_t i = 1, x = t; i < p; ++i, x = x * t % n) smallest = std::min(smallest, x);
        if (smallest == t) out.push_back({SemidirectCyclic{n, p, t}});
      }
    }
  }
  return out;
}

/// Non-abelian groups of prime-power order: D/Q/SD 2-groups, M(p^n), Heisenberg,
/// their products with abelian p-groups, and pairwise products of these.
inline std::vector<GroupSpec> p_group_family(std::uint64_t max_order) {
  std::vector<GroupSpec> basic;
  for (std::uint64_t o = 8; o <= max_order; o *= 2) basic.push_back({Dihedral{o / 2}});
  for (auto& s : quaternion_family(max_order)) basic.push_back(s);
  for (auto& s : semidihedral_family(max_order)) basic.push_back(s);
  for (auto& s : modular_family(max_order)) basic.push_back(s);
  for (auto& s : heisenberg_family(max_order)) basic.push_back(s);

  std::vector<GroupSpec> out = basic;
  const auto abelian = abelian_family(max_order / 8, true);
  for (const auto& b : basic) {
    const auto ob = detail::spec_order(b);
    const auto p = nt::factorize(ob).front().prime;
    for (const auto& a : abelian) {
      const auto oa = detail::spec_order(a);
      if (oa == 1 || oa % p != 0 || ob * oa > max_order) continue;
      out.push_back(detail::product(b, a));
    }
  }
  for (std::size_t i = 0; i < basic.size(); ++i) {
    for (std::size_t j = i; j < basic.size(); ++j) {
      const auto oi = detail::spec_order(basic[i]);
      const auto oj = detail::spec_order(basic[j]);
      if (oi * oj > max_order || nt::factorize(oi).front().prime != nt::factorize(oj).front().prime) continue;
      out.push_back(detail::product(basic[i], basic[j]));
    }
  }
  return out;
}

/// Abelian groups plus non-abelian nilpotent groups: each non-abelian p-group
/// alone, times a coprime abelian group, and times a non-abelian q-group.
inline std::vector<GroupSpec> nilpotent_family(std::uint64_t max_order) {
  auto out = abelian_family(max_order);
  const auto pgroups = p_group_family(max_order);
  const auto abelian = abelian_family(max_order / 6);
  for (const auto& x : pgroups) {
    out.push_back(x);
    const auto ox = detail::spec_order(x);
    const auto p = nt::factorize(ox).front().prime;
    for (const auto& a : abelian) {
      const auto oa = detail::spec_order(a);
      if (oa == 1 || oa % p == 0 || ox * oa > max_order) continue;
      out.push_back(detail::product(x, a));
    }
  }
  for (std::size_t i = 0; i < pgroups.size(); ++i) {
    for (std::size_t j = i + 1; j < pgroups.size(); ++j) {
      const auto oi = detail::spec_order(pgroups[i]);
      const auto oj = detail::spec_order(pgroups[j]);
      if (oi * oj > max_order || std::gcd(oi, oj) != 1) continue;
      out.push_back(detail::product(pgroups[i], pgroups[j]));
    }
  }
  return out;
}

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"cyclic",     "abelian",     "dihedral", "quaternion", "semidihedral", "modular",
                                              "heisenberg", "sdp",         "pgroups",  "nilpotent",  "all"};
  return names;
}

inline std::vector<GroupSpec> builtin_family(const std::string& name, std::uint64_t max_order) {
  if (name == "cyclic") return cyclic_family(max_order);
  if (name == "abelian") return abelian_family(max_order);
  if (name == "dihedral") return dihedral_family(max_order);
  if (name == "quaternion") return quaternion_family(max_order);
  if (name == "semidihedral") return semidihedral_family(max_order);
  if (name == "modular") return modular_family(max_order);
  if (name == "heisenberg") return heisenberg_family(max_order);
  if (name == "sdp") return sdp_family(max_order);
  if (name == "pgroups") return p_group_family(max_order);
  if (name == "nilpotent") return nilpotent_family(max_order);
  if (name == "all") {
    std::vector<GroupSpec> out;
    std::set<std::string> seen;
    for (const auto& fam : family_names()) {
      if (fam == "all" || fam == "pgroups") continue;
      for (auto& s : builtin_family(fam, max_order)) {
        if (seen.insert(format_spec(s)).second) out.push_back(std::move(s));
      }
    }
    return out;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family '" + name + "'");
}

inline std::vector<CorpusEntry> to_corpus(const std::vector<GroupSpec>& specs) {
  std::vector<CorpusEntry> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(CorpusEntry::of(s));
  return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace detail {

/// Collects the cases of one corpus item.
struct CaseSink {
  std::string id;
  std::vector<SuiteCase> cases;

  void add(const std::string& check, std::int64_t expected, std::int64_t actual) {
    cases.push_back({id, check, expected, actual, expected == actual});
  }
  void add(const std::string& check, bool expected, bool actual) { add(check, std::int64_t{expected}, std::int64_t{actual}); }
  void add(const std::string& check, std::uint64_t expected, std::uint64_t actual) {
    add(check, static_cast<std::int64_t>(expected), static_cast<std::int64_t>(actual));
  }
};

struct ItemOutcome {
  std::vector<SuiteCase> cases;
  std::optional<Skipped> skipped;
};

inline bool is_budget_error(const Error& e) {
  return e.kind() == ErrorKind::LatticeOverflow || e.kind() == ErrorKind::OrderOverflow;
}

/// Runs fn(i, sink) for every id in parallel and appends results in order.
/// Items that exceed a size cap are recorded as skipped.
template <typename Fn>
void run_items(SuiteResult& out, const std::vector<std::string>& ids, const RunOptions& opt, Fn fn) {
  auto results = parallel_map(ids.size(), opt.jobs, [&](std::size_t i) {
    ItemOutcome o;
    CaseSink sink{ids[i], {}};
    try {
      fn(i, sink);
      o.cases = std::move(sink.cases);
    } catch (const Error& e) {
      if (!is_budget_error(e)) throw;
      o.skipped = Skipped{ids[i], e.what()};
    }
    return o;
  });
  for (auto& r : results) {
    out.cases.insert(out.cases.end(), std::make_move_iterator(r.cases.begin()), std::make_move_iterator(r.cases.end()));
    if (r.skipped) out.skipped.push_back(std::move(*r.skipped));
  }
}

struct Analysis {
  Group group;
  Lattice lattice;
  std::uint64_t s;
};

inline Analysis analyze(const GroupSpec& spec, const Limits& limits) {
  auto g = construct(spec, limits);
  auto l = all_subgroups(g, limits);
  const auto s = s_value(g, l);
  return {std::move(g), std::move(l), s};
}

inline std::vector<std::string> ids_of(const std::vector<GroupSpec>& specs) {
  std::vector<std::string> ids;
  for (const auto& s : specs) ids.push_back(format_spec(s));
  return ids;
}

class ParamReader {
 public:
  ParamReader(const Params& params, std::initializer_list<const char*> allowed) : params_(params) {
    for (const auto& [k, v] : params) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
        throw Error(ErrorKind::InvalidParameter, "unknown parameter '" + k + "'");
      }
    }
  }

  std::uint64_t uint(const std::string& key, std::uint64_t fallback) const {
    const auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    std::uint64_t v = 0;
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::InvalidParameter, "parameter '" + key + "' must be a non-negative integer");
    }
    return v;
  }

  std::string str(const std::string& key, const std::string& fallback) const {
    const auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

 private:
  const Params& params_;
};

inline void check_range(std::uint64_t order_bound, const RunOptions& opt) {
  if (order_bound > opt.limits.max_order) {
    throw Error(ErrorKind::RangeTooLarge,
                "requested orders up to " + std::to_string(order_bound) + " exceed max order " + std::to_string(opt.limits.max_order));
  }
}

inline std::uint64_t sylow_product(const Group& g, const Lattice& l) {
  std::uint64_t prod = 1;
  for (const auto& [p, e] : nt::factorize(g.order())) {
    const auto order = nt::ipow(p, e);
    const auto it = std::find_if(l.subgroups().begin(), l.subgroups().end(), [&](const Subgroup& s) { return s.order == order; });
    prod *= s_value_within(g, l, *it);
  }
  return prod;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_pairs(const std::string& text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    const auto colon = item.find(':');
    std::uint64_t p = 0, q = 0;
    bool ok = colon != std::string::npos;
    if (ok) {
      auto r1 = std::from_chars(item.data(), item.data() + colon, p);
      auto r2 = std::from_chars(item.data() + colon + 1, item.data() + item.size(), q);
      ok = r1.ec == std::errc{} && r1.ptr == item.data() + colon && r2.ec == std::errc{} && r2.ptr == item.data() + item.size();
    }
    if (!ok) throw Error(ErrorKind::InvalidParameter, "pairs must look like '2:3,3:7', got '" + item + "'");
    out.emplace_back(p, q);
    start = end + 1;
  }
  return out;
}

inline SuiteResult suite_prop1(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"max_order", "pairs"});
  const auto max_order = in.uint("max_order", 200);
  const auto wanted = in.uint("pairs", 20);
  check_range(max_order, opt);
  const std::vector<std::string> pool{"cyclic:2",   "cyclic:3",     "abelian:2,2", "cyclic:5",  "dihedral:3",  "quaternion:8",
                                      "dihedral:4", "cyclic:7",     "dihedral:5",  "cyclic:9",  "abelian:3,3", "cyclic:4",
                                      "dihedral:7", "sdp:7,3,2",    "cyclic:11",   "heisenberg:3"};
  std::vector<std::pair<GroupSpec, GroupSpec>> candidates;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const auto a = parse_spec(pool[i]);
      const auto b = parse_spec(pool[j]);
      const auto oa = spec_order(a);
      const auto ob = spec_order(b);
      if (std::gcd(oa, ob) == 1 && oa * ob <= max_order) candidates.emplace_back(a, b);
    }
  }
  SuiteResult out{"prop1", {}, {}, {}};
  std::vector<std::pair<GroupSpec, GroupSpec>> chosen;
  if (candidates.size() <= wanted) {
    chosen = candidates;
    if (candidates.size() < wanted) {
      out.discrepancy_notes.push_back("only " + std::to_string(candidates.size()) + " coprime pairs fit under max_order");
    }
  } else {
    for (std::uint64_t k = 0; k < wanted; ++k) chosen.push_back(candidates[k * candidates.size() / wanted]);
  }
  std::vector<std::string> ids;
  for (const auto& [a, b] : chosen) ids.push_back(format_spec(product(a, b)));
  run_items(out, ids, opt, [&](std::size_t i, CaseSink& sink) {
    const auto& [a, b] = chosen[i];
    const auto ga = analyze(a, opt.limits);
    const auto gb = analyze(b, opt.limits);
    const auto gab = analyze(product(a, b), opt.limits);
    sink.add("s_multiplicative", ga.s * gb.s, gab.s);
    sink.add("phi_multiplicative", phi_group(ga.group) * phi_group(gb.group), phi_group(gab.group));
  });
  return out;
}

inline SuiteResult suite_cor2(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"max_order"});
  const auto max_order = in.uint("max_order", 500);
  check_range(max_order, opt);
  const auto corpus = nilpotent_family(max_order);
  SuiteResult out{"cor2", {}, {}, {}};
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto a = analyze(corpus[i], opt.limits);
    sink.add("nilpotent", true, is_nilpotent(a.group, a.lattice));
    sink.add("sylow_product", sylow_product(a.group, a.lattice), a.s);
  });
  return out;
}

inline SuiteResult suite_thm3(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"max_order"});
  const auto max_order = in.uint("max_order", 256);
  check_range(max_order, opt);
  const auto corpus = abelian_family(max_order);
  SuiteResult out{"thm3", {}, {}, {}};
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto a = analyze(corpus[i], opt.limits);
    const auto n = a.group.order();
    const auto type = abelian_invariants(a.group);
    sink.add("s_at_least_order", true, a.s >= n);
    sink.add("equality_iff_cyclic", is_cyclic(a.group), a.s == n);
    if (type.max_rank() >= 2) sink.add("s_exceeds_order_plus_one", true, a.s > n + 1);
    if (const auto pp = nt::as_prime_power(n)) {
      const auto* spec_type = std::get_if<AbelianOfType>(&corpus[i].variant);
      const AbelianType t = spec_type ? AbelianType{spec_type->parts} : AbelianType{{n}};
      sink.add("phi_closed_form", phi_abelian_p_closed_form(t), phi_group(a.group));
      const auto r = static_cast<unsigned>(t.parts.size());
      sink.add("maximal_subgroup_count", (nt::ipow(pp->prime, r) - 1) / (pp->prime - 1),
               static_cast<std::uint64_t>(maximal_subgroups(a.lattice).size()));
    }
  });
  return out;
}

inline SuiteResult suite_thm4(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"max_order"});
  const auto max_order = in.uint("max_order", 128);
  check_range(max_order, opt);
  std::vector<GroupSpec> corpus;
  for (auto& s : p_group_family(max_order)) {
    const auto pp = nt::as_prime_power(spec_order(s));
    if (pp && pp->exponent >= 4) corpus.push_back(std::move(s));
  }
  SuiteResult out{"thm4", {}, {}, {}};
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto a = analyze(corpus[i], opt.limits);
    const auto w = has_abelian_subgroup_rank(a.group, a.lattice);
    if (!w) return;
    const auto n = nt::as_prime_power(a.group.order())->exponent;
    sink.add("witness_bound", true, w->m + w->r >= n + 2);
    sink.add("s_exceeds_order", true, a.s > a.group.order());
  });
  std::set<std::string> with_witness;
  for (const auto& c : out.cases) with_witness.insert(c.id);
  out.discrepancy_notes.push_back(std::to_string(with_witness.size()) + " of " + std::to_string(corpus.size()) +
                                  " p-groups carry an abelian subgroup with m + r >= n + 2");
  return out;
}

inline SuiteResult suite_thm5(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"n_max", "odd_max_order"});
  const auto n_max = in.uint("n_max", 7);
  const auto odd_max = in.uint("odd_max_order", 128);
  if (n_max < 3 || n_max > 62) throw Error(ErrorKind::InvalidParameter, "n_max must lie in 3..62");
  check_range(std::max<std::uint64_t>(std::uint64_t{1} << n_max, odd_max), opt);

  struct Item {
    GroupSpec spec;
    std::optional<TwoGroupFamily> family;
    unsigned n;
    std::uint64_t p;
  };
  std::vector<Item> items;
  // the D and Q closed forms already hold at order 8
  items.push_back({{Dihedral{4}}, TwoGroupFamily::Dihedral, 3, 2});
  items.push_back({{GeneralizedQuaternion{8}}, TwoGroupFamily::Quaternion, 3, 2});
  for (unsigned n = 4; n <= n_max; ++n) {
    const std::uint64_t o = std::uint64_t{1} << n;
    items.push_back({{Dihedral{o / 2}}, TwoGroupFamily::Dihedral, n, 2});
    items.push_back({{GeneralizedQuaternion{o}}, TwoGroupFamily::Quaternion, n, 2});
    items.push_back({{Semidihedral{o}}, TwoGroupFamily::Semidihedral, n, 2});
    items.push_back({{ModularMaximalCyclic{2, n}}, std::nullopt, n, 2});
  }
  for (auto p : primes_up_to(odd_max)) {
    if (p == 2) continue;
    for (unsigned n = 3; nt::ipow(p, n) <= odd_max; ++n) items.push_back({{ModularMaximalCyclic{p, n}}, std::nullopt, n, p});
  }

  std::vector<std::string> ids;
  for (const auto& it : items) ids.push_back(format_spec(it.spec));
  SuiteResult out{"thm5", {}, {}, {}};
  run_items(out, ids, opt, [&](std::size_t i, CaseSink& sink) {
    const auto& item = items[i];
    const auto a = analyze(item.spec, opt.limits);
    const auto order = a.group.order();
    const auto p = item.p;
    const unsigned n = item.n;
    if (item.family) sink.add("closed_form", s_two_group_closed_forms(*item.family, n), a.s);
    if (p == 2 && n < 4) return;

    const auto maxima = maximal_subgroups(a.lattice);
    const auto phi_frattini = frattini(a.lattice);
    const auto phi = phi_group(a.group);
    sink.add("maximal_subgroup_count", p + 1, static_cast<std::uint64_t>(maxima.size()));
    sink.add("has_cyclic_maximal", true,
             std::any_of(maxima.begin(), maxima.end(), [&](const Subgroup& m) { return is_cyclic_subgroup(a.group, m); }));
    sink.add("frattini_order", nt::ipow(p, n - 2), phi_frattini.order);
    sink.add("frattini_cyclic", true, is_cyclic_subgroup(a.group, phi_frattini));
    const auto frattini_term = p * s_value_within(a.group, a.lattice, phi_frattini);
    sink.add("frattini_term", nt::ipow(p, n - 1), frattini_term);
    std::int64_t rhs = static_cast<std::int64_t>(phi) - static_cast<std::int64_t>(frattini_term);
    for (const auto& m : maxima) rhs += static_cast<std::int64_t>(s_value_within(a.group, a.lattice, m));
    sink.add("inclusion_exclusion", static_cast<std::int64_t>(a.s), rhs);
    sink.add("s_exceeds_order", true, a.s > order);
    if (item.family) {
      sink.add("phi_value", nt::ipow(2, n - 2), phi);
      std::uint64_t rhs5 = nt::ipow(2, n - 2);
      for (const auto& m : maxima) {
        if (!is_cyclic_subgroup(a.group, m)) rhs5 += s_value_within(a.group, a.lattice, m);
      }
      sink.add("two_maximal_recurrence", a.s, rhs5);
    } else {
      sink.add("phi_value", order - order / p, phi);
      const auto ab = analyze({AbelianOfType{{p, nt::ipow(p, n - 2)}}}, opt.limits);
      const auto formula = order - order / p + ab.s + p * nt::ipow(p, n - 1) - nt::ipow(p, n - 1);
      sink.add("modular_expansion", a.s, formula);
    }
  });
  return out;
}

inline SuiteResult suite_thm7(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"n_max"});
  const auto n_max = in.uint("n_max", 60);
  check_range(2 * n_max, opt);
  std::vector<GroupSpec> corpus;
  for (std::uint64_t n = 2; n <= n_max; ++n) corpus.push_back({Dihedral{n}});
  SuiteResult out{"thm7", {}, {}, {}};
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto n = std::get<Dihedral>(corpus[i].variant).n;
    const auto a = analyze(corpus[i], opt.limits);
    sink.add("in_class_c", n % 2 == 1, a.s == a.group.order());
  });
  const auto klein_phi = phi_group(construct({Dihedral{2}}));
  out.discrepancy_notes.push_back("phi(D_4) = " + std::to_string(klein_phi) +
                                  " by direct counting; the value 4 is sometimes quoted but does not reproduce S(D_12) = 23");
  return out;
}

inline SuiteResult suite_remark_d2n(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"n_max"});
  const auto n_max = in.uint("n_max", 60);
  check_range(2 * n_max, opt);
  std::vector<GroupSpec> corpus;
  for (std::uint64_t n = 2; n <= n_max; ++n) corpus.push_back({Dihedral{n}});
  SuiteResult out{"remark_d2n", {}, {}, {}};
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto n = std::get<Dihedral>(corpus[i].variant).n;
    const auto a = analyze(corpus[i], opt.limits);
    sink.add("s_closed_form", s_dihedral_closed_form(n), a.s);
    sink.add("phi_closed_form", phi_dihedral_closed_form(n), phi_group(a.group));
    if (n == 6) sink.add("golden_value", std::uint64_t{23}, a.s);
  });
  return out;
}

inline SuiteResult suite_thm8(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"n_max", "max_order"});
  const auto n_max = in.uint("n_max", 45);
  const auto max_order = in.uint("max_order", 200);
  check_range(std::max(2 * n_max, max_order), opt);
  std::vector<GroupSpec> corpus;
  for (std::uint64_t n = 3; n <= n_max; n += 2) corpus.push_back({Dihedral{n}});
  for (auto& s : sdp_family(max_order)) corpus.push_back(std::move(s));
  SuiteResult out{"thm8", {}, {}, {}};
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto a = analyze(corpus[i], opt.limits);
    bool expect_witness = true;
    std::uint64_t n_param = 0;
    if (const auto* d = std::get_if<Dihedral>(&corpus[i].variant)) {
      n_param = d->n;
    } else {
      const auto& sd = std::get<SemidirectCyclic>(corpus[i].variant);
      n_param = sd.n;
      // x -> x^t fixes x^a exactly when a(t - 1) = 0 mod n
      expect_witness = std::gcd(sd.t - 1, sd.n) == 1;
    }
    const auto w = theorem8_applicable(a.group, a.lattice);
    sink.add("witness", expect_witness, w.has_value());
    if (!w) return;
    const auto n = w->normal.order;
    const auto n_p = static_cast<std::uint64_t>(complements(a.group, w->normal, a.lattice).size());
    sink.add("class_c_iff_complements_eq_n", n_p == n, a.s == a.group.order());
    sink.add("semidirect_formula", s_semidirect_formula(n, w->prime, n_p), a.s);
    if (std::holds_alternative<Dihedral>(corpus[i].variant)) {
      sink.add("complement_count", n_param, n_p);
      sink.add("s_equals_2n", 2 * n_param, a.s);
    }
  });
  return out;
}

inline SuiteResult suite_example_pq(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"pairs"});
  const auto pairs = parse_pairs(in.str("pairs", "2:3,3:7,2:5,5:11,3:13"));
  SuiteResult out{"example_pq", {}, {}, {}};
  std::vector<GroupSpec> corpus;
  for (const auto& [p, q] : pairs) {
    if (!nt::is_prime(p) || !nt::is_prime(q) || p >= q) {
      throw Error(ErrorKind::InvalidParameter, "pair " + std::to_string(p) + ":" + std::to_string(q) + " needs primes p < q");
    }
    check_range(p * q, opt);
    if ((q - 1) % p != 0) {
      out.skipped.push_back({std::to_string(p) + ":" + std::to_string(q), "p does not divide q - 1"});
      continue;
    }
    std::uint64_t t = 2;
    while (nt::powmod(t, p, q) != 1) ++t;
    corpus.push_back({SemidirectCyclic{q, p, t}});
  }
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto& sd = std::get<SemidirectCyclic>(corpus[i].variant);
    const auto p = sd.p;
    const auto q = sd.n;
    const auto a = analyze(corpus[i], opt.limits);
    auto count = [&](std::uint64_t order) {
      return static_cast<std::uint64_t>(std::count_if(a.lattice.subgroups().begin(), a.lattice.subgroups().end(),
                                                      [&](const Subgroup& s) { return s.order == order; }));
    };
    sink.add("s_equals_pq", p * q, a.s);
    sink.add("subgroups_of_order_p", q, count(p));
    sink.add("subgroups_of_order_q", std::uint64_t{1}, count(q));
    sink.add("subgroup_count", q + 3, static_cast<std::uint64_t>(a.lattice.size()));
    const auto it = std::find_if(a.lattice.subgroups().begin(), a.lattice.subgroups().end(),
                                 [&](const Subgroup& s) { return s.order == q; });
    sink.add("complement_count", q, static_cast<std::uint64_t>(complements(a.group, *it, a.lattice).size()));
  });
  return out;
}

inline SuiteResult suite_closing_equality(const Params& params, const RunOptions& opt) {
  const ParamReader in(params, {"max_order", "family"});
  const auto max_order = in.uint("max_order", 60);
  check_range(max_order, opt);
  const auto corpus = builtin_family(in.str("family", "all"), max_order);
  SuiteResult out{"closing_equality", {}, {}, {}};
  run_items(out, ids_of(corpus), opt, [&](std::size_t i, CaseSink& sink) {
    const auto a = analyze(corpus[i], opt.limits);
    const auto n = a.group.order();
    const auto cs = cyclic_sum(a.group);
    sink.add("partition_identity", n, cs);
    bool vanishes = true;
    for (const auto& h : a.lattice.subgroups()) {
      if (!is_cyclic_subgroup(a.group, h) && phi_of(a.group, h) != 0) vanishes = false;
    }
    const bool in_c = a.s == n;
    sink.add("class_c_iff_phi_vanishes_off_cyclic", in_c, vanishes);
    if (!in_c) return;
    sink.add("s_equals_cyclic_sum", cs, a.s);
    std::uint64_t closed = 0;
    for (const auto& h : a.lattice.subgroups()) {
      if (s_value_within(a.group, a.lattice, h) == h.order) ++closed;
    }
    sink.add("subgroups_in_class_c", static_cast<std::uint64_t>(a.lattice.size()), closed);
  });
  out.discrepancy_notes.push_back("quotient closure is not examined; only subgroups of class-C members are checked");
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"prop1", "cor2", "thm3", "thm4", "thm5", "thm7", "thm8", "example_pq", "remark_d2n", "closing_equality"};
  return ids;
}

/// Sum over d | n of phi(d) equals n, for every n <= limit.
inline SuiteResult verify_classical_gauss(std::uint64_t limit) {
  if (limit < 1) throw Error(ErrorKind::InvalidParameter, "limit must be at least 1");
  if (limit > 10'000'000) throw Error(ErrorKind::RangeTooLarge, "limit above 10^7");
  SuiteResult out{"gauss", {}, {}, {}};
  for (std::uint64_t n = 1; n <= limit; ++n) {
    std::uint64_t sum = 0;
    for (auto d : nt::divisors(n)) sum += nt::totient(d);
    out.add(std::to_string(n), "divisor_sum", static_cast<std::int64_t>(n), static_cast<std::int64_t>(sum));
  }
  return out;
}

inline SuiteResult run_suite(const std::string& suite_id, const Params& params = {}, const RunOptions& opt = {}) {
  using namespace detail;
  if (suite_id == "prop1") return suite_prop1(params, opt);
  if (suite_id == "cor2") return suite_cor2(params, opt);
  if (suite_id == "thm3") return suite_thm3(params, opt);
  if (suite_id == "thm4") return suite_thm4(params, opt);
  if (suite_id == "thm5") return suite_thm5(params, opt);
  if (suite_id == "thm7") return suite_thm7(params, opt);
  if (suite_id == "thm8") return suite_thm8(params, opt);
  if (suite_id == "example_pq") return suite_example_pq(params, opt);
  if (suite_id == "remark_d2n") return suite_remark_d2n(params, opt);
  if (suite_id == "closing_equality") return suite_closing_equality(params, opt);
  throw Error(ErrorKind::UnknownSuite, "unknown suite '" + suite_id + "'");
}

// ---------------------------------------------------------------------------
// Scan

/// Computes S, nilpotency and cyclicity for each corpus group. Groups over a
/// size cap are skipped and listed; rows keep corpus order.
inline ScanResult conjecture_scan(const std::vector<CorpusEntry>& corpus, const RunOptions& opt = {}) {
  auto rows = parallel_map(corpus.size(), opt.jobs, [&](std::size_t i) -> std::pair<std::optional<ScanRow>, std::optional<Skipped>> {
    try {
      const auto g = corpus[i].materialize(opt.limits);
      const auto l = all_subgroups(g, opt.limits);
      ScanRow row;
      row.id = corpus[i].id;
      row.order = g.order();
      row.phi = phi_group(g);
      row.s_value = s_value(g, l);
      row.subgroup_count = l.size();
      row.nilpotent = is_nilpotent(g, l);
      row.cyclic = is_cyclic(g);
      row.in_class_c = row.s_value == row.order;
      return {row, std::nullopt};
    } catch (const Error& e) {
      if (!detail::is_budget_error(e)) throw;
      return {std::nullopt, Skipped{corpus[i].id, e.what()}};
    }
  });
  ScanResult out;
  std::set<std::string> seen;
  for (auto& [row, skipped] : rows) {
    if (skipped) {
      out.skipped.push_back(std::move(*skipped));
      continue;
    }
    if (!seen.insert(row->id).second) throw Error(ErrorKind::InvalidParameter, "duplicate corpus id '" + row->id + "'");
    ++out.scanned;
    if (row->in_class_c) out.class_c_members.push_back(row->id);
    if (row->nilpotent && !row->cyclic && row->s_value <= row->order) out.conjecture6_violations.push_back(row->id);
    if (row->s_value < row->order) out.inequality_failures.push_back(row->id);
    out.rows.push_back(std::move(*row));
  }
  return out;
}

}  // namespace gauss
