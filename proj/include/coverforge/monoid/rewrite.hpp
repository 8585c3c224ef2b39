#pragma once

// Finitely presented commutative monoids N^n / ~ and their completion into a
// confluent rewriting system (commutative Knuth-Bendix on exponent vectors).
//
// Every rule carries a derivation: a basic equivalence (an input relation,
// a critical pair of two earlier rules, or an earlier rule) plus the rewrite
// chains taking both sides of it to the new rule's sides.  replay_derivations
// re-checks all of them from scratch.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coverforge/monoid/free_elem.hpp"

namespace coverforge {

struct Relation {
  FreeElem lhs, rhs;
};

class MonoidPresentation {
 public:
  MonoidPresentation() = default;
  explicit MonoidPresentation(std::size_t rank,
                              std::vector<std::string> names = {})
      : rank_(rank), names_(std::move(names)) {
    if (!names_.empty() && names_.size() != rank_)
      throw InvalidInput("generator name list has the wrong length");
  }

  /// Stored with lhs >= rhs in the term order.
  void add_relation(FreeElem u, FreeElem v) {
    FreeElem::same_rank(u, v);
    if (u.rank() != rank_) throw InvalidInput("relation has the wrong rank");
    if (term_less(u, v)) std::swap(u, v);
    relations_.push_back({std::move(u), std::move(v)});
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string generator_name(std::size_t i) const {
    return i < names_.size() ? names_[i] : "g_" + std::to_string(i);
  }

 private:
  std::size_t rank_ = 0;
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

struct Rule {
  FreeElem lhs, rhs;
  std::size_t id;
};

struct Derivation {
  enum class Kind { relation, critical_pair, rule };
  Kind kind;
  std::size_t a = 0, b = 0;         ///< relation index, or parent rule ids
  std::vector<std::size_t> chain_first;   ///< rules rewriting the first side
  std::vector<std::size_t> chain_second;  ///< rules rewriting the second side
  bool swapped = false;  ///< first side became the rule's rhs
  FreeElem lhs, rhs;     ///< the rule produced
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(std::size_t rank, std::vector<Rule> rules,
                std::vector<Derivation> derivations)
      : rank_(rank), rules_(std::move(rules)),
        derivations_(std::move(derivations)) {}

  std::size_t rank() const { return rank_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Derivation>& derivations() const { return derivations_; }

  /// True when some rule applies to x.
  bool reducible(const FreeElem& x) const {
    for (const auto& r : rules_)
      if (le(r.lhs, x)) return true;
    return false;
  }

  FreeElem normal_form(FreeElem x) const {
    check_rank(x);
    for (;;) {
      const Rule* hit = nullptr;
      for (const auto& r : rules_)
        if (le(r.lhs, x)) {
          hit = &r;
          break;
        }
      if (!hit) return x;
      x = minus(x, hit->lhs) + hit->rhs;
    }
  }

  bool equal(const FreeElem& x, const FreeElem& y) const {
    return normal_form(x) == normal_form(y);
  }

  void check_rank(const FreeElem& x) const {
    if (x.rank() != rank_)
      throw InvalidInput("rank mismatch: element of rank " +
                         std::to_string(x.rank()) + " in a monoid of rank " +
                         std::to_string(rank_));
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Rule> rules_;
  std::vector<Derivation> derivations_;
};

namespace detail {

class Completion {
 public:
  explicit Completion(const MonoidPresentation& p) : p_(p) {}

  RewriteSystem run() {
    for (std::size_t k = 0; k < p_.relations().size(); ++k) {
      Derivation d{Derivation::Kind::relation, k, 0, {}, {}, false, {}, {}};
      add_fact(p_.relations()[k].lhs, p_.relations()[k].rhs, std::move(d));
      drain();
    }
    for (;;) {
      process_pairs();
      if (normalize_right_sides()) continue;
      if (!verify_all_pairs()) continue;
      break;
    }
    std::vector<Rule> rules;
    for (const auto& r : alive_) rules.push_back(r);
    std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
      return term_less(a.lhs, b.lhs);
    });
    return RewriteSystem(p_.rank(), std::move(rules), std::move(derivs_));
  }

 private:
  struct Pending {
    FreeElem a, b;
    Derivation d;
  };
  using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;

  FreeElem reduce(FreeElem x, std::vector<std::size_t>& chain) const {
    for (;;) {
      const Rule* hit = nullptr;
      for (const auto& r : alive_)
        if (le(r.lhs, x)) {
          hit = &r;
          break;
        }
      if (!hit) return x;
      chain.push_back(hit->id);
      x = minus(x, hit->lhs) + hit->rhs;
    }
  }

  const Rule* find(std::size_t id) const {
    for (const auto& r : alive_)
      if (r.id == id) return &r;
    return nullptr;
  }

  void add_fact(const FreeElem& a, const FreeElem& b, Derivation d) {
    FreeElem na = reduce(a, d.chain_first);
    FreeElem nb = reduce(b, d.chain_second);
    if (na == nb) return;
    if (term_less(na, nb)) {
      std::swap(na, nb);
      d.swapped = true;
    }
    const std::size_t id = derivs_.size();
    d.lhs = na;
    d.rhs = nb;
    derivs_.push_back(std::move(d));

    // rules whose left side the new rule reduces are retired and re-added
    std::vector<Rule> keep;
    for (auto& r : alive_) {
      if (le(na, r.lhs)) {
        Derivation rd{Derivation::Kind::rule, r.id, 0, {}, {}, false, {}, {}};
        pending_.push_back({r.lhs, r.rhs, std::move(rd)});
      } else {
        keep.push_back(std::move(r));
      }
    }
    alive_ = std::move(keep);
    for (const auto& r : alive_)
      if (!coprime(r.lhs, na))
        pairs_.push({lcm(r.lhs, na).degree(), r.id, id});
    alive_.push_back({na, nb, id});
  }

  void drain() {
    while (!pending_.empty()) {
      Pending f = std::move(pending_.front());
      pending_.pop_front();
      add_fact(f.a, f.b, std::move(f.d));
    }
  }

  void critical_pair(const Rule& r, const Rule& s) {
    FreeElem l = lcm(r.lhs, s.lhs);
    FreeElem a = minus(l, r.lhs) + r.rhs;
    FreeElem b = minus(l, s.lhs) + s.rhs;
    Derivation d{Derivation::Kind::critical_pair, r.id, s.id, {}, {}, false, {}, {}};
    add_fact(a, b, std::move(d));
    drain();
  }

  void process_pairs() {
    while (!pairs_.empty()) {
      auto [deg, i, j] = pairs_.top();
      pairs_.pop();
      const Rule* r = find(i);
      const Rule* s = find(j);
      if (!r || !s) continue;
      Rule rc = *r, sc = *s;
      critical_pair(rc, sc);
    }
  }

  /// Replace each rule by one with a normalized right side.
  bool normalize_right_sides() {
    bool changed = false;
    for (std::size_t k = 0; k < alive_.size(); ++k) {
      Rule r = alive_[k];
      std::vector<std::size_t> chain;
      FreeElem nr = reduce(r.rhs, chain);
      if (nr == r.rhs) continue;
      changed = true;
      const std::size_t id = derivs_.size();
      Derivation d{Derivation::Kind::rule, r.id, 0, {}, std::move(chain), false,
                   r.lhs, nr};
      derivs_.push_back(std::move(d));
      alive_[k] = {r.lhs, nr, id};
    }
    return changed;
  }

  /// Final confluence check over every pair; false if a new rule appeared.
  bool verify_all_pairs() {
    const std::size_t before = derivs_.size();
    std::vector<Rule> snapshot = alive_;
    for (std::size_t x = 0; x < snapshot.size(); ++x)
      for (std::size_t y = x + 1; y < snapshot.size(); ++y) {
        if (coprime(snapshot[x].lhs, snapshot[y].lhs)) continue;
        if (!find(snapshot[x].id) || !find(snapshot[y].id)) continue;
        critical_pair(snapshot[x], snapshot[y]);
      }
    return derivs_.size() == before;
  }

  const MonoidPresentation& p_;
  std::vector<Rule> alive_;
  std::vector<Derivation> derivs_;
  std::deque<Pending> pending_;
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<PairKey>> pairs_;
};

}  // namespace detail

/// Confluent, terminating rewriting system for the congruence of p.
inline RewriteSystem complete(const MonoidPresentation& p) {
  return detail::Completion(p).run();
}

/// Re-derive every rule of s from the relations of p.  Returns the id of
/// the first rule whose derivation does not replay, if any.
inline std::optional<std::size_t> replay_derivations(
    const MonoidPresentation& p, const RewriteSystem& s) {
  const auto& ds = s.derivations();
  auto apply = [&](FreeElem x, const std::vector<std::size_t>& chain,
                   std::size_t self) -> std::optional<FreeElem> {
    for (std::size_t id : chain) {
      if (id >= self) return std::nullopt;
      if (!le(ds[id].lhs, x)) return std::nullopt;
      x = minus(x, ds[id].lhs) + ds[id].rhs;
    }
    return x;
  };
  for (std::size_t id = 0; id < ds.size(); ++id) {
    const Derivation& d = ds[id];
    FreeElem a, b;
    switch (d.kind) {
      case Derivation::Kind::relation:
        if (d.a >= p.relations().size()) return id;
        a = p.relations()[d.a].lhs;
        b = p.relations()[d.a].rhs;
        break;
      case Derivation::Kind::critical_pair: {
        if (d.a >= id || d.b >= id) return id;
        FreeElem l = lcm(ds[d.a].lhs, ds[d.b].lhs);
        a = minus(l, ds[d.a].lhs) + ds[d.a].rhs;
        b = minus(l, ds[d.b].lhs) + ds[d.b].rhs;
        break;
      }
      case Derivation::Kind::rule:
        if (d.a >= id) return id;
        a = ds[d.a].lhs;
        b = ds[d.a].rhs;
        break;
    }
    auto ra = apply(a, d.chain_first, id);
    auto rb = apply(b, d.chain_second, id);
    if (!ra || !rb) return id;
    if (d.swapped) std::swap(ra, rb);
    if (!(*ra == d.lhs && *rb == d.rhs)) return id;
    if (!term_less(d.rhs, d.lhs)) return id;
  }
  // every live rule must be one of the derived ones
  for (const auto& r : s.rules())
    if (r.id >= ds.size() || !(ds[r.id].lhs == r.lhs && ds[r.id].rhs == r.rhs))
      return r.id;
  return std::nullopt;
}

/// A presentation together with its completed rewriting system.
class PresentedMonoid {
 public:
  PresentedMonoid() = default;
  explicit PresentedMonoid(MonoidPresentation p)
      : p_(std::move(p)), rs_(complete(p_)) {}

  const MonoidPresentation& presentation() const { return p_; }
  const RewriteSystem& system() const { return rs_; }
  std::size_t rank() const { return p_.rank(); }

  FreeElem zero() const { return FreeElem(rank()); }
  FreeElem generator(std::size_t i) const { return FreeElem::unit(rank(), i); }
  FreeElem normal_form(const FreeElem& x) const { return rs_.normal_form(x); }
  bool equal(const FreeElem& x, const FreeElem& y) const {
    return rs_.equal(x, y);
  }
  FreeElem add(const FreeElem& x, const FreeElem& y) const {
    return rs_.normal_form(x + y);
  }
  std::string to_string(const FreeElem& x) const {
    return coverforge::to_string(x, p_.names());
  }

 private:
  MonoidPresentation p_;
  RewriteSystem rs_;
};

}  // namespace coverforge
