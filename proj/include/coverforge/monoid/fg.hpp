#pragma once

// A uniform view of finitely generated commutative monoids (presented,
// affine, free) as canonical integer vectors, used by the bounded morphism
// checks.  Elements are enumerated by the number of generators needed.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "coverforge/monoid/rewrite.hpp"

namespace coverforge {

using IVec = std::vector<std::int64_t>;

struct IVecHash {
  std::size_t operator()(const IVec& x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : x) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

inline IVec ivec_add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  IVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline IVec ivec_sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  IVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline std::string to_string(const IVec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i)
    s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

class FGMonoid {
 public:
  virtual ~FGMonoid() = default;
  virtual std::size_t num_generators() const = 0;
  virtual IVec zero() const = 0;
  virtual IVec generator(std::size_t i) const = 0;
  /// Canonical sum: equal elements give identical vectors.
  virtual IVec add(const IVec& a, const IVec& b) const = 0;
  virtual std::string show(const IVec& x) const { return to_string(x); }

  IVec combination(const FreeElem& word) const {
    IVec x = zero();
    for (std::size_t i = 0; i < word.rank(); ++i)
      for (std::uint32_t k = 0; k < word[i]; ++k) x = add(x, generator(i));
    return x;
  }
};

/// ⟨gens⟩ inside Z^k.
class AffineMonoid : public FGMonoid {
 public:
  AffineMonoid(std::size_t ambient, std::vector<IVec> gens)
      : ambient_(ambient), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.size() != ambient_) throw InvalidInput("generator has the wrong length");
  }
  static AffineMonoid free(std::size_t k) {
    std::vector<IVec> g;
    for (std::size_t i = 0; i < k; ++i) {
      IVec e(k, 0);
      e[i] = 1;
      g.push_back(e);
    }
    return AffineMonoid(k, g);
  }

  std::size_t ambient() const { return ambient_; }
  const std::vector<IVec>& generators() const { return gens_; }

  std::size_t num_generators() const override { return gens_.size(); }
  IVec zero() const override { return IVec(ambient_, 0); }
  IVec generator(std::size_t i) const override { return gens_.at(i); }
  IVec add(const IVec& a, const IVec& b) const override { return ivec_add(a, b); }

 private:
  std::size_t ambient_;
  std::vector<IVec> gens_;
};

/// Generator counts c with sum c_i g_i = x, or nothing.  Needs a linear
/// functional w with w(g) >= 1 for every generator; without one the search
/// space can be infinite and a CapabilityError is raised.
inline std::optional<std::vector<std::uint32_t>> affine_membership(
    const AffineMonoid& m, const IVec& x, const std::optional<IVec>& grading) {
  if (x.size() != m.ambient()) throw InvalidInput("vector length mismatch");
  if (!grading)
    throw CapabilityError("affine membership needs a positive grading");
  const IVec& w = *grading;
  auto value = [&](const IVec& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
    return s;
  };
  std::vector<std::int64_t> gw;
  for (const auto& g : m.generators()) {
    gw.push_back(value(g));
    if (gw.back() < 1)
      throw CapabilityError("grading is not positive on generator " + to_string(g));
  }
  const std::size_t n = m.generators().size();
  std::vector<std::uint32_t> counts(n, 0);
  std::set<std::pair<IVec, std::size_t>> dead;
  std::function<bool(const IVec&, std::size_t)> dfs = [&](const IVec& rest,
                                                          std::size_t start) {
    std::int64_t v = value(rest);
    if (v == 0) {
      for (auto c : rest)
        if (c != 0) return false;
      return true;
    }
    if (v < 0 || start >= n) return false;
    if (dead.count({rest, start})) return false;
    for (std::size_t i = start; i < n; ++i) {
      if (gw[i] > v) continue;
      ++counts[i];
      if (dfs(ivec_sub(rest, m.generators()[i]), i)) return true;
      --counts[i];
    }
    dead.insert({rest, start});
    return false;
  };
  if (dfs(x, 0)) return counts;
  return std::nullopt;
}

/// Presented monoid viewed through normal forms.
class PresentedFG : public FGMonoid {
 public:
  explicit PresentedFG(std::shared_ptr<const PresentedMonoid> m) : m_(std::move(m)) {}
  std::size_t num_generators() const override { return m_->rank(); }
  IVec zero() const override { return IVec(m_->rank(), 0); }
  IVec generator(std::size_t i) const override {
    return from(m_->normal_form(m_->generator(i)));
  }
  IVec add(const IVec& a, const IVec& b) const override {
    return from(m_->normal_form(to(a) + to(b)));
  }
  std::string show(const IVec& x) const override { return m_->to_string(to(x)); }
  const PresentedMonoid& monoid() const { return *m_; }

  static IVec from(const FreeElem& x) { return IVec(x.e.begin(), x.e.end()); }
  static FreeElem to(const IVec& x) {
    FreeElem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = static_cast<std::uint32_t>(x[i]);
    return r;
  }

 private:
  std::shared_ptr<const PresentedMonoid> m_;
};

struct EnumeratedElement {
  IVec value;
  FreeElem word;        ///< a generator word reaching it
  std::uint32_t length;  ///< fewest generators needed
};

/// All elements that are sums of at most `bound` generators.
class BoundedElements {
 public:
  BoundedElements(const FGMonoid& m, std::uint32_t bound) {
    const std::size_t n = m.num_generators();
    elems_.push_back({m.zero(), FreeElem(n), 0});
    index_.emplace(elems_.back().value, 0);
    std::size_t frontier_begin = 0;
    for (std::uint32_t len = 1; len <= bound; ++len) {
      std::size_t frontier_end = elems_.size();
      for (std::size_t k = frontier_begin; k < frontier_end; ++k)
        for (std::size_t g = 0; g < n; ++g) {
          IVec v = m.add(elems_[k].value, m.generator(g));
          if (index_.count(v)) continue;
          FreeElem w = elems_[k].word;
          w[g] += 1;
          index_.emplace(v, elems_.size());
          elems_.push_back({std::move(v), std::move(w), len});
        }
      frontier_begin = frontier_end;
    }
  }
  const std::vector<EnumeratedElement>& elements() const { return elems_; }
  std::optional<std::size_t> find(const IVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<EnumeratedElement> elems_;
  std::unordered_map<IVec, std::size_t, IVecHash> index_;
};

/// A homomorphism given by generator images.
class MonoidHom {
 public:
  MonoidHom(std::shared_ptr<const FGMonoid> source,
            std::shared_ptr<const FGMonoid> target, std::vector<IVec> images)
      : source_(std::move(source)), target_(std::move(target)),
        images_(std::move(images)) {
    if (images_.size() != source_->num_generators())
      throw InvalidInput("one image per source generator is required");
    if (auto p = dynamic_cast<const PresentedFG*>(source_.get())) {
      for (const auto& r : p->monoid().presentation().relations())
        if (apply_word(r.lhs) != apply_word(r.rhs))
          throw InvalidInput("generator images do not respect the relation " +
                             p->monoid().to_string(r.lhs) + " ~ " +
                             p->monoid().to_string(r.rhs));
    }
  }

  const FGMonoid& source() const { return *source_; }
  const FGMonoid& target() const { return *target_; }
  const std::vector<IVec>& images() const { return images_; }

  IVec apply_word(const FreeElem& word) const {
    IVec x = target_->zero();
    for (std::size_t i = 0; i < word.rank(); ++i)
      for (std::uint32_t k = 0; k < word[i]; ++k) x = target_->add(x, images_[i]);
    return x;
  }

  /// Different words for the same source element must map alike; checked
  /// on all words with at most `bound` letters.  Returns a clash if found.
  std::optional<std::pair<FreeElem, FreeElem>> well_defined_up_to(
      std::uint32_t bound) const {
    std::unordered_map<IVec, std::pair<FreeElem, IVec>, IVecHash> seen;
    const std::size_t n = source_->num_generators();
    std::vector<FreeElem> layer{FreeElem(n)};
    std::set<std::vector<std::uint32_t>> visited{layer[0].e};
    for (std::uint32_t len = 0; len <= bound; ++len) {
      std::vector<FreeElem> next;
      for (const auto& w : layer) {
        IVec s = source_->combination(w);
        IVec t = apply_word(w);
        auto [it, fresh] = seen.try_emplace(s, w, t);
        if (!fresh && it->second.second != t) return std::make_pair(it->second.first, w);
        if (len == bound) continue;
        for (std::size_t g = 0; g < n; ++g) {
          FreeElem x = w;
          x[g] += 1;
          if (visited.insert(x.e).second) next.push_back(x);
        }
      }
      layer = std::move(next);
    }
    return std::nullopt;
  }

 private:
  std::shared_ptr<const FGMonoid> source_, target_;
  std::vector<IVec> images_;
};

// ----------------------------------------------------- bounded verdicts

struct KummerEntry {
  std::size_t target_generator;
  std::uint32_t multiple;
  IVec source_element;
};

struct KummerVerdict {
  bool holds = false;  ///< within the stated bounds
  std::uint32_t degree_bound = 0, multiple_bound = 0;
  std::vector<KummerEntry> table;
  std::string failure;  ///< empty when holds
  std::optional<std::pair<IVec, IVec>> injectivity_witness;
  std::optional<std::size_t> missing_generator;
};

/// The Kummer property up to bounds: injective on elements with at most
/// deg_bound generators, and n q in the image for some n <= mult_bound for
/// every target generator q.
inline KummerVerdict check_kummer(const MonoidHom& phi, std::uint32_t deg_bound,
                                  std::uint32_t mult_bound) {
  KummerVerdict v;
  v.degree_bound = deg_bound;
  v.multiple_bound = mult_bound;
  BoundedElements src(phi.source(), deg_bound);
  std::unordered_map<IVec, std::size_t, IVecHash> image_of;
  for (std::size_t k = 0; k < src.elements().size(); ++k) {
    IVec t = phi.apply_word(src.elements()[k].word);
    auto [it, fresh] = image_of.try_emplace(t, k);
    if (!fresh) {
      v.failure = "not injective";
      v.injectivity_witness = {src.elements()[it->second].value,
                               src.elements()[k].value};
      return v;
    }
  }
  const FGMonoid& q = phi.target();
  for (std::size_t g = 0; g < q.num_generators(); ++g) {
    IVec multiple = q.zero();
    bool found = false;
    for (std::uint32_t n = 1; n <= mult_bound && !found; ++n) {
      multiple = q.add(multiple, q.generator(g));
      auto it = image_of.find(multiple);
      if (it != image_of.end()) {
        v.table.push_back({g, n, src.elements()[it->second].value});
        found = true;
      }
    }
    if (!found) {
      v.failure = "no multiple of target generator " + std::to_string(g) +
                  " lies in the image";
      v.missing_generator = g;
      return v;
    }
  }
  v.holds = true;
  return v;
}

struct SquareWitness {
  IVec q1, q2, p1, p2;
};

struct MorphismVerdict {
  bool holds = false;  ///< within the bound
  std::uint32_t bound = 0;
  std::string failure;
  std::optional<SquareWitness> witness;
};

/// Integrality (and optionally the flatness supplement) of phi, with every
/// element involved a sum of at most `bound` generators.
inline MorphismVerdict check_integral_morphism(const MonoidHom& phi,
                                               std::uint32_t bound,
                                               bool flat = false) {
  MorphismVerdict v;
  v.bound = bound;
  const FGMonoid& P = phi.source();
  const FGMonoid& Q = phi.target();
  BoundedElements ps(P, bound), qs(Q, bound);
  std::vector<IVec> phi_p;
  for (const auto& e : ps.elements()) phi_p.push_back(phi.apply_word(e.word));

  // decompositions t = phi(p') + q'
  std::unordered_map<IVec, std::vector<std::pair<std::size_t, std::size_t>>, IVecHash>
      split;
  for (std::size_t a = 0; a < ps.elements().size(); ++a)
    for (std::size_t b = 0; b < qs.elements().size(); ++b)
      split[Q.add(phi_p[a], qs.elements()[b].value)].push_back({a, b});

  auto psum = [&](std::size_t a, std::size_t b) {
    return P.add(ps.elements()[a].value, ps.elements()[b].value);
  };

  // integral condition: pairs (p_i, q_i) with the same total
  for (const auto& [total, list] : split)
    for (const auto& [p1, q1] : list)
      for (const auto& [p2, q2] : list) {
        const auto& s1 = split[qs.elements()[q1].value];
        const auto& s2 = split[qs.elements()[q2].value];
        bool ok = false;
        for (const auto& [pp1, qq1] : s1) {
          for (const auto& [pp2, qq2] : s2)
            if (qq1 == qq2 && psum(p1, pp1) == psum(p2, pp2)) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        if (!ok) {
          v.failure = "integral square cannot be completed";
          v.witness = SquareWitness{qs.elements()[q1].value, qs.elements()[q2].value,
                                    ps.elements()[p1].value, ps.elements()[p2].value};
          return v;
        }
      }

  if (flat) {
    for (std::size_t qi = 0; qi < qs.elements().size(); ++qi) {
      const IVec& q = qs.elements()[qi].value;
      for (std::size_t p1 = 0; p1 < ps.elements().size(); ++p1)
        for (std::size_t p2 = 0; p2 < ps.elements().size(); ++p2) {
          if (Q.add(phi_p[p1], q) != Q.add(phi_p[p2], q)) continue;
          bool ok = false;
          for (const auto& [pp, qq] : split[q])
            if (psum(p1, pp) == psum(p2, pp)) {
              ok = true;
              break;
            }
          if (!ok) {
            v.failure = "flatness supplement fails";
            v.witness = SquareWitness{q, q, ps.elements()[p1].value,
                                      ps.elements()[p2].value};
            return v;
          }
        }
    }
  }
  v.holds = true;
  return v;
}

inline MorphismVerdict check_flat_morphism(const MonoidHom& phi, std::uint32_t bound) {
  return check_integral_morphism(phi, bound, true);
}

// ---------------------------------------------------------- minimal fiber

struct FiberResult {
  IVec minimum;                   ///< iota(lambda)
  std::size_t fiber_size = 0;     ///< fiber elements of value <= bound
  bool covered = false;           ///< all of them lie in iota + P
  std::vector<IVec> minimal;      ///< all <=_P-minimal elements found
  std::optional<IVec> uncovered;  ///< a fiber element outside iota + P
};

/// The <=_P-minimal element of the fiber of `quotient` over `lambda` in an
/// affine pair P in Q, searched among elements of value <= bound.  Throws
/// InvalidInput when the minimum is not unique.
inline FiberResult minimal_fiber(
    const AffineMonoid& P, const AffineMonoid& Q, const IVec& grading,
    const std::function<std::string(const IVec&)>& quotient,
    const std::string& lambda, std::int64_t bound) {
  auto value = [&](const IVec& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += grading[i] * v[i];
    return s;
  };
  for (const auto& g : Q.generators())
    if (value(g) < 1) throw CapabilityError("value grading is not positive on Q");
  // enumerate Q by value
  std::vector<IVec> all{Q.zero()};
  std::unordered_map<IVec, bool, IVecHash> seen{{Q.zero(), true}};
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& g : Q.generators()) {
      IVec x = ivec_add(all[k], g);
      if (value(x) > bound || seen.count(x)) continue;
      seen.emplace(x, true);
      all.push_back(x);
    }
  std::vector<IVec> fiber;
  for (const auto& x : all)
    if (quotient(x) == lambda) fiber.push_back(x);

  FiberResult r;
  r.fiber_size = fiber.size();
  auto in_P = [&](const IVec& d) {
    return affine_membership(P, d, grading).has_value();
  };
  for (const auto& x : fiber) {
    bool minimal = true;
    for (const auto& y : fiber)
      if (y != x && in_P(ivec_sub(x, y))) {
        minimal = false;
        break;
      }
    if (minimal) r.minimal.push_back(x);
  }
  if (r.minimal.size() != 1)
    throw InvalidInput("fiber over " + lambda + " has " +
                       std::to_string(r.minimal.size()) +
                       " minimal elements; the pair is not flat Kummer");
  r.minimum = r.minimal.front();
  r.covered = true;
  for (const auto& x : fiber)
    if (!in_P(ivec_sub(x, r.minimum))) {
      r.covered = false;
      r.uncovered = x;
      break;
    }
  return r;
}

}  // namespace coverforge
