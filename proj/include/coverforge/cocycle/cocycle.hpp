#pragma once

// Commutative 2-cocycles A x A -> P for a finite abelian group A.  The
// target monoid is a policy: NatVector (N^k, additive), AffineTarget (a
// submonoid of Z^k), PresentedTarget (a finitely presented monoid, values in
// normal form) or RingTarget<R> (the multiplicative monoid of a ring).  Tables store lambda <= lambda' only.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/monoid.hpp"
#include "coverforge/ring.hpp"
#include "coverforge/universal/group.hpp"

namespace coverforge {

struct NatVector {
  using Value = IVec;
  std::size_t dim = 1;

  Value identity() const { return IVec(dim, 0); }
  Value combine(const Value& a, const Value& b) const { return ivec_add(a, b); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  std::string show(const Value& v) const {
    return dim == 1 ? std::to_string(v[0]) : coverforge::to_string(v);
  }
  void check(const Value& v) const {
    if (v.size() != dim)
      throw InvalidInput("value " + coverforge::to_string(v) + " is not in N^" +
                         std::to_string(dim));
    for (auto x : v)
      if (x < 0) throw InvalidInput("negative entry in " + coverforge::to_string(v));
  }
  bool same(const NatVector& o) const { return dim == o.dim; }
  std::string name() const { return dim == 1 ? "N" : "N^" + std::to_string(dim); }

  std::shared_ptr<const FGMonoid> fg() const {
    return std::make_shared<AffineMonoid>(AffineMonoid::free(dim));
  }
  IVec to_ivec(const Value& v) const { return v; }
};

/// An affine monoid inside Z^k; values are its elements as vectors.
struct AffineTarget {
  using Value = IVec;
  std::shared_ptr<const AffineMonoid> monoid;
  IVec grading;  ///< positive on the generators, used for membership

  Value identity() const { return monoid->zero(); }
  Value combine(const Value& a, const Value& b) const { return ivec_add(a, b); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  std::string show(const Value& v) const { return coverforge::to_string(v); }
  void check(const Value& v) const {
    if (!affine_membership(*monoid, v, grading))
      throw InvalidInput(coverforge::to_string(v) + " is not in the monoid");
  }
  bool same(const AffineTarget& o) const { return monoid == o.monoid; }
  std::string name() const { return "affine monoid in Z^" + std::to_string(monoid->ambient()); }

  std::shared_ptr<const FGMonoid> fg() const { return monoid; }
  IVec to_ivec(const Value& v) const { return v; }
};

struct PresentedTarget {
  using Value = FreeElem;
  std::shared_ptr<const PresentedMonoid> monoid;

  Value identity() const { return monoid->zero(); }
  Value combine(const Value& a, const Value& b) const { return monoid->add(a, b); }
  bool equal(const Value& a, const Value& b) const { return monoid->equal(a, b); }
  std::string show(const Value& v) const { return monoid->to_string(monoid->normal_form(v)); }
  void check(const Value& v) const { monoid->system().check_rank(v); }
  bool same(const PresentedTarget& o) const { return monoid == o.monoid; }
  std::string name() const { return "presented monoid of rank " + std::to_string(monoid->rank()); }

  std::shared_ptr<const FGMonoid> fg() const { return std::make_shared<PresentedFG>(monoid); }
  IVec to_ivec(const Value& v) const { return PresentedFG::from(monoid->normal_form(v)); }
};

template <class R>
struct RingTarget {
  using Value = R;
  R one;

  Value identity() const { return one; }
  Value combine(const Value& a, const Value& b) const { return a * b; }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  std::string show(const Value& v) const { return to_string(v); }
  void check(const Value& v) const { (void)(v == one); }
  bool same(const RingTarget& o) const {
    try {
      return one == o.one;
    } catch (const RingMismatch&) {
      return false;
    }
  }
  std::string name() const { return "(R, *)"; }
};

struct CocycleViolation {
  int axiom = 0;                    ///< 1: f(0,l) = 0, 3: exchange identity
  std::vector<GroupElem> witness;   ///< (l) or (l, l', l'')
  std::string message;
};

template <class Target>
class Cocycle {
 public:
  using Value = typename Target::Value;

  /// The identity table.
  Cocycle(AbelianGroup A, Target target) : A_(std::move(A)), t_(std::move(target)) {
    const std::size_t n = A_.order();
    table_.assign(n * (n + 1) / 2, t_.identity());
  }

  const AbelianGroup& group() const { return A_; }
  const Target& target() const { return t_; }

  const Value& operator()(GroupElem a, GroupElem b) const { return table_[slot(a, b)]; }
  void set(GroupElem a, GroupElem b, Value v) {
    t_.check(v);
    table_[slot(a, b)] = std::move(v);
  }

  /// First violated axiom, checking f(0, l) for all l and then the
  /// exchange identity over triples in lexicographic order.
  std::optional<CocycleViolation> validate() const {
    const std::size_t n = A_.order();
    for (GroupElem l = 0; l < n; ++l)
      if (!t_.equal((*this)(0, l), t_.identity()))
        return CocycleViolation{1, {l}, "f(0," + A_.to_string(l) + ") = " +
                                            t_.show((*this)(0, l)) + " is not the identity"};
    for (GroupElem a = 0; a < n; ++a)
      for (GroupElem b = 0; b < n; ++b)
        for (GroupElem c = 0; c < n; ++c) {
          Value lhs = t_.combine((*this)(a, b), (*this)(A_.add(a, b), c));
          Value rhs = t_.combine((*this)(b, c), (*this)(A_.add(b, c), a));
          if (!t_.equal(lhs, rhs))
            return CocycleViolation{
                3, {a, b, c},
                "exchange identity fails at (" + A_.to_string(a) + ", " + A_.to_string(b) +
                    ", " + A_.to_string(c) + "): " + t_.show(lhs) + " vs " + t_.show(rhs)};
        }
    return std::nullopt;
  }
  const Cocycle& validated() const {
    if (auto v = validate()) throw InvalidInput("not a 2-cocycle: " + v->message);
    return *this;
  }

  /// "{(1,1): 0, (1,2): 1, (2,2): 1}", entries with both indices nonzero.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (GroupElem a = 1; a < A_.order(); ++a)
      for (GroupElem b = a; b < A_.order(); ++b) {
        s += first ? "" : ", ";
        first = false;
        s += "(" + A_.to_string(a) + "," + A_.to_string(b) + "): " + t_.show((*this)(a, b));
      }
    return s + "}";
  }

  friend bool operator==(const Cocycle& f, const Cocycle& g) {
    if (!(f.A_ == g.A_) || !f.t_.same(g.t_)) return false;
    for (std::size_t k = 0; k < f.table_.size(); ++k)
      if (!f.t_.equal(f.table_[k], g.table_[k])) return false;
    return true;
  }

 private:
  std::size_t slot(GroupElem a, GroupElem b) const {
    A_.check(a);
    A_.check(b);
    if (a > b) std::swap(a, b);
    const std::size_t n = A_.order();
    return a * n - a * (a - 1) / 2 + (b - a);
  }

  AbelianGroup A_;
  Target t_;
  std::vector<Value> table_;
};

template <class Target>
Cocycle<Target> add(const Cocycle<Target>& f, const Cocycle<Target>& g) {
  if (!(f.group() == g.group())) throw InvalidInput("cocycles on different groups");
  if (!f.target().same(g.target())) throw InvalidInput("cocycles with different targets");
  Cocycle<Target> h(f.group(), f.target());
  for (GroupElem a = 0; a < f.group().order(); ++a)
    for (GroupElem b = a; b < f.group().order(); ++b)
      h.set(a, b, f.target().combine(f(a, b), g(a, b)));
  return h;
}

// ------------------------------------------------------------- Pardini

/// A surjection phi: A -> N onto a cyclic group together with a generator
/// psi of N.
struct PardiniData {
  GroupHom phi;
  GroupElem psi;

  const AbelianGroup& group() const { return phi.source(); }
  const AbelianGroup& quotient() const { return phi.target(); }

  void check() const {
    if (quotient().cyclic_orders().size() > 1)
      throw InvalidInput("the quotient " + quotient().description() + " is not cyclic");
    quotient().check(psi);
    if (static_cast<std::size_t>(quotient().element_order(psi)) != quotient().order())
      throw InvalidInput("psi = " + quotient().to_string(psi) + " does not generate " +
                         quotient().description());
    if (!phi.surjective()) throw InvalidInput("phi is not surjective");
  }
  /// i(l) = min { a >= 0 : a * psi = phi(l) }.
  std::int64_t index(GroupElem l) const {
    GroupElem target = phi(l);
    GroupElem x = quotient().zero();
    for (std::int64_t a = 0;; ++a, x = quotient().add(x, psi))
      if (x == target) return a;
  }
};

inline PardiniData pardini_cyclic(std::int64_t n, GroupElem psi) {
  AbelianGroup z = AbelianGroup::cyclic(n);
  return {GroupHom(z, z, {z.standard_generator(0)}), psi};
}

inline Cocycle<NatVector> pardini_epsilon(const PardiniData& d) {
  d.check();
  const auto& A = d.group();
  const auto N = static_cast<std::int64_t>(d.quotient().order());
  Cocycle<NatVector> f(A, NatVector{1});
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      f.set(a, b, {d.index(a) + d.index(b) < N ? 0 : 1});
  if (auto v = f.validate())
    throw std::logic_error("epsilon table is not a cocycle: " + v->message);
  return f;
}

/// All N-valued cocycles with entries in [0, max_entry], by brute force over
/// tables on pairs of nonzero elements.
inline std::vector<Cocycle<NatVector>> enumerate_nat_cocycles(const AbelianGroup& A,
                                                              std::int64_t max_entry) {
  std::vector<std::pair<GroupElem, GroupElem>> cells;
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) cells.emplace_back(a, b);
  std::vector<Cocycle<NatVector>> out;
  Cocycle<NatVector> f(A, NatVector{1});
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      if (!f.validate()) out.push_back(f);
      return;
    }
    for (std::int64_t v = 0; v <= max_entry; ++v) {
      f.set(cells[k].first, cells[k].second, {v});
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------- free extensions

/// An extension 0 -> P -> E -> A -> 0 in which E is free over P with basis
/// iota(A): every element is gamma(p) + iota(l) for exactly one (p, l), and
/// `decompose` returns that pair (nullopt when it does not exist).
template <class Elem, class Target>
struct FreeExtension {
  using Value = typename Target::Value;
  AbelianGroup group;
  Target base;
  std::function<Elem(const Elem&, const Elem&)> add;
  std::function<Elem(const Value&)> gamma;
  std::function<Elem(GroupElem)> iota;
  std::function<std::optional<std::pair<Value, GroupElem>>(const Elem&)> decompose;
  std::function<bool(const Elem&, const Elem&)> equal;
  std::function<std::string(const Elem&)> show;

  Elem element(const Value& p, GroupElem l) const { return add(gamma(p), iota(l)); }
};

template <class Target>
struct TwistedElem {
  typename Target::Value p;
  GroupElem lambda = 0;
};

/// Theta: P x A with (p, l) + (p', l') = (p + p' + f(l, l'), l + l').
template <class Target>
FreeExtension<TwistedElem<Target>, Target> extension_from_cocycle(const Cocycle<Target>& f) {
  f.validated();
  using E = TwistedElem<Target>;
  using Value = typename Target::Value;
  auto A = f.group();
  auto t = f.target();
  FreeExtension<E, Target> ext{A, t, {}, {}, {}, {}, {}, {}};
  ext.add = [f, A, t](const E& x, const E& y) {
    return E{t.combine(t.combine(x.p, y.p), f(x.lambda, y.lambda)), A.add(x.lambda, y.lambda)};
  };
  ext.gamma = [](const Value& p) { return E{p, 0}; };
  ext.iota = [t](GroupElem l) { return E{t.identity(), l}; };
  ext.decompose = [](const E& x) {
    return std::optional<std::pair<Value, GroupElem>>({x.p, x.lambda});
  };
  ext.equal = [t](const E& x, const E& y) { return x.lambda == y.lambda && t.equal(x.p, y.p); };
  ext.show = [A, t](const E& x) { return "(" + t.show(x.p) + ", " + A.to_string(x.lambda) + ")"; };
  return ext;
}

/// Psi: f(l, l') is the P-part of iota(l) + iota(l').
template <class Elem, class Target>
Cocycle<Target> cocycle_from_extension(const FreeExtension<Elem, Target>& ext) {
  const auto& A = ext.group;
  Cocycle<Target> f(A, ext.base);
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) {
      Elem s = ext.add(ext.iota(a), ext.iota(b));
      auto d = ext.decompose(s);
      if (!d)
        throw NotFree("iota(" + A.to_string(a) + ") + iota(" + A.to_string(b) + ") = " +
                      ext.show(s) + " is not of the form gamma(p) + iota(l)");
      if (d->second != A.add(a, b))
        throw NotFree("iota(" + A.to_string(a) + ") + iota(" + A.to_string(b) +
                      ") lies over " + A.to_string(d->second) + ", not over " +
                      A.to_string(A.add(a, b)));
      f.set(a, b, d->first);
    }
  return f;
}

/// Associativity, commutativity and the neutral element of E on all
/// combinations of the given sample elements.  Returns a description of the
/// first failure.
template <class Elem, class Target>
std::optional<std::string> check_extension_axioms(
    const FreeExtension<Elem, Target>& ext, const std::vector<Elem>& samples) {
  Elem zero = ext.iota(0);
  for (const auto& x : samples) {
    if (!ext.equal(ext.add(x, zero), x)) return "0 is not neutral for " + ext.show(x);
    for (const auto& y : samples) {
      if (!ext.equal(ext.add(x, y), ext.add(y, x)))
        return "addition does not commute on " + ext.show(x) + ", " + ext.show(y);
      for (const auto& z : samples)
        if (!ext.equal(ext.add(ext.add(x, y), z), ext.add(x, ext.add(y, z))))
          return "addition is not associative on " + ext.show(x) + ", " + ext.show(y) +
                 ", " + ext.show(z);
    }
  }
  return std::nullopt;
}

/// The map E -> E', gamma(p) + iota(l) -> gamma'(p) + iota'(l), is additive
/// on all pairs of samples.  Returns the first failing pair.
template <class E1, class E2, class Target>
std::optional<std::string> check_extension_iso(const FreeExtension<E1, Target>& a,
                                               const FreeExtension<E2, Target>& b,
                                               const std::vector<E1>& samples) {
  auto map = [&](const E1& x) -> E2 {
    auto d = a.decompose(x);
    if (!d) throw NotFree(a.show(x) + " has no decomposition");
    return b.element(d->first, d->second);
  };
  for (const auto& x : samples)
    for (const auto& y : samples)
      if (!b.equal(map(a.add(x, y)), b.add(map(x), map(y))))
        return "not additive on " + a.show(x) + ", " + a.show(y);
  return std::nullopt;
}

}  // namespace coverforge
