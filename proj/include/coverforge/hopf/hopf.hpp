#pragma once

// Group algebras E = E0[A] over a finite base with their Hopf structure,
// ideals of finite algebras, Hopf-ideal checks, group-like elements modulo a
// Hopf ideal, and stabilizer ideals of covers over a finite base.
//
// Tensor products are over E0: E (x)_{E0} E = E0[A x A], with
// Delta(b T_l) = b T_(l,l), eps(b T_l) = b, sigma(b T_l) = b T_(-l).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coverforge/cover/datum.hpp"
#include "coverforge/hopf/algebra.hpp"
#include "coverforge/universal/group.hpp"

namespace coverforge {

// ------------------------------------------------------------------ ideals

class IdealSubspace {
 public:
  explicit IdealSubspace(AlgebraPtr ambient)
      : ambient_(std::move(ambient)), space_(ambient_->field(), ambient_->dim()) {}

  const AlgebraPtr& ambient() const { return ambient_; }
  std::size_t dim() const { return space_.rank(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_->dim(); }
  const RowSpace& space() const { return space_; }

  bool contains(const FAElem& x) const { return space_.contains(own(x).c); }
  /// Canonical representative of x modulo the ideal.
  FAElem reduce(const FAElem& x) const { return {ambient_, space_.reduce(own(x).c)}; }
  /// Echelon basis.
  std::vector<FAElem> basis() const {
    std::vector<FAElem> out;
    for (const auto& r : space_.rows()) out.push_back({ambient_, r});
    return out;
  }
  bool insert(const FAElem& x) { return space_.insert(own(x).c); }

  friend bool operator==(const IdealSubspace& a, const IdealSubspace& b) {
    return a.ambient_->same_as(*b.ambient_) && a.space_.rows() == b.space_.rows();
  }

 private:
  const FAElem& own(const FAElem& x) const {
    if (!x.alg || !x.alg->same_as(*ambient_)) throw RingMismatch("element outside the ideal's algebra");
    return x;
  }

  AlgebraPtr ambient_;
  RowSpace space_;
};

/// Smallest subspace containing gens and stable under multiplication by
/// every basis element.
inline IdealSubspace ideal_closure(const AlgebraPtr& E, const std::vector<FAElem>& gens) {
  IdealSubspace I(E);
  std::vector<FpVec> queue;
  auto push = [&](const FpVec& v) {
    if (I.insert({E, v})) queue.push_back(v);
  };
  for (const auto& g : gens) push(g.c);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    FpVec v = queue[q];
    for (std::size_t k = 0; k < E->dim(); ++k) {
      FpVec e(E->dim(), 0);
      e[k] = 1;
      push(E->mul(v, e));
    }
  }
  return I;
}

// ---------------------------------------------------------- group algebra

class GroupAlgebra {
 public:
  GroupAlgebra(AlgebraPtr base, AbelianGroup A) : base_(std::move(base)), A_(std::move(A)) {
    const std::size_t d0 = base_->dim(), n = A_.order();
    std::vector<std::string> labels;
    for (GroupElem l = 0; l < n; ++l)
      for (std::size_t b = 0; b < d0; ++b) {
        const auto& bl = base_->labels()[b];
        if (l == 0) labels.push_back(bl);
        else if (bl == "1") labels.push_back("T_" + A_.to_string(l));
        else labels.push_back(bl + "*T_" + A_.to_string(l));
      }
    FpVec unit(d0 * n, 0);
    auto one = base_->one();
    for (std::size_t b = 0; b < d0; ++b) unit[b] = one.c[b];
    E_ = FiniteAlgebra::make(
        base_->characteristic(), std::move(labels),
        [&](std::size_t i, std::size_t j) {
          FpVec v(d0 * n, 0);
          GroupElem li = i / d0, lj = j / d0;
          std::size_t l = A_.add(li, lj);
          for (auto [k, c] : base_->product(i % d0, j % d0)) v[l * d0 + k] = c;
          return v;
        },
        unit);
  }

  const AlgebraPtr& base() const { return base_; }
  const AlgebraPtr& algebra() const { return E_; }
  const AbelianGroup& group() const { return A_; }
  std::size_t dim() const { return E_->dim(); }
  std::size_t tensor_dim() const { return base_->dim() * A_.order() * A_.order(); }

  /// b (x) l
  FAElem element(const FAElem& b, GroupElem l) const {
    check_base(b);
    FAElem x = E_->zero();
    const std::size_t d0 = base_->dim();
    for (std::size_t k = 0; k < d0; ++k) x.c[l * d0 + k] = b.c[k];
    return x;
  }
  FAElem T(GroupElem l) const { return element(base_->one(), l); }
  FAElem embed(const FAElem& b) const { return element(b, 0); }

  /// Coordinates of x at the group element l, as a base element.
  FAElem slice(const FAElem& x, GroupElem l) const {
    const std::size_t d0 = base_->dim();
    return {base_, FpVec(x.c.begin() + static_cast<std::ptrdiff_t>(l * d0),
                         x.c.begin() + static_cast<std::ptrdiff_t>((l + 1) * d0))};
  }

  FAElem counit(const FAElem& x) const {
    check(x);
    FAElem r = base_->zero();
    for (GroupElem l = 0; l < A_.order(); ++l) r += slice(x, l);
    return r;
  }
  FAElem antipode(const FAElem& x) const {
    check(x);
    FAElem r = E_->zero();
    for (GroupElem l = 0; l < A_.order(); ++l) r += element(slice(x, l), A_.neg(l));
    return r;
  }

  FpVec coproduct(const FAElem& x) const {
    check(x);
    FpVec t(tensor_dim(), 0);
    for (GroupElem l = 0; l < A_.order(); ++l) place(t, l, l, slice(x, l).c);
    return t;
  }
  /// x (x) y
  FpVec tensor(const FAElem& x, const FAElem& y) const {
    check(x);
    check(y);
    FpVec t(tensor_dim(), 0);
    for (GroupElem l = 0; l < A_.order(); ++l) {
      auto xl = slice(x, l);
      if (coverforge::is_zero(xl)) continue;
      for (GroupElem m = 0; m < A_.order(); ++m) {
        auto ym = slice(y, m);
        if (!coverforge::is_zero(ym)) place(t, l, m, base_->mul(xl.c, ym.c));
      }
    }
    return t;
  }
  FpVec tensor_mul(const FpVec& u, const FpVec& v) const {
    const std::size_t n = A_.order();
    FpVec t(tensor_dim(), 0);
    for (GroupElem a = 0; a < n; ++a)
      for (GroupElem b = 0; b < n; ++b) {
        auto ua = tslice(u, a, b);
        if (is_zero_vec(ua)) continue;
        for (GroupElem c = 0; c < n; ++c)
          for (GroupElem d = 0; d < n; ++d) {
            auto vc = tslice(v, c, d);
            if (!is_zero_vec(vc)) place(t, A_.add(a, c), A_.add(b, d), base_->mul(ua, vc));
          }
      }
    return t;
  }

  std::string show_tensor(const FpVec& t) const {
    std::string s;
    for (GroupElem a = 0; a < A_.order(); ++a)
      for (GroupElem b = 0; b < A_.order(); ++b) {
        auto v = tslice(t, a, b);
        if (is_zero_vec(v)) continue;
        if (!s.empty()) s += " + ";
        s += "(" + base_->show(v) + ")*T_" + A_.to_string(a) + "(x)T_" + A_.to_string(b);
      }
    return s.empty() ? "0" : s;
  }

  /// Group elements are group-like and Delta, eps, sigma are multiplicative
  /// and unital on all basis pairs; returns the first failure.
  std::optional<std::string> structure_failure() const {
    for (GroupElem l = 0; l < A_.order(); ++l) {
      if (coproduct(T(l)) != tensor(T(l), T(l))) return "Delta(T_" + A_.to_string(l) + ") != T (x) T";
      if (!(counit(T(l)) == base_->one())) return "eps(T_" + A_.to_string(l) + ") != 1";
    }
    if (!(antipode(E_->one()) == E_->one())) return "sigma(1) != 1";
    for (std::size_t i = 0; i < dim(); ++i) {
      auto ei = E_->basis(i);
      auto di = coproduct(ei);
      for (std::size_t j = i; j < dim(); ++j) {
        auto ej = E_->basis(j);
        auto p = ei * ej;
        const auto& li = E_->labels()[i];
        const auto& lj = E_->labels()[j];
        if (coproduct(p) != tensor_mul(di, coproduct(ej))) return "Delta(" + li + " * " + lj + ")";
        if (!(counit(p) == counit(ei) * counit(ej))) return "eps(" + li + " * " + lj + ")";
        if (!(antipode(p) == antipode(ei) * antipode(ej))) return "sigma(" + li + " * " + lj + ")";
      }
    }
    return std::nullopt;
  }

 private:
  void check(const FAElem& x) const {
    if (!x.alg || !x.alg->same_as(*E_)) throw RingMismatch("element outside the group algebra");
  }
  void check_base(const FAElem& b) const {
    if (!b.alg || !b.alg->same_as(*base_)) throw RingMismatch("element outside the base algebra");
  }
  void place(FpVec& t, GroupElem a, GroupElem b, const FpVec& v) const {
    const std::size_t d0 = base_->dim(), off = (a * A_.order() + b) * d0;
    const auto& f = base_->field();
    for (std::size_t k = 0; k < d0; ++k) t[off + k] = f.add(t[off + k], v[k]);
  }
  FpVec tslice(const FpVec& t, GroupElem a, GroupElem b) const {
    const std::size_t d0 = base_->dim(), off = (a * A_.order() + b) * d0;
    return FpVec(t.begin() + static_cast<std::ptrdiff_t>(off),
                 t.begin() + static_cast<std::ptrdiff_t>(off + d0));
  }

  AlgebraPtr base_;
  AbelianGroup A_;
  AlgebraPtr E_;
};

// ------------------------------------------------------------ Hopf ideals

struct HopfVerdict {
  bool ok = true;
  std::string axiom;    ///< "counit", "antipode" or "coproduct"
  std::string witness;  ///< the offending basis vector of I
  std::string message() const {
    return ok ? "Hopf ideal" : axiom + " condition fails at " + witness;
  }
};

/// A group algebra together with an ideal I and the tensor ideal
/// I (x) E + E (x) I.
class HopfQuotient {
 public:
  HopfQuotient(GroupAlgebra S, IdealSubspace I)
      : S_(std::move(S)), I_(std::move(I)), J_(S_.base()->field(), S_.tensor_dim()) {
    if (!I_.ambient()->same_as(*S_.algebra())) throw RingMismatch("ideal of a different algebra");
    for (const auto& i : I_.basis())
      for (GroupElem m = 0; m < S_.group().order(); ++m) {
        J_.insert(S_.tensor(i, S_.T(m)));
        J_.insert(S_.tensor(S_.T(m), i));
      }
  }

  const GroupAlgebra& structure() const { return S_; }
  const IdealSubspace& ideal() const { return I_; }
  bool in_tensor_ideal(const FpVec& t) const { return J_.contains(t); }

  HopfVerdict verify() const {
    for (const auto& i : I_.basis()) {
      auto show = to_string(i);
      if (!coverforge::is_zero(S_.counit(i))) return {false, "counit", show};
      if (!I_.contains(S_.antipode(i))) return {false, "antipode", show};
      if (!in_tensor_ideal(S_.coproduct(i))) return {false, "coproduct", show};
    }
    return {};
  }

  /// Delta(g) - g (x) g in I (x) E + E (x) I and eps(g) = 1.
  bool is_grouplike(const FAElem& g) const {
    if (!(S_.counit(g) == S_.base()->one())) return false;
    FpVec d = S_.coproduct(g), gg = S_.tensor(g, g);
    const auto& f = S_.base()->field();
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = f.sub(d[k], gg[k]);
    return in_tensor_ideal(d);
  }

 private:
  GroupAlgebra S_;
  IdealSubspace I_;
  RowSpace J_;
};

inline HopfVerdict is_hopf_ideal(const GroupAlgebra& S, const IdealSubspace& I) {
  return HopfQuotient(S, I).verify();
}

inline HopfQuotient checked_quotient(const GroupAlgebra& S, const IdealSubspace& I) {
  HopfQuotient q(S, I);
  auto v = q.verify();
  if (!v.ok) throw InvalidInput("not a Hopf ideal: " + v.message());
  return q;
}

inline bool is_grouplike_mod(const GroupAlgebra& S, const IdealSubspace& I, const FAElem& g) {
  return checked_quotient(S, I).is_grouplike(g);
}

struct GrouplikeSearch {
  std::vector<FAElem> classes;  ///< one group-like per class modulo I, in search order
  std::uint64_t tested = 0;
  std::size_t directions = 0;   ///< g ranges over 1 + span of this many directions
};

/// All group-like g = 1 + sum c_i d_i (c_i in GF(p)) modulo I.
inline GrouplikeSearch grouplike_search(const HopfQuotient& q, const std::vector<FAElem>& directions,
                                        std::size_t cap = 24) {
  if (directions.size() > cap)
    throw CapabilityError(std::to_string(directions.size()) + " search directions exceed the cap of " +
                          std::to_string(cap));
  const auto& S = q.structure();
  const auto p = S.base()->characteristic();
  GrouplikeSearch out;
  out.directions = directions.size();
  std::set<FpVec> seen;
  std::vector<std::uint32_t> coef(directions.size(), 0);
  while (true) {
    FAElem g = S.algebra()->one();
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (coef[i]) g += from_integer(g, Integer(static_cast<unsigned long>(coef[i]))) * directions[i];
    ++out.tested;
    if (q.is_grouplike(g) && seen.insert(q.ideal().reduce(g).c).second) out.classes.push_back(g);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  return out;
}

inline GrouplikeSearch grouplike_search(const GroupAlgebra& S, const IdealSubspace& I,
                                        const std::vector<FAElem>& directions, std::size_t cap = 24) {
  return grouplike_search(checked_quotient(S, I), directions, cap);
}

struct ResidueComparison {
  std::vector<GroupElem> fiber_classes;    ///< one T_l per group-like of the fiber
  std::vector<std::size_t> lifts;          ///< group-like lifts of each class modulo I
  std::size_t directions = 0;
  std::uint64_t tested = 0;
  bool isomorphism() const {
    for (auto n : lifts)
      if (n != 1) return false;
    return true;
  }
};

/// Compares group-likes of E/I with those of the fiber E/(I + mE), where m
/// is the maximal ideal of a local base with residue field GF(p).  Lifts are
/// searched in T_l (1 + m * span(directions)); `directions` defaults to all T_l.
inline ResidueComparison grouplike_residue_compare(const GroupAlgebra& S, const IdealSubspace& I,
                                                   const IdealSubspace& m,
                                                   std::vector<FAElem> directions = {},
                                                   std::size_t cap = 24) {
  const auto& A = S.group();
  const auto p = S.base()->characteristic();
  if (A.order() % p == 0)
    throw CapabilityError("|A| = " + std::to_string(A.order()) + " is not invertible in characteristic " +
                          std::to_string(p));
  if (!m.ambient()->same_as(*S.base())) throw RingMismatch("m is not an ideal of the base");
  if (m.dim() + 1 != S.base()->dim() || ideal_closure(m.ambient(), m.basis()).dim() != m.dim())
    throw InvalidInput("m is not an ideal with residue field GF(" + std::to_string(p) + ")");
  // m nilpotent: then the base is local with maximal ideal m
  std::vector<FAElem> power = m.basis();
  for (std::size_t k = 0; !power.empty(); ++k) {
    if (k > S.base()->dim()) throw InvalidInput("m is not nilpotent, so the base is not local with maximal ideal m");
    std::vector<FAElem> next;
    for (const auto& x : power)
      for (const auto& y : m.basis()) next.push_back(x * y);
    power = ideal_closure(m.ambient(), next).basis();
  }

  auto q = checked_quotient(S, I);
  if (directions.empty())
    for (GroupElem l = 0; l < A.order(); ++l) directions.push_back(S.T(l));
  std::vector<FAElem> searched;
  for (const auto& mb : m.basis())
    for (const auto& d : directions) searched.push_back(S.embed(mb) * d);
  auto found = grouplike_search(q, searched, cap);

  IdealSubspace fiber = I;
  for (const auto& mb : m.basis())
    for (GroupElem l = 0; l < A.order(); ++l) fiber.insert(S.element(mb, l));

  ResidueComparison out;
  out.directions = searched.size();
  out.tested = found.tested;
  std::vector<FpVec> keys;
  std::vector<std::set<FpVec>> lifts;
  for (GroupElem l = 0; l < A.order(); ++l) {
    auto key = fiber.reduce(S.T(l)).c;
    std::size_t cls = 0;
    while (cls < keys.size() && keys[cls] != key) ++cls;
    if (cls == keys.size()) {
      keys.push_back(key);
      out.fiber_classes.push_back(l);
      lifts.emplace_back();
    }
    for (const auto& g : found.classes) lifts[cls].insert(I.reduce(S.T(l) * g).c);
  }
  for (const auto& s : lifts) out.lifts.push_back(s.size());
  return out;
}

// ---------------------------------------------------------------- covers

/// The cover algebra of a datum over a finite base, flattened to a finite
/// algebra with basis b * x_l.
struct FlatCover {
  AlgebraPtr base;
  AlgebraPtr algebra;
  AbelianGroup group;

  FAElem x(GroupElem l) const { return algebra->basis(l * base->dim() + index_of_one()); }
  /// b * x_0
  FAElem embed(const FAElem& b) const {
    FAElem r = algebra->zero();
    for (std::size_t k = 0; k < base->dim(); ++k) r.c[k] = b.c[k];
    return r;
  }
  /// b * x_l
  FAElem term(const FAElem& b, GroupElem l) const {
    FAElem r = algebra->zero();
    for (std::size_t k = 0; k < base->dim(); ++k) r.c[l * base->dim() + k] = b.c[k];
    return r;
  }

 private:
  std::size_t index_of_one() const {
    auto one = base->one();
    for (std::size_t k = 0; k < one.c.size(); ++k)
      if (one.c[k] == 1 && is_zero_vec(FpVec(one.c.begin(), one.c.begin() + static_cast<std::ptrdiff_t>(k))) &&
          is_zero_vec(FpVec(one.c.begin() + static_cast<std::ptrdiff_t>(k + 1), one.c.end())))
        return k;
    throw CapabilityError("the base unit is not a basis vector");
  }
};

inline FlatCover flatten_cover(const BuildingDatum<FAElem>& d) {
  const auto& A = d.group();
  AlgebraPtr base = d.target().one.alg;
  const std::size_t d0 = base->dim(), n = A.order();
  std::vector<std::string> labels;
  for (GroupElem l = 0; l < n; ++l)
    for (std::size_t b = 0; b < d0; ++b) {
      const auto& bl = base->labels()[b];
      if (l == 0) labels.push_back(bl);
      else if (bl == "1") labels.push_back("x_" + A.to_string(l));
      else labels.push_back(bl + "*x_" + A.to_string(l));
    }
  FpVec unit(d0 * n, 0);
  for (std::size_t k = 0; k < d0; ++k) unit[k] = base->one().c[k];
  auto alg = FiniteAlgebra::make(
      base->characteristic(), std::move(labels),
      [&](std::size_t i, std::size_t j) {
        GroupElem li = i / d0, lj = j / d0;
        FpVec bb(d0, 0);
        for (auto [k, c] : base->product(i % d0, j % d0)) bb[k] = c;
        FpVec w = base->mul(bb, d(li, lj).c);
        FpVec v(d0 * n, 0);
        std::size_t off = A.add(li, lj) * d0;
        for (std::size_t k = 0; k < d0; ++k) v[off + k] = w[k];
        return v;
      },
      unit);
  return {base, alg, A};
}

struct Stabilizer {
  FlatCover cover;
  GroupAlgebra structure;
  std::vector<FAElem> generators;  ///< x_l (T_l - 1), l != 0
  IdealSubspace ideal;
};

/// The ideal of O_X[A] generated by x_l (T_l - 1).
inline Stabilizer stabilizer_ideal(const BuildingDatum<FAElem>& d) {
  FlatCover cover = flatten_cover(d);
  GroupAlgebra S(cover.algebra, d.group());
  std::vector<FAElem> gens;
  for (GroupElem l = 1; l < d.group().order(); ++l) {
    FAElem xl = cover.x(l);
    gens.push_back(S.element(xl, l) - S.embed(xl));
  }
  IdealSubspace I = ideal_closure(S.algebra(), gens);
  return {std::move(cover), std::move(S), std::move(gens), std::move(I)};
}

}  // namespace coverforge
