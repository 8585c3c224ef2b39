#pragma once

// Building data of D(A)-covers with trivialized line bundles: a table of
// sections s_{l,l'} in a ring R.  The cover algebra is the free R-module on
// v_l (l in A, canonical order, v_0 = 1) with v_l v_l' = s_{l,l'} v_{l+l'}.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coverforge/cocycle/cocycle.hpp"
#include "coverforge/ring.hpp"

namespace coverforge {

template <class R>
using BuildingDatum = Cocycle<RingTarget<R>>;

/// The datum with every section equal to 1 (the trivial torsor).
template <class R>
BuildingDatum<R> trivial_datum(const AbelianGroup& A, const R& one) {
  return BuildingDatum<R>(A, RingTarget<R>{one});
}

/// Base change of every section along a ring map.
template <class S, class R, class F>
BuildingDatum<S> map_datum(const BuildingDatum<R>& d, const S& one, F&& f) {
  const auto& A = d.group();
  BuildingDatum<S> out(A, RingTarget<S>{one});
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) out.set(a, b, f(d(a, b)));
  return out;
}

template <class R>
class CoverAlgebra {
 public:
  using Elem = std::vector<R>;

  explicit CoverAlgebra(BuildingDatum<R> d) : d_(std::move(d)) {}

  const BuildingDatum<R>& datum() const { return d_; }
  const AbelianGroup& group() const { return d_.group(); }
  std::size_t rank() const { return d_.group().order(); }
  const R& one_scalar() const { return d_.target().one; }

  Elem zero() const { return Elem(rank(), zero_like(one_scalar())); }
  Elem basis(GroupElem l) const {
    Elem x = zero();
    x.at(l) = one_scalar();
    return x;
  }
  Elem one() const { return basis(0); }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c = a;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
    return c;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (GroupElem x = 0; x < rank(); ++x) {
      if (is_zero(a[x])) continue;
      for (GroupElem y = 0; y < rank(); ++y) {
        if (is_zero(b[y])) continue;
        c[group().add(x, y)] += a[x] * b[y] * d_(x, y);
      }
    }
    return c;
  }

  /// Matrix of y -> x * y; column k holds x * v_k.
  Matrix<R> multiplication_matrix(const Elem& x) const {
    Matrix<R> m(rank(), rank(), zero_like(one_scalar()));
    for (GroupElem k = 0; k < rank(); ++k) {
      Elem col = mul(x, basis(k));
      for (GroupElem i = 0; i < rank(); ++i) m(i, k) = col[i];
    }
    return m;
  }
  R trace(const Elem& x) const {
    Matrix<R> m = multiplication_matrix(x);
    R t = zero_like(one_scalar());
    for (std::size_t i = 0; i < rank(); ++i) t += m(i, i);
    return t;
  }

  std::string show(const Elem& x) const {
    std::string s;
    for (GroupElem l = 0; l < rank(); ++l) {
      if (is_zero(x[l])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(x[l]) + ")*v_" + group().to_string(l);
    }
    return s.empty() ? "0" : s;
  }

 private:
  BuildingDatum<R> d_;
};

struct AlgebraVerdict {
  bool associative = true;
  bool commutative = true;
  bool unital = true;
  std::string witness;
  bool ok() const { return associative && commutative && unital; }
};

/// Ring axioms of the cover algebra on all basis triples, plus `random_elems`
/// triples of random combinations with small integer coefficients.
template <class R>
AlgebraVerdict algebra_oracle(const CoverAlgebra<R>& alg, std::size_t random_elems = 0,
                              unsigned seed = 1) {
  AlgebraVerdict v;
  const std::size_t n = alg.rank();
  const auto& A = alg.group();
  std::vector<typename CoverAlgebra<R>::Elem> basis;
  for (GroupElem l = 0; l < n; ++l) basis.push_back(alg.basis(l));
  for (GroupElem a = 0; a < n; ++a) {
    if (alg.mul(alg.one(), basis[a]) != basis[a]) {
      v.unital = false;
      v.witness = "v_0 * v_" + A.to_string(a) + " != v_" + A.to_string(a);
      return v;
    }
    for (GroupElem b = 0; b < n; ++b) {
      if (alg.mul(basis[a], basis[b]) != alg.mul(basis[b], basis[a])) {
        v.commutative = false;
        v.witness = "v_" + A.to_string(a) + " v_" + A.to_string(b);
        return v;
      }
      for (GroupElem c = 0; c < n; ++c)
        if (alg.mul(alg.mul(basis[a], basis[b]), basis[c]) !=
            alg.mul(basis[a], alg.mul(basis[b], basis[c]))) {
          v.associative = false;
          v.witness = "(" + A.to_string(a) + ", " + A.to_string(b) + ", " + A.to_string(c) + ")";
          return v;
        }
    }
  }
  std::mt19937 rng(seed);
  auto random_elem = [&] {
    auto x = alg.zero();
    for (auto& c : x) c = from_integer(alg.one_scalar(), Integer(static_cast<long>(rng() % 7) - 3));
    return x;
  };
  for (std::size_t t = 0; t < random_elems; ++t) {
    auto x = random_elem(), y = random_elem(), z = random_elem();
    if (alg.mul(alg.mul(x, y), z) != alg.mul(x, alg.mul(y, z))) {
      v.associative = false;
      v.witness = "random triple " + alg.show(x) + "; " + alg.show(y) + "; " + alg.show(z);
      return v;
    }
  }
  return v;
}

template <class R>
struct DatumVerdict {
  std::optional<CocycleViolation> violation;
  AlgebraVerdict algebra;
  bool ok() const { return !violation && algebra.ok(); }
};

/// Cocycle axioms in multiplicative form, together with the algebra oracle.
template <class R>
DatumVerdict<R> validate_datum(const BuildingDatum<R>& d, std::size_t random_elems = 0) {
  return {d.validate(), algebra_oracle(CoverAlgebra<R>(d), random_elems)};
}

template <class R>
bool is_torsor(const BuildingDatum<R>& d) {
  const auto& A = d.group();
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      if (!is_unit(d(a, b))) return false;
  return true;
}

template <class R>
BuildingDatum<R> inverse_torsor(const BuildingDatum<R>& d) {
  const auto& A = d.group();
  BuildingDatum<R> inv(A, d.target());
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) {
      auto u = try_inverse(d(a, b));
      if (!u)
        throw InvalidInput("not a torsor: s_{" + A.to_string(a) + "," + A.to_string(b) +
                           "} = " + to_string(d(a, b)) + " is not a unit");
      inv.set(a, b, *u);
    }
  return inv;
}

/// s(l, l') = s1(phi1 l, phi1 l') * s2(phi2 l, phi2 l').
template <class R>
BuildingDatum<R> wedge(const BuildingDatum<R>& d1, const BuildingDatum<R>& d2,
                       const GroupHom& phi1, const GroupHom& phi2) {
  if (!(phi1.source() == phi2.source()))
    throw InvalidInput("the two homomorphisms have different sources");
  if (!(phi1.target() == d1.group()) || !(phi2.target() == d2.group()))
    throw InvalidInput("homomorphism targets do not match the data");
  if (!d1.target().same(d2.target())) throw RingMismatch("wedge of data over different rings");
  const auto& A = phi1.source();
  BuildingDatum<R> w(A, d1.target());
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      w.set(a, b, d1(phi1(a), phi1(b)) * d2(phi2(a), phi2(b)));
  return w;
}

/// Wedge of two data over the same group along identities.
template <class R>
BuildingDatum<R> wedge(const BuildingDatum<R>& d1, const BuildingDatum<R>& d2) {
  const auto& A = d1.group();
  std::vector<GroupElem> gens;
  for (std::size_t i = 0; i < A.cyclic_orders().size(); ++i) gens.push_back(A.standard_generator(i));
  GroupHom id(A, A, gens);
  return wedge(d1, d2, id, GroupHom(d2.group(), d2.group(), gens));
}

/// s'(m, m') = s(psi m, psi m').
template <class R>
BuildingDatum<R> induced(const BuildingDatum<R>& d, const GroupHom& psi) {
  if (!(psi.target() == d.group())) throw InvalidInput("homomorphism target is not the datum's group");
  const auto& B = psi.source();
  BuildingDatum<R> out(B, d.target());
  for (GroupElem a = 0; a < B.order(); ++a)
    for (GroupElem b = a; b < B.order(); ++b) out.set(a, b, d(psi(a), psi(b)));
  return out;
}

/// Restriction of the table to a subgroup, returned over the subgroup in
/// invariant-factor form together with its embedding.
template <class R>
std::pair<BuildingDatum<R>, GroupHom> quotient_sub(const BuildingDatum<R>& d,
                                                   const std::vector<GroupElem>& subgroup) {
  GroupHom emb = subgroup_embedding(d.group(), subgroup);
  return {induced(d, emb), emb};
}

/// |A|^|A| * prod_l s_{l,-l}.
template <class R>
R discriminant_formula(const BuildingDatum<R>& d) {
  const auto& A = d.group();
  const R& one = d.target().one;
  R r = from_integer(one, Integer(static_cast<unsigned long>(A.order())));
  R out = one;
  for (std::size_t k = 0; k < A.order(); ++k) out = out * r;
  for (GroupElem l = 0; l < A.order(); ++l) out = out * d(l, A.neg(l));
  return out;
}

/// det (Tr(v_l v_m))_{l,m}.
template <class R>
R discriminant_trace(const BuildingDatum<R>& d) {
  CoverAlgebra<R> alg(d);
  const std::size_t n = alg.rank();
  Matrix<R> t(n, n, zero_like(d.target().one));
  for (GroupElem a = 0; a < n; ++a)
    for (GroupElem b = 0; b < n; ++b) t(a, b) = alg.trace(alg.mul(alg.basis(a), alg.basis(b)));
  return determinant(t);
}

/// Whether a D(A)-cover of order n can have discriminant `disc` over Z:
/// the discriminant is divisible by n^n.
inline bool discriminant_admits_order(std::size_t n, const Integer& disc) {
  Integer nn = 1;
  for (std::size_t k = 0; k < n; ++k) nn *= static_cast<unsigned long>(n);
  return divides(nn, disc).has_value();
}

}  // namespace coverforge
