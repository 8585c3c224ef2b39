#pragma once

// The universal property of P_A and Q_A: cocycles A x A -> P factor through
// e_{(-,-)}, and a flat Kummer pair P in Q with Q/P = A receives canonical
// maps P_A -> P and Q_A -> Q.

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "coverforge/cocycle/cocycle.hpp"
#include "coverforge/universal/universal.hpp"

namespace coverforge {

/// The universal cocycle (l, l') -> e_{l,l'} in P_A.
inline Cocycle<PresentedTarget> universal_cocycle(const UniversalMonoids& u) {
  Cocycle<PresentedTarget> e(u.group(), PresentedTarget{u.PA_ptr()});
  for (GroupElem a = 0; a < u.group_order(); ++a)
    for (GroupElem b = a; b < u.group_order(); ++b) e.set(a, b, u.e(a, b));
  return e;
}

/// Q_A with its canonical section l -> (0, l).
inline FreeExtension<QAElem, PresentedTarget> qa_extension(const UniversalMonoids& u) {
  using Value = FreeElem;
  FreeExtension<QAElem, PresentedTarget> ext{u.group(), PresentedTarget{u.PA_ptr()},
                                             {}, {}, {}, {}, {}, {}};
  const UniversalMonoids* up = &u;
  ext.add = [up](const QAElem& x, const QAElem& y) { return up->qa_add(x, y); };
  ext.gamma = [up](const Value& p) { return up->gamma(p); };
  ext.iota = [up](GroupElem l) { return up->iota(l); };
  ext.decompose = [up](const QAElem& x) {
    return std::optional<std::pair<Value, GroupElem>>({up->PA().normal_form(x.p), x.lambda});
  };
  ext.equal = [up](const QAElem& x, const QAElem& y) {
    return x.lambda == y.lambda && up->PA().equal(x.p, y.p);
  };
  ext.show = [up](const QAElem& x) { return up->show(x); };
  return ext;
}

/// The homomorphism P_A -> P with e_{l,l'} -> f(l, l').
template <class Target>
MonoidHom universal_factor(const UniversalMonoids& u, const Cocycle<Target>& f) {
  if (!(f.group() == u.group()))
    throw InvalidInput("cocycle on " + f.group().description() + ", universal monoid of " +
                       u.group().description());
  f.validated();
  std::vector<IVec> images;
  for (GroupElem a = 0; a < u.group_order(); ++a)
    for (GroupElem b = 0; b < u.group_order(); ++b) images.push_back(f.target().to_ivec(f(a, b)));
  try {
    return MonoidHom(std::make_shared<PresentedFG>(u.PA_ptr()), f.target().fg(),
                     std::move(images));
  } catch (const InvalidInput& e) {
    throw std::logic_error(std::string("cocycle does not factor through P_A: ") + e.what());
  }
}

/// The cocycle f(l, l') = image of e_{l,l'} for a homomorphism P_A -> N.
inline Cocycle<NatVector> cocycle_of_ray(const UniversalMonoids& u,
                                         const std::vector<std::int64_t>& images) {
  if (images.size() != u.rank()) throw InvalidInput("one image per generator of P_A is required");
  Cocycle<NatVector> f(u.group(), NatVector{1});
  for (GroupElem a = 0; a < u.group_order(); ++a)
    for (GroupElem b = a; b < u.group_order(); ++b) f.set(a, b, {images[u.index(a, b)]});
  return f;
}

struct UniversalMorphisms {
  std::vector<IVec> iota;          ///< minimal element of each fiber of Q -> A
  Cocycle<AffineTarget> cocycle;   ///< iota(l) + iota(l') - iota(l + l')
  MonoidHom pa_to_p;
  std::function<IVec(const QAElem&)> qa_to_q;
};

/// Canonical maps P_A -> P and Q_A -> Q for an affine pair P in Q (same
/// ambient lattice) with quotient map Q -> A.  Fibers are searched among
/// elements of value <= bound.
inline UniversalMorphisms universal_morphisms(
    const UniversalMonoids& u, std::shared_ptr<const AffineMonoid> P, const AffineMonoid& Q,
    const IVec& grading, const std::function<GroupElem(const IVec&)>& quotient,
    std::int64_t bound) {
  const auto& A = u.group();
  auto as_string = [&](const IVec& x) { return A.to_string(quotient(x)); };
  std::vector<IVec> iota;
  for (GroupElem l = 0; l < A.order(); ++l) {
    FiberResult r;
    try {
      r = minimal_fiber(*P, Q, grading, as_string, A.to_string(l), bound);
    } catch (const InvalidInput& e) {
      throw NotFree(e.what());
    }
    if (!r.covered)
      throw NotFree("fiber element " + to_string(*r.uncovered) + " over " + A.to_string(l) +
                    " is not iota(" + A.to_string(l) + ") + P");
    iota.push_back(r.minimum);
  }
  AffineTarget target{P, grading};
  Cocycle<AffineTarget> f(A, target);
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) {
      IVec d = ivec_sub(ivec_add(iota[a], iota[b]), iota[A.add(a, b)]);
      try {
        f.set(a, b, d);
      } catch (const InvalidInput&) {
        throw NotFree("iota(" + A.to_string(a) + ") + iota(" + A.to_string(b) + ") - iota(" +
                      A.to_string(A.add(a, b)) + ") = " + to_string(d) + " is not in P");
      }
    }
  MonoidHom pa = universal_factor(u, f);
  auto qa = [pa, iota](const QAElem& x) {
    return ivec_add(pa.apply_word(x.p), iota[x.lambda]);
  };
  // square: Q_A -> Q restricted to P_A is P_A -> P, and Q_A -> Q lies over A
  for (GroupElem a = 0; a < A.order(); ++a) {
    if (quotient(qa(u.iota(a))) != a)
      throw std::logic_error("Q_A -> Q does not lie over the identity of A");
    for (GroupElem b = 0; b < A.order(); ++b)
      if (qa(u.qa_add(u.iota(a), u.iota(b))) != ivec_add(qa(u.iota(a)), qa(u.iota(b))))
        throw std::logic_error("Q_A -> Q is not additive");
  }
  return {std::move(iota), std::move(f), std::move(pa), qa};
}

}  // namespace coverforge
