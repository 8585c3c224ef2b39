#pragma once

// Small finite bases and covers used for group-like computations.

#include "coverforge/hopf/hopf.hpp"

namespace coverforge {

/// F_p[a]/(a^2).
inline AlgebraPtr dual_numbers(std::uint32_t p) { return FiniteAlgebra::from_table(p, {"1", "a"}, {}); }

/// F_2[a,b,c]/((a,b,c)^3 + (ab + ac - bc)) on the basis
/// 1, a, b, c, a^2, b^2, c^2, ab, ac (bc = ab + ac, all cubes vanish).
inline AlgebraPtr klein_base_f2() {
  return FiniteAlgebra::from_table(2, {"1", "a", "b", "c", "a^2", "b^2", "c^2", "ab", "ac"},
                                   {{{"a", "a"}, "a^2"},
                                    {{"b", "b"}, "b^2"},
                                    {{"c", "c"}, "c^2"},
                                    {{"a", "b"}, "ab"},
                                    {{"a", "c"}, "ac"},
                                    {{"b", "c"}, "ab+ac"}});
}

/// The (Z/2)^2-cover of klein_base_f2() with x10^2 = ab, x01^2 = ac,
/// x11^2 = ab + ac, x10 x01 = a x11, x10 x11 = b x01, x01 x11 = c x10.
inline BuildingDatum<FAElem> klein_datum_f2() {
  auto base = klein_base_f2();
  AbelianGroup A({2, 2});
  GroupElem e10 = A.element({1, 0}), e01 = A.element({0, 1}), e11 = A.element({1, 1});
  BuildingDatum<FAElem> d(A, RingTarget<FAElem>{base->one()});
  d.set(e10, e10, base->parse("ab"));
  d.set(e01, e01, base->parse("ac"));
  d.set(e11, e11, base->parse("ab+ac"));
  d.set(e10, e01, base->parse("a"));
  d.set(e10, e11, base->parse("b"));
  d.set(e01, e11, base->parse("c"));
  return d;
}

/// Z/2-cover x^2 = s.
inline BuildingDatum<FAElem> square_root_datum(const FAElem& s) {
  BuildingDatum<FAElem> d(AbelianGroup::cyclic(2), RingTarget<FAElem>{s.alg->one()});
  d.set(1, 1, s);
  return d;
}

}  // namespace coverforge
