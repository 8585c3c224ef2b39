#pragma once

// Orders of sections along a prime element, the N-valued cocycle of a cover,
// and covers built from N-valued cocycles (monomial and standard cyclic).

#include <optional>
#include <string>
#include <vector>

#include "coverforge/cover/datum.hpp"

namespace coverforge {

/// v(r) = max { k : t^k divides r } for a prime element t.
template <class R>
class Valuation {
 public:
  explicit Valuation(R prime, std::string name = "", unsigned limit = 4096)
      : t_(std::move(prime)), name_(name.empty() ? to_string(t_) : std::move(name)),
        limit_(limit) {
    if (is_zero(t_) || is_unit(t_))
      throw InvalidInput("valuation needs a nonzero nonunit, got " + to_string(t_));
  }
  const R& prime() const { return t_; }
  const std::string& name() const { return name_; }

  /// nullopt for r = 0.
  std::optional<unsigned> operator()(const R& r) const {
    if (is_zero(r)) return std::nullopt;
    R x = r;
    for (unsigned k = 0; k <= limit_; ++k) {
      auto q = divides(t_, x);
      if (!q) return k;
      x = *q;
    }
    throw BoundExceeded("valuation of " + to_string(r) + " at " + name_ + " above " +
                        std::to_string(limit_));
  }

 private:
  R t_;
  std::string name_;
  unsigned limit_;
};

template <class R>
unsigned ord_section(const BuildingDatum<R>& d, const Valuation<R>& v, GroupElem a, GroupElem b) {
  auto k = v(d(a, b));
  if (!k)
    throw InvalidInput("section s_{" + d.group().to_string(a) + "," + d.group().to_string(b) +
                       "} is zero");
  return *k;
}

/// min { n <= bound : s_{a,b} divides t^n }: the smallest power of t whose
/// product with v_{a+b} lies in the ideal generated by v_a v_b.
template <class R>
unsigned ideal_quotient_ord(const BuildingDatum<R>& d, const R& t, GroupElem a, GroupElem b,
                            unsigned bound) {
  const R& s = d(a, b);
  R power = d.target().one;
  for (unsigned n = 0; n <= bound; ++n) {
    if (divides(s, power)) return n;
    power = power * t;
  }
  throw BoundExceeded("s_{" + d.group().to_string(a) + "," + d.group().to_string(b) + "} = " +
                      to_string(s) + " divides no power t^n with n <= " + std::to_string(bound));
}

/// (l, l') -> (v_i(s_{l,l'}))_i.
template <class R>
Cocycle<NatVector> cover_cocycle(const BuildingDatum<R>& d,
                                 const std::vector<Valuation<R>>& valuations) {
  const auto& A = d.group();
  Cocycle<NatVector> f(A, NatVector{valuations.size()});
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) {
      IVec v;
      for (const auto& val : valuations) v.push_back(ord_section(d, val, a, b));
      f.set(a, b, v);
    }
  return f;
}

/// s_{l,l'} = t^{f(l,l')}.
template <class R>
BuildingDatum<R> monomial_cover(const R& one, const R& t, const Cocycle<NatVector>& f) {
  if (f.target().dim != 1) throw InvalidInput("monomial cover needs an N-valued cocycle");
  f.validated();
  const auto& A = f.group();
  BuildingDatum<R> d(A, RingTarget<R>{one});
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      d.set(a, b, pow(t, static_cast<unsigned long>(f(a, b)[0])));
  return d;
}

/// The cover of Z/n given by x_l = x_psi^{i(l)}: s_{l,l'} = 1 when
/// i(l) + i(l') < n, and t otherwise.
template <class R>
BuildingDatum<R> standard_cyclic(std::int64_t n, GroupElem psi, const R& t) {
  return monomial_cover(one_like(t), t, pardini_epsilon(pardini_cyclic(n, psi)));
}

}  // namespace coverforge
