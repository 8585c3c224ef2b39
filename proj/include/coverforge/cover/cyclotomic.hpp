#pragma once

// Z[i][xi] with xi a primitive 5th root of unity, and the eigenbasis
// 1, d_1, d_2, d_3 of the Z/4 = (Z/5)^x action once 2 is inverted.

#include <memory>
#include <stdexcept>
#include <vector>

#include "coverforge/cover/datum.hpp"

namespace coverforge {

struct CyclotomicFive {
  using Gauss = Quotient<Integer>;
  using Elem = Quotient<Gauss>;

  std::shared_ptr<const Gauss::Context> gi =
      Gauss::make_context("i", {Integer(1), Integer(0), Integer(1)});
  Gauss gauss_i = Gauss::generator(gi);
  std::shared_ptr<const Elem::Context> gxi = Elem::make_context(
      "xi", std::vector<Gauss>(5, one_like(gauss_i)));
  Elem xi = Elem::generator(gxi);
  Elem i = Elem::constant(gxi, gauss_i);

  Gauss gauss(long re, long im) const {
    return from_integer(gauss_i, Integer(re)) + from_integer(gauss_i, Integer(im)) * gauss_i;
  }
  Elem lift(const Gauss& g) const { return Elem::constant(gxi, g); }

  /// d_0 = 1, d_1, d_2 = sqrt(5), d_3.
  std::vector<Elem> basis() const {
    Elem x2 = xi * xi, x3 = x2 * xi, x4 = x3 * xi;
    return {one_like(xi), (xi - x4) + (x2 - x3) * i, (xi + x4) - (x2 + x3),
            (xi - x4) - (x2 - x3) * i};
  }

  /// The sections s with d_a d_b = s d_{a+b}; they lie in Z[i].
  BuildingDatum<Gauss> datum() const {
    AbelianGroup z4 = AbelianGroup::cyclic(4);
    auto d = basis();
    BuildingDatum<Gauss> out(z4, RingTarget<Gauss>{one_like(gauss_i)});
    for (GroupElem a = 0; a < 4; ++a)
      for (GroupElem b = a; b < 4; ++b) {
        Elem prod = d[a] * d[b];
        auto s = divides(d[z4.add(a, b)], prod);
        if (!s) throw std::logic_error("d_a d_b is not a multiple of d_{a+b}");
        for (std::size_t k = 1; k < s->coords().size(); ++k)
          if (!is_zero(s->coords()[k])) throw std::logic_error("section outside Z[i]");
        out.set(a, b, s->coords()[0]);
      }
    return out;
  }
};

}  // namespace coverforge
