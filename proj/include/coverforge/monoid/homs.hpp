#pragma once

// Enumeration of monoid homomorphisms from a presented monoid to N.

#include <cstdint>
#include <vector>

#include "coverforge/monoid/rewrite.hpp"

namespace coverforge {

/// All generator images in [0, max_image]^rank that respect every defining
/// relation.  Backtracks over generators in index order and checks each
/// relation as soon as its last generator is assigned.
inline std::vector<std::vector<std::int64_t>> enumerate_homs_to_nat(
    const MonoidPresentation& p, std::int64_t max_image) {
  const std::size_t n = p.rank();
  std::vector<std::vector<const Relation*>> due(n);
  std::vector<const Relation*> constant;
  for (const auto& r : p.relations()) {
    std::size_t last = 0;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      if (r.lhs[i] || r.rhs[i]) {
        last = i;
        any = true;
      }
    if (any) due[last].push_back(&r);
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> img(n, 0);
  auto holds = [&](const Relation& r) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      s += img[i] * (static_cast<std::int64_t>(r.lhs[i]) - static_cast<std::int64_t>(r.rhs[i]));
    return s == 0;
  };
  auto rec = [&](auto& self, std::size_t g) -> void {
    if (g == n) {
      out.push_back(img);
      return;
    }
    for (std::int64_t v = 0; v <= max_image; ++v) {
      img[g] = v;
      bool ok = true;
      for (const Relation* r : due[g]) ok = ok && holds(*r);
      if (ok) self(self, g + 1);
    }
    img[g] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace coverforge
