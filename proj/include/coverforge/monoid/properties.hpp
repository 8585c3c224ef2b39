#pragma once

// Certificates and bounded searches for properties of presented monoids:
// sharpness by a positive grading, integrality up to a degree bound, and a
// bounded search for nonzero units.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coverforge/monoid/groupify.hpp"
#include "coverforge/monoid/rewrite.hpp"

namespace coverforge {

/// All irreducible exponent vectors of total degree <= max_degree, i.e. one
/// representative for every class reachable with that many generators.
inline std::vector<FreeElem> normal_forms_up_to(const PresentedMonoid& m,
                                                std::uint32_t max_degree) {
  const std::size_t n = m.rank();
  std::vector<FreeElem> out;
  FreeElem x(n);
  // reducible elements form an upper set, so prune on first reducible step
  auto rec = [&](auto& self, std::size_t start, std::uint32_t deg) -> void {
    out.push_back(x);
    if (deg == max_degree) return;
    for (std::size_t i = start; i < n; ++i) {
      x[i] += 1;
      if (!m.system().reducible(x)) self(self, i, deg + 1);
      x[i] -= 1;
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct GradingCert {
  std::vector<std::int64_t> weights;
  std::vector<std::size_t> positive_generators;
};

struct SharpnessVerdict {
  bool certified = false;  ///< CERTIFIED-SHARP; otherwise INAPPLICABLE
  std::string reason;      ///< why the certificate does not apply
};

inline SharpnessVerdict sharp_by_grading(const PresentedMonoid& m,
                                         const GradingCert& cert) {
  const std::size_t n = m.rank();
  if (cert.weights.size() != n)
    throw InvalidInput("weight vector has length " +
                       std::to_string(cert.weights.size()) + ", expected " +
                       std::to_string(n));
  auto weight = [&](const FreeElem& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += cert.weights[i] * x[i];
    return s;
  };
  SharpnessVerdict v;
  for (const auto& r : m.presentation().relations())
    if (weight(r.lhs) != weight(r.rhs)) {
      v.reason = "weights differ on relation " + m.to_string(r.lhs) + " ~ " +
                 m.to_string(r.rhs);
      return v;
    }
  std::vector<bool> positive(n, false);
  for (std::size_t g : cert.positive_generators) {
    if (g >= n) throw InvalidInput("positive generator index out of range");
    positive[g] = true;
    if (cert.weights[g] < 1) {
      v.reason = "generator " + m.presentation().generator_name(g) +
                 " has weight below 1";
      return v;
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (!positive[g] && !m.normal_form(m.generator(g)).is_zero()) {
      v.reason = "excluded generator " + m.presentation().generator_name(g) +
                 " is not zero";
      return v;
    }
  v.certified = true;
  return v;
}

struct IntegralityVerdict {
  bool integral_up_to_bound = false;  ///< YES(D)
  std::uint32_t bound = 0;
  std::size_t classes_checked = 0;
  std::optional<std::pair<FreeElem, FreeElem>> counterexample;
};

/// Distinct classes of degree <= D with equal image in M^gp witness that
/// M -> M^gp is not injective.
inline IntegralityVerdict is_integral_up_to(const PresentedMonoid& m,
                                            const Groupification& gp,
                                            std::uint32_t D) {
  if (D < 1) throw InvalidInput("degree bound must be at least 1");
  IntegralityVerdict v;
  v.bound = D;
  std::vector<FreeElem> nfs = normal_forms_up_to(m, D);
  v.classes_checked = nfs.size();
  std::unordered_map<std::string, std::size_t> bucket;
  for (std::size_t k = 0; k < nfs.size(); ++k) {
    auto [it, fresh] = bucket.try_emplace(Groupification::key(gp.image(nfs[k])), k);
    if (!fresh) {
      v.counterexample = {nfs[it->second], nfs[k]};
      return v;
    }
  }
  v.integral_up_to_bound = true;
  return v;
}

inline IntegralityVerdict is_integral_up_to(const PresentedMonoid& m,
                                            std::uint32_t D) {
  return is_integral_up_to(m, Groupification(m.presentation()), D);
}

/// Nonzero x, y of degree <= D with x + y = 0, if any (falsifies sharpness).
inline std::optional<std::pair<FreeElem, FreeElem>> find_unit_up_to(
    const PresentedMonoid& m, std::uint32_t D) {
  std::vector<FreeElem> nfs = normal_forms_up_to(m, D);
  for (std::size_t a = 1; a < nfs.size(); ++a)
    for (std::size_t b = a; b < nfs.size(); ++b)
      if (m.add(nfs[a], nfs[b]).is_zero()) return std::make_pair(nfs[a], nfs[b]);
  return std::nullopt;
}

}  // namespace coverforge
