#pragma once

// Relative Kaehler differentials of a cover algebra over a univariate base
// R = k[s] or Z[s], as the R-module generated by v_m dv_l (l != 0) modulo
// v_m (v_l dv_l' + v_l' dv_l - s_{l,l'} dv_{l+l'}), with dv_0 = 0.

#include <array>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "coverforge/cover/datum.hpp"
#include "coverforge/report.hpp"
#include "coverforge/ring/snf.hpp"

namespace coverforge {

namespace detail {
template <class R>
struct is_univariate_poly : std::false_type {};
template <class K>
struct is_univariate_poly<Poly<K>> : std::true_type {};
}  // namespace detail

template <class R>
struct OmegaPresentation {
  AbelianGroup group;
  R one;
  std::vector<std::pair<GroupElem, GroupElem>> generators;  ///< (m, l): v_m dv_l
  std::vector<std::array<GroupElem, 3>> row_labels;         ///< (m, l, l')
  Matrix<R> relations;                                      ///< rows x generators

  std::size_t column(GroupElem m, GroupElem l) const {
    if (l == 0) throw InvalidInput("dv_0 = 0 is not a generator");
    return m * (group.order() - 1) + (l - 1);
  }
  std::string label(std::size_t col) const {
    auto [m, l] = generators.at(col);
    return (m == 0 ? std::string() : "v_" + group.to_string(m) + " ") + "dv_" + group.to_string(l);
  }
  /// The vector target * (v_m dv_l).
  std::vector<R> multiple(const R& target, GroupElem m, GroupElem l) const {
    std::vector<R> v(generators.size(), zero_like(one));
    v[column(m, l)] = target;
    return v;
  }
};

template <class R>
OmegaPresentation<R> omega_presentation(const BuildingDatum<R>& d) {
  static_assert(detail::is_univariate_poly<R>::value, "Omega needs a polynomial base k[s] or Z[s]");
  const R& one = d.target().one;
  one.require_univariate();
  const auto& A = d.group();
  const std::size_t n = A.order();
  OmegaPresentation<R> om{A, one, {}, {}, Matrix<R>(0, 0, zero_like(one))};
  for (GroupElem m = 0; m < n; ++m)
    for (GroupElem l = 1; l < n; ++l) om.generators.push_back({m, l});
  std::vector<std::vector<R>> rows;
  for (GroupElem m = 0; m < n; ++m)
    for (GroupElem l = 1; l < n; ++l)
      for (GroupElem l2 = l; l2 < n; ++l2) {
        std::vector<R> row(om.generators.size(), zero_like(one));
        row[om.column(A.add(m, l), l2)] += d(m, l);
        row[om.column(A.add(m, l2), l)] += d(m, l2);
        if (GroupElem t = A.add(l, l2); t != 0) row[om.column(m, t)] -= d(l, l2);
        rows.push_back(std::move(row));
        om.row_labels.push_back({m, l, l2});
      }
  om.relations = Matrix<R>::from_rows(rows, zero_like(one));
  return om;
}

template <class R>
struct Annihilator {
  R generator;              ///< 0 when Omega has a free summand
  std::vector<R> divisors;  ///< elementary divisors that are not units
  std::size_t free_rank = 0;
};

/// Ann of Omega: the last elementary divisor of the relation matrix, or 0
/// when the cokernel has a free summand.
template <class R>
Annihilator<R> ann_snf(const OmegaPresentation<R>& om) {
  const R& one = om.one;
  auto snf = smith_normal_form(om.relations, false);
  auto inv = snf.invariant_factors();
  Annihilator<R> out{one, {}, om.generators.size() - inv.size()};
  for (const auto& f : inv)
    if (!is_unit(f)) out.divisors.push_back(f);
  if (out.free_rank > 0) out.generator = zero_like(one);
  else if (!out.divisors.empty()) out.generator = out.divisors.back();
  return out;
}

/// Whether r annihilates Omega, from its annihilator over k[s].
template <class R>
bool annihilates(const Annihilator<R>& ann, const R& r) {
  return divides(ann.generator, r).has_value();
}

template <class R>
struct Certificate {
  std::vector<R> target;
  std::vector<R> coefficients;  ///< one per relation row
  unsigned bound = 0;
};

/// sum_r c_r * row_r.
template <class R>
std::vector<R> replay(const OmegaPresentation<R>& om, const std::vector<R>& coefficients) {
  if (coefficients.size() != om.relations.rows()) throw InvalidInput("one coefficient per relation row");
  std::vector<R> out(om.generators.size(), zero_like(om.one));
  for (std::size_t r = 0; r < om.relations.rows(); ++r)
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += coefficients[r] * om.relations(r, c);
  return out;
}

/// Coefficients of degree <= bound in Z[s] expressing `target` through the
/// relation rows.  The bounded problem is a linear system over Z solved
/// exactly, so nullopt means no certificate of that degree exists; it says
/// nothing about higher degrees.
inline std::optional<Certificate<Poly<Integer>>> membership_certificate(
    const OmegaPresentation<Poly<Integer>>& om, const std::vector<Poly<Integer>>& target, unsigned bound) {
  const auto& M = om.relations;
  const std::size_t rows = M.rows(), cols = M.cols();
  if (target.size() != cols) throw InvalidInput("target has the wrong length");
  long maxdeg = 0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) maxdeg = std::max(maxdeg, M(r, c).degree());
  long tdeg = -1;
  for (const auto& t : target) tdeg = std::max(tdeg, t.degree());
  const long top = std::max<long>(maxdeg + static_cast<long>(bound), tdeg);
  if (tdeg > maxdeg + static_cast<long>(bound)) return std::nullopt;
  const std::size_t unknowns = rows * (bound + 1), eqs = cols * static_cast<std::size_t>(top + 1);
  Matrix<Integer> sys(eqs, unknowns, Integer(0));
  std::vector<Integer> rhs(eqs, Integer(0));
  for (std::size_t c = 0; c < cols; ++c) {
    for (long e = 0; e <= top; ++e) rhs[c * (top + 1) + e] = target[c].coefficient(static_cast<std::uint32_t>(e));
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& entry = M(r, c);
      for (const auto& [ex, coef] : entry.terms())
        for (unsigned k = 0; k <= bound; ++k) sys(c * (top + 1) + ex[0] + k, r * (bound + 1) + k) = coef;
    }
  }
  auto sol = solve_via_snf(sys, rhs);
  if (!sol) return std::nullopt;
  Certificate<Poly<Integer>> cert{target, {}, bound};
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Integer> cs((*sol).begin() + static_cast<std::ptrdiff_t>(r * (bound + 1)),
                            (*sol).begin() + static_cast<std::ptrdiff_t>((r + 1) * (bound + 1)));
    cert.coefficients.push_back(Poly<Integer>::from_coefficients(om.one.context(), cs));
  }
  if (replay(om, cert.coefficients) != target)
    throw std::logic_error("membership certificate does not replay");
  return cert;
}

/// Base change of a datum over Z[s] to Q[s] or GF(p)[s].
inline BuildingDatum<Poly<Rational>> datum_over_rationals(const BuildingDatum<Poly<Integer>>& d) {
  PolyRing<Rational> q(d.target().one.context()->variables, Rational(0));
  return map_datum(d, q.one(), [&](const Poly<Integer>& x) { return to_rational(x, q.context()); });
}
inline BuildingDatum<Poly<Fp>> datum_mod_p(const BuildingDatum<Poly<Integer>>& d, std::int64_t p) {
  PolyRing<Fp> fp(d.target().one.context()->variables, Fp(0, p));
  return map_datum(d, fp.one(), [&](const Poly<Integer>& x) { return reduce_mod(x, fp.context()); });
}

template <class R>
struct DiscriminantAnnReport {
  Status status = Status::pass;
  R discriminant;
  std::optional<Annihilator<R>> ann;                 ///< over k[s]
  std::vector<Certificate<R>> certificates;          ///< over Z[s], one per generator
  std::string detail;
  unsigned bound = 0;
};

/// Checks that the discriminant |A|^|A| prod s_{l,-l} annihilates Omega.
/// Over k[s] this is divisibility by the annihilator.  Over Z[s] each
/// generator gets a certificate of degree <= bound (default deg + 2); a
/// failure over Q[s] is a disproof, a missing certificate is inconclusive.
template <class R>
DiscriminantAnnReport<R> discriminant_annihilates(const BuildingDatum<R>& d,
                                                  std::optional<unsigned> bound = std::nullopt) {
  DiscriminantAnnReport<R> rep{Status::pass, discriminant_formula(d), std::nullopt, {}, "", 0};
  auto om = omega_presentation(d);
  if constexpr (std::is_same_v<R, Poly<Integer>>) {
    rep.bound = bound ? *bound : static_cast<unsigned>(std::max<long>(rep.discriminant.degree(), 0) + 2);
    auto over_q = datum_over_rationals(d);
    auto ann_q = ann_snf(omega_presentation(over_q));
    auto disc_q = to_rational(rep.discriminant, over_q.target().one.context());
    if (!annihilates(ann_q, disc_q)) {
      rep.status = Status::fail;
      rep.detail = "over Q[s] the annihilator is (" + to_string(ann_q.generator) + "), which does not divide " +
                   to_string(disc_q);
      return rep;
    }
    for (std::size_t c = 0; c < om.generators.size(); ++c) {
      auto [m, l] = om.generators[c];
      auto cert = membership_certificate(om, om.multiple(rep.discriminant, m, l), rep.bound);
      if (!cert) {
        rep.status = Status::inconclusive;
        rep.detail = "no certificate of degree <= " + std::to_string(rep.bound) + " for (" +
                     to_string(rep.discriminant) + ") " + om.label(c);
        return rep;
      }
      rep.certificates.push_back(*cert);
    }
    rep.detail = to_string(rep.discriminant) + " kills every generator";
  } else {
    (void)bound;
    rep.ann = ann_snf(om);
    if (annihilates(*rep.ann, rep.discriminant)) {
      rep.detail = "(" + to_string(rep.ann->generator) + ") divides " + to_string(rep.discriminant);
    } else {
      rep.status = Status::fail;
      rep.detail = "annihilator (" + to_string(rep.ann->generator) + ") does not divide " +
                   to_string(rep.discriminant);
    }
  }
  return rep;
}

}  // namespace coverforge
