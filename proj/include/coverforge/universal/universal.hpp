#pragma once

// The universal monoid P_A = N^{A x A} / R_A of a finite abelian group A, its
// universal free extension Q_A (pairs (p, lambda)), the monoid Q_A^+ =
// N^A / <e_0>, and the maps between them: phi_A, Sigma, Pi, m, h, j, tau,
// eta and the value grading.
//
// Generator e_{l,l'} of N^{A x A} has index l * |A| + l'.  Vectors in
// Z^A / <e_0> and elements of Q_A^+ drop the coordinate of 0, so coordinate
// k stands for the group element k + 1.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "coverforge/monoid.hpp"
#include "coverforge/universal/group.hpp"

namespace coverforge {

struct QAElem {
  FreeElem p;  ///< normal form in P_A
  GroupElem lambda = 0;
  friend bool operator==(const QAElem&, const QAElem&) = default;
};

/// Element of Q_A^+ (rank |A| - 1).
using QPlusElem = FreeElem;

class UniversalMonoids {
 public:
  static constexpr std::size_t default_generator_cap = 64;

  explicit UniversalMonoids(AbelianGroup A,
                            std::size_t generator_cap = default_generator_cap)
      : A_(std::move(A)), n_(A_.order()) {
    if (n_ * n_ > generator_cap)
      throw CapabilityError("P_A needs " + std::to_string(n_ * n_) +
                            " generators, above the cap of " +
                            std::to_string(generator_cap));
    MonoidPresentation p(n_ * n_, generator_names());
    for (GroupElem a = 0; a < n_; ++a)
      for (GroupElem b = 0; b < n_; ++b) p.add_relation(raw(a, b), raw(b, a));
    for (GroupElem a = 0; a < n_; ++a) p.add_relation(raw(0, a), FreeElem(n_ * n_));
    for (GroupElem a = 0; a < n_; ++a)
      for (GroupElem b = 0; b < n_; ++b)
        for (GroupElem c = 0; c < n_; ++c)
          p.add_relation(raw(a, b) + raw(A_.add(a, b), c),
                         raw(b, c) + raw(A_.add(b, c), a));
    pa_ = std::make_shared<const PresentedMonoid>(std::move(p));
    for (const auto& r : pa_->presentation().relations())
      if (phi(r.lhs) != phi(r.rhs))
        throw std::logic_error("phi_A is not constant on a defining relation");
  }

  const AbelianGroup& group() const { return A_; }
  std::size_t group_order() const { return n_; }
  const PresentedMonoid& PA() const { return *pa_; }
  std::shared_ptr<const PresentedMonoid> PA_ptr() const { return pa_; }
  std::size_t rank() const { return n_ * n_; }

  std::size_t index(GroupElem a, GroupElem b) const { return a * n_ + b; }
  /// Unreduced generator e_{a,b} of N^{A x A}.
  FreeElem raw(GroupElem a, GroupElem b) const {
    return FreeElem::unit(n_ * n_, index(a, b));
  }
  /// Class of e_{a,b} in P_A (normal form).
  FreeElem e(GroupElem a, GroupElem b) const { return pa_->normal_form(raw(a, b)); }

  std::vector<std::string> generator_names() const {
    std::vector<std::string> names;
    for (GroupElem a = 0; a < n_; ++a)
      for (GroupElem b = 0; b < n_; ++b)
        names.push_back("e_{" + A_.to_string(a) + "," + A_.to_string(b) + "}");
    return names;
  }
  std::string show(const FreeElem& p) const { return pa_->to_string(p); }
  std::string show(const QAElem& x) const {
    return "(" + show(x.p) + ", " + A_.to_string(x.lambda) + ")";
  }
  std::string show_qplus(const QPlusElem& q) const {
    std::string s;
    for (std::size_t k = 0; k < q.rank(); ++k) {
      if (!q[k]) continue;
      if (!s.empty()) s += " + ";
      if (q[k] != 1) s += std::to_string(q[k]) + "*";
      s += "e_" + A_.to_string(k + 1);
    }
    return s.empty() ? "0" : s;
  }

  // ---------------------------------------------------------- phi, value

  /// Sigma: e_{a,b} -> e_a + e_b in N^A (all |A| coordinates).
  IVec sigma(const FreeElem& p) const {
    IVec v(n_, 0);
    for (std::size_t g = 0; g < p.rank(); ++g) {
      if (!p[g]) continue;
      v[g / n_] += p[g];
      v[g % n_] += p[g];
    }
    return v;
  }
  /// Pi: e_{a,b} -> e_{a+b} in N^A.
  IVec pi(const FreeElem& p) const {
    IVec v(n_, 0);
    for (std::size_t g = 0; g < p.rank(); ++g)
      if (p[g]) v[A_.add(g / n_, g % n_)] += p[g];
    return v;
  }
  /// phi_A(p) in Z^A / <e_0>.
  IVec phi(const FreeElem& p) const {
    check_pa(p);
    return drop_zero(ivec_sub(sigma(p), pi(p)));
  }
  IVec basis(GroupElem l) const {
    IVec v(n_ - 1, 0);
    if (l != 0) v[l - 1] = 1;
    return v;
  }
  static std::int64_t value(const IVec& v) {
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
  }
  std::int64_t value(const FreeElem& p) const { return value(phi(p)); }
  std::int64_t value(const QAElem& x) const { return value(image(x)); }
  /// The map Q_A -> Z^A / <e_0>, (p, l) -> phi_A(p) + e_l.
  IVec image(const QAElem& x) const { return ivec_add(phi(x.p), basis(x.lambda)); }
  /// m: Z^A / <e_0> -> A, e_l -> l.
  GroupElem m(const IVec& v) const {
    GroupElem s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s = A_.add(s, A_.multiple(v[k], k + 1));
    return s;
  }

  // ------------------------------------------------------------------ Q_A

  QAElem qa_zero() const { return {FreeElem(rank()), 0}; }
  QAElem iota(GroupElem l) const { return {FreeElem(rank()), l}; }
  QAElem gamma(const FreeElem& p) const { return {pa_->normal_form(p), 0}; }
  QAElem qa_add(const QAElem& x, const QAElem& y) const {
    return {pa_->normal_form(x.p + y.p + raw(x.lambda, y.lambda)),
            A_.add(x.lambda, y.lambda)};
  }
  QAElem qa_multiple(std::uint32_t k, const QAElem& x) const {
    QAElem r = qa_zero();
    for (std::uint32_t i = 0; i < k; ++i) r = qa_add(r, x);
    return r;
  }

  // ---------------------------------------------------------------- Q_A^+

  QPlusElem qplus_zero() const { return FreeElem(n_ - 1); }
  QPlusElem qplus_e(GroupElem l) const {
    FreeElem q(n_ - 1);
    if (l != 0) q[l - 1] = 1;
    return q;
  }
  GroupElem m(const QPlusElem& q) const {
    GroupElem s = 0;
    for (std::size_t k = 0; k < q.rank(); ++k)
      s = A_.add(s, A_.multiple(q[k], k + 1));
    return s;
  }
  /// Telescoping sum over the multiset of q in increasing element order.
  FreeElem h(const QPlusElem& q) const {
    FreeElem out(rank());
    bool first = true;
    GroupElem acc = 0;
    for (std::size_t k = 0; k < q.rank(); ++k)
      for (std::uint32_t c = 0; c < q[k]; ++c) {
        GroupElem l = k + 1;
        if (first) {
          acc = l;
          first = false;
          continue;
        }
        out += raw(acc, l);
        acc = A_.add(acc, l);
      }
    return pa_->normal_form(out);
  }
  QAElem j(const QPlusElem& q) const { return {h(q), m(q)}; }
  QAElem tau(const FreeElem& p, const QPlusElem& q) const {
    return {pa_->normal_form(p + h(q)), m(q)};
  }
  std::pair<FreeElem, QPlusElem> eta(const QAElem& x) const {
    return {x.p, qplus_e(x.lambda)};
  }

  // -------------------------------------------- the presentation via R_P

  /// (P_A (+) Q_A^+) / R_P as a presented monoid on |A|^2 + |A| - 1
  /// generators: first the e_{l,l'}, then the e_l with l != 0.
  PresentedMonoid build_RP() const {
    const std::size_t r = rank() + n_ - 1;
    std::vector<std::string> names = generator_names();
    for (GroupElem l = 1; l < n_; ++l) names.push_back("e_" + A_.to_string(l));
    MonoidPresentation p(r, names);
    for (const auto& rel : pa_->presentation().relations())
      p.add_relation(rp_embed(rel.lhs, qplus_zero()), rp_embed(rel.rhs, qplus_zero()));
    for (GroupElem a = 0; a < n_; ++a)
      for (GroupElem b = 0; b < n_; ++b)
        p.add_relation(rp_embed(raw(a, b), qplus_e(A_.add(a, b))),
                       rp_embed(FreeElem(rank()), qplus_e(a) + qplus_e(b)));
    return PresentedMonoid(std::move(p));
  }
  FreeElem rp_embed(const FreeElem& p, const QPlusElem& q) const {
    FreeElem x(rank() + n_ - 1);
    for (std::size_t g = 0; g < rank(); ++g) x[g] = p[g];
    for (std::size_t k = 0; k + 1 < n_; ++k) x[rank() + k] = q[k];
    return x;
  }
  std::pair<FreeElem, QPlusElem> rp_split(const FreeElem& x) const {
    FreeElem p(rank());
    QPlusElem q = qplus_zero();
    for (std::size_t g = 0; g < rank(); ++g) p[g] = x[g];
    for (std::size_t k = 0; k + 1 < n_; ++k) q[k] = x[rank() + k];
    return {p, q};
  }

  // ------------------------------------------------ sharpness certificates

  /// Weights |phi_A(e_{l,l'})|, positive on generators with both indices
  /// nonzero; the others are zero in P_A.
  GradingCert pa_grading() const {
    GradingCert c;
    for (GroupElem a = 0; a < n_; ++a)
      for (GroupElem b = 0; b < n_; ++b) {
        c.weights.push_back(value(phi(raw(a, b))));
        if (a != 0 && b != 0) c.positive_generators.push_back(index(a, b));
      }
    return c;
  }
  /// Value grading (p, q) -> |phi_A(p)| + |q| on the R_P presentation.
  GradingCert rp_grading() const {
    GradingCert c = pa_grading();
    for (GroupElem l = 1; l < n_; ++l) {
      c.weights.push_back(1);
      c.positive_generators.push_back(rank() + l - 1);
    }
    return c;
  }

  // -------------------------------------------------- integral monoids

  /// phi_A of the generators, without zero, repeated or decomposable ones.
  AffineMonoid P_int() const {
    std::vector<IVec> g;
    for (GroupElem a = 0; a < n_; ++a)
      for (GroupElem b = 0; b < n_; ++b) g.push_back(phi(raw(a, b)));
    return AffineMonoid(n_ - 1, minimal_generators(g));
  }
  /// Images of (e_{l,l'}, 0) and (0, l) under (p, l) -> phi_A(p) + e_l.
  AffineMonoid Q_int() const {
    std::vector<IVec> g;
    for (GroupElem a = 0; a < n_; ++a)
      for (GroupElem b = 0; b < n_; ++b) g.push_back(phi(raw(a, b)));
    for (GroupElem l = 1; l < n_; ++l) g.push_back(basis(l));
    return AffineMonoid(n_ - 1, minimal_generators(g));
  }
  IVec value_grading() const { return IVec(n_ - 1, 1); }

  /// Drop zeros, repeats and generators lying in the monoid of the rest.
  std::vector<IVec> minimal_generators(const std::vector<IVec>& gens) const {
    std::vector<IVec> g;
    for (const auto& x : gens) {
      bool zero = true;
      for (auto c : x) zero = zero && c == 0;
      if (zero || std::find(g.begin(), g.end(), x) != g.end()) continue;
      g.push_back(x);
    }
    for (std::size_t k = 0; k < g.size();) {
      std::vector<IVec> rest = g;
      rest.erase(rest.begin() + k);
      if (affine_membership(AffineMonoid(n_ - 1, rest), g[k], value_grading()))
        g = rest;
      else
        ++k;
    }
    return g;
  }

  void check_pa(const FreeElem& p) const {
    if (p.rank() != rank())
      throw InvalidInput("element of rank " + std::to_string(p.rank()) +
                         " is not in P_A of rank " + std::to_string(rank()));
  }

 private:
  static IVec drop_zero(const IVec& v) { return IVec(v.begin() + 1, v.end()); }

  AbelianGroup A_;
  std::size_t n_;
  std::shared_ptr<const PresentedMonoid> pa_;
};

}  // namespace coverforge
