#pragma once

// Brute-force congruence closure of a presentation restricted to elements of
// bounded total degree.  Independent of the rewriting machinery; used as an
// oracle for completion.  Elements joined here are certainly congruent;
// elements not joined may still be congruent through a path that leaves the
// degree window.

#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coverforge/monoid/rewrite.hpp"

namespace coverforge {

class CongruenceClosure {
 public:
  CongruenceClosure(const MonoidPresentation& p, std::uint32_t max_degree)
      : rank_(p.rank()) {
    FreeElem x(rank_);
    auto rec = [&](auto& self, std::size_t start, std::uint32_t deg) -> void {
      index_.emplace(x, elems_.size());
      elems_.push_back(x);
      if (deg == max_degree) return;
      for (std::size_t i = start; i < rank_; ++i) {
        x[i] += 1;
        self(self, i, deg + 1);
        x[i] -= 1;
      }
    };
    rec(rec, 0, 0);
    parent_.resize(elems_.size());
    std::iota(parent_.begin(), parent_.end(), 0);
    for (std::size_t k = 0; k < elems_.size(); ++k)
      for (const auto& r : p.relations()) {
        join_shifted(k, r.lhs, r.rhs);
        join_shifted(k, r.rhs, r.lhs);
      }
  }

  /// Whether both elements lie in the window and were joined.
  bool joined(const FreeElem& a, const FreeElem& b) {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) return false;
    return root(ia->second) == root(ib->second);
  }
  bool contains(const FreeElem& a) const { return index_.count(a) > 0; }
  const std::vector<FreeElem>& elements() const { return elems_; }

 private:
  void join_shifted(std::size_t k, const FreeElem& from, const FreeElem& to) {
    const FreeElem& x = elems_[k];
    if (!le(from, x)) return;
    FreeElem y = minus(x, from) + to;
    auto it = index_.find(y);
    if (it == index_.end()) return;
    std::size_t a = root(k), b = root(it->second);
    if (a != b) parent_[a] = b;
  }
  std::size_t root(std::size_t k) {
    while (parent_[k] != k) {
      parent_[k] = parent_[parent_[k]];
      k = parent_[k];
    }
    return k;
  }

  std::size_t rank_;
  std::vector<FreeElem> elems_;
  std::unordered_map<FreeElem, std::size_t, FreeElemHash> index_;
  std::vector<std::size_t> parent_;
};

struct ClosureComparison {
  bool agree = false;
  std::uint32_t window = 0;  ///< closure degree window finally used
  std::optional<std::pair<FreeElem, FreeElem>> mismatch;
  std::string detail;
};

/// Compare equality by normal forms with the closure on all pairs of degree
/// <= D.  A pair joined by the closure but with different normal forms is a
/// definite disagreement.  A pair with equal normal forms that the closure
/// has not joined is retried with wider windows up to max_window.
inline ClosureComparison compare_with_closure(const MonoidPresentation& p,
                                              const RewriteSystem& rs,
                                              std::uint32_t D,
                                              std::uint32_t max_window = 17) {
  ClosureComparison out;
  for (std::uint32_t window = D + 4; window <= max_window; window += 4) {
    CongruenceClosure cc(p, window);
    std::vector<FreeElem> low;
    for (const auto& x : cc.elements())
      if (x.degree() <= D) low.push_back(x);
    std::vector<FreeElem> nf;
    for (const auto& x : low) nf.push_back(rs.normal_form(x));
    bool widen = false;
    out.window = window;
    out.mismatch.reset();
    for (std::size_t a = 0; a < low.size(); ++a)
      for (std::size_t b = a + 1; b < low.size(); ++b) {
        bool by_nf = nf[a] == nf[b];
        bool by_cc = cc.joined(low[a], low[b]);
        if (by_nf == by_cc) continue;
        out.mismatch = {low[a], low[b]};
        if (by_cc) {
          out.detail = "congruent elements with different normal forms";
          return out;
        }
        out.detail = "equal normal forms not joined within the window";
        widen = true;
      }
    if (!widen) {
      out.agree = true;
      return out;
    }
  }
  return out;
}

}  // namespace coverforge
