#pragma once

// Smith normal form over a Euclidean domain (Z, or k[s] with k a field) and
// exact linear solving built on it.

#include <optional>
#include <vector>

#include "coverforge/ring/matrix.hpp"
#include "coverforge/ring/poly.hpp"

namespace coverforge {

template <class R>
struct SmithForm {
  Matrix<R> d;  ///< diagonal, d_1 | d_2 | ...
  Matrix<R> u;  ///< invertible, rows x rows
  Matrix<R> v;  ///< invertible, cols x cols; u * m * v == d

  /// Nonzero diagonal entries in order.
  std::vector<R> invariant_factors() const {
    std::vector<R> out;
    for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i)
      if (!is_zero(d(i, i))) out.push_back(d(i, i));
    return out;
  }
  std::size_t rank() const { return invariant_factors().size(); }
};

namespace detail {

template <class R>
void require_snf_ring(const R& sample) {
  if constexpr (std::is_same_v<R, Integer>) {
    (void)sample;
  } else if constexpr (std::is_same_v<R, Poly<Rational>> ||
                       std::is_same_v<R, Poly<Fp>>) {
    sample.require_univariate();
  } else {
    static_assert(sizeof(R) == 0, "Smith normal form needs Z or k[s]");
  }
}

}  // namespace detail

/// Pivot rule: smallest Euclidean norm among the nonzero entries of the
/// remaining block, ties broken by row-major position.
/// With track_u false the left transform is not accumulated (u is left
/// empty), which saves most of the work for tall relation matrices.
template <EuclideanDomain R>
SmithForm<R> smith_normal_form(const Matrix<R>& m, bool track_u = true) {
  detail::require_snf_ring(m.zero());
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix<R> d = m;
  Matrix<R> u = track_u ? Matrix<R>::identity(rows, m.zero())
                        : Matrix<R>(0, 0, m.zero());
  Matrix<R> v = Matrix<R>::identity(cols, m.zero());
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // choose pivot
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (is_zero(d(i, j))) continue;
          Integer nrm = euclid_norm(d(i, j));
          if (!pivot || nrm < best) {
            pivot = {i, j};
            best = nrm;
          }
        }
      if (!pivot) break;
      auto [pi, pj] = *pivot;
      if (pi != t) {
        d.swap_rows(pi, t);
        if (track_u) u.swap_rows(pi, t);
      }
      if (pj != t) {
        d.swap_cols(pj, t);
        v.swap_cols(pj, t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(d(i, t))) continue;
        auto [q, r] = divmod(d(i, t), d(t, t));
        R f = -q;
        d.add_row(i, t, f);
        if (track_u) u.add_row(i, t, f);
        if (!is_zero(r)) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(d(t, j))) continue;
        auto [q, r] = divmod(d(t, j), d(t, t));
        R f = -q;
        d.add_col(j, t, f);
        v.add_col(j, t, f);
        if (!is_zero(r)) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide every remaining entry
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!is_zero(divmod(d(i, j), d(t, t)).second)) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      d.add_row(t, *bad_row, one_like(m.zero()));
      if (track_u) u.add_row(t, *bad_row, one_like(m.zero()));
    }
    if (t < rows && t < cols && !is_zero(d(t, t))) {
      R c = unit_normal(d(t, t));
      d.scale_row(t, c);
      if (track_u) u.scale_row(t, c);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

/// Some x with a * x == b over a Euclidean domain, if one exists.
template <EuclideanDomain R>
std::optional<std::vector<R>> solve_via_snf(const Matrix<R>& a,
                                            const std::vector<R>& b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side length mismatch");
  SmithForm<R> s = smith_normal_form(a);
  std::vector<R> c = s.u.apply(b);
  std::vector<R> y(a.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    R di = (i < a.cols()) ? s.d(i, i) : a.zero();
    if (is_zero(di)) {
      if (!is_zero(c[i])) return std::nullopt;
      continue;
    }
    auto [q, r] = divmod(c[i], di);
    if (!is_zero(r)) return std::nullopt;
    y[i] = q;
  }
  return s.v.apply(y);
}

/// Integer or field solve, chosen by the entry type.
template <class S>
std::optional<std::vector<S>> solve_exact(const Matrix<S>& a,
                                          const std::vector<S>& b) {
  if constexpr (std::is_same_v<S, Integer>)
    return solve_via_snf(a, b);
  else if constexpr (is_field_v<S>)
    return solve_over_field(a, b);
  else
    static_assert(sizeof(S) == 0, "no exact solver for this ring");
}

}  // namespace coverforge
