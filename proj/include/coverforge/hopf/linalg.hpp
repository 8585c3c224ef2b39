#pragma once

// Dense vectors over GF(p) and incremental row reduction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/error.hpp"
#include "coverforge/ring/scalar.hpp"

namespace coverforge {

using FpVec = std::vector<std::uint32_t>;

struct PrimeField {
  std::uint32_t p = 2;

  explicit PrimeField(std::uint32_t prime = 2) : p(prime) {
    if (!is_prime(prime)) throw InvalidInput(std::to_string(prime) + " is not prime");
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p == 0) throw InvalidInput("division by zero in GF(" + std::to_string(p) + ")");
    std::uint32_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1u) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t reduce(std::int64_t v) const {
    auto m = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
  }

  /// y += c * x
  void axpy(FpVec& y, std::uint32_t c, const FpVec& x) const {
    if (c == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (x[i]) y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
  }
  FpVec scaled(std::uint32_t c, const FpVec& x) const {
    FpVec y(x.size(), 0);
    axpy(y, c, x);
    return y;
  }
};

inline bool is_zero_vec(const FpVec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

/// Row space kept in reduced echelon form (every pivot column is zero in the
/// other rows), so reduce() returns a canonical representative modulo the space.
/// Rows optionally carry the combination of inserted vectors that produced them.
class RowSpace {
 public:
  RowSpace(PrimeField f, std::size_t dim, bool track = false) : f_(f), dim_(dim), track_(track) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const PrimeField& field() const { return f_; }
  const std::vector<FpVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  FpVec reduce(const FpVec& v) const {
    FpVec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (auto c = r[pivots_[k]]) f_.axpy(r, f_.neg(c), rows_[k]);
    return r;
  }
  bool contains(const FpVec& v) const { return is_zero_vec(reduce(v)); }

  /// Adds v; false when v already lies in the space.
  bool insert(const FpVec& v) {
    check(v);
    FpVec r = v;
    FpVec combo;
    if (track_) {
      combo.assign(inserted_, 0);
      combo.push_back(1);
    }
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (auto c = r[pivots_[k]]) {
        auto m = f_.neg(c);
        f_.axpy(r, m, rows_[k]);
        if (track_) {
          combo.resize(inserted_ + 1, 0);
          FpVec ck = combos_[k];
          ck.resize(inserted_ + 1, 0);
          f_.axpy(combo, m, ck);
        }
      }
    ++inserted_;
    std::size_t piv = 0;
    while (piv < dim_ && r[piv] == 0) ++piv;
    if (piv == dim_) return false;
    auto inv = f_.inv(r[piv]);
    r = f_.scaled(inv, r);
    if (track_) combo = f_.scaled(inv, combo);
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (auto c = rows_[k][piv]) {
        auto m = f_.neg(c);
        f_.axpy(rows_[k], m, r);
        if (track_) {
          combos_[k].resize(inserted_, 0);
          f_.axpy(combos_[k], m, combo);
        }
      }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    if (track_) combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(combo));
    return true;
  }

  /// Coefficients c with v = sum c_i (i-th inserted vector), if v is in the span.
  std::optional<FpVec> solve(const FpVec& v) const {
    if (!track_) throw CapabilityError("row space does not track combinations");
    check(v);
    FpVec r = v, out(inserted_, 0);
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (auto c = r[pivots_[k]]) {
        f_.axpy(r, f_.neg(c), rows_[k]);
        FpVec ck = combos_[k];
        ck.resize(inserted_, 0);
        f_.axpy(out, c, ck);
      }
    if (!is_zero_vec(r)) return std::nullopt;
    return out;
  }

 private:
  void check(const FpVec& v) const {
    if (v.size() != dim_)
      throw InvalidInput("vector of length " + std::to_string(v.size()) + " in a space of dimension " +
                         std::to_string(dim_));
  }

  PrimeField f_;
  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<FpVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<FpVec> combos_;
};

}  // namespace coverforge
