#pragma once

// Elements of the free commutative monoid N^n and the term order used to
// orient relations.

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "coverforge/error.hpp"

namespace coverforge {

struct FreeElem {
  std::vector<std::uint32_t> e;

  FreeElem() = default;
  explicit FreeElem(std::size_t rank) : e(rank, 0) {}
  FreeElem(std::initializer_list<std::uint32_t> v) : e(v) {}
  explicit FreeElem(std::vector<std::uint32_t> v) : e(std::move(v)) {}

  static FreeElem unit(std::size_t rank, std::size_t i, std::uint32_t k = 1) {
    FreeElem x(rank);
    x.e.at(i) = k;
    return x;
  }

  std::size_t rank() const { return e.size(); }
  std::uint32_t operator[](std::size_t i) const { return e[i]; }
  std::uint32_t& operator[](std::size_t i) { return e[i]; }

  std::uint64_t degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }
  bool is_zero() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  friend bool operator==(const FreeElem&, const FreeElem&) = default;

  friend FreeElem operator+(const FreeElem& a, const FreeElem& b) {
    same_rank(a, b);
    FreeElem r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
  }
  FreeElem& operator+=(const FreeElem& b) {
    same_rank(*this, b);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.e[i];
    return *this;
  }
  FreeElem scaled(std::uint32_t k) const {
    FreeElem r = *this;
    for (auto& x : r.e) x *= k;
    return r;
  }

  static void same_rank(const FreeElem& a, const FreeElem& b) {
    if (a.e.size() != b.e.size())
      throw InvalidInput("rank mismatch: " + std::to_string(a.e.size()) +
                         " vs " + std::to_string(b.e.size()));
  }
};

/// a <= b componentwise (a divides b in N^n).
inline bool le(const FreeElem& a, const FreeElem& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

/// b - a, assuming a <= b.
inline FreeElem minus(const FreeElem& b, const FreeElem& a) {
  FreeElem r = b;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
  return r;
}

inline FreeElem lcm(const FreeElem& a, const FreeElem& b) {
  FreeElem r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const FreeElem& a, const FreeElem& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

/// Term order: total degree first; ties go to the element with the larger
/// exponent at the last coordinate where the two differ.  Under this order
/// later generators are larger, so a relation a ~ b between generators is
/// oriented b -> a.
inline int compare(const FreeElem& a, const FreeElem& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}
inline bool term_less(const FreeElem& a, const FreeElem& b) {
  return compare(a, b) < 0;
}

struct FreeElemHash {
  std::size_t operator()(const FreeElem& x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : x.e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

/// "2*g_0 + g_3"; names default to g_i.
inline std::string to_string(const FreeElem& x,
                             const std::vector<std::string>& names = {}) {
  std::string out;
  for (std::size_t i = 0; i < x.e.size(); ++i) {
    if (x.e[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (x.e[i] != 1) out += std::to_string(x.e[i]) + "*";
    out += i < names.size() ? names[i] : "g_" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace coverforge
