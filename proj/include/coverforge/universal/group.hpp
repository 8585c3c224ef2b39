#pragma once

// Finite abelian groups Z/n_1 x ... x Z/n_k.  Elements are addressed by
// their index in the lexicographic enumeration of residue vectors (first
// factor most significant), so index 0 is the neutral element.

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverforge/error.hpp"

namespace coverforge {

using GroupElem = std::size_t;

class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(std::vector<std::int64_t>{}) {}
  explicit AbelianGroup(std::vector<std::int64_t> cyclic_orders)
      : orders_(std::move(cyclic_orders)) {
    order_ = 1;
    for (auto n : orders_) {
      if (n < 1) throw InvalidInput("cyclic orders must be at least 1");
      order_ *= static_cast<std::size_t>(n);
      if (order_ > (1u << 20)) throw InvalidInput("group too large");
    }
  }
  static AbelianGroup cyclic(std::int64_t n) { return AbelianGroup({n}); }

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::size_t order() const { return order_; }
  GroupElem zero() const { return 0; }

  std::vector<std::int64_t> residues(GroupElem x) const {
    check(x);
    std::vector<std::int64_t> r(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
      r[i] = static_cast<std::int64_t>(x % orders_[i]);
      x /= orders_[i];
    }
    return r;
  }
  GroupElem element(const std::vector<std::int64_t>& residues) const {
    if (residues.size() != orders_.size())
      throw InvalidInput("group element has the wrong number of components");
    GroupElem x = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::int64_t r = residues[i] % orders_[i];
      if (r < 0) r += orders_[i];
      x = x * orders_[i] + static_cast<GroupElem>(r);
    }
    return x;
  }

  GroupElem add(GroupElem a, GroupElem b) const {
    auto ra = residues(a), rb = residues(b);
    for (std::size_t i = 0; i < ra.size(); ++i) ra[i] += rb[i];
    return element(ra);
  }
  GroupElem neg(GroupElem a) const {
    auto r = residues(a);
    for (auto& x : r) x = -x;
    return element(r);
  }
  GroupElem sub(GroupElem a, GroupElem b) const { return add(a, neg(b)); }
  GroupElem multiple(std::int64_t k, GroupElem a) const {
    auto r = residues(a);
    for (auto& x : r) x *= k;
    return element(r);
  }
  /// Order of a as a group element.
  std::int64_t element_order(GroupElem a) const {
    std::int64_t n = 1;
    auto r = residues(a);
    for (std::size_t i = 0; i < r.size(); ++i)
      n = std::lcm(n, orders_[i] / std::gcd(orders_[i], r[i]));
    return n;
  }
  /// Standard generator of the i-th cyclic factor.
  GroupElem standard_generator(std::size_t i) const {
    std::vector<std::int64_t> r(orders_.size(), 0);
    r.at(i) = 1;
    return element(r);
  }

  /// "2" for cyclic groups, "(1,0)" otherwise.
  std::string to_string(GroupElem x) const {
    auto r = residues(x);
    if (r.size() == 1) return std::to_string(r[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i)
      s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
  }
  std::string description() const {
    if (orders_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i)
      s += (i ? " x " : "") + std::string("Z/") + std::to_string(orders_[i]);
    return s;
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

  void check(GroupElem x) const {
    if (x >= order_) throw InvalidInput("group element out of range");
  }

 private:
  std::vector<std::int64_t> orders_;
  std::size_t order_ = 1;
};

/// Homomorphism A -> B given by the images of A's standard generators.
class GroupHom {
 public:
  GroupHom(AbelianGroup source, AbelianGroup target, std::vector<GroupElem> images)
      : a_(std::move(source)), b_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != a_.cyclic_orders().size())
      throw InvalidInput("one image per cyclic factor is required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      b_.check(images_[i]);
      if (b_.multiple(a_.cyclic_orders()[i], images_[i]) != b_.zero())
        throw InvalidInput("image order does not divide the factor order");
    }
  }
  const AbelianGroup& source() const { return a_; }
  const AbelianGroup& target() const { return b_; }
  GroupElem operator()(GroupElem x) const {
    auto r = a_.residues(x);
    GroupElem y = b_.zero();
    for (std::size_t i = 0; i < r.size(); ++i) y = b_.add(y, b_.multiple(r[i], images_[i]));
    return y;
  }
  bool surjective() const {
    std::vector<bool> hit(b_.order(), false);
    for (GroupElem x = 0; x < a_.order(); ++x) hit[(*this)(x)] = true;
    for (bool h : hit)
      if (!h) return false;
    return true;
  }

 private:
  AbelianGroup a_, b_;
  std::vector<GroupElem> images_;
};

/// An injective homomorphism onto the subgroup `subset` of A, with source in
/// invariant-factor form.  Throws InvalidInput when `subset` is not a
/// subgroup.
inline GroupHom subgroup_embedding(const AbelianGroup& A, std::vector<GroupElem> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (auto x : subset) A.check(x);
  if (subset.empty() || subset.front() != A.zero())
    throw InvalidInput("a subgroup must contain 0");
  auto member = [&](GroupElem x) { return std::binary_search(subset.begin(), subset.end(), x); };
  for (auto x : subset)
    for (auto y : subset)
      if (!member(A.add(x, y)))
        throw InvalidInput("not closed under addition: " + A.to_string(x) + " + " +
                           A.to_string(y) + " = " + A.to_string(A.add(x, y)));
  const auto m = static_cast<std::int64_t>(subset.size());

  // invariant factor sequences n_1 | n_2 | ... with product m
  std::vector<std::vector<std::int64_t>> shapes;
  std::vector<std::int64_t> cur;
  auto split = [&](auto& self, std::int64_t rest, std::int64_t prev) -> void {
    if (rest == 1) {
      shapes.push_back(cur);
      return;
    }
    for (std::int64_t d = prev; d <= rest; d += prev)
      if (rest % d == 0 && (cur.empty() || d % cur.back() == 0)) {
        cur.push_back(d);
        self(self, rest / d, d);
        cur.pop_back();
      }
  };
  split(split, m, 2);

  for (const auto& shape : shapes) {
    AbelianGroup source(shape);
    std::vector<GroupElem> images;
    std::optional<GroupHom> found;
    auto pick = [&](auto& self, std::size_t i) -> void {
      if (found) return;
      if (i == shape.size()) {
        GroupHom h(source, A, images);
        std::vector<GroupElem> hit;
        for (GroupElem x = 0; x < source.order(); ++x) hit.push_back(h(x));
        std::sort(hit.begin(), hit.end());
        if (std::unique(hit.begin(), hit.end()) == hit.end()) found = h;
        return;
      }
      for (auto g : subset)
        if (A.element_order(g) == shape[i]) {
          images.push_back(g);
          self(self, i + 1);
          images.pop_back();
        }
    };
    pick(pick, 0);
    if (found) return *found;
  }
  throw std::logic_error("no invariant factor decomposition found");
}

}  // namespace coverforge
