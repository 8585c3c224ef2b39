#pragma once

// Finite-dimensional commutative algebras over GF(p) given by structure
// constants, and their elements (which follow the library's ring protocol).

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverforge/error.hpp"
#include "coverforge/hopf/linalg.hpp"
#include "coverforge/ring/scalar.hpp"

namespace coverforge {

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// Element of a finite algebra: coordinates in the algebra's basis.
struct FAElem {
  AlgebraPtr alg;
  FpVec c;
};

class FiniteAlgebra : public std::enable_shared_from_this<FiniteAlgebra> {
 public:
  using Term = std::pair<std::uint32_t, std::uint32_t>;  // (basis index, coefficient)
  using Product = std::vector<Term>;

  /// `product(i, j)` gives e_i * e_j as a dense vector.  Commutativity,
  /// associativity and the unit are checked on basis elements unless
  /// `verify` is false.
  template <class F>
  static AlgebraPtr make(std::uint32_t p, std::vector<std::string> labels, F&& product, FpVec unit,
                         bool verify = true) {
    auto a = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra(PrimeField(p), std::move(labels)));
    const std::size_t n = a->dim_;
    if (unit.size() != n) throw InvalidInput("unit vector has the wrong length");
    a->unit_ = std::move(unit);
    a->table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FpVec v = product(i, j);
        if (v.size() != n) throw InvalidInput("product vector has the wrong length");
        for (std::size_t k = 0; k < n; ++k)
          if (v[k] % p) a->table_[i * n + j].push_back({static_cast<std::uint32_t>(k), v[k] % p});
      }
    if (verify) {
      if (auto bad = a->axiom_failure()) throw InvalidInput("not a commutative algebra: " + *bad);
    }
    return a;
  }

  /// Basis given by labels, unit = first label; `products` maps a pair of
  /// labels to a linear combination such as "ab+ac" or "2*a".  Products
  /// not listed (in either order) are zero, except those with the unit.
  static AlgebraPtr from_table(std::uint32_t p, std::vector<std::string> labels,
                               const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>&
                                   products) {
    if (labels.empty()) throw InvalidInput("an algebra needs at least the unit");
    auto probe = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra(PrimeField(p), labels));
    const std::size_t n = labels.size();
    std::map<std::pair<std::size_t, std::size_t>, FpVec> given;
    for (const auto& [pair, expr] : products) {
      auto i = probe->index_of(pair.first), j = probe->index_of(pair.second);
      if (i == 0 || j == 0) throw InvalidInput("products with the unit are implied");
      FpVec v = probe->parse_vector(expr);
      for (auto key : {std::make_pair(i, j), std::make_pair(j, i)}) {
        auto it = given.find(key);
        if (it != given.end() && it->second != v)
          throw InvalidInput("conflicting products for " + pair.first + "*" + pair.second);
        given[key] = v;
      }
    }
    FpVec unit(n, 0);
    unit[0] = 1;
    return make(
        p, std::move(labels),
        [&](std::size_t i, std::size_t j) {
          FpVec v(n, 0);
          if (i == 0) v[j] = 1;
          else if (j == 0) v[i] = 1;
          else if (auto it = given.find({i, j}); it != given.end()) v = it->second;
          return v;
        },
        unit);
  }

  static AlgebraPtr prime_field(std::uint32_t p) { return from_table(p, {"1"}, {}); }

  std::uint32_t characteristic() const { return f_.p; }
  const PrimeField& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Product& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  AlgebraPtr ptr() const { return shared_from_this(); }
  FAElem zero() const { return {ptr(), FpVec(dim_, 0)}; }
  FAElem one() const { return {ptr(), unit_}; }
  FAElem basis(std::size_t i) const {
    FAElem x = zero();
    x.c.at(i) = 1;
    return x;
  }
  FAElem element(FpVec c) const {
    if (c.size() != dim_) throw InvalidInput("coordinate vector has the wrong length");
    for (auto& x : c) x %= f_.p;
    return {ptr(), std::move(c)};
  }
  /// Parses a linear combination of basis labels.
  FAElem parse(const std::string& expr) const { return {ptr(), parse_vector(expr)}; }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ParseError("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  FpVec mul(const FpVec& x, const FpVec& y) const {
    FpVec out(dim_, 0);
    std::vector<std::size_t> nx, ny;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i]) nx.push_back(i);
      if (y[i]) ny.push_back(i);
    }
    for (auto i : nx)
      for (auto j : ny) {
        auto c = f_.mul(x[i], y[j]);
        for (auto [k, v] : table_[i * dim_ + j]) out[k] = f_.add(out[k], f_.mul(c, v));
      }
    return out;
  }

  /// Matrix of y -> x y as columns.
  std::vector<FpVec> multiplication_columns(const FpVec& x) const {
    std::vector<FpVec> cols;
    for (std::size_t j = 0; j < dim_; ++j) {
      FpVec e(dim_, 0);
      e[j] = 1;
      cols.push_back(mul(x, e));
    }
    return cols;
  }

  /// q with x q = y, if any.
  std::optional<FpVec> divide(const FpVec& x, const FpVec& y) const {
    RowSpace rs(f_, dim_, true);
    for (const auto& col : multiplication_columns(x)) rs.insert(col);
    return rs.solve(y);
  }

  std::string show(const FpVec& x) const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!x[i]) continue;
      if (!s.empty()) s += " + ";
      if (x[i] != 1) s += std::to_string(x[i]) + (labels_[i] == "1" ? "" : "*");
      if (x[i] == 1 || labels_[i] != "1") s += labels_[i];
    }
    return s.empty() ? "0" : s;
  }

  bool same_as(const FiniteAlgebra& o) const {
    return this == &o || (f_.p == o.f_.p && labels_ == o.labels_ && table_ == o.table_ && unit_ == o.unit_);
  }

  /// First failing basis identity, if any.
  std::optional<std::string> axiom_failure() const {
    const std::size_t n = dim_;
    for (std::size_t i = 0; i < n; ++i) {
      FpVec e(n, 0);
      e[i] = 1;
      if (mul(unit_, e) != e) return "unit * " + labels_[i] + " != " + labels_[i];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (table_[i * n + j] != table_[j * n + i]) return labels_[i] + " * " + labels_[j] + " is not commutative";
    // with commutativity, (ij)k = (jk)i = (ki)j for sorted triples is enough
    auto times = [&](const Product& x, std::size_t k) {
      FpVec out(n, 0);
      for (auto [t, c] : x)
        for (auto [u, v] : table_[t * n + k]) out[u] = f_.add(out[u], f_.mul(c, v));
      return out;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) {
          FpVec x = times(table_[i * n + j], k);
          if (x != times(table_[j * n + k], i) || x != times(table_[k * n + i], j))
            return "(" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ") is not associative";
        }
    return std::nullopt;
  }

 private:
  FiniteAlgebra(PrimeField f, std::vector<std::string> labels)
      : f_(f), dim_(labels.size()), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (labels_[i] == labels_[j]) throw InvalidInput("duplicate basis label '" + labels_[i] + "'");
    // provisional unit e_0 until make() installs the real one
    unit_.assign(dim_, 0);
    if (dim_) unit_[0] = 1;
  }

  FpVec parse_vector(const std::string& raw) const {
    std::string expr;
    for (char ch : raw)
      if (!std::isspace(static_cast<unsigned char>(ch))) expr += ch;
    if (expr.empty()) throw ParseError("empty algebra element");
    FpVec v(dim_, 0);
    std::size_t pos = 0;
    while (pos < expr.size()) {
      bool negative = false;
      if (expr[pos] == '+' || expr[pos] == '-') {
        negative = expr[pos] == '-';
        ++pos;
      }
      std::size_t end = expr.find_first_of("+-", pos);
      if (end == std::string::npos) end = expr.size();
      std::string term = expr.substr(pos, end - pos);
      if (term.empty()) throw ParseError("malformed algebra element '" + raw + "'");
      std::int64_t coef = 1;
      std::string label = term;
      auto star = term.find('*');
      auto is_int = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      };
      if (std::find(labels_.begin(), labels_.end(), term) == labels_.end()) {
        if (star != std::string::npos && is_int(term.substr(0, star))) {
          coef = std::stoll(term.substr(0, star));
          label = term.substr(star + 1);
        } else if (is_int(term)) {
          coef = std::stoll(term);
          label.clear();
        }
      }
      auto c = f_.reduce(negative ? -coef : coef);
      if (label.empty())
        f_.axpy(v, c, unit_);
      else {
        auto k = index_of(label);
        v[k] = f_.add(v[k], c);
      }
      pos = end;
    }
    return v;
  }

  PrimeField f_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Product> table_;
  FpVec unit_;
};

namespace detail {
inline void same_algebra(const FAElem& a, const FAElem& b) {
  if (!a.alg || !b.alg) throw InvalidInput("element without an algebra");
  if (a.alg != b.alg && !a.alg->same_as(*b.alg)) throw RingMismatch("elements of different finite algebras");
}
}  // namespace detail

inline FAElem operator+(const FAElem& a, const FAElem& b) {
  detail::same_algebra(a, b);
  FAElem r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.alg->field().add(r.c[i], b.c[i]);
  return r;
}
inline FAElem operator-(const FAElem& a) {
  FAElem r = a;
  for (auto& x : r.c) x = a.alg->field().neg(x);
  return r;
}
inline FAElem operator-(const FAElem& a, const FAElem& b) { return a + (-b); }
inline FAElem operator*(const FAElem& a, const FAElem& b) {
  detail::same_algebra(a, b);
  return {a.alg, a.alg->mul(a.c, b.c)};
}
inline FAElem& operator+=(FAElem& a, const FAElem& b) { return a = a + b; }
inline FAElem& operator*=(FAElem& a, const FAElem& b) { return a = a * b; }
inline bool operator==(const FAElem& a, const FAElem& b) {
  detail::same_algebra(a, b);
  return a.c == b.c;
}

inline FAElem zero_like(const FAElem& a) { return a.alg->zero(); }
inline FAElem one_like(const FAElem& a) { return a.alg->one(); }
inline FAElem from_integer(const FAElem& a, const Integer& n) {
  Integer r = n % a.alg->characteristic();
  FAElem one = a.alg->one();
  FAElem out = a.alg->zero();
  a.alg->field().axpy(out.c, a.alg->field().reduce(r.get_si()), one.c);
  return out;
}
inline bool is_zero(const FAElem& a) { return is_zero_vec(a.c); }
inline std::string to_string(const FAElem& a) { return a.alg->show(a.c); }
inline std::optional<FAElem> divides(const FAElem& a, const FAElem& b) {
  detail::same_algebra(a, b);
  auto q = a.alg->divide(a.c, b.c);
  if (!q) return std::nullopt;
  return FAElem{a.alg, *q};
}
inline std::optional<FAElem> try_inverse(const FAElem& a) { return divides(a, a.alg->one()); }
inline bool is_unit(const FAElem& a) { return try_inverse(a).has_value(); }

}  // namespace coverforge
