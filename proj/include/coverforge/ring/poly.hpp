#pragma once

// Sparse multivariate polynomials over a coefficient domain K.
//
// Terms are stored in a std::map keyed by exponent vectors, ordered by
// descending graded lexicographic order with variables in declaration order,
// so begin() is always the leading term.  Zero coefficients are never stored.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/ring/concepts.hpp"

namespace coverforge {

using Exponents = std::vector<std::uint32_t>;

/// Descending graded lex (total degree first, then first variable first).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return a > b;
  }
};

template <CommutativeRing K>
struct PolyContext {
  std::vector<std::string> variables;
  K coefficient_zero;

  bool same_as(const PolyContext& other) const {
    return variables == other.variables &&
           coefficient_zero == other.coefficient_zero;
  }
};

template <CommutativeRing K>
class Poly {
 public:
  using Coefficient = K;
  using Context = PolyContext<K>;
  using TermMap = std::map<Exponents, K, GrlexGreater>;

  Poly() = default;
  explicit Poly(std::shared_ptr<const Context> ctx) : ctx_(std::move(ctx)) {}

  static Poly constant(std::shared_ptr<const Context> ctx, const K& c) {
    Poly p(ctx);
    if (!is_zero(c)) p.terms_.emplace(Exponents(p.nvars(), 0), c);
    return p;
  }
  static Poly variable(std::shared_ptr<const Context> ctx, std::size_t index) {
    Poly p(ctx);
    Exponents e(p.nvars(), 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), one_like(ctx->coefficient_zero));
    return p;
  }
  static Poly monomial(std::shared_ptr<const Context> ctx, Exponents e,
                       const K& c) {
    Poly p(ctx);
    if (e.size() != p.nvars()) throw InvalidInput("exponent length mismatch");
    if (!is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }
  /// Univariate constructor from coefficients c[0] + c[1] x + ...
  static Poly from_coefficients(std::shared_ptr<const Context> ctx,
                                const std::vector<K>& coeffs) {
    if (ctx->variables.size() != 1)
      throw CapabilityError("from_coefficients needs a univariate ring");
    Poly p(ctx);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!is_zero(coeffs[k]))
        p.terms_.emplace(Exponents{static_cast<std::uint32_t>(k)}, coeffs[k]);
    return p;
  }

  const std::shared_ptr<const Context>& context() const { return ctx_; }
  std::size_t nvars() const { return ctx_->variables.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }

  K coefficient_zero() const { return ctx_->coefficient_zero; }

  /// Total degree; -1 for the zero polynomial.
  long degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<long>(std::accumulate(e.begin(), e.end(), 0ul));
  }
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  K leading_coefficient() const {
    return terms_.empty() ? coefficient_zero() : terms_.begin()->second;
  }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && degree() == 0);
  }
  K constant_term() const {
    auto it = terms_.find(Exponents(nvars(), 0));
    return it == terms_.end() ? coefficient_zero() : it->second;
  }
  /// Coefficient of x^k in a univariate polynomial.
  K coefficient(std::uint32_t k) const {
    require_univariate();
    auto it = terms_.find(Exponents{k});
    return it == terms_.end() ? coefficient_zero() : it->second;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    check(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  Poly operator-() const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    Poly r(a.ctx_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        K c = ca * cb;
        r.add_term(e, c);
      }
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) {
    check(a, b);
    return a.terms_ == b.terms_;
  }

  Poly scaled(const K& c) const {
    Poly r(ctx_);
    for (const auto& [e, v] : terms_) {
      K w = v * c;
      if (!is_zero(w)) r.terms_.emplace(e, w);
    }
    return r;
  }

  void add_term(const Exponents& e, const K& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  static void check(const Poly& a, const Poly& b) {
    if (a.ctx_ == b.ctx_) return;
    if (!a.ctx_ || !b.ctx_ || !a.ctx_->same_as(*b.ctx_))
      throw RingMismatch("polynomial rings differ");
  }

  void require_univariate() const {
    if (nvars() != 1)
      throw CapabilityError("operation needs a univariate polynomial ring");
  }

 private:
  std::shared_ptr<const Context> ctx_;
  TermMap terms_;
};

/// Factory holding the shared context of a polynomial ring K[x1..xn].
template <CommutativeRing K>
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, K coefficient_zero)
      : ctx_(std::make_shared<const PolyContext<K>>(
            PolyContext<K>{std::move(variables), std::move(coefficient_zero)})) {
  }

  const std::shared_ptr<const PolyContext<K>>& context() const { return ctx_; }
  Poly<K> zero() const { return Poly<K>(ctx_); }
  Poly<K> one() const {
    return Poly<K>::constant(ctx_, one_like(ctx_->coefficient_zero));
  }
  Poly<K> constant(const K& c) const { return Poly<K>::constant(ctx_, c); }
  Poly<K> integer(long n) const {
    return Poly<K>::constant(ctx_,
                             from_integer(ctx_->coefficient_zero, Integer(n)));
  }
  Poly<K> var(const std::string& name) const {
    auto it = std::find(ctx_->variables.begin(), ctx_->variables.end(), name);
    if (it == ctx_->variables.end())
      throw InvalidInput("unknown variable '" + name + "'");
    return Poly<K>::variable(ctx_, it - ctx_->variables.begin());
  }
  Poly<K> var(std::size_t index) const { return Poly<K>::variable(ctx_, index); }
  const std::vector<std::string>& variables() const { return ctx_->variables; }

 private:
  std::shared_ptr<const PolyContext<K>> ctx_;
};

// ------------------------------------------------------------- protocol

template <class K>
Poly<K> zero_like(const Poly<K>& a) {
  return Poly<K>(a.context());
}
template <class K>
Poly<K> one_like(const Poly<K>& a) {
  return Poly<K>::constant(a.context(), one_like(a.coefficient_zero()));
}
template <class K>
Poly<K> from_integer(const Poly<K>& a, const Integer& n) {
  return Poly<K>::constant(a.context(), from_integer(a.coefficient_zero(), n));
}
template <class K>
bool is_zero(const Poly<K>& a) {
  return a.is_zero_poly();
}

namespace detail {
template <class K>
bool coefficient_is_negative(const K& c) {
  if constexpr (std::is_same_v<K, Integer> || std::is_same_v<K, Rational>)
    return sgn(c) < 0;
  else
    return false;
}
}  // namespace detail

template <class K>
std::string to_string(const Poly<K>& a) {
  if (a.is_zero_poly()) return "0";
  std::string out;
  bool first = true;
  const K one = one_like(a.coefficient_zero());
  for (const auto& [e, c] : a.terms()) {
    bool negative = detail::coefficient_is_negative(c);
    K mag = negative ? K(-c) : c;
    bool constant = std::all_of(e.begin(), e.end(),
                                [](std::uint32_t x) { return x == 0; });
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += a.context()->variables[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (constant)
      out += to_string(mag);
    else if (mag == one)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

template <class K>
std::optional<Poly<K>> try_inverse(const Poly<K>& a) {
  if (a.is_zero_poly() || a.degree() != 0) return std::nullopt;
  auto inv = try_inverse(a.leading_coefficient());
  if (!inv) return std::nullopt;
  return Poly<K>::constant(a.context(), *inv);
}
template <class K>
bool is_unit(const Poly<K>& a) {
  return try_inverse(a).has_value();
}

/// Exact division b / a by the single-divisor division algorithm: if a | b
/// then every step cancels the leading term exactly.
template <class K>
std::optional<Poly<K>> divides(const Poly<K>& a, const Poly<K>& b) {
  Poly<K>::check(a, b);
  if (a.is_zero_poly()) {
    if (b.is_zero_poly()) return zero_like(b);
    return std::nullopt;
  }
  Poly<K> rest = b;
  Poly<K> quotient = zero_like(b);
  const Exponents& la = a.leading_exponents();
  const K lc = a.leading_coefficient();
  while (!rest.is_zero_poly()) {
    const Exponents& lr = rest.leading_exponents();
    Exponents shift(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < la[i]) return std::nullopt;
      shift[i] = lr[i] - la[i];
    }
    auto c = divides(lc, rest.leading_coefficient());
    if (!c) return std::nullopt;
    Poly<K> step = Poly<K>::monomial(a.context(), shift, *c);
    quotient += step;
    rest -= step * a;
  }
  return quotient;
}

// Euclidean structure exists only for univariate polynomials over a field.

template <class K>
  requires is_field_v<K>
Integer euclid_norm(const Poly<K>& a) {
  a.require_univariate();
  return Integer(a.degree());
}

template <class K>
  requires is_field_v<K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  b.require_univariate();
  if (b.is_zero_poly()) throw InvalidInput("division by zero polynomial");
  Poly<K> q = zero_like(a), r = a;
  const K inv = *try_inverse(b.leading_coefficient());
  const long db = b.degree();
  while (!r.is_zero_poly() && r.degree() >= db) {
    Exponents shift{static_cast<std::uint32_t>(r.degree() - db)};
    Poly<K> step = Poly<K>::monomial(a.context(), shift,
                                     r.leading_coefficient() * inv);
    q += step;
    r -= step * b;
  }
  return {q, r};
}

template <class K>
  requires is_field_v<K>
Poly<K> unit_normal(const Poly<K>& a) {
  if (a.is_zero_poly()) return one_like(a);
  return Poly<K>::constant(a.context(), *try_inverse(a.leading_coefficient()));
}

/// Content (gcd of coefficients) of an integer polynomial.
inline Integer content(const Poly<Integer>& a) {
  Integer g = 0;
  for (const auto& [e, c] : a.terms()) g = gcd(g, c);
  return g;
}

/// Reduce an integer polynomial's coefficients modulo p.
inline Poly<Fp> reduce_mod(const Poly<Integer>& a,
                           const std::shared_ptr<const PolyContext<Fp>>& ctx) {
  Poly<Fp> r(ctx);
  for (const auto& [e, c] : a.terms())
    r.add_term(e, from_integer(ctx->coefficient_zero, c));
  return r;
}

inline Poly<Rational> to_rational(
    const Poly<Integer>& a,
    const std::shared_ptr<const PolyContext<Rational>>& ctx) {
  Poly<Rational> r(ctx);
  for (const auto& [e, c] : a.terms()) r.add_term(e, Rational(c));
  return r;
}

}  // namespace coverforge
