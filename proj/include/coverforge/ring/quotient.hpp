#pragma once

// Quotients R[x]/(m(x)) by a monic univariate modulus.  Iterating the
// construction gives composite orders such as Z[i][xi] with i^2 = -1 and
// xi^4 + xi^3 + xi^2 + xi + 1 = 0.  Elements are coefficient vectors of
// length deg(m), reduced after every multiplication.
//
// Unit and divisibility queries go through the multiplication matrix over
// the bottom scalar domain (Z, Q or GF(p)), solved exactly.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/ring/matrix.hpp"
#include "coverforge/ring/snf.hpp"

namespace coverforge {

template <CommutativeRing R>
struct QuotientContext {
  std::string variable;
  std::vector<R> modulus;  ///< low to high, monic, size = degree + 1
  R base_zero;

  std::size_t degree() const { return modulus.size() - 1; }
  bool same_as(const QuotientContext& o) const {
    return variable == o.variable && modulus == o.modulus;
  }
};

template <CommutativeRing R>
class Quotient {
 public:
  using Base = R;
  using Context = QuotientContext<R>;

  Quotient() = default;
  Quotient(std::shared_ptr<const Context> ctx, std::vector<R> coords)
      : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (coords_.size() != ctx_->degree())
      throw InvalidInput("quotient element has wrong number of coordinates");
  }

  static std::shared_ptr<const Context> make_context(std::string variable,
                                                     std::vector<R> modulus) {
    if (modulus.size() < 2)
      throw InvalidInput("quotient modulus must have positive degree");
    if (!(modulus.back() == one_like(modulus.back())))
      throw InvalidInput("quotient modulus must be monic");
    R zero = zero_like(modulus.back());
    return std::make_shared<const Context>(
        Context{std::move(variable), std::move(modulus), zero});
  }

  static Quotient constant(std::shared_ptr<const Context> ctx, const R& c) {
    std::vector<R> v(ctx->degree(), ctx->base_zero);
    v[0] = c;
    return Quotient(ctx, std::move(v));
  }
  /// The class of the adjoined variable.
  static Quotient generator(std::shared_ptr<const Context> ctx) {
    std::vector<R> coeffs{ctx->base_zero, one_like(ctx->base_zero)};
    return from_polynomial(ctx, coeffs);
  }
  /// Reduce c[0] + c[1] x + ... modulo the modulus.
  static Quotient from_polynomial(std::shared_ptr<const Context> ctx,
                                  std::vector<R> c) {
    reduce(*ctx, c);
    c.resize(ctx->degree(), ctx->base_zero);
    return Quotient(ctx, std::move(c));
  }

  const std::shared_ptr<const Context>& context() const { return ctx_; }
  const std::vector<R>& coords() const { return coords_; }
  const R& base_zero() const { return ctx_->base_zero; }

  friend Quotient operator+(const Quotient& a, const Quotient& b) {
    check(a, b);
    std::vector<R> v(a.coords_.size(), a.base_zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coords_[i] + b.coords_[i];
    return Quotient(a.ctx_, std::move(v));
  }
  friend Quotient operator-(const Quotient& a, const Quotient& b) {
    check(a, b);
    std::vector<R> v(a.coords_.size(), a.base_zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coords_[i] - b.coords_[i];
    return Quotient(a.ctx_, std::move(v));
  }
  Quotient operator-() const {
    std::vector<R> v(coords_.size(), base_zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coords_[i];
    return Quotient(ctx_, std::move(v));
  }
  friend Quotient operator*(const Quotient& a, const Quotient& b) {
    check(a, b);
    const std::size_t n = a.coords_.size();
    std::vector<R> prod(2 * n - 1, a.base_zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(a.coords_[i])) continue;
      for (std::size_t j = 0; j < n; ++j)
        prod[i + j] = prod[i + j] + a.coords_[i] * b.coords_[j];
    }
    return from_polynomial(a.ctx_, std::move(prod));
  }
  Quotient& operator+=(const Quotient& b) { return *this = *this + b; }
  Quotient& operator-=(const Quotient& b) { return *this = *this - b; }
  Quotient& operator*=(const Quotient& b) { return *this = *this * b; }

  friend bool operator==(const Quotient& a, const Quotient& b) {
    check(a, b);
    return a.coords_ == b.coords_;
  }

  static void check(const Quotient& a, const Quotient& b) {
    if (a.ctx_ == b.ctx_) return;
    if (!a.ctx_ || !b.ctx_ || !a.ctx_->same_as(*b.ctx_))
      throw RingMismatch("quotient rings differ");
  }

 private:
  static void reduce(const Context& ctx, std::vector<R>& c) {
    const std::size_t n = ctx.degree();
    for (std::size_t k = c.size(); k-- > n;) {
      if (is_zero(c[k])) continue;
      R lead = c[k];
      // x^k = x^(k-n) * x^n and x^n = -(m_0 + ... + m_{n-1} x^{n-1})
      for (std::size_t i = 0; i < n; ++i)
        c[k - n + i] = c[k - n + i] - lead * ctx.modulus[i];
      c[k] = ctx.base_zero;
    }
  }

  std::shared_ptr<const Context> ctx_;
  std::vector<R> coords_;
};

// ------------------------------------------------------- flat coordinates

/// Bottom scalar domain of an iterated quotient.
template <class R>
struct BaseScalar {
  using type = R;
};
template <class R>
struct BaseScalar<Quotient<R>> {
  using type = typename BaseScalar<R>::type;
};
template <class R>
using base_scalar_t = typename BaseScalar<R>::type;

template <class R>
std::size_t flat_dimension(const R&) {
  return 1;
}
template <class R>
std::size_t flat_dimension(const Quotient<R>& a) {
  return a.context()->degree() * flat_dimension(a.base_zero());
}

template <class R>
void append_flat(const R& a, std::vector<base_scalar_t<R>>& out) {
  out.push_back(a);
}
template <class R>
void append_flat(const Quotient<R>& a,
                 std::vector<base_scalar_t<Quotient<R>>>& out) {
  for (const auto& c : a.coords()) append_flat(c, out);
}
template <class R>
std::vector<base_scalar_t<R>> to_flat(const R& a) {
  std::vector<base_scalar_t<R>> out;
  append_flat(a, out);
  return out;
}

template <class R>
R from_flat(const R&, const std::vector<base_scalar_t<R>>& v,
            std::size_t& pos) {
  return v.at(pos++);
}
template <class R>
Quotient<R> from_flat(const Quotient<R>& proto,
                      const std::vector<base_scalar_t<Quotient<R>>>& v,
                      std::size_t& pos) {
  std::vector<R> coords;
  coords.reserve(proto.coords().size());
  for (std::size_t i = 0; i < proto.coords().size(); ++i)
    coords.push_back(from_flat(proto.base_zero(), v, pos));
  return Quotient<R>(proto.context(), std::move(coords));
}
template <class R>
R from_flat(const R& proto, const std::vector<base_scalar_t<R>>& v) {
  std::size_t pos = 0;
  return from_flat(proto, v, pos);
}

/// Matrix of multiplication by a in the flat basis (columns are images).
template <class R>
Matrix<base_scalar_t<Quotient<R>>> multiplication_matrix(const Quotient<R>& a) {
  using S = base_scalar_t<Quotient<R>>;
  const std::size_t n = flat_dimension(a);
  std::vector<S> flat_zero = to_flat(zero_like(a));
  const S szero = flat_zero.front();
  Matrix<S> m(n, n, szero);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<S> e(n, szero);
    e[j] = one_like(szero);
    std::vector<S> col = to_flat(a * from_flat(a, e));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

/// Norm down to the bottom scalar domain (determinant of multiplication).
template <class R>
base_scalar_t<Quotient<R>> norm(const Quotient<R>& a) {
  return determinant(multiplication_matrix(a));
}

// ------------------------------------------------------------- protocol

template <class R>
Quotient<R> zero_like(const Quotient<R>& a) {
  return Quotient<R>::constant(a.context(), a.base_zero());
}
template <class R>
Quotient<R> one_like(const Quotient<R>& a) {
  return Quotient<R>::constant(a.context(), one_like(a.base_zero()));
}
template <class R>
Quotient<R> from_integer(const Quotient<R>& a, const Integer& n) {
  return Quotient<R>::constant(a.context(), from_integer(a.base_zero(), n));
}
template <class R>
bool is_zero(const Quotient<R>& a) {
  for (const auto& c : a.coords())
    if (!is_zero(c)) return false;
  return true;
}

template <class R>
std::string to_string(const Quotient<R>& a) {
  if (is_zero(a)) return "0";
  const std::string& x = a.context()->variable;
  std::string out;
  for (std::size_t k = a.coords().size(); k-- > 0;) {
    const R& c = a.coords()[k];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool negative = false;
    bool compound = cs.find(' ') != std::string::npos;
    if (!compound && cs[0] == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    std::string mono = k == 0 ? "" : (k == 1 ? x : x + "^" + std::to_string(k));
    if (mono.empty())
      out += compound ? "(" + cs + ")" : cs;
    else if (!compound && cs == "1")
      out += mono;
    else
      out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
  }
  return out;
}

template <class R>
std::optional<Quotient<R>> divides(const Quotient<R>& a, const Quotient<R>& b) {
  Quotient<R>::check(a, b);
  auto x = solve_exact(multiplication_matrix(a), to_flat(b));
  if (!x) return std::nullopt;
  return from_flat(a, *x);
}
template <class R>
std::optional<Quotient<R>> try_inverse(const Quotient<R>& a) {
  return divides(a, one_like(a));
}
template <class R>
bool is_unit(const Quotient<R>& a) {
  return try_inverse(a).has_value();
}

}  // namespace coverforge
