#pragma once

// Localization R[1/u] at a single declared element u.  Elements are a/u^k;
// after every operation common factors of u are cancelled, and equality is
// tested by cross multiplication.
//
// Inverting several elements is done by inverting their product.

#include <memory>
#include <optional>
#include <string>

#include "coverforge/ring/poly.hpp"
#include "coverforge/ring/quotient.hpp"

namespace coverforge {

/// Upper bound m such that a | u^k for some k implies a | u^m.
inline unsigned long unit_search_bound(const Integer& a) {
  Integer m = abs(a);
  return mpz_sizeinbase(m.get_mpz_t(), 2) + 1;
}
template <class R>
unsigned long unit_search_bound(const Quotient<R>& a) {
  using S = base_scalar_t<Quotient<R>>;
  if constexpr (std::is_same_v<S, Integer>) {
    // every prime ideal exponent of a is bounded by log2 |N(a)|
    return unit_search_bound(norm(a));
  } else {
    (void)a;
    throw CapabilityError("localization unit query over a non-integral base");
  }
}
inline unsigned long unit_search_bound(const Poly<Integer>& a) {
  Integer top = 0;
  for (const auto& [e, c] : a.terms())
    if (abs(c) > top) top = abs(c);
  return static_cast<unsigned long>(std::max(a.degree(), 0l)) +
         unit_search_bound(top);
}

template <CommutativeRing R>
struct LocalizedContext {
  R inverted;  ///< the element u
};

template <CommutativeRing R>
class Localized {
 public:
  using Base = R;
  using Context = LocalizedContext<R>;

  Localized() = default;
  Localized(std::shared_ptr<const Context> ctx, R numerator,
            unsigned long power = 0)
      : ctx_(std::move(ctx)), num_(std::move(numerator)), power_(power) {
    normalize();
  }

  static std::shared_ptr<const Context> make_context(R u) {
    if (is_zero(u)) throw InvalidInput("cannot invert zero");
    return std::make_shared<const Context>(Context{std::move(u)});
  }

  const std::shared_ptr<const Context>& context() const { return ctx_; }
  const R& numerator() const { return num_; }
  unsigned long power() const { return power_; }
  const R& inverted() const { return ctx_->inverted; }

  friend Localized operator+(const Localized& a, const Localized& b) {
    check(a, b);
    unsigned long m = std::max(a.power_, b.power_);
    R n = a.num_ * pow(a.inverted(), m - a.power_) +
          b.num_ * pow(a.inverted(), m - b.power_);
    return Localized(a.ctx_, std::move(n), m);
  }
  friend Localized operator-(const Localized& a, const Localized& b) {
    return a + (-b);
  }
  Localized operator-() const { return Localized(ctx_, -num_, power_); }
  friend Localized operator*(const Localized& a, const Localized& b) {
    check(a, b);
    return Localized(a.ctx_, a.num_ * b.num_, a.power_ + b.power_);
  }
  Localized& operator+=(const Localized& b) { return *this = *this + b; }
  Localized& operator-=(const Localized& b) { return *this = *this - b; }
  Localized& operator*=(const Localized& b) { return *this = *this * b; }

  friend bool operator==(const Localized& a, const Localized& b) {
    check(a, b);
    return a.num_ * pow(a.inverted(), b.power_) ==
           b.num_ * pow(a.inverted(), a.power_);
  }

  static void check(const Localized& a, const Localized& b) {
    if (a.ctx_ == b.ctx_) return;
    if (!a.ctx_ || !b.ctx_ || !(a.ctx_->inverted == b.ctx_->inverted))
      throw RingMismatch("localizations differ");
  }

 private:
  void normalize() {
    while (power_ > 0) {
      auto q = divides(ctx_->inverted, num_);
      if (!q) break;
      num_ = std::move(*q);
      --power_;
    }
  }

  std::shared_ptr<const Context> ctx_;
  R num_{};
  unsigned long power_ = 0;
};

template <class R>
Localized<R> zero_like(const Localized<R>& a) {
  return Localized<R>(a.context(), zero_like(a.numerator()));
}
template <class R>
Localized<R> one_like(const Localized<R>& a) {
  return Localized<R>(a.context(), one_like(a.numerator()));
}
template <class R>
Localized<R> from_integer(const Localized<R>& a, const Integer& n) {
  return Localized<R>(a.context(), from_integer(a.numerator(), n));
}
template <class R>
bool is_zero(const Localized<R>& a) {
  return is_zero(a.numerator());
}
template <class R>
std::string to_string(const Localized<R>& a) {
  std::string n = to_string(a.numerator());
  if (a.power() == 0) return n;
  std::string u = to_string(a.inverted());
  if (n.find(' ') != std::string::npos) n = "(" + n + ")";
  if (u.find_first_of(" +-*") != std::string::npos) u = "(" + u + ")";
  if (a.power() > 1) u += "^" + std::to_string(a.power());
  return n + "/" + u;
}

/// b/a in the localization: a | b u^m for some m <= bound(a).
template <class R>
std::optional<Localized<R>> divides(const Localized<R>& a,
                                    const Localized<R>& b) {
  Localized<R>::check(a, b);
  if (is_zero(a.numerator())) {
    if (is_zero(b.numerator())) return zero_like(b);
    return std::nullopt;
  }
  const unsigned long bound = unit_search_bound(a.numerator());
  R target = b.numerator();
  for (unsigned long m = 0; m <= bound; ++m) {
    if (auto c = divides(a.numerator(), target)) {
      // (a/u^j) * (c u^j / u^(k+m)) = b/u^k
      R num = *c * pow(a.inverted(), a.power());
      return Localized<R>(a.context(), std::move(num), b.power() + m);
    }
    target = target * a.inverted();
  }
  return std::nullopt;
}
template <class R>
std::optional<Localized<R>> try_inverse(const Localized<R>& a) {
  return divides(a, one_like(a));
}
template <class R>
bool is_unit(const Localized<R>& a) {
  return try_inverse(a).has_value();
}

}  // namespace coverforge
