#pragma once

// Ring descriptions such as "ZZ", "GF(5)[s]", "ZZ[i]/(i^2+1)[1/2]" and the
// dispatch from a description to the concrete element type.
//
//   spec  := coeff ['[' vars ']' ['/(' poly ')']] ('[1/' elem ']')*
//   coeff := ZZ | QQ | GF(p)
//
// A quotient needs exactly one variable.  Localizations are offered over
// ZZ, ZZ[x] and ZZ[x]/(f); several of them invert the product.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "coverforge/hopf/algebra.hpp"
#include "coverforge/ring.hpp"

namespace coverforge::cli {

struct RingSpec {
  enum class Coeff { ZZ, QQ, GF };
  Coeff coeff = Coeff::ZZ;
  std::int64_t p = 0;
  std::vector<std::string> vars;
  std::string modulus;             ///< empty: no quotient
  std::vector<std::string> inverted;
  std::string text;
};

inline RingSpec parse_ring_spec(const std::string& text) {
  RingSpec r;
  r.text = text;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what + " in ring '" + text + "'", 1, pos + 1);
  };
  auto starts = [&](const char* w) { return text.compare(pos, std::char_traits<char>::length(w), w) == 0; };
  // text up to the bracket or parenthesis closing the one just opened
  auto until_close = [&](char open, char close) {
    int depth = 1;
    std::size_t start = pos;
    while (pos < text.size()) {
      if (text[pos] == open) ++depth;
      if (text[pos] == close && --depth == 0) break;
      ++pos;
    }
    if (pos == text.size()) fail(std::string("missing '") + close + "'");
    std::string inner = text.substr(start, pos - start);
    ++pos;
    return inner;
  };

  if (starts("ZZ")) {
    pos += 2;
  } else if (starts("QQ")) {
    r.coeff = RingSpec::Coeff::QQ;
    pos += 2;
  } else if (starts("GF(")) {
    r.coeff = RingSpec::Coeff::GF;
    pos += 3;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos >= text.size() || text[pos] != ')') fail("expected GF(<prime>)");
    r.p = std::stoll(text.substr(start, pos - start));
    if (!is_prime(r.p)) fail(std::to_string(r.p) + " is not prime");
    ++pos;
  } else {
    fail("expected ZZ, QQ or GF(p)");
  }

  if (starts("[") && !starts("[1/")) {
    ++pos;
    std::string inner = until_close('[', ']');
    std::size_t a = 0;
    while (a <= inner.size()) {
      std::size_t b = inner.find(',', a);
      if (b == std::string::npos) b = inner.size();
      std::string v = inner.substr(a, b - a);
      bool ident = !v.empty() && std::isalpha(static_cast<unsigned char>(v[0]));
      for (char ch : v) ident = ident && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
      if (!ident) fail("bad variable name '" + v + "'");
      for (const auto& w : r.vars)
        if (w == v) fail("repeated variable '" + v + "'");
      r.vars.push_back(v);
      a = b + 1;
    }
    if (starts("/(")) {
      if (r.vars.size() != 1) fail("a quotient needs exactly one variable");
      pos += 2;
      r.modulus = until_close('(', ')');
      if (r.modulus.empty()) fail("empty modulus");
    }
  }
  while (starts("[1/")) {
    pos += 3;
    r.inverted.push_back(until_close('[', ']'));
    if (r.inverted.back().empty()) fail("empty element to invert");
  }
  if (pos != text.size()) fail("unexpected '" + text.substr(pos) + "'");
  if (!r.inverted.empty() && r.coeff != RingSpec::Coeff::ZZ)
    throw CapabilityError("localization is only offered over ZZ, ZZ[x] and ZZ[x]/(f), not '" + text + "'");
  if (!r.inverted.empty() && r.vars.size() > 1)
    throw CapabilityError("localization of a multivariate ring '" + text + "'");
  return r;
}

/// A concrete ring: its unit and the symbols the expression parser knows.
template <class R>
struct RingHandle {
  std::string spec;
  R one;
  SymbolTable<R> table;

  R parse(const std::string& text) const { return parse_element(text, table); }
  R zero() const { return table.zero; }
};

namespace detail {

template <class K>
RingHandle<K> scalar_handle(const std::string& spec, K one) {
  return {spec, one, {zero_like(one), {}}};
}

template <class K>
RingHandle<Poly<K>> poly_handle(const std::string& spec, const std::vector<std::string>& vars, const K& one) {
  PolyRing<K> ring(vars, zero_like(one));
  RingHandle<Poly<K>> h{spec, ring.one(), {ring.zero(), {}}};
  for (const auto& v : vars) h.table.symbols.push_back({v, ring.var(v)});
  return h;
}

template <class K>
RingHandle<Quotient<K>> quotient_handle(const RingSpec& s, const K& one) {
  auto poly = poly_handle(s.text, s.vars, one);
  Poly<K> f = poly.parse(s.modulus);
  if (f.degree() < 1) throw InvalidInput("modulus of '" + s.text + "' must have positive degree");
  std::vector<K> coeffs;
  for (long k = 0; k <= f.degree(); ++k) coeffs.push_back(f.coefficient(static_cast<std::uint32_t>(k)));
  auto ctx = Quotient<K>::make_context(s.vars[0], coeffs);
  RingHandle<Quotient<K>> h{s.text, Quotient<K>::constant(ctx, one), {Quotient<K>::constant(ctx, zero_like(one)), {}}};
  h.table.symbols.push_back({s.vars[0], Quotient<K>::generator(ctx)});
  return h;
}

template <class B>
RingHandle<Localized<B>> localize(const RingSpec& s, const RingHandle<B>& base) {
  B u = base.one;
  for (const auto& e : s.inverted) u = u * base.parse(e);
  auto ctx = Localized<B>::make_context(u);
  RingHandle<Localized<B>> h{s.text, Localized<B>(ctx, base.one), {Localized<B>(ctx, base.zero()), {}}};
  for (const auto& [name, v] : base.table.symbols) h.table.symbols.push_back({name, Localized<B>(ctx, v)});
  return h;
}

}  // namespace detail

/// Calls f(RingHandle<R>) with R the element type described by `s`.
template <class F>
void with_ring(const RingSpec& s, F&& f) {
  using C = RingSpec::Coeff;
  const bool poly = !s.vars.empty(), quot = !s.modulus.empty(), loc = !s.inverted.empty();
  auto over = [&](const auto& one) {
    if (quot) f(detail::quotient_handle(s, one));
    else if (poly) f(detail::poly_handle(s.text, s.vars, one));
    else f(detail::scalar_handle(s.text, one));
  };
  if (loc) {
    Integer one(1);
    if (quot) f(detail::localize(s, detail::quotient_handle(s, one)));
    else if (poly) f(detail::localize(s, detail::poly_handle(s.text, s.vars, one)));
    else f(detail::localize(s, detail::scalar_handle(s.text, one)));
    return;
  }
  switch (s.coeff) {
    case C::ZZ: over(Integer(1)); break;
    case C::QQ: over(Rational(1)); break;
    case C::GF: over(Fp(1, s.p)); break;
  }
}

/// The ring of a finite algebra: symbols are its basis labels.
inline RingHandle<FAElem> algebra_handle(const AlgebraPtr& alg) {
  RingHandle<FAElem> h{"algebra", alg->one(), {alg->zero(), {}}};
  for (std::size_t i = 0; i < alg->dim(); ++i) h.table.symbols.push_back({alg->labels()[i], alg->basis(i)});
  return h;
}

}  // namespace coverforge::cli
