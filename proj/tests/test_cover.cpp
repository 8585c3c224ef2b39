#include <catch_amalgamated.hpp>

#include <random>

#include "coverforge/cover/cyclotomic.hpp"
#include "coverforge/cover/valuation.hpp"

using namespace coverforge;

namespace {

using QS = Poly<Rational>;

struct QsRing {
  PolyRing<Rational> r{{"s"}, Rational(0)};
  QS one = r.one();
  QS s = r.var("s");
  QS pw(unsigned k) const { return pow(s, k); }
};

BuildingDatum<QS> table3(const QsRing& q, QS s11, QS s12, QS s22) {
  BuildingDatum<QS> d(AbelianGroup::cyclic(3), {q.one});
  d.set(1, 1, s11);
  d.set(1, 2, s12);
  d.set(2, 2, s22);
  return d;
}

GroupHom identity_of(const AbelianGroup& a) {
  std::vector<GroupElem> g;
  for (std::size_t i = 0; i < a.cyclic_orders().size(); ++i) g.push_back(a.standard_generator(i));
  return GroupHom(a, a, g);
}

// Sections of k[s][x]/(x^n - s) in the basis x^{i(l)}, read off products.
BuildingDatum<QS> cyclic_from_algebra(const QsRing& q, std::int64_t n, GroupElem psi) {
  using Ext = Quotient<QS>;
  std::vector<QS> modulus(n + 1, zero_like(q.one));
  modulus[0] = -q.s;
  modulus[n] = q.one;
  auto ctx = Ext::make_context("x", modulus);
  Ext x = Ext::generator(ctx);
  auto data = pardini_cyclic(n, psi);
  AbelianGroup z = AbelianGroup::cyclic(n);
  BuildingDatum<QS> d(z, {q.one});
  for (GroupElem a = 0; a < z.order(); ++a)
    for (GroupElem b = a; b < z.order(); ++b) {
      Ext prod = pow(x, data.index(a)) * pow(x, data.index(b));
      auto k = static_cast<std::size_t>(data.index(z.add(a, b)));
      for (std::size_t j = 0; j < prod.coords().size(); ++j)
        if (j != k) REQUIRE(is_zero(prod.coords()[j]));
      d.set(a, b, prod.coords()[k]);
    }
  return d;
}

}  // namespace

TEST_CASE("datum validation agrees with the algebra oracle") {
  QsRing q;
  BuildingDatum<Integer> root2(AbelianGroup::cyclic(2), {Integer(1)});
  root2.set(1, 1, Integer(2));
  CHECK(validate_datum(root2).ok());

  auto ex = table3(q, q.s, q.pw(2), q.s);
  CHECK(validate_datum(ex, 5).ok());

  auto bad = table3(q, q.s, q.s, q.s);
  auto v = validate_datum(bad, 5);
  REQUIRE(v.violation);
  CHECK(v.violation->witness == std::vector<GroupElem>{1, 1, 2});
  CHECK_FALSE(v.algebra.associative);

  std::mt19937 rng(12);
  int valid = 0;
  for (int t = 0; t < 300; ++t) {
    AbelianGroup a = (t % 3 == 0) ? AbelianGroup({2, 2}) : AbelianGroup::cyclic(2 + t % 3);
    BuildingDatum<QS> d(a, {q.one});
    for (GroupElem x = 1; x < a.order(); ++x)
      for (GroupElem y = x; y < a.order(); ++y) d.set(x, y, q.pw(rng() % 3));
    auto r = validate_datum(d, 2);
    CHECK(r.violation.has_value() == !r.algebra.ok());
    valid += !r.violation;
  }
  CHECK(valid > 0);
}

TEST_CASE("torsors and inverses") {
  BuildingDatum<Integer> one(AbelianGroup::cyclic(2), {Integer(1)});
  CHECK(is_torsor(one));
  CHECK(inverse_torsor(one) == one);
  BuildingDatum<Integer> neg(AbelianGroup::cyclic(2), {Integer(1)});
  neg.set(1, 1, Integer(-1));
  CHECK(inverse_torsor(neg)(1, 1) == Integer(-1));
  CHECK(wedge(inverse_torsor(neg), neg) == one);

  QsRing q;
  auto ex = table3(q, q.s, q.pw(2), q.s);
  CHECK_FALSE(is_torsor(ex));
  CHECK_THROWS_AS(inverse_torsor(ex), InvalidInput);

  BuildingDatum<QS> u(AbelianGroup::cyclic(2), {q.one});
  u.set(1, 1, q.r.integer(3));
  CHECK(inverse_torsor(u)(1, 1) == q.r.constant(Rational(1, 3)));
}

TEST_CASE("wedge decompositions") {
  QsRing q;
  auto psi1 = table3(q, q.one, q.s, q.s);
  auto psi2 = table3(q, q.s, q.s, q.one);
  CHECK(psi1 == standard_cyclic(3, 1, q.s));
  CHECK(psi2 == standard_cyclic(3, 2, q.s));
  CHECK(wedge(psi1, psi2) == table3(q, q.s, q.pw(2), q.s));

  PolyRing<Rational> qx({"x"}, Rational(0));
  BuildingDatum<QS> c(AbelianGroup::cyclic(2), {qx.one()});
  c.set(1, 1, qx.var("x"));
  auto w = wedge(c, c);
  CHECK(w(1, 1) == qx.var("x") * qx.var("x"));
  CHECK(validate_datum(w).ok());

  // A1 x A2 with projections and the trivial datum on A2
  AbelianGroup z3 = AbelianGroup::cyclic(3), z2 = AbelianGroup::cyclic(2), prod({3, 2});
  GroupHom p1(prod, z3, {1, 0}), p2(prod, z2, {0, 1});
  auto ex = table3(q, q.s, q.pw(2), q.s);
  auto lifted = wedge(ex, trivial_datum(z2, q.one), p1, p2);
  CHECK(lifted == induced(ex, p1));
  for (GroupElem a = 0; a < 3; ++a)
    for (GroupElem b = 0; b < 3; ++b) CHECK(lifted(prod.element({(long)a, 0}), prod.element({(long)b, 0})) == ex(a, b));

  PolyRing<Rational> other({"t"}, Rational(0));
  BuildingDatum<QS> foreign(z3, {other.one()});
  CHECK_THROWS_AS(wedge(ex, foreign), RingMismatch);
}

TEST_CASE("induced and restricted data") {
  QsRing q;
  auto z4 = AbelianGroup::cyclic(4), z2 = AbelianGroup::cyclic(2);
  auto d = standard_cyclic(4, 1, q.s);
  CHECK(induced(d, GroupHom(z2, z4, {0})) == trivial_datum(z2, q.one));
  auto ind = induced(d, GroupHom(z2, z4, {2}));
  CHECK(ind(1, 1) == d(2, 2));
  auto [sub, emb] = quotient_sub(d, {0, 2});
  CHECK(sub.group() == z2);
  CHECK(sub(1, 1) == d(2, 2));
  CHECK(emb(1) == 2);
  CHECK_THROWS_AS(quotient_sub(d, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(quotient_sub(d, {1, 3}), InvalidInput);

  AbelianGroup v({2, 4});
  auto sub2 = subgroup_embedding(v, {0, v.element({1, 0}), v.element({0, 2}), v.element({1, 2})});
  CHECK(sub2.source().cyclic_orders() == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("discriminants") {
  QsRing q;
  auto ex = table3(q, q.s, q.pw(2), q.s);
  CHECK(discriminant_formula(ex) == q.r.integer(27) * q.pw(4));
  auto t = discriminant_trace(ex);
  CHECK((t == discriminant_formula(ex) || t == -discriminant_formula(ex)));

  BuildingDatum<Integer> root2(AbelianGroup::cyclic(2), {Integer(1)});
  root2.set(1, 1, Integer(2));
  CHECK(discriminant_formula(root2) == 8);
  CHECK(discriminant_trace(root2) == 8);
  BuildingDatum<Integer> triv(AbelianGroup::cyclic(2), {Integer(1)});
  CHECK(discriminant_formula(triv) == 4);
  CHECK(discriminant_trace(triv) == 4);

  CHECK_FALSE(discriminant_admits_order(4, Integer(125)));
  CHECK(discriminant_admits_order(2, Integer(8)));
}

TEST_CASE("section orders and cover cocycles") {
  QsRing q;
  auto ex = table3(q, q.s, q.pw(2), q.s);
  Valuation<QS> vs(q.s);
  CHECK(ord_section(ex, vs, 1, 1) == 1);
  CHECK(ord_section(ex, vs, 1, 2) == 2);
  CHECK(ord_section(ex, vs, 2, 2) == 1);
  for (auto [a, b] : {std::pair<GroupElem, GroupElem>{1, 1}, {1, 2}, {2, 2}})
    CHECK(ideal_quotient_ord(ex, q.s, a, b, 5) == ord_section(ex, vs, a, b));
  auto f = cover_cocycle(ex, {vs});
  CHECK(f.to_string() == "{(1,1): 1, (1,2): 2, (2,2): 1}");
  CHECK_FALSE(f.validate());

  BuildingDatum<QS> shifted(AbelianGroup::cyclic(2), {q.one});
  shifted.set(1, 1, q.s + q.one);
  CHECK(ord_section(shifted, vs, 1, 1) == 0);
  CHECK_THROWS_AS(ideal_quotient_ord(shifted, q.s, 1, 1, 6), BoundExceeded);

  BuildingDatum<QS> torsor(AbelianGroup::cyclic(3), {q.one});
  torsor.set(1, 2, q.r.integer(2));
  CHECK(cover_cocycle(torsor, {vs}) == Cocycle<NatVector>(torsor.group(), NatVector{1}));

  PolyRing<Rational> qx({"x"}, Rational(0));
  BuildingDatum<QS> z(AbelianGroup::cyclic(2), {qx.one()});
  z.set(1, 1, pow(qx.var("x"), 2));
  CHECK(cover_cocycle(z, {Valuation<QS>(qx.var("x"))})(1, 1) == IVec{2});

  BuildingDatum<QS> zero(AbelianGroup::cyclic(2), {q.one});
  zero.set(1, 1, zero_like(q.one));
  CHECK_THROWS_AS(cover_cocycle(zero, {vs}), InvalidInput);

  CHECK(vs(q.pw(3) * (q.s + q.one)) == 3u);
  CHECK(vs(q.r.integer(5)) == 0u);
  CHECK_FALSE(vs(zero_like(q.one)).has_value());
  CHECK_THROWS_AS(Valuation<QS>(q.one), InvalidInput);
}

TEST_CASE("valuations are additive") {
  Valuation<Integer> v3(Integer(3));
  std::mt19937 rng(2);
  for (int t = 0; t < 200; ++t) {
    Integer a = Integer(static_cast<long>(rng() % 2000) + 1) * (rng() % 2 ? 1 : -1);
    Integer b = Integer(static_cast<long>(rng() % 2000) + 1);
    CHECK(*v3(a * b) == *v3(a) + *v3(b));
  }
  CHECK(v3(Integer(-1)) == 0u);
}

TEST_CASE("standard cyclic covers") {
  QsRing q;
  CHECK(standard_cyclic(3, 1, q.s) == table3(q, q.one, q.s, q.s));
  PolyRing<Rational> qx({"x"}, Rational(0));
  CHECK(standard_cyclic(2, 1, qx.var("x"))(1, 1) == qx.var("x"));
  auto sum = add(pardini_epsilon(pardini_cyclic(3, 1)), pardini_epsilon(pardini_cyclic(3, 2)));
  CHECK(monomial_cover(q.one, q.s, sum) == table3(q, q.s, q.pw(2), q.s));
  CHECK_THROWS_AS(monomial_cover(q.one, q.s, Cocycle<NatVector>(AbelianGroup::cyclic(2), NatVector{2})),
                  InvalidInput);

  Valuation<QS> vs(q.s);
  for (std::int64_t n = 1; n <= 8; ++n)
    for (GroupElem psi = 0; psi < static_cast<GroupElem>(n); ++psi) {
      if (std::gcd<std::int64_t>(psi, n) != 1 && n > 1) continue;
      auto d = standard_cyclic(n, psi, q.s);
      CHECK(d == cyclic_from_algebra(q, n, psi));
      CHECK(cover_cocycle(d, {vs}) == pardini_epsilon(pardini_cyclic(n, psi)));
      auto t = discriminant_trace(d);
      auto f = discriminant_formula(d);
      CHECK((t == f || t == -f));
    }
}

TEST_CASE("wedge adds cover cocycles") {
  QsRing q;
  Valuation<QS> vs(q.s);
  AbelianGroup z2 = AbelianGroup::cyclic(2), z3 = AbelianGroup::cyclic(3), z4 = AbelianGroup::cyclic(4);
  AbelianGroup a({2, 3});
  GroupHom p1(a, z2, {1, 0}), p2(a, z3, {0, 1});
  std::mt19937 rng(6);
  auto c2 = enumerate_nat_cocycles(z2, 3);
  auto c3 = enumerate_nat_cocycles(z3, 2);
  for (int t = 0; t < 30; ++t) {
    const auto& f1 = c2[rng() % c2.size()];
    const auto& f2 = c3[rng() % c3.size()];
    auto d1 = monomial_cover(q.one, q.s, f1), d2 = monomial_cover(q.one, q.s, f2);
    auto w = wedge(d1, d2, p1, p2);
    auto lhs = cover_cocycle(w, {vs});
    auto rhs = add(cover_cocycle(induced(d1, p1), {vs}), cover_cocycle(induced(d2, p2), {vs}));
    CHECK(lhs == rhs);
  }
  auto c4 = enumerate_nat_cocycles(z4, 1);
  auto id = identity_of(z4);
  for (const auto& f : c4)
    for (int k = 0; k < 3; ++k) {
      const auto& g = c4[rng() % c4.size()];
      auto w = wedge(monomial_cover(q.one, q.s, f), monomial_cover(q.one, q.s, g), id, id);
      CHECK(cover_cocycle(w, {vs}) == add(f, g));
    }
}

TEST_CASE("splitting of Z[1/2, i, xi_5]") {
  CyclotomicFive c;
  auto d = c.basis();
  CHECK(d[2] * d[2] == from_integer(c.xi, Integer(5)));
  auto datum = c.datum();
  CHECK(datum(1, 1) == c.gauss(-1, -2));
  CHECK(datum(1, 2) == c.gauss(1, 2));
  CHECK(datum(1, 3) == c.gauss(-5, 0));
  CHECK(datum(2, 2) == c.gauss(5, 0));
  CHECK(datum(2, 3) == c.gauss(1, -2));
  CHECK(datum(3, 3) == c.gauss(-1, 2));
  CHECK(validate_datum(datum).ok());

  using L = Localized<CyclotomicFive::Gauss>;
  auto half = L::make_context(c.gauss(2, 0));
  auto tenth = L::make_context(c.gauss(10, 0));
  auto over = [&](auto ctx) {
    return map_datum(datum, L(ctx, c.gauss(1, 0)),
                     [&](const CyclotomicFive::Gauss& g) { return L(ctx, g); });
  };
  auto d2 = over(half);
  auto d10 = over(tenth);
  CHECK_FALSE(is_torsor(d2));
  CHECK(is_torsor(d10));
  auto w = wedge(inverse_torsor(d10), d10);
  CHECK(w == trivial_datum(d10.group(), L(tenth, c.gauss(1, 0))));
  CHECK(inverse_torsor(d10)(1, 1) * L(tenth, c.gauss(5, 0)) == L(tenth, c.gauss(-1, 2)));
}
