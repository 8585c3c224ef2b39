#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "coverforge/universal/factor.hpp"

using namespace coverforge;

namespace {

Cocycle<NatVector> nat_table(const AbelianGroup& a,
                             std::map<std::pair<GroupElem, GroupElem>, std::int64_t> entries) {
  Cocycle<NatVector> f(a, NatVector{1});
  for (auto [k, v] : entries) f.set(k.first, k.second, {v});
  return f;
}

std::vector<std::int64_t> flat(const Cocycle<NatVector>& f) {
  std::vector<std::int64_t> out;
  const auto n = f.group().order();
  for (GroupElem a = 0; a < n; ++a)
    for (GroupElem b = 0; b < n; ++b) out.push_back(f(a, b)[0]);
  return out;
}

// Extension N of 3N by Z/3 with iota(l) = l.
FreeExtension<std::int64_t, NatVector> times_three() {
  FreeExtension<std::int64_t, NatVector> e{AbelianGroup::cyclic(3), NatVector{1}, {}, {}, {}, {}, {}, {}};
  e.add = [](std::int64_t x, std::int64_t y) { return x + y; };
  e.gamma = [](const IVec& p) { return 3 * p[0]; };
  e.iota = [](GroupElem l) { return static_cast<std::int64_t>(l); };
  e.decompose = [](std::int64_t x) {
    return std::optional<std::pair<IVec, GroupElem>>({IVec{x / 3}, static_cast<GroupElem>(x % 3)});
  };
  e.equal = [](std::int64_t x, std::int64_t y) { return x == y; };
  e.show = [](std::int64_t x) { return std::to_string(x); };
  return e;
}

}  // namespace

TEST_CASE("cocycle validation") {
  auto z2 = AbelianGroup::cyclic(2), z3 = AbelianGroup::cyclic(3);
  CHECK_FALSE(Cocycle<NatVector>(z3, NatVector{1}).validate());
  for (std::int64_t k = 0; k < 5; ++k) CHECK_FALSE(nat_table(z2, {{{1, 1}, k}}).validate());

  auto bad = nat_table(z3, {{{1, 1}, 1}}).validate();
  REQUIRE(bad);
  CHECK(bad->axiom == 3);
  CHECK(bad->witness == std::vector<GroupElem>{1, 1, 2});

  auto unit = nat_table(z2, {{{0, 1}, 1}}).validate();
  REQUIRE(unit);
  CHECK(unit->axiom == 1);
  CHECK(unit->witness == std::vector<GroupElem>{1});

  CHECK_THROWS_AS(nat_table(z2, {{{1, 1}, -1}}), InvalidInput);
  CHECK_THROWS_AS(nat_table(z3, {{{1, 1}, 1}}).validated(), InvalidInput);
}

TEST_CASE("multiplicative ring targets") {
  PolyRing<Rational> qx({"x"}, Rational(0));
  Cocycle<RingTarget<Poly<Rational>>> f(AbelianGroup::cyclic(2), {qx.one()});
  f.set(1, 1, qx.var("x"));
  CHECK_FALSE(f.validate());
  Cocycle<RingTarget<Poly<Rational>>> g(AbelianGroup::cyclic(3), {qx.one()});
  g.set(1, 1, qx.var("x"));
  CHECK(g.validate());
  CHECK(add(f, f)(1, 1) == qx.var("x") * qx.var("x"));
}

TEST_CASE("Pardini epsilon") {
  CHECK(pardini_epsilon(pardini_cyclic(2, 1)).to_string() == "{(1,1): 1}");
  auto e1 = pardini_epsilon(pardini_cyclic(3, 1));
  auto e2 = pardini_epsilon(pardini_cyclic(3, 2));
  CHECK(e1 == nat_table(AbelianGroup::cyclic(3), {{{1, 1}, 0}, {{1, 2}, 1}, {{2, 2}, 1}}));
  CHECK(e2 == nat_table(AbelianGroup::cyclic(3), {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 0}}));
  for (GroupElem l = 0; l < 3; ++l) CHECK(e1(0, l)[0] == 0);

  for (std::int64_t n = 1; n <= 12; ++n)
    for (GroupElem psi = 0; psi < static_cast<GroupElem>(n); ++psi) {
      if (std::gcd<std::int64_t>(psi, n) != 1 && n > 1) {
        CHECK_THROWS_AS(pardini_epsilon(pardini_cyclic(n, psi)), InvalidInput);
        continue;
      }
      auto f = pardini_epsilon(pardini_cyclic(n, psi));
      CHECK_FALSE(f.validate());
    }

  // a non-injective quotient Z/2 x Z/2 -> Z/2
  AbelianGroup v4({2, 2}), z2 = AbelianGroup::cyclic(2);
  PardiniData d{GroupHom(v4, z2, {1, 1}), 1};
  auto f = pardini_epsilon(d);
  CHECK_FALSE(f.validate());
  CHECK(f(v4.element({1, 0}), v4.element({0, 1}))[0] == 1);
  CHECK(f(v4.element({1, 0}), v4.element({1, 1}))[0] == 0);
  CHECK_THROWS_AS(pardini_epsilon({GroupHom(z2, v4, {v4.element({1, 0})}), 1}), InvalidInput);
}

TEST_CASE("cocycle addition") {
  auto z3 = AbelianGroup::cyclic(3);
  auto sum = add(pardini_epsilon(pardini_cyclic(3, 1)), pardini_epsilon(pardini_cyclic(3, 2)));
  CHECK(sum == nat_table(z3, {{{1, 1}, 1}, {{1, 2}, 2}, {{2, 2}, 1}}));
  CHECK_FALSE(sum.validate());
  auto zero = Cocycle<NatVector>(z3, NatVector{1});
  CHECK(add(sum, zero) == sum);
  CHECK_THROWS_AS(add(sum, Cocycle<NatVector>(AbelianGroup::cyclic(2), NatVector{1})),
                  InvalidInput);

  std::mt19937 rng(8);
  auto all = enumerate_nat_cocycles(AbelianGroup({2, 2}), 2);
  for (int t = 0; t < 100; ++t) {
    const auto& f = all[rng() % all.size()];
    const auto& g = all[rng() % all.size()];
    CHECK(add(f, g) == add(g, f));
    CHECK_FALSE(add(f, g).validate());
  }
}

TEST_CASE("Theta: twisted extension of N by Z/2 is N") {
  auto f = nat_table(AbelianGroup::cyclic(2), {{{1, 1}, 1}});
  auto ext = extension_from_cocycle(f);
  auto to_n = [](const TwistedElem<NatVector>& x) {
    return 2 * x.p[0] + static_cast<std::int64_t>(x.lambda);
  };
  std::set<std::int64_t> image;
  for (std::int64_t p = 0; p <= 6; ++p)
    for (GroupElem l = 0; l < 2; ++l) {
      auto x = ext.element({p}, l);
      image.insert(to_n(x));
      for (std::int64_t q = 0; q <= 6; ++q)
        for (GroupElem m = 0; m < 2; ++m) {
          auto y = ext.element({q}, m);
          CHECK(to_n(ext.add(x, y)) == to_n(x) + to_n(y));
        }
    }
  CHECK(image.size() == 14);
  CHECK(*image.rbegin() == 13);
}

TEST_CASE("Theta and Psi are inverse") {
  std::mt19937 rng(4);
  for (const auto& a : {AbelianGroup::cyclic(3), AbelianGroup({2, 2}), AbelianGroup::cyclic(4)}) {
    auto all = enumerate_nat_cocycles(a, 2);
    for (int t = 0; t < 20; ++t) {
      const auto& f = all[rng() % all.size()];
      auto ext = extension_from_cocycle(f);
      std::vector<TwistedElem<NatVector>> samples;
      for (int k = 0; k < 6; ++k)
        samples.push_back(ext.element({static_cast<std::int64_t>(rng() % 3)}, rng() % a.order()));
      CHECK_FALSE(check_extension_axioms(ext, samples));
      auto g = cocycle_from_extension(ext);
      CHECK(g == f);
      auto back = extension_from_cocycle(g);
      CHECK_FALSE(check_extension_iso(ext, back, samples));
    }
  }
  // direct product
  auto z3 = AbelianGroup::cyclic(3);
  auto prod = extension_from_cocycle(Cocycle<NatVector>(z3, NatVector{1}));
  CHECK(cocycle_from_extension(prod) == Cocycle<NatVector>(z3, NatVector{1}));
}

TEST_CASE("Psi of N over 3N") {
  auto f = cocycle_from_extension(times_three());
  CHECK(f == nat_table(AbelianGroup::cyclic(3), {{{1, 1}, 0}, {{1, 2}, 1}, {{2, 2}, 1}}));
  auto broken = times_three();
  broken.iota = [](GroupElem l) { return static_cast<std::int64_t>(2 * l); };
  broken.decompose = [](std::int64_t x) -> std::optional<std::pair<IVec, GroupElem>> {
    if (x % 3 == 1) return std::nullopt;
    return std::make_pair(IVec{x / 3}, static_cast<GroupElem>(x % 3 == 2 ? 1 : 0));
  };
  CHECK_THROWS_AS(cocycle_from_extension(broken), NotFree);
}

TEST_CASE("Q_A is the extension of the universal cocycle") {
  UniversalMonoids u(AbelianGroup::cyclic(3));
  auto e = universal_cocycle(u);
  CHECK_FALSE(e.validate());
  auto qa = qa_extension(u);
  CHECK(cocycle_from_extension(qa) == e);
  auto theta = extension_from_cocycle(e);
  std::vector<QAElem> samples;
  for (GroupElem l = 0; l < 3; ++l) {
    samples.push_back(u.iota(l));
    samples.push_back(u.qa_add(u.gamma(u.raw(1, 1)), u.iota(l)));
    samples.push_back(u.qa_add(u.gamma(u.raw(1, 2) + u.raw(2, 2)), u.iota(l)));
  }
  CHECK_FALSE(check_extension_axioms(qa, samples));
  CHECK_FALSE(check_extension_iso(qa, theta, samples));
}

TEST_CASE("universal factorization") {
  UniversalMonoids u(AbelianGroup::cyclic(3));
  auto z = universal_factor(u, Cocycle<NatVector>(u.group(), NatVector{1}));
  for (const auto& img : z.images()) CHECK(img == IVec{0});

  auto id = universal_factor(u, universal_cocycle(u));
  for (std::size_t g = 0; g < u.rank(); ++g)
    CHECK(id.images()[g] == PresentedFG::from(u.PA().normal_form(FreeElem::unit(u.rank(), g))));

  auto eps = universal_factor(u, pardini_epsilon(pardini_cyclic(3, 1)));
  CHECK(eps.images()[u.index(1, 1)] == IVec{0});
  CHECK(eps.images()[u.index(1, 2)] == IVec{1});
  CHECK(eps.images()[u.index(2, 2)] == IVec{1});

  CHECK_THROWS_AS(universal_factor(u, nat_table(u.group(), {{{1, 1}, 1}})), InvalidInput);
  CHECK_THROWS_AS(universal_factor(u, pardini_epsilon(pardini_cyclic(2, 1))), InvalidInput);
}

TEST_CASE("cocycles into N are the rays of P_A") {
  for (const auto& a : {AbelianGroup::cyclic(1), AbelianGroup::cyclic(2), AbelianGroup::cyclic(3),
                        AbelianGroup::cyclic(4), AbelianGroup({2, 2})}) {
    INFO(a.description());
    UniversalMonoids u(a);
    auto cocycles = enumerate_nat_cocycles(a, 2);
    auto homs = enumerate_homs_to_nat(u.PA().presentation(), 2);
    std::set<std::vector<std::int64_t>> from_cocycles, from_homs(homs.begin(), homs.end());
    for (const auto& f : cocycles) {
      auto h = universal_factor(u, f);
      std::vector<std::int64_t> img;
      for (const auto& v : h.images()) img.push_back(v[0]);
      CHECK(img == flat(f));
      from_cocycles.insert(img);
      CHECK(cocycle_of_ray(u, img) == f);
    }
    CHECK(from_cocycles.size() == cocycles.size());
    CHECK(from_homs.size() == homs.size());
    CHECK(from_cocycles == from_homs);
  }
}

TEST_CASE("universal morphisms of flat Kummer pairs") {
  UniversalMonoids u(AbelianGroup::cyclic(3));
  auto P = std::make_shared<AffineMonoid>(u.P_int());
  AffineMonoid Q = u.Q_int();
  auto quotient = [&](const IVec& v) { return u.m(v); };
  auto r = universal_morphisms(u, P, Q, u.value_grading(), quotient, 6);
  CHECK(r.iota == std::vector<IVec>{{0, 0}, {1, 0}, {0, 1}});
  for (GroupElem a = 0; a < 3; ++a)
    for (GroupElem b = 0; b < 3; ++b) {
      CHECK(r.pa_to_p.images()[u.index(a, b)] == u.phi(u.raw(a, b)));
      QAElem x{u.e(a, b), b};
      CHECK(r.qa_to_q(x) == u.image(x));
    }

  for (std::int64_t n = 1; n <= 5; ++n) {
    UniversalMonoids c(AbelianGroup::cyclic(n));
    auto nP = std::make_shared<AffineMonoid>(1, std::vector<IVec>{{n}});
    AffineMonoid N = AffineMonoid::free(1);
    auto q = [n](const IVec& v) { return static_cast<GroupElem>(((v[0] % n) + n) % n); };
    auto s = universal_morphisms(c, nP, N, {1}, q, 3 * n);
    for (GroupElem a = 0; a < static_cast<GroupElem>(n); ++a) {
      CHECK(s.iota[a] == IVec{static_cast<std::int64_t>(a)});
      for (GroupElem b = 0; b < static_cast<GroupElem>(n); ++b)
        CHECK(s.cocycle(a, b) == IVec{static_cast<std::int64_t>((a + b) / n) * n});
    }
  }

  // 4N in N with parity: the fiber over 0 has minima 0 and 2
  UniversalMonoids z2(AbelianGroup::cyclic(2));
  auto gens = std::make_shared<AffineMonoid>(1, std::vector<IVec>{{4}});
  auto parity = [](const IVec& v) { return static_cast<GroupElem>(v[0] % 2); };
  CHECK_THROWS_AS(universal_morphisms(z2, gens, AffineMonoid::free(1), {1}, parity, 8), NotFree);
}
