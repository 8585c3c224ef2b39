#include <catch_amalgamated.hpp>

#include <random>

#include "coverforge/check/congruence_closure.hpp"
#include "coverforge/monoid.hpp"

using namespace coverforge;

namespace {

MonoidPresentation random_presentation(std::mt19937& rng) {
  std::size_t rank = 1 + rng() % 4;
  std::size_t nrel = rng() % 5;
  MonoidPresentation p(rank);
  std::uniform_int_distribution<int> e(0, 2);
  for (std::size_t k = 0; k < nrel; ++k) {
    FreeElem u(rank), v(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      u[i] = rng() % 3 == 0 ? e(rng) : 0;
      v[i] = rng() % 3 == 0 ? e(rng) : 0;
    }
    p.add_relation(u, v);
  }
  return p;
}

PresentedMonoid one_relation(std::size_t rank, FreeElem u, FreeElem v) {
  MonoidPresentation p(rank);
  p.add_relation(std::move(u), std::move(v));
  return PresentedMonoid(p);
}

}  // namespace

TEST_CASE("a ~ b collapses onto the smaller generator") {
  auto m = one_relation(2, {1, 0}, {0, 1});
  REQUIRE(m.system().rules().size() == 1);
  CHECK(m.system().rules()[0].lhs == FreeElem{0, 1});
  CHECK(m.system().rules()[0].rhs == FreeElem{1, 0});
  CHECK(m.normal_form({2, 3}) == FreeElem{5, 0});
  CHECK(m.to_string(m.normal_form({2, 3})) == "5*g_0");
}

TEST_CASE("idempotent generator") {
  auto m = one_relation(1, {2}, {1});
  REQUIRE(m.system().rules().size() == 1);
  CHECK(m.system().rules()[0].lhs == FreeElem{2});
  auto nfs = normal_forms_up_to(m, 6);
  CHECK(nfs == std::vector<FreeElem>{FreeElem{0}, FreeElem{1}});
  Groupification gp(m.presentation());
  CHECK(gp.free_rank() == 0);
  CHECK(gp.torsion().empty());
  CHECK(gp.image({1}).empty());
}

TEST_CASE("degenerate presentations") {
  PresentedMonoid empty{MonoidPresentation(0)};
  CHECK(empty.system().rules().empty());
  CHECK(empty.normal_form(FreeElem(0)) == FreeElem(0));
  CHECK(normal_forms_up_to(empty, 3).size() == 1);
  CHECK(is_integral_up_to(empty, 3).integral_up_to_bound);

  PresentedMonoid free3{MonoidPresentation(3)};
  Groupification gp(free3.presentation());
  CHECK(gp.free_rank() == 3);
  CHECK(gp.torsion().empty());
  CHECK_THROWS_AS(free3.normal_form(FreeElem(2)), InvalidInput);
}

TEST_CASE("groupification with torsion") {
  // 2a ~ 0 in N: Z/2
  auto m = one_relation(1, {2}, {0});
  Groupification gp(m.presentation());
  CHECK(gp.free_rank() == 0);
  CHECK(gp.torsion() == std::vector<Integer>{2});
  CHECK(gp.image({3}) == gp.image({1}));
  CHECK_FALSE(gp.image({0}) == gp.image({1}));
}

TEST_CASE("sharpness certificates") {
  PresentedMonoid n1{MonoidPresentation(1)};
  CHECK_FALSE(sharp_by_grading(n1, {{0}, {}}).certified);
  CHECK_FALSE(sharp_by_grading(n1, {{0}, {0}}).certified);
  CHECK(sharp_by_grading(n1, {{1}, {0}}).certified);
  CHECK_THROWS_AS(sharp_by_grading(n1, {{1, 1}, {0}}), InvalidInput);
  // a + b ~ 0: a and b are units
  auto m = one_relation(2, {1, 1}, {0, 0});
  CHECK_FALSE(sharp_by_grading(m, {{1, 1}, {0, 1}}).certified);
  CHECK(find_unit_up_to(m, 2).has_value());
  CHECK_FALSE(find_unit_up_to(n1, 4).has_value());
}

TEST_CASE("integrality search") {
  PresentedMonoid n2{MonoidPresentation(2)};
  CHECK(is_integral_up_to(n2, 5).integral_up_to_bound);
  // a + c ~ b + c with a != b is not cancellative
  MonoidPresentation p(3);
  p.add_relation({1, 0, 1}, {0, 1, 1});
  PresentedMonoid m(p);
  auto v = is_integral_up_to(m, 2);
  REQUIRE(v.counterexample);
  Groupification gp(p);
  CHECK(gp.image(v.counterexample->first) == gp.image(v.counterexample->second));
  CHECK_FALSE(m.equal(v.counterexample->first, v.counterexample->second));
}

TEST_CASE("completion agrees with bounded congruence closure") {
  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    MonoidPresentation p = random_presentation(rng);
    PresentedMonoid m(p);
    CHECK_FALSE(replay_derivations(p, m.system()).has_value());
    auto cmp = compare_with_closure(p, m.system(), 4);
    INFO(cmp.detail);
    CHECK(cmp.agree);
  }
}

TEST_CASE("normal forms are idempotent and respect addition") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    MonoidPresentation p = random_presentation(rng);
    PresentedMonoid m(p);
    Groupification gp(p);
    for (const auto& r : p.relations()) CHECK(gp.image(r.lhs) == gp.image(r.rhs));
    for (int k = 0; k < 10; ++k) {
      FreeElem x(p.rank()), y(p.rank());
      for (std::size_t i = 0; i < p.rank(); ++i) {
        x[i] = rng() % 4;
        y[i] = rng() % 4;
      }
      auto nx = m.normal_form(x);
      CHECK(m.normal_form(nx) == nx);
      CHECK(m.normal_form(x + y) == m.normal_form(nx + m.normal_form(y)));
      CHECK(gp.image(x) == gp.image(nx));
    }
  }
}

TEST_CASE("affine membership") {
  AffineMonoid pint(2, {{2, -1}, {-1, 2}});
  IVec w{1, 1};
  auto d = affine_membership(pint, {1, 1}, w);
  REQUIRE(d);
  CHECK(*d == std::vector<std::uint32_t>{1, 1});
  CHECK(affine_membership(pint, {0, 0}, w) == std::vector<std::uint32_t>{0, 0});
  CHECK_FALSE(affine_membership(pint, {1, 0}, w).has_value());
  CHECK_THROWS_AS(affine_membership(pint, {1, 0}, std::nullopt), CapabilityError);
  CHECK_THROWS_AS(affine_membership(pint, {1, 0}, IVec{1, 0}), CapabilityError);
}

TEST_CASE("Kummer checks on free monoids") {
  auto n2 = std::make_shared<AffineMonoid>(AffineMonoid::free(2));
  auto n1 = std::make_shared<AffineMonoid>(AffineMonoid::free(1));
  MonoidHom id(n2, n2, {{1, 0}, {0, 1}});
  auto v = check_kummer(id, 3, 3);
  CHECK(v.holds);
  for (const auto& e : v.table) CHECK(e.multiple == 1);

  MonoidHom axis(n1, n2, {{1, 0}});
  auto w = check_kummer(axis, 3, 5);
  CHECK_FALSE(w.holds);
  REQUIRE(w.missing_generator);
  CHECK(*w.missing_generator == 1);

  MonoidHom zero(n1, n1, {{0}});
  auto z = check_kummer(zero, 2, 2);
  CHECK_FALSE(z.holds);
  CHECK(z.injectivity_witness.has_value());
}

TEST_CASE("integral and flat morphisms of free monoids") {
  auto n1 = std::make_shared<AffineMonoid>(AffineMonoid::free(1));
  auto n2 = std::make_shared<AffineMonoid>(AffineMonoid::free(2));
  for (std::int64_t n = 1; n <= 4; ++n) {
    MonoidHom mult(n1, n1, {{n}});
    CHECK(check_integral_morphism(mult, 5).holds);
    CHECK(check_flat_morphism(mult, 5).holds);
  }
  MonoidHom diag(n1, n2, {{1, 1}});
  CHECK(check_integral_morphism(diag, 3).holds);
  // N^2 -> N, (a, b) -> a + b is not integral: e1 + 0 = e2 + 0 has no square
  MonoidHom sum(n2, n1, {{1}, {1}});
  auto v = check_integral_morphism(sum, 3);
  CHECK_FALSE(v.holds);
  CHECK(v.witness.has_value());
}

TEST_CASE("minimal fiber of multiplication by 3") {
  AffineMonoid P(1, {{3}}), Q(1, {{1}});
  auto m = [](const IVec& x) { return std::to_string(((x[0] % 3) + 3) % 3); };
  for (int l = 0; l < 3; ++l) {
    auto r = minimal_fiber(P, Q, {1}, m, std::to_string(l), 12);
    CHECK(r.minimum == IVec{l});
    CHECK(r.covered);
  }
}

TEST_CASE("homomorphisms must respect relations") {
  MonoidPresentation p(1);
  p.add_relation({2}, {1});
  auto src = std::make_shared<PresentedFG>(std::make_shared<PresentedMonoid>(p));
  auto n1 = std::make_shared<AffineMonoid>(AffineMonoid::free(1));
  CHECK_THROWS_AS(MonoidHom(src, n1, {{1}}), InvalidInput);
  CHECK_NOTHROW(MonoidHom(src, n1, {{0}}));
}
