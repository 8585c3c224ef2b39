#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "coverforge/check/congruence_closure.hpp"
#include "coverforge/universal/universal.hpp"

using namespace coverforge;

namespace {

std::vector<AbelianGroup> groups_up_to_8() {
  std::vector<AbelianGroup> g;
  for (std::int64_t n = 1; n <= 8; ++n) g.push_back(AbelianGroup::cyclic(n));
  g.push_back(AbelianGroup({2, 2}));
  g.push_back(AbelianGroup({2, 4}));
  g.push_back(AbelianGroup({2, 2, 2}));
  return g;
}

const UniversalMonoids& universal(const AbelianGroup& a) {
  static std::map<std::vector<std::int64_t>, std::unique_ptr<UniversalMonoids>> cache;
  auto& slot = cache[a.cyclic_orders()];
  if (!slot) slot = std::make_unique<UniversalMonoids>(a);
  return *slot;
}

QPlusElem random_qplus(const UniversalMonoids& u, std::mt19937& rng, int max_entry) {
  QPlusElem q = u.qplus_zero();
  for (std::size_t k = 0; k < q.rank(); ++k) q[k] = rng() % (max_entry + 1);
  return q;
}

FreeElem random_pa(const UniversalMonoids& u, std::mt19937& rng, int terms) {
  FreeElem p(u.rank());
  for (int t = 0; t < terms; ++t) p[rng() % u.rank()] += 1;
  return u.PA().normal_form(p);
}

std::set<FreeElem, bool (*)(const FreeElem&, const FreeElem&)> nonzero_generator_classes(
    const UniversalMonoids& u) {
  std::set<FreeElem, bool (*)(const FreeElem&, const FreeElem&)> s(&term_less);
  for (std::size_t g = 0; g < u.rank(); ++g) {
    auto x = u.PA().normal_form(FreeElem::unit(u.rank(), g));
    if (!x.is_zero()) s.insert(x);
  }
  return s;
}

}  // namespace

TEST_CASE("trivial group gives the zero monoid") {
  UniversalMonoids u(AbelianGroup::cyclic(1));
  CHECK(u.rank() == 1);
  CHECK(u.e(0, 0).is_zero());
  CHECK(u.phi(u.raw(0, 0)).empty());
  CHECK(u.P_int().generators().empty());
  CHECK(u.Q_int().generators().empty());
}

TEST_CASE("P_{Z/2} is N on e_{1,1}") {
  const auto& u = universal(AbelianGroup::cyclic(2));
  auto nfs = normal_forms_up_to(u.PA(), 4);
  REQUIRE(nfs.size() == 5);
  for (const auto& x : nfs) {
    FreeElem y = x;
    y[u.index(1, 1)] = 0;
    CHECK(y.is_zero());
  }
  auto cmp = compare_with_closure(u.PA().presentation(), u.PA().system(), 4, 8);
  INFO(cmp.detail);
  CHECK(cmp.agree);
}

TEST_CASE("P_{Z/3} generator classes") {
  const auto& u = universal(AbelianGroup::cyclic(3));
  auto classes = nonzero_generator_classes(u);
  CHECK(classes.size() == 3);
  CHECK(classes.count(u.raw(1, 1)));
  CHECK(classes.count(u.raw(2, 2)));
  CHECK(classes.count(u.raw(1, 2)));
  CHECK(u.e(2, 1) == u.raw(1, 2));
  CHECK(u.PA().equal(u.raw(1, 1) + u.raw(2, 2), u.raw(1, 2)));
  auto cmp = compare_with_closure(u.PA().presentation(), u.PA().system(), 3, 7);
  INFO(cmp.detail);
  CHECK(cmp.agree);
}

TEST_CASE("phi_A and the value grading") {
  const auto& u = universal(AbelianGroup::cyclic(3));
  CHECK(u.phi(u.raw(1, 1)) == IVec{2, -1});
  CHECK(u.phi(u.raw(1, 2)) == IVec{1, 1});
  CHECK(u.phi(u.raw(2, 2)) == IVec{-1, 2});
  for (GroupElem l = 0; l < 3; ++l) CHECK(u.phi(u.raw(0, l)) == IVec{0, 0});
  CHECK(u.value(QAElem{FreeElem(9), 1}) == 1);
  CHECK(u.value(QAElem{u.raw(1, 2), 0}) == 2);
  CHECK(u.value(QAElem{u.raw(1, 1), 0}) == 1);
  CHECK(u.show(u.raw(1, 2)) == "e_{1,2}");
}

TEST_CASE("Sigma minus Pi is phi_A on every generator") {
  for (const auto& a : groups_up_to_8()) {
    const auto& u = universal(a);
    for (GroupElem x = 0; x < a.order(); ++x)
      for (GroupElem y = 0; y < a.order(); ++y) {
        IVec s = u.sigma(u.raw(x, y)), p = u.pi(u.raw(x, y));
        IVec direct(a.order() - 1, 0);
        if (x) direct[x - 1] += 1;
        if (y) direct[y - 1] += 1;
        if (a.add(x, y)) direct[a.add(x, y) - 1] -= 1;
        IVec diff = ivec_sub(s, p);
        CHECK(IVec(diff.begin() + 1, diff.end()) == direct);
        CHECK(u.phi(u.raw(x, y)) == direct);
      }
  }
}

TEST_CASE("universal table is a 2-cocycle and P_A, Q_A are sharp") {
  for (const auto& a : groups_up_to_8()) {
    INFO(a.description());
    const auto& u = universal(a);
    const auto& m = u.PA();
    bool ok = true;
    for (GroupElem x = 0; x < a.order() && ok; ++x) {
      ok = ok && u.e(0, x).is_zero();
      for (GroupElem y = 0; y < a.order() && ok; ++y) {
        ok = ok && u.e(x, y) == u.e(y, x);
        for (GroupElem z = 0; z < a.order() && ok; ++z)
          ok = ok && m.equal(u.raw(x, y) + u.raw(a.add(x, y), z),
                             u.raw(y, z) + u.raw(a.add(y, z), x));
      }
    }
    CHECK(ok);
    auto sharp = sharp_by_grading(m, u.pa_grading());
    INFO(sharp.reason);
    CHECK(sharp.certified);
    if (a.order() <= 4) {
      auto rp = u.build_RP();
      auto qs = sharp_by_grading(rp, u.rp_grading());
      INFO(qs.reason);
      CHECK(qs.certified);
    }
  }
}

TEST_CASE("Q_A addition") {
  const auto& u = universal(AbelianGroup::cyclic(3));
  CHECK(u.qa_add(u.iota(1), u.iota(2)) == QAElem{u.raw(1, 2), 0});
  for (GroupElem l = 0; l < 3; ++l) CHECK(u.qa_add(u.iota(l), u.iota(0)) == u.iota(l));
  QAElem three = u.qa_multiple(3, u.iota(1));
  CHECK(three.lambda == 0);
  CHECK(u.PA().equal(three.p, u.raw(1, 1) + u.raw(2, 1)));
  CHECK(u.show(three) == "(e_{1,1} + e_{1,2}, 0)");
}

TEST_CASE("Kummer multiples of Q_A elements") {
  std::mt19937 rng(17);
  for (const auto& a : groups_up_to_8()) {
    if (a.order() > 6) continue;
    const auto& u = universal(a);
    for (int t = 0; t < 40; ++t) {
      QAElem x{random_pa(u, rng, 3), rng() % a.order()};
      auto ord = a.element_order(x.lambda);
      FreeElem expect(u.rank());
      for (std::int64_t k = 0; k < ord; ++k) expect += x.p;
      for (std::int64_t k = 1; k < ord; ++k)
        expect += u.raw(a.multiple(k, x.lambda), x.lambda);
      QAElem got = u.qa_multiple(static_cast<std::uint32_t>(ord), x);
      CHECK(got.lambda == 0);
      CHECK(u.PA().equal(got.p, expect));
    }
  }
}

TEST_CASE("P_A acts freely on Q_A up to value 6") {
  const auto& u = universal(AbelianGroup::cyclic(3));
  std::set<std::pair<std::vector<std::uint32_t>, GroupElem>> seen;
  std::size_t count = 0;
  for (const auto& p : normal_forms_up_to(u.PA(), 6)) {
    if (u.value(p) > 6) continue;
    for (GroupElem l = 0; l < 3; ++l) {
      QAElem x = u.qa_add(u.gamma(p), u.iota(l));
      CHECK(seen.insert({x.p.e, x.lambda}).second);
      ++count;
    }
  }
  CHECK(count == seen.size());
}

TEST_CASE("quasi-integrality of Q_A on random elements") {
  std::mt19937 rng(3);
  for (const auto& a : {AbelianGroup::cyclic(3), AbelianGroup({2, 2}), AbelianGroup::cyclic(5)}) {
    const auto& u = universal(a);
    for (int t = 0; t < 200; ++t) {
      QAElem x{random_pa(u, rng, 3), rng() % a.order()};
      QAElem y{random_pa(u, rng, 1 + rng() % 2), rng() % a.order()};
      bool zero = y.p.is_zero() && y.lambda == 0;
      CHECK((u.qa_add(x, y) == x) == zero);
      CHECK(u.value(u.qa_add(x, y)) == u.value(x) + u.value(y));
      CHECK((u.value(y) == 0) == zero);
    }
  }
}

TEST_CASE("h, m and j") {
  const auto& u = universal(AbelianGroup::cyclic(3));
  CHECK(u.h(u.qplus_e(1)).is_zero());
  CHECK(u.h(u.qplus_zero()).is_zero());
  CHECK(u.PA().equal(u.h(FreeElem{3, 0}), u.raw(1, 1) + u.raw(2, 1)));
  CHECK(u.h(FreeElem{1, 1}) == u.raw(1, 2));
  CHECK(u.j(u.qplus_zero()) == u.qa_zero());
  CHECK(u.j(u.qplus_e(1)) == u.iota(1));
  CHECK(u.j(FreeElem{1, 1}) == QAElem{u.raw(1, 2), 0});
  CHECK(u.show_qplus(FreeElem{3, 0}) == "3*e_1");
}

TEST_CASE("h identity and q = phi(h(q)) + e_{m(q)}") {
  std::mt19937 rng(11);
  for (const auto& a : groups_up_to_8()) {
    if (a.order() > 6 || a.order() < 2) continue;
    const auto& u = universal(a);
    for (int t = 0; t < 60; ++t) {
      QPlusElem q = random_qplus(u, rng, 2), r = random_qplus(u, rng, 2);
      CHECK(u.PA().equal(u.h(q + r), u.h(q) + u.h(r) + u.raw(u.m(q), u.m(r))));
      IVec qv(q.e.begin(), q.e.end());
      CHECK(ivec_add(u.phi(u.h(q)), u.basis(u.m(q))) == qv);
      CHECK(u.j(q + r) == u.qa_add(u.j(q), u.j(r)));
    }
  }
}

TEST_CASE("tau and eta") {
  const auto& u = universal(AbelianGroup::cyclic(3));
  for (GroupElem l = 0; l < 3; ++l) {
    auto [p, q] = u.eta(u.iota(l));
    CHECK(p.is_zero());
    CHECK(q == u.qplus_e(l));
    CHECK(u.tau(p, q) == u.iota(l));
  }
  CHECK(u.tau(u.raw(1, 2), u.qplus_zero()) == QAElem{u.raw(1, 2), 0});
  CHECK(u.tau(FreeElem(9), FreeElem{1, 1}) == QAElem{u.raw(1, 2), 0});

  std::mt19937 rng(23);
  for (const auto& a : {AbelianGroup::cyclic(2), AbelianGroup::cyclic(3),
                        AbelianGroup({2, 2}), AbelianGroup::cyclic(4)}) {
    const auto& v = universal(a);
    PresentedMonoid rp = v.build_RP();
    for (int t = 0; t < 60; ++t) {
      QAElem x{random_pa(v, rng, 3), rng() % a.order()};
      auto [p, q] = v.eta(x);
      CHECK(v.tau(p, q) == x);
      FreeElem p2 = random_pa(v, rng, 2);
      QPlusElem q2 = random_qplus(v, rng, 2);
      auto back = v.eta(v.tau(p2, q2));
      CHECK(rp.equal(v.rp_embed(p2, q2), v.rp_embed(back.first, back.second)));
      FreeElem p3 = random_pa(v, rng, 2);
      QPlusElem q3 = random_qplus(v, rng, 2);
      CHECK((v.tau(p2, q2) == v.tau(p3, q3)) ==
            rp.equal(v.rp_embed(p2, q2), v.rp_embed(p3, q3)));
    }
  }
}

TEST_CASE("integral monoids of Z/3") {
  const auto& u = universal(AbelianGroup::cyclic(3));
  auto pint = u.P_int().generators();
  CHECK(std::set<IVec>(pint.begin(), pint.end()) == std::set<IVec>{{2, -1}, {-1, 2}});
  auto qint = u.Q_int().generators();
  CHECK(std::set<IVec>(qint.begin(), qint.end()) ==
        std::set<IVec>{{1, 0}, {0, 1}, {2, -1}, {-1, 2}});
  AffineMonoid two(2, {{2, -1}, {-1, 2}});
  for (GroupElem x = 0; x < 3; ++x)
    for (GroupElem y = 0; y < 3; ++y)
      CHECK(affine_membership(two, u.phi(u.raw(x, y)), u.value_grading()).has_value());
}

TEST_CASE("generator cap") {
  CHECK_THROWS_AS(UniversalMonoids(AbelianGroup::cyclic(9)), CapabilityError);
  CHECK_NOTHROW(UniversalMonoids(AbelianGroup::cyclic(3), 9));
  CHECK_THROWS_AS(universal(AbelianGroup::cyclic(3)).phi(FreeElem(4)), InvalidInput);
}
