#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "coverforge/ring.hpp"

using namespace coverforge;

namespace {

// Z[i][xi] with i^2 = -1 and xi^4 + xi^3 + xi^2 + xi + 1 = 0.
struct CyclotomicOrder {
  std::shared_ptr<const Quotient<Integer>::Context> gi =
      Quotient<Integer>::make_context("i", {Integer(1), Integer(0), Integer(1)});
  Quotient<Integer> zero_i = Quotient<Integer>::constant(gi, 0);
  std::shared_ptr<const Quotient<Quotient<Integer>>::Context> gxi =
      Quotient<Quotient<Integer>>::make_context(
          "xi", {one_like(zero_i), one_like(zero_i), one_like(zero_i),
                 one_like(zero_i), one_like(zero_i)});
  using Elem = Quotient<Quotient<Integer>>;
  Elem xi = Elem::generator(gxi);
  Elem i = Elem::constant(gxi, Quotient<Integer>::generator(gi));
  Elem integer(long n) const { return from_integer(xi, Integer(n)); }
};

Integer gcd_of_minors(const Matrix<Integer>& m, std::size_t k) {
  // brute force over all k-subsets of rows and columns
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  Integer g = 0;
  std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      Matrix<Integer> sub(k, k, Integer(0));
      std::size_t r = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (csel[j]) sub(r, c++) = m(i, j);
        ++r;
      }
      g = gcd(g, determinant(sub));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

Matrix<Integer> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                              int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix<Integer> m(r, c, Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

template <class R>
void check_ring_axioms(const R& a, const R& b, const R& c) {
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a - a == zero_like(a));
  CHECK(a * one_like(a) == a);
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  PolyRing<Integer> zx({"x"}, Integer(0));
  auto x = zx.var("x");
  auto p = (x + zx.one()) * (x - zx.one());
  CHECK(p == x * x - zx.one());
  CHECK(to_string(p) == "x^2 - 1");
  PolyRing<Integer> zs({"s"}, Integer(0));
  CHECK(to_string(zs.integer(27) * pow(zs.var("s"), 4)) == "27*s^4");
  CHECK(to_string(-zs.var("s")) == "-s");
}

TEST_CASE("mixed polynomial rings are rejected") {
  PolyRing<Integer> a({"x"}, Integer(0)), b({"y"}, Integer(0));
  CHECK_THROWS_AS(a.var("x") + b.var("y"), RingMismatch);
  PolyRing<Fp> f2({"x"}, Fp(0, 2)), f3({"x"}, Fp(0, 3));
  CHECK_THROWS_AS(f2.var("x") * f3.var("x"), RingMismatch);
  // equal descriptions built separately are the same ring
  PolyRing<Integer> c({"x"}, Integer(0));
  CHECK(a.var("x") == c.var("x"));
}

TEST_CASE("quotient reduction by a cyclotomic modulus") {
  auto ctx = Quotient<Integer>::make_context(
      "xi", {Integer(1), Integer(1), Integer(1), Integer(1), Integer(1)});
  auto xi = Quotient<Integer>::generator(ctx);
  auto q = pow(xi, 4);
  CHECK(q.coords() == std::vector<Integer>{-1, -1, -1, -1});
  CHECK(to_string(q) == "-xi^3 - xi^2 - xi - 1");
  CHECK(pow(xi, 5) == one_like(xi));
}

TEST_CASE("square root of 5 in Z[i, xi]") {
  CyclotomicOrder o;
  auto d2 = (o.xi + pow(o.xi, 4)) - (pow(o.xi, 2) + pow(o.xi, 3));
  CHECK(d2 * d2 == o.integer(5));
  CHECK(o.i * o.i == o.integer(-1));
  CHECK(flat_dimension(d2) == 8);
}

TEST_CASE("unit queries") {
  PolyRing<Integer> zs({"s"}, Integer(0));
  CHECK(is_unit(zs.one()));
  CHECK_FALSE(is_unit(zs.var("s")));
  CHECK(is_unit(-zs.one()));
  CHECK_FALSE(is_unit(zs.integer(2)));

  PolyRing<Rational> qs({"s"}, Rational(0));
  CHECK(is_unit(qs.integer(3)));

  auto gi = Quotient<Integer>::make_context("i", {Integer(1), Integer(0), Integer(1)});
  auto i = Quotient<Integer>::generator(gi);
  auto two = from_integer(i, Integer(2));
  auto loc = Localized<Quotient<Integer>>::make_context(two);
  auto L = [&](const Quotient<Integer>& a) {
    return Localized<Quotient<Integer>>(loc, a);
  };
  CHECK_FALSE(is_unit(L(from_integer(i, Integer(5)))));
  CHECK_FALSE(is_unit(L(one_like(i) + two * i)));
  CHECK(is_unit(L(two)));
  CHECK(is_unit(L(one_like(i) + i)));  // (1+i)(1-i) = 2
  CHECK_FALSE(is_unit(L(i + two)));
}

TEST_CASE("unit queries in Z[1/2, i] agree with the norm criterion") {
  // a + bi is a unit after inverting 2 iff a^2 + b^2 is a power of 2
  auto gi = Quotient<Integer>::make_context("i", {Integer(1), Integer(0), Integer(1)});
  auto i = Quotient<Integer>::generator(gi);
  auto loc = Localized<Quotient<Integer>>::make_context(from_integer(i, Integer(2)));
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      long n = a * a + b * b;
      bool power_of_two = (n & (n - 1)) == 0;
      auto e = from_integer(i, Integer(a)) + from_integer(i, Integer(b)) * i;
      INFO(a << " + " << b << "i");
      CHECK(is_unit(Localized<Quotient<Integer>>(loc, e)) == power_of_two);
    }
}

TEST_CASE("localized equality and arithmetic") {
  auto loc = Localized<Integer>::make_context(Integer(10));
  using L = Localized<Integer>;
  CHECK(L(loc, 5, 1) == L(loc, 50, 2));
  CHECK(L(loc, 1, 1) * L(loc, 10) == L(loc, 1));
  CHECK(*try_inverse(L(loc, 2)) == L(loc, 5, 1));
  CHECK_FALSE(is_unit(L(loc, 3)));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-30, 30), k(0, 3);
  for (int t = 0; t < 100; ++t) {
    L a(loc, d(rng), k(rng)), b(loc, d(rng), k(rng)), c(loc, d(rng), k(rng));
    check_ring_axioms(a, b, c);
    // equality is an equivalence compatible with rescaling by u/u
    L a2(loc, a.numerator() * 10, a.power() + 1);
    CHECK(a == a2);
    CHECK(a2 == a);
    CHECK((a2 == b) == (a == b));
    CHECK(a2 * c == a * c);
  }
}

TEST_CASE("exact divisibility") {
  PolyRing<Rational> qs({"s"}, Rational(0));
  auto s = qs.var("s");
  CHECK(*divides(s, pow(s, 3)) == pow(s, 2));
  CHECK_FALSE(divides(pow(s, 2), s).has_value());
  PolyRing<Integer> zs({"s"}, Integer(0));
  auto t = zs.var("s");
  CHECK(*divides(zs.integer(3), zs.integer(27) * pow(t, 4)) ==
        zs.integer(9) * pow(t, 4));
  CHECK_FALSE(divides(zs.integer(2), zs.integer(3) * t).has_value());
  CHECK_FALSE(divides(zs.zero(), t).has_value());
  CHECK(*divides(zs.zero(), zs.zero()) == zs.zero());
  CHECK(*divides(Integer(0), Integer(0)) == 0);
}

TEST_CASE("divides returns an exact cofactor") {
  PolyRing<Integer> r({"x", "y"}, Integer(0));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
  auto random_poly = [&] {
    auto p = r.zero();
    for (int k = 0; k < 3; ++k)
      p += r.integer(c(rng)) * pow(r.var("x"), e(rng)) * pow(r.var("y"), e(rng));
    return p;
  };
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(), b = random_poly();
    if (auto q = divides(a, a * b)) CHECK(a * *q == a * b);
    if (auto q = divides(a, b)) CHECK(a * *q == b);
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  CyclotomicOrder o;
  auto rnd = [&] {
    auto v = o.integer(0);
    for (int k = 0; k < 4; ++k)
      v += o.integer(c(rng)) * pow(o.xi, k) * (c(rng) > 0 ? o.i : o.integer(1));
    return v;
  };
  for (int t = 0; t < 30; ++t) check_ring_axioms(rnd(), rnd(), rnd());

  PolyRing<Fp> f({"x", "y"}, Fp(0, 7));
  auto rp = [&] {
    return f.integer(c(rng)) * f.var("x") + f.integer(c(rng)) * f.var("y") +
           f.integer(c(rng));
  };
  for (int t = 0; t < 30; ++t) check_ring_axioms(rp(), rp(), rp());

  for (int t = 0; t < 30; ++t)
    check_ring_axioms(Fp(c(rng), 5), Fp(c(rng), 5), Fp(c(rng), 5));
}

TEST_CASE("Smith normal form examples") {
  auto id = Matrix<Integer>::identity(3, Integer(0));
  CHECK(smith_normal_form(id).d == id);

  auto m = Matrix<Integer>::from_rows({{2, 4}, {6, 8}}, Integer(0));
  auto s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  // gcd of entries and of 2x2 minors
  CHECK(s.d(0, 0) == gcd_of_minors(m, 1));
  CHECK(s.d(0, 0) * s.d(1, 1) == gcd_of_minors(m, 2));
  CHECK(s.d == Matrix<Integer>::from_rows({{2, 0}, {0, 4}}, Integer(0)));

  PolyRing<Rational> qs({"s"}, Rational(0));
  auto x = qs.var("s");
  auto pm = Matrix<Poly<Rational>>::from_rows({{x, x * x}, {qs.zero(), x}},
                                              qs.zero());
  auto ps = smith_normal_form(pm);
  CHECK(ps.u * pm * ps.v == ps.d);
  CHECK(ps.d == Matrix<Poly<Rational>>::from_rows({{x, qs.zero()}, {qs.zero(), x}},
                                                  qs.zero()));
}

TEST_CASE("Smith normal form properties on random integer matrices") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c, 6);
    auto s = smith_normal_form(m);
    INFO(m.to_string());
    REQUIRE(s.u * m * s.v == s.d);
    CHECK(s.d.is_diagonal());
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    auto f = s.invariant_factors();
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
      CHECK(divides(f[k], f[k + 1]).has_value());
    Integer prod = 1;
    for (std::size_t k = 0; k < std::min(r, c); ++k) {
      CHECK(s.d(k, k) >= 0);
      prod *= s.d(k, k);
      CHECK(prod == gcd_of_minors(m, k + 1));
    }
    // invariant under row permutation
    auto perm = m;
    perm.swap_rows(0, r - 1);
    CHECK(smith_normal_form(perm).d == s.d);
  }
}

TEST_CASE("integer linear solve") {
  auto a = Matrix<Integer>::from_rows({{2, 4}, {6, 8}}, Integer(0));
  auto x = solve_via_snf(a, {Integer(2), Integer(2)});
  REQUIRE(x);
  CHECK(a.apply(*x) == std::vector<Integer>{2, 2});
  CHECK_FALSE(solve_via_snf(a, {Integer(1), Integer(0)}).has_value());
}

TEST_CASE("expression parser") {
  PolyRing<Integer> r({"x", "xi", "y"}, Integer(0));
  SymbolTable<Poly<Integer>> tab{r.zero(),
                                 {{"x", r.var("x")}, {"xi", r.var("xi")}, {"y", r.var("y")}}};
  auto x = r.var("x"), xi = r.var("xi"), y = r.var("y");
  CHECK(parse_element("x^2 - 1", tab) == x * x - r.one());
  CHECK(parse_element("2xy", tab) == r.integer(2) * x * y);
  CHECK(parse_element("xi^2", tab) == xi * xi);
  CHECK(parse_element("-(x + y)^2", tab) == -((x + y) * (x + y)));
  CHECK(parse_element("3(x+1)*y", tab) == r.integer(3) * (x + r.one()) * y);
  CHECK_THROWS_AS(parse_element("x/2", tab), ParseError);
  CHECK_THROWS_AS(parse_element("z", tab), ParseError);
  CHECK_THROWS_AS(parse_element("(x", tab), ParseError);

  SymbolTable<Rational> q{Rational(0), {}};
  CHECK(parse_element("3/2 - 1/2", q) == Rational(1));
}
