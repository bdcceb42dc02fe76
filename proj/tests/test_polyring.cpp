#include <doctest.h>

#include <topdeg/parser.hpp>
#include <topdeg/polynomial.hpp>

#include <array>
#include <random>

using namespace topdeg;

namespace {

RingPtr xy() { return VarRing::make({"x", "y"}); }

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(s, R); }

// Random polynomial with small integer coefficients, for algebraic-law checks.
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& R, int max_terms = 6,
                       int max_deg = 4) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> ex(0, max_deg);
  std::vector<Term> ts;
  const int k = nt(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<std::uint16_t> e(R->size());
    for (auto& v : e) v = std::uint16_t(ex(rng));
    ts.push_back({Monomial(std::move(e)), Rational(coef(rng))});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

} // namespace

TEST_CASE("parser round-trips through str()") {
  auto R = xy();
  for (const char* s : {"0", "1", "-3/4", "x", "x*y", "x^2 - 2*x*y + y^2",
                        "1/2*x^3 - x + 7", "(x + y)*(x - y)", "-x^2 - 1"}) {
    Polynomial p = P(R, s);
    CHECK(P(R, p.str().c_str()) == p);
  }
}

TEST_CASE("parser rejects junk with a column offset") {
  auto R = xy();
  for (const char* s : {"x +", "z", "x ** y", "2x", "(x", "x^", "1/0", "^2", ""}) {
    CHECK_THROWS_AS(P(R, s), Error);
  }
  try {
    P(R, "x + q");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("col 4") != std::string::npos);
  }
}

TEST_CASE("arithmetic identities on random inputs") {
  auto R = VarRing::make({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Polynomial a = random_poly(rng, R), b = random_poly(rng, R), c = random_poly(rng, R);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    CHECK(a * (b * c) == (a * b) * c);
  }
}

TEST_CASE("degree, constants, pow") {
  auto R = xy();
  CHECK(Polynomial(R).total_degree() == -1);
  CHECK(P(R, "5").is_constant());
  CHECK(P(R, "x*y^3").total_degree() == 4);
  CHECK(P(R, "x + 1").pow(3) == P(R, "x^3 + 3*x^2 + 3*x + 1"));
  CHECK(P(R, "x").pow(0) == P(R, "1"));
}

TEST_CASE("evaluation agrees with expansion") {
  auto R = xy();
  Polynomial p = P(R, "x^2*y - 3*x + 1/2");
  std::array<Rational, 2> pt = {Rational(2), Rational(-3)};
  CHECK(p.eval(std::span<const Rational>(pt)) == Rational(-12) - 6 + Rational(1, 2));
  std::array<double, 2> pd = {2.0, -3.0};
  CHECK(p.eval(std::span<const double>(pd)) == doctest::Approx(-17.5));
  std::array<double, 1> bad = {1.0};
  CHECK_THROWS_AS(p.eval(std::span<const double>(bad)), Error);
}

TEST_CASE("derivative") {
  auto R = xy();
  CHECK(P(R, "x^3*y + y^2").derivative(0) == P(R, "3*x^2*y"));
  CHECK(P(R, "x^3*y + y^2").derivative(1) == P(R, "x^3 + 2*y"));
  CHECK(P(R, "7").derivative(0).is_zero());
}

TEST_CASE("ring mismatch is refused") {
  auto R = xy();
  auto S = VarRing::make({"x", "y"}); // same names: interchangeable
  auto T = VarRing::make({"a", "b"});
  CHECK_NOTHROW(P(R, "x") + P(S, "y"));
  CHECK_THROWS_AS(P(R, "x") + P(T, "a"), Error);
}

TEST_CASE("monomial order basics") {
  // In 2 vars, degrevlex and deglex coincide: x > y at equal degree.
  Monomial x = Monomial::var(2, 0), y = Monomial::var(2, 1);
  auto drl = MonomialOrder::degrevlex();
  CHECK(drl.cmp(x, y) > 0);
  CHECK(drl.cmp(x, Monomial::var(2, 1, 2)) < 0); // degree dominates
  auto lex = MonomialOrder::lex();
  CHECK(lex.cmp(x, Monomial::var(2, 1, 5)) > 0); // degree does not

  // degrevlex proper: x*z^2 vs y^3 (deg 3): revlex looks at the LAST
  // exponent difference, and smaller exponent there means larger monomial.
  std::vector<std::uint16_t> xzz = {1, 0, 2}, yyy = {0, 3, 0};
  CHECK(drl.cmp(Monomial(xzz), Monomial(yyy)) < 0);

  // block(1) eliminates the first variable: any power of x beats anything in y,z.
  auto blk = MonomialOrder::block(1);
  CHECK(blk.cmp(Monomial::var(3, 0), Monomial({std::vector<std::uint16_t>{0, 9, 9}})) > 0);
}

TEST_CASE("order is a total order compatible with multiplication") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ex(0, 5);
  for (const auto& ord : {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                          MonomialOrder::block(2)}) {
    for (int it = 0; it < 200; ++it) {
      std::vector<std::uint16_t> ea(4), eb(4), ec(4);
      for (auto& v : ea) v = std::uint16_t(ex(rng));
      for (auto& v : eb) v = std::uint16_t(ex(rng));
      for (auto& v : ec) v = std::uint16_t(ex(rng));
      Monomial a(ea), b(eb), c(ec);
      CHECK(ord.cmp(a, b) == -ord.cmp(b, a));
      if (ord.cmp(a, b) < 0) CHECK(ord.cmp(a * c, b * c) < 0); // translation invariance
      CHECK(ord.cmp(a * c, a) >= 0);                           // 1 is minimal
    }
  }
}

TEST_CASE("monomial divisibility and lcm") {
  Monomial a({std::vector<std::uint16_t>{2, 1, 0}});
  Monomial b({std::vector<std::uint16_t>{1, 1, 0}});
  CHECK(b.divides(a));
  CHECK(!a.divides(b));
  CHECK(a.divided_by(b) == Monomial::var(3, 0));
  CHECK(Monomial::lcm(a, Monomial::var(3, 2)) ==
        Monomial({std::vector<std::uint16_t>{2, 1, 1}}));
  CHECK(a.coprime(Monomial::var(3, 2)));
  CHECK(!a.coprime(b));
}

TEST_CASE("substitute composes maps") {
  auto R = xy();
  auto S = VarRing::make({"t"});
  Polynomial p = P(R, "x^2 + y^2 - 1");
  std::vector<Polynomial> im = {P(S, "2*t"), P(S, "t^2 - 1")};
  // (2t)^2 + (t^2-1)^2 - 1 = t^4 + 2t^2
  CHECK(substitute(p, S, im) == P(S, "t^4 + 2*t^2"));
  im.pop_back();
  CHECK_THROWS_AS(substitute(p, S, im), Error);
}

TEST_CASE("embed matches variables by name") {
  auto R = xy();
  auto big = VarRing::make({"w", "x", "y"});
  CHECK(embed(P(R, "x*y - 2"), big) == P(big, "x*y - 2"));
  auto small = VarRing::make({"x"});
  CHECK_THROWS_AS(embed(P(R, "y"), small), Error);
}

TEST_CASE("prime_copy and divided differences") {
  auto R = xy();
  auto D = doubled_ring(R);
  REQUIRE(D->size() == 4);
  CHECK(D->name(2) == std::string("x") + std::string(kPrimeSuffix));

  Polynomial h = P(R, "x^2*y");
  Polynomial hp = prime_copy(h, D);
  // substitute x -> x', y -> y' by hand and compare
  std::vector<Polynomial> im = {Polynomial::variable(D, 2), Polynomial::variable(D, 3)};
  CHECK(hp == substitute(h, D, im));

  // d_0 of x^2*y: (x^2 y - x'^2 y)/(x - x') = (x + x')*y
  Polynomial d0 = divided_difference(h, 0, D);
  Polynomial x = Polynomial::variable(D, 0), y = Polynomial::variable(D, 1);
  Polynomial xp = Polynomial::variable(D, 2), yp = Polynomial::variable(D, 3);
  CHECK(d0 == (x + xp) * y);
  // d_1: x'^2 (y - y')/(y - y') = x'^2
  CHECK(divided_difference(h, 1, D) == xp * xp);

  // Telescoping: sum_j d_j * (x_j - x'_j) = h(x) - h(x')
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    Polynomial f = random_poly(rng, R);
    Polynomial lhs(D);
    lhs += divided_difference(f, 0, D) * (x - xp);
    lhs += divided_difference(f, 1, D) * (y - yp);
    CHECK(lhs == embed(f, D) - prime_copy(f, D));
  }
}

TEST_CASE("exact_divide by a monic linear divisor") {
  auto R = xy();
  Polynomial d = P(R, "x - 3");
  Polynomial q = P(R, "x^2*y + x - 1/5");
  CHECK(exact_divide(q * d, d, 0) == q);
  CHECK_THROWS_AS(exact_divide(P(R, "x^2 + 1"), d, 0), Error);
}
