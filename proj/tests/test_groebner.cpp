#include <doctest.h>

#include <topdeg/ideal.hpp>
#include <topdeg/parser.hpp>

#include <algorithm>
#include <random>

using namespace topdeg;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens,
               MonomialOrder ord = MonomialOrder::degrevlex()) {
  std::vector<Polynomial> ps;
  for (const char* s : gens) ps.push_back(parse_polynomial(s, R));
  return Ideal(R, std::move(ps), ord);
}

// Basis as a sorted list of strings; convenient for set comparisons.
std::vector<std::string> gb_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& p : I.groebner_basis()) out.push_back(p.str());
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_ideal(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.generators())
    if (!normal_form(g, big).is_zero()) return false;
  return true;
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& R, int max_terms = 4,
                       int max_deg = 3) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> ex(0, max_deg);
  std::vector<Term> ts;
  for (int t = 0, k = nt(rng); t < k; ++t) {
    std::vector<std::uint16_t> e(R->size());
    for (auto& v : e) v = std::uint16_t(ex(rng));
    ts.push_back({Monomial(std::move(e)), Rational(coef(rng))});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

Ideal random_ideal(std::mt19937_64& rng, const RingPtr& R, MonomialOrder ord) {
  std::uniform_int_distribution<int> ng(1, 3);
  std::vector<Polynomial> gens;
  for (int i = 0, k = ng(rng); i < k; ++i) gens.push_back(random_poly(rng, R));
  return Ideal(R, std::move(gens), ord);
}

} // namespace

TEST_CASE("reduced basis of a line-circle system") {
  auto R = VarRing::make({"x", "y"});
  auto gb = ideal_of(R, {"x^2 + y^2 - 1", "x - y"}).groebner_basis();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == parse_polynomial("x - y", R));
  CHECK(gb[1] == parse_polynomial("y^2 - 1/2", R));
}

TEST_CASE("basis is independent of generator order and scaling") {
  auto R = VarRing::make({"x", "y", "z"});
  auto a = ideal_of(R, {"x*y - z", "y*z - x", "x*z - y"});
  auto b = ideal_of(R, {"3*x*z - 3*y", "-2*x*y + 2*z", "y*z - x"});
  CHECK(gb_strings(a) == gb_strings(b));
}

TEST_CASE("groebner basis is reduced: monic, ascending, mutually irreducible") {
  std::mt19937_64 rng(21);
  auto R = VarRing::make({"x", "y", "z"});
  auto ord = MonomialOrder::degrevlex();
  for (int it = 0; it < 30; ++it) {
    auto I = random_ideal(rng, R, ord);
    const auto& gb = I.groebner_basis();
    for (std::size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].terms().front().coeff == Rational(1));
      if (i + 1 < gb.size())
        CHECK(ord.cmp(gb[i].terms().front().mono, gb[i + 1].terms().front().mono) < 0);
      for (std::size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        const Monomial& lmj = gb[j].terms().front().mono;
        for (const auto& t : gb[i].terms()) CHECK(!lmj.divides(t.mono));
      }
    }
  }
}

TEST_CASE("every S-polynomial of the computed basis reduces to zero") {
  std::mt19937_64 rng(22);
  for (const auto& ord : {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                          MonomialOrder::block(1)}) {
    auto R = VarRing::make({"x", "y", "z"});
    for (int it = 0; it < 20; ++it)
      CHECK(buchberger_certifies(random_ideal(rng, R, ord)));
  }
}

TEST_CASE("normal form: membership, idempotence, ring homomorphism mod I") {
  auto R = VarRing::make({"x", "y"});
  auto I = ideal_of(R, {"x^2 + y^2 - 1"});
  CHECK(normal_form(parse_polynomial("x^3", R), I) ==
        parse_polynomial("x - x*y^2", R));

  std::mt19937_64 rng(23);
  for (int it = 0; it < 100; ++it) {
    auto J = random_ideal(rng, R, MonomialOrder::degrevlex());
    Polynomial f = random_poly(rng, R), g = random_poly(rng, R);
    Polynomial nf = normal_form(f, J);
    CHECK(normal_form(nf, J) == nf);
    // combination of generators reduces to zero
    Polynomial comb(R);
    for (const auto& gen : J.generators()) comb += gen * random_poly(rng, R, 2, 2);
    CHECK(normal_form(comb, J).is_zero());
    CHECK(normal_form(f + g, J) == normal_form(nf + normal_form(g, J), J));
    CHECK(normal_form(f * g, J) ==
          normal_form(nf * normal_form(g, J), J));
  }
}

TEST_CASE("unit and zero ideals") {
  auto R = VarRing::make({"x", "y"});
  CHECK(is_unit_ideal(ideal_of(R, {"x", "x + 1"})));
  CHECK(is_unit_ideal(ideal_of(R, {"2"})));
  CHECK(!is_unit_ideal(ideal_of(R, {"x"})));
  CHECK(ideal_of(R, {"0"}).groebner_basis().empty());
  CHECK(!is_unit_ideal(ideal_of(R, {"0"})));
}

TEST_CASE("intersection of principal ideals is generated by the lcm") {
  auto R = VarRing::make({"x", "y"});
  auto I = ideal_of(R, {"x"});
  auto J = ideal_of(R, {"y"});
  CHECK(gb_strings(ideal_intersect(I, J)) == std::vector<std::string>{"x*y"});
  // (x-y) and (x+y) are coprime: intersection = product
  auto K = ideal_intersect(ideal_of(R, {"x - y"}), ideal_of(R, {"x + y"}));
  CHECK(gb_strings(K) == std::vector<std::string>{"x^2 - y^2"});
}

TEST_CASE("colon ideal on monomial ideals") {
  auto R = VarRing::make({"x", "y"});
  auto J = ideal_of(R, {"x^2", "x*y"});
  CHECK(gb_strings(ideal_quotient(J, ideal_of(R, {"x"}))) ==
        std::vector<std::string>{"x", "y"});
  CHECK(gb_strings(ideal_quotient(J, ideal_of(R, {"y"}))) ==
        std::vector<std::string>{"x"});
  CHECK(gb_strings(ideal_quotient(ideal_of(R, {"x^2*y", "x*y^2"}),
                                  ideal_of(R, {"x*y"}))) ==
        std::vector<std::string>{"x", "y"});
}

TEST_CASE("sum, product, intersection, quotient: containment laws") {
  std::mt19937_64 rng(24);
  auto R = VarRing::make({"x", "y"});
  for (int it = 0; it < 40; ++it) {
    auto I = random_ideal(rng, R, MonomialOrder::degrevlex());
    auto J = random_ideal(rng, R, MonomialOrder::degrevlex());
    auto S = ideal_sum(I, J);
    CHECK(contains_ideal(S, I));
    CHECK(contains_ideal(S, J));
    auto P = ideal_product(I, J);
    auto M = ideal_intersect(I, J);
    CHECK(contains_ideal(I, M));
    CHECK(contains_ideal(J, M));
    CHECK(contains_ideal(M, P));
    auto Q = ideal_quotient(J, I);
    CHECK(contains_ideal(Q, J)); // J subset J : I
    CHECK(contains_ideal(J, ideal_product(Q, I)));
  }
}

TEST_CASE("quotient by the unit ideal returns the ideal itself") {
  auto R = VarRing::make({"x", "y"});
  auto J = ideal_of(R, {"x^2 - y"});
  CHECK(gb_strings(ideal_quotient(J, ideal_of(R, {"1"}))) == gb_strings(J));
}

TEST_CASE("block order eliminates the leading variables") {
  auto R = VarRing::make({"t", "x", "y"});
  // x = 1/t, y = 1/t on the variety, so x - y vanishes after elimination.
  auto I = ideal_of(R, {"t*x - 1", "t*y - 1"}, MonomialOrder::block(1));
  CHECK(normal_form(parse_polynomial("x - y", R), I).is_zero());
  bool have_t_free = false;
  for (const auto& p : I.groebner_basis()) {
    bool t_free = true;
    for (const auto& term : p.terms())
      if (term.mono.exp(0) != 0) t_free = false;
    have_t_free |= t_free;
  }
  CHECK(have_t_free);
}

TEST_CASE("standard monomials of a staircase") {
  auto R = VarRing::make({"x", "y"});
  auto sm = standard_monomials(ideal_of(R, {"x^2", "y^3"}));
  REQUIRE(sm.has_value());
  CHECK(sm->size() == 6);
  CHECK(sm->front().is_one());
  // closed under division: every divisor of a standard monomial is standard
  for (const auto& m : *sm)
    for (const auto& n : *sm)
      if (n.divides(m)) CHECK(std::count(sm->begin(), sm->end(), m.divided_by(n)) == 1);

  CHECK(!standard_monomials(ideal_of(R, {"x"})).has_value());
  CHECK(!standard_monomials(ideal_of(R, {"0"})).has_value());
  auto unit = standard_monomials(ideal_of(R, {"1"}));
  REQUIRE(unit.has_value());
  CHECK(unit->empty());
}

TEST_CASE("dimension of the quotient does not depend on the order") {
  auto R = VarRing::make({"x", "y"});
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int it = 0; it < 20; ++it) {
    // x^2 - p(y), y^3 - q(y) with deg q < 3: always zero-dimensional
    std::string px = "x^2 - (" + std::to_string(c(rng)) + "*y + " + std::to_string(c(rng)) + ")";
    std::string py = "y^3 - (" + std::to_string(c(rng)) + "*y + " + std::to_string(c(rng)) + ")";
    std::size_t dims[3];
    int k = 0;
    for (const auto& ord : {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                            MonomialOrder::block(1)}) {
      auto sm = standard_monomials(ideal_of(R, {px.c_str(), py.c_str()}, ord));
      REQUIRE(sm.has_value());
      dims[k++] = sm->size();
    }
    CHECK(dims[0] == 6);
    CHECK(dims[0] == dims[1]);
    CHECK(dims[0] == dims[2]);
  }
}

TEST_CASE("exact division strips a known factor") {
  auto R = VarRing::make({"x", "y"});
  std::mt19937_64 rng(26);
  auto ord = MonomialOrder::degrevlex();
  for (int it = 0; it < 100; ++it) {
    Polynomial g = random_poly(rng, R);
    if (g.is_zero()) continue;
    Polynomial q = random_poly(rng, R);
    CHECK(exact_poly_divide(g * q, g, ord) == q);
  }
}
