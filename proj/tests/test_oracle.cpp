#include <doctest.h>

#include <topdeg/degree.hpp>
#include <topdeg/oracle.hpp>
#include <topdeg/parser.hpp>

#include <random>

using namespace topdeg;

namespace {

DegreeProblem one_var(const char* h, const char* excl = nullptr) {
  auto R = VarRing::make({"x"});
  DegreeProblem dp;
  dp.ring = R;
  dp.map = {parse_polynomial(h, R)};
  if (excl) dp.excluded = {parse_polynomial(excl, R)};
  return dp;
}

} // namespace

TEST_CASE("cubic: all three zeros with their degrees") {
  auto r = numeric_degree_sum(one_var("x^3 - x"));
  REQUIRE(r.zeros.size() == 3);
  CHECK(r.zeros[0][0] == doctest::Approx(-1).epsilon(1e-9));
  CHECK(r.zeros[1][0] == doctest::Approx(0).epsilon(1e-9));
  CHECK(r.zeros[2][0] == doctest::Approx(1).epsilon(1e-9));
  CHECK(r.degrees == std::vector<int>{1, -1, 1});
  CHECK(r.sum == 1);
  CHECK(r.regular);
}

TEST_CASE("excluded variety drops matching zeros") {
  auto r = numeric_degree_sum(one_var("x^3 - x", "x"));
  REQUIRE(r.zeros.size() == 2);
  CHECK(r.zeros[0][0] == doctest::Approx(-1));
  CHECK(r.zeros[1][0] == doctest::Approx(1));
  CHECK(r.sum == 2);
}

TEST_CASE("no real zeros") {
  auto r = numeric_degree_sum(one_var("x^2 + 1"));
  CHECK(r.zeros.empty());
  CHECK(r.sum == 0);
  CHECK(r.regular);
}

TEST_CASE("singular zeros are flagged") {
  // Newton stalls near a triple zero at |x| ~ tol^(1/3); the stall cluster
  // must collapse to one point and be reported as irregular, never as a
  // trustworthy count.
  auto r = numeric_degree_sum(one_var("x^3"));
  REQUIRE(r.zeros.size() == 1);
  CHECK(r.zeros[0][0] == doctest::Approx(0).epsilon(1e-3));
  CHECK(!r.regular);
}

TEST_CASE("product system: all four zeros with matching degrees") {
  auto R = VarRing::make({"x", "y"});
  DegreeProblem dp;
  dp.ring = R;
  dp.map = {parse_polynomial("x^2 - 4", R), parse_polynomial("y^2 - 9", R)};
  auto r = numeric_degree_sum(dp);
  REQUIRE(r.zeros.size() == 4);
  // converged coordinates only match to roundoff, so pair up by distance
  const double want[4][2] = {{-2, -3}, {-2, 3}, {2, -3}, {2, 3}};
  const int want_deg[4] = {1, -1, -1, 1}; // sign of det = 4xy
  for (int w = 0; w < 4; ++w) {
    bool matched = false;
    for (std::size_t i = 0; i < 4 && !matched; ++i)
      if (std::abs(r.zeros[i][0] - want[w][0]) < 1e-6 &&
          std::abs(r.zeros[i][1] - want[w][1]) < 1e-6) {
        CHECK(r.degrees[i] == want_deg[w]);
        matched = true;
      }
    CHECK(matched);
  }
  CHECK(r.sum == 0);
  CHECK(r.regular);
}

TEST_CASE("same seed, same output; the sum is seed-independent") {
  auto dp = one_var("x^3 - 2*x + 1/4");
  OracleConfig cfg;
  cfg.seed = 99;
  auto a = numeric_degree_sum(dp, cfg);
  auto b = numeric_degree_sum(dp, cfg);
  CHECK(a.zeros == b.zeros);
  CHECK(a.degrees == b.degrees);
  cfg.seed = 100;
  CHECK(numeric_degree_sum(dp, cfg).sum == a.sum);
}

TEST_CASE("configuration must be positive and the system square") {
  auto dp = one_var("x");
  OracleConfig cfg;
  cfg.starts = 0;
  CHECK_THROWS_AS(numeric_degree_sum(dp, cfg), Error);
  cfg = {};
  cfg.tol = -1;
  CHECK_THROWS_AS(numeric_degree_sum(dp, cfg), Error);

  auto R = VarRing::make({"x", "y"});
  DegreeProblem bad;
  bad.ring = R;
  bad.map = {parse_polynomial("x", R)};
  CHECK_THROWS_AS(numeric_degree_sum(bad), Error);
}

TEST_CASE("numeric sums agree with the symbolic signature") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> c(-4, 4);
  OracleConfig cfg;
  cfg.starts = 400;
  for (int it = 0; it < 20; ++it) {
    // squarefree-ish cubics; skip draws the oracle itself flags as irregular
    std::string h = "x^3 + (" + std::to_string(c(rng)) + ")*x + (" +
                    std::to_string(c(rng)) + ")";
    auto dp = one_var(h.c_str());
    auto r = numeric_degree_sum(dp, cfg);
    if (!r.regular) continue;
    CHECK(r.sum == degree_sum(dp));
  }
}
