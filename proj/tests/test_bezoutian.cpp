#include <doctest.h>

#include <topdeg/bezoutian.hpp>
#include <topdeg/forms.hpp>
#include <topdeg/parser.hpp>

#include <random>

using namespace topdeg;

namespace {

struct Setup {
  AlgebraPtr A;
  std::vector<Polynomial> H;
};

Setup univariate(const char* h) {
  auto R = VarRing::make({"x"});
  Polynomial p = parse_polynomial(h, R);
  return {QuotientAlgebra::build(Ideal(R, {p})), {p}};
}

TensorElement outer(const AlgElement& a, const AlgElement& b) {
  const auto& A = a.algebra();
  const std::size_t d = A->dim();
  std::vector<Rational> c(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i * d + j] = a.coords()[i] * b.coords()[j];
  return TensorElement(A, std::move(c));
}

} // namespace

TEST_CASE("bezoutian of x^3 - x against the monomial basis") {
  auto [A, H] = univariate("x^3 - x");
  TensorElement T = bezoutian_tensor(H, A);
  // (x^3 - x - x'^3 + x')/(x - x') = x^2 + x x' + x'^2 - 1
  using V = std::vector<Rational>;
  CHECK(T.coords() == V{-1, 0, 1, 0, 1, 0, 1, 0, 0});

  auto duals = dual_basis(T);
  REQUIRE(duals.size() == 3);
  CHECK(duals[0].coords() == V{-1, 0, 1}); // x^2 - 1
  CHECK(duals[1].coords() == V{0, 1, 0});  // x
  CHECK(duals[2].coords() == V{1, 0, 0});  // 1

  Functional phi = trace_functional(T);
  CHECK(phi.weights() == V{0, 0, 1});

  // the weights reconstruct 1 from the dual basis
  AlgElement rec = AlgElement::zero(A);
  for (std::size_t i = 0; i < 3; ++i) rec += duals[i] * phi.weights()[i];
  CHECK(rec == AlgElement::one(A));

  SymBilinearForm f = build_form(A, phi);
  CHECK(f.at(0, 2) == 1);
  CHECK(f.at(1, 1) == 1);
  CHECK(f.at(2, 2) == 1);
  CHECK(f.at(0, 0) == 0);
  CHECK(signature(f) == 1); // zeros -1, 0, 1 have degrees +1, -1, +1
}

TEST_CASE("small univariate degree sums via the trace form") {
  auto sig_of = [](const char* h) {
    auto [A, H] = univariate(h);
    return signature(build_form(A, trace_functional(bezoutian_tensor(H, A))));
  };
  CHECK(sig_of("x^2 - 1") == 0); // zeros -1, +1 with degrees -1, +1
  CHECK(sig_of("x") == 1);
  CHECK(sig_of("x^2") == 0);     // double zero
  CHECK(sig_of("x^2 + 1") == 0); // no real zeros
}

TEST_CASE("multiplication by a acts identically on either tensor factor") {
  // (a (x) 1) * T = (1 (x) a) * T characterizes the Bezoutian class.
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-4, 4);
  auto R = VarRing::make({"x", "y"});
  for (int it = 0; it < 25; ++it) {
    std::vector<Polynomial> H = {
        parse_polynomial("x^2 - (" + std::to_string(c(rng)) + "*y + " +
                             std::to_string(c(rng)) + ")",
                         R),
        parse_polynomial("y^2 - (" + std::to_string(c(rng)) + "*x + " +
                             std::to_string(c(rng)) + ")",
                         R)};
    auto A = QuotientAlgebra::build(Ideal(R, H));
    TensorElement T = bezoutian_tensor(H, A);
    for (int k = 0; k < 4; ++k) {
      std::vector<Rational> v(A->dim());
      for (auto& q : v) q = Rational(c(rng));
      AlgElement a(A, std::move(v));
      CHECK(tensor_mul(outer(a, AlgElement::one(A)), T) ==
            tensor_mul(outer(AlgElement::one(A), a), T));
    }
  }
}

TEST_CASE("telescoping: the bezoutian contracts to the class of 1") {
  // phi_T applied to either slot of T gives 1; equivalently the dual basis
  // expansion sum_i phi_T(e_i) ê_i reproduces 1 exactly (checked above), and
  // pairing T against phi in the second slot returns the coordinates of 1.
  for (const char* h : {"x^3 - x", "x^4 - 5*x^2 + 4", "x^2 + 1", "x^5 - x^2"}) {
    auto [A, H] = univariate(h);
    TensorElement T = bezoutian_tensor(H, A);
    Functional phi = trace_functional(T);
    const std::size_t d = A->dim();
    std::vector<Rational> contracted(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        contracted[i] += T.entry(i, j) * phi.weights()[j];
    CHECK(AlgElement(A, std::move(contracted)) == AlgElement::one(A));
  }
}

TEST_CASE("two-variable product system matches the univariate pieces") {
  // H = (x^2 - 1, y^3 - y) splits: degree sum = 0 * 1... the form is a tensor
  // product, so the signature multiplies: 0 * 1 = 0.
  auto R = VarRing::make({"x", "y"});
  std::vector<Polynomial> H = {parse_polynomial("x^2 - 1", R),
                               parse_polynomial("y^3 - y", R)};
  auto A = QuotientAlgebra::build(Ideal(R, H));
  REQUIRE(A->dim() == 6);
  SymBilinearForm f = build_form(A, trace_functional(bezoutian_tensor(H, A)));
  CHECK(signature(f) == 0);
  CHECK(inertia(f).rank == 6);

  std::vector<Polynomial> G = {parse_polynomial("x^3 - x", R),
                               parse_polynomial("y^3 - y", R)};
  auto B = QuotientAlgebra::build(Ideal(R, G));
  CHECK(signature(build_form(B, trace_functional(bezoutian_tensor(G, B)))) == 1);
}

TEST_CASE("bezoutian against a mismatched algebra is singular") {
  auto R = VarRing::make({"x"});
  auto A = QuotientAlgebra::build(Ideal(R, {parse_polynomial("x^3 - x", R)}));
  std::vector<Polynomial> H = {parse_polynomial("x^2", R)};
  TensorElement T = bezoutian_tensor(H, A); // x + x', rank 2 < 3
  try {
    trace_functional(T);
    FAIL("expected SingularBezoutian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularBezoutian);
  }
}

TEST_CASE("zero algebra yields an empty form") {
  auto R = VarRing::make({"x"});
  auto A = QuotientAlgebra::build(Ideal(R, {parse_polynomial("1", R)}));
  REQUIRE(A->dim() == 0);
  std::vector<Polynomial> H = {parse_polynomial("x", R)};
  TensorElement T = bezoutian_tensor(H, A);
  CHECK(T.dim() == 0);
  SymBilinearForm f = build_form(A, trace_functional(T));
  CHECK(signature(f) == 0);
}
