#include <doctest.h>

#include <topdeg/forms.hpp>
#include <topdeg/parser.hpp>

#include <random>

using namespace topdeg;

namespace {

// Q[x]/(x^d): a throwaway algebra of the wanted dimension for plain matrix tests.
AlgebraPtr alg_dim(std::size_t d) {
  auto R = VarRing::make({"x"});
  return QuotientAlgebra::build(
      Ideal(R, {parse_polynomial("x", R).pow(unsigned(d))}));
}

SymBilinearForm form(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Rational> m;
  for (const auto& r : rows)
    for (int v : r) m.emplace_back(v);
  return SymBilinearForm(alg_dim(rows.size()), std::move(m));
}

SymBilinearForm random_symmetric(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m[i * d + j] = m[j * d + i] = q;
    }
  return SymBilinearForm(alg_dim(d), std::move(m));
}

// Random congruence M -> P^T M P, P a product of elementary matrices
// (det P = +-1, so signature, rank and det sign are all preserved).
SymBilinearForm random_congruence(std::mt19937_64& rng, const SymBilinearForm& f) {
  const std::size_t d = f.dim();
  std::vector<Rational> m(f.entries());
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i * d + j]; };
  std::uniform_int_distribution<std::size_t> idx(0, d - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> which(0, 3);
  for (int op = 0; op < 10; ++op) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    if (which(rng) == 0) {
      for (std::size_t k = 0; k < d; ++k) std::swap(at(i, k), at(j, k));
      for (std::size_t k = 0; k < d; ++k) std::swap(at(k, i), at(k, j));
    } else {
      const Rational f2(c(rng));
      for (std::size_t k = 0; k < d; ++k) at(i, k) += f2 * at(j, k);
      for (std::size_t k = 0; k < d; ++k) at(k, i) += f2 * at(k, j);
    }
  }
  return SymBilinearForm(f.algebra(), std::move(m));
}

} // namespace

TEST_CASE("signatures and determinant signs of fixed matrices") {
  auto neg2 = SymBilinearForm(alg_dim(2), {Rational(-1, 8), 0, 0, Rational(-1, 8)});
  CHECK(signature(neg2) == -2);
  CHECK(det_sign(neg2) == 1);

  auto hyp = form({{0, 1}, {1, 0}});
  CHECK(signature(hyp) == 0);
  CHECK(inertia(hyp).rank == 2);
  CHECK(det_sign(hyp) == -1);

  CHECK(signature(form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(signature(form({{0, 0, 1}, {0, 1, 0}, {1, 0, 1}})) == 1);
  CHECK(det_sign(form({{0, 0, 1}, {0, 1, 0}, {1, 0, 1}})) == -1);

  auto sing = form({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(signature(sing) == 0);
  CHECK(inertia(sing).rank == 2);
  CHECK(det_sign(sing) == 0);

  CHECK(signature(form({{0, 0}, {0, 0}})) == 0);
  CHECK(inertia(form({{0, 0}, {0, 0}})).rank == 0);
  CHECK(det_sign(form({{0, 0}, {0, 0}})) == 0);

  CHECK(signature(form({{-5}})) == -1);
  CHECK(det_sign(form({{-5}})) == -1);

  auto empty = SymBilinearForm(alg_dim(0), {});
  CHECK(signature(empty) == 0);
  CHECK(det_sign(empty) == 1);
}

TEST_CASE("inertia bounds and parity on random matrices") {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 200; ++it) {
    std::size_t d = 1 + std::size_t(it % 5);
    auto f = random_symmetric(rng, d);
    auto in = inertia(f);
    CHECK(in.rank <= d);
    CHECK(std::size_t(std::abs(in.signature)) <= in.rank);
    CHECK((in.signature - int(in.rank)) % 2 == 0);
    CHECK((det_sign(f) == 0) == (in.rank < d));
  }
}

TEST_CASE("gram matrices are positive semidefinite") {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int it = 0; it < 100; ++it) {
    const std::size_t d = 2 + std::size_t(it % 3);
    std::vector<std::vector<int>> A(d, std::vector<int>(d));
    for (auto& row : A)
      for (auto& v : row) v = c(rng);
    std::vector<Rational> m(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Rational s(0);
        for (std::size_t k = 0; k < d; ++k) s += A[k][i] * A[k][j];
        m[i * d + j] = s;
      }
    auto in = inertia(SymBilinearForm(alg_dim(d), std::move(m)));
    CHECK(in.signature == int(in.rank)); // A^T A has no negative directions
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 200; ++it) {
    auto f = random_symmetric(rng, 2 + std::size_t(it % 4));
    auto g = random_congruence(rng, f);
    CHECK(signature(f) == signature(g));
    CHECK(inertia(f).rank == inertia(g).rank);
    CHECK(det_sign(f) == det_sign(g));
  }
}

TEST_CASE("inertia agrees with the leading-minor rule when it applies") {
  // Jacobi: if every leading principal minor is nonzero, the number of
  // negative squares equals the sign changes in 1, D1, ..., Dd.
  std::mt19937_64 rng(54);
  std::vector<AlgebraPtr> algs;
  for (std::size_t k = 0; k <= 5; ++k) algs.push_back(alg_dim(k));
  int used = 0;
  for (int it = 0; it < 400 && used < 200; ++it) {
    const std::size_t d = 2 + std::size_t(it % 4);
    auto f = random_symmetric(rng, d);
    std::vector<int> minor_signs{1};
    bool ok = true;
    for (std::size_t k = 1; k <= d && ok; ++k) {
      std::vector<Rational> sub(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = f.at(i, j);
      int s = det_sign(SymBilinearForm(algs[k], std::move(sub)));
      if (s == 0) ok = false;
      minor_signs.push_back(s);
    }
    if (!ok) continue;
    ++used;
    int changes = 0;
    for (std::size_t k = 1; k <= d; ++k)
      if (minor_signs[k] != minor_signs[k - 1]) ++changes;
    CHECK(signature(f) == int(d) - 2 * changes);
  }
  CHECK(used >= 200);
}

TEST_CASE("forms from a functional on Q[x]/(x^3 - x)") {
  auto R = VarRing::make({"x"});
  auto A = QuotientAlgebra::build(Ideal(R, {parse_polynomial("x^3 - x", R)}));
  Functional phi(A, {0, 0, 1});

  auto plain = build_form(A, phi);
  CHECK(plain.entries() == std::vector<Rational>{0, 0, 1, 0, 1, 0, 1, 0, 1});

  // weight w = x: phi(x e_i e_j); x kills the column of the zero at 0
  auto wf = build_form(A, phi, parse_polynomial("x", R));
  CHECK(wf.entries() == std::vector<Rational>{0, 1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(det_sign(wf) == 0); // u = x vanishes at a zero of x^3 - x

  auto B = alg_dim(3);
  CHECK_THROWS_AS(build_form(B, phi), Error);
}

TEST_CASE("asymmetric input is rejected") {
  CHECK_THROWS_AS(SymBilinearForm(alg_dim(2), {Rational(0), Rational(1), Rational(2), Rational(0)}),
                  Error);
  CHECK_THROWS_AS(SymBilinearForm(alg_dim(2), {Rational(1)}), Error);
}
