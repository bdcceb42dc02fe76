#include "topdeg/quotient_algebra.hpp"

#include <cstdint>

#include "topdeg/errors.hpp"

namespace topdeg {

namespace {

void require_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a.get() != b.get())
    fail(ErrorKind::AlgebraMismatch, "elements of different quotient algebras");
}

// NF coordinates of a polynomial whose normal form is already taken; all its
// monomials are standard by construction.
std::vector<Rational> coords_of_nf(const Polynomial& nf, const QuotientAlgebra& A) {
  std::vector<Rational> c(A.dim(), Rational(0));
  for (const auto& t : nf.terms()) {
    auto k = A.basis_index(t.mono);
    if (!k) fail(ErrorKind::Internal, "normal form left a non-standard monomial");
    c[*k] = t.coeff;
  }
  return c;
}

} // namespace

AlgebraPtr QuotientAlgebra::build(Ideal S, ExecPolicy policy) {
  auto sm = standard_monomials(S);
  if (!sm)
    fail(ErrorKind::InfiniteDimension,
         "quotient is not finite-dimensional over Q");
  std::shared_ptr<QuotientAlgebra> A(new QuotientAlgebra(std::move(S)));
  A->basis_ = std::move(*sm);
  for (std::size_t i = 0; i < A->basis_.size(); ++i) A->index_[A->basis_[i]] = i;
  A->fill_table(policy);
  return A;
}

std::optional<std::size_t> QuotientAlgebra::basis_index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Rational> QuotientAlgebra::table(std::size_t i, std::size_t j) const {
  const std::size_t d = basis_.size();
  return {table_.data() + (i * d + j) * d, d};
}

void QuotientAlgebra::fill_table(ExecPolicy policy) {
  const std::size_t d = basis_.size();
  table_.assign(d * d * d, Rational(0));
  if (d == 0) return;
  ideal_.groebner_basis(); // materialize before the parallel region

  [[maybe_unused]] const bool par = (policy == ExecPolicy::parallel);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (std::int64_t flat = 0; flat < std::int64_t(d * d); ++flat) {
    const std::size_t i = std::size_t(flat) / d, j = std::size_t(flat) % d;
    if (j < i) continue; // symmetric: filled together with (i, j)
    Monomial prod = basis_[i] * basis_[j];
    std::vector<Rational> c;
    if (auto k = basis_index(prod)) {
      c.assign(d, Rational(0));
      c[*k] = 1;
    } else {
      c = coords_of_nf(
          normal_form(Polynomial::monomial(ring(), std::move(prod), 1), ideal_), *this);
    }
    for (std::size_t k = 0; k < d; ++k) {
      table_[(i * d + j) * d + k] = c[k];
      if (i != j) table_[(j * d + i) * d + k] = c[k];
    }
  }
}

// ---------------------------------------------------------------------------
// AlgElement
// ---------------------------------------------------------------------------

AlgElement::AlgElement(AlgebraPtr A, std::vector<Rational> coords)
    : A_(std::move(A)), c_(std::move(coords)) {
  if (c_.size() != A_->dim())
    fail(ErrorKind::Validation, "coordinate vector length does not match dim A");
}

AlgElement AlgElement::zero(AlgebraPtr A) {
  std::vector<Rational> c(A->dim(), Rational(0));
  return AlgElement(std::move(A), std::move(c));
}

AlgElement AlgElement::one(AlgebraPtr A) {
  AlgElement e = zero(std::move(A));
  if (!e.c_.empty()) e.c_[0] = 1; // e_1 = 1 in any nonzero algebra
  return e;
}

AlgElement AlgElement::basis_element(AlgebraPtr A, std::size_t k) {
  AlgElement e = zero(std::move(A));
  e.c_.at(k) = 1;
  return e;
}

bool AlgElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  require_algebra(A_, o.A_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  require_algebra(A_, o.A_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgElement AlgElement::operator*(const Rational& s) const {
  AlgElement r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

bool AlgElement::operator==(const AlgElement& o) const {
  return A_.get() == o.A_.get() && c_ == o.c_;
}

// ---------------------------------------------------------------------------
// TensorElement
// ---------------------------------------------------------------------------

TensorElement::TensorElement(AlgebraPtr A, std::vector<Rational> coords)
    : A_(std::move(A)), d_(A_->dim()), c_(std::move(coords)) {
  if (c_.size() != d_ * d_)
    fail(ErrorKind::Validation, "coordinate matrix size does not match dim A");
}

TensorElement TensorElement::zero(AlgebraPtr A) {
  const std::size_t d = A->dim();
  std::vector<Rational> c(d * d, Rational(0));
  return TensorElement(std::move(A), std::move(c));
}

TensorElement TensorElement::one(AlgebraPtr A) {
  TensorElement t = zero(std::move(A));
  if (t.d_ > 0) t.c_[0] = 1; // 1 (x) 1
  return t;
}

bool TensorElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_algebra(A_, o.A_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_algebra(A_, o.A_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TensorElement TensorElement::operator*(const Rational& s) const {
  TensorElement r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return A_.get() == o.A_.get() && c_ == o.c_;
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

AlgElement project(const Polynomial& f, const AlgebraPtr& A) {
  if (!same_ring(f.ring(), A->ring()))
    fail(ErrorKind::RingMismatch, "projecting a polynomial over a different ring");
  return AlgElement(A, coords_of_nf(normal_form(f, A->ideal()), *A));
}

AlgElement alg_mul(const AlgElement& a, const AlgElement& b) {
  require_algebra(a.algebra(), b.algebra());
  const auto& A = *a.algebra();
  const std::size_t d = A.dim();
  std::vector<Rational> c(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords()[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coords()[j] == 0) continue;
      const Rational s = a.coords()[i] * b.coords()[j];
      auto row = A.table(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (row[k] != 0) c[k] += s * row[k];
    }
  }
  return AlgElement(a.algebra(), std::move(c));
}

// (sum_ij s_ij e_i(x)e_j) * (sum_pq t_pq e_p(x)e_q): contract one factor at a
// time through the multiplication table,
//   W[p][j][l] = sum_q t_pq Tab[j][q][l]   (right factors against t)
//   U[i][p][l] = sum_j s_ij W[p][j][l]     (fold s's right index)
//   R[k][l]   += Tab[i][p][k] U[i][p][l]   (left factors)
// which is ~3 d^4 rational multiply-adds instead of the naive d^6.
TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) {
  require_algebra(s.algebra(), t.algebra());
  const auto& A = *s.algebra();
  const std::size_t d = A.dim();
  if (d == 0) return TensorElement::zero(s.algebra());

  std::vector<Rational> W(d * d * d, Rational(0)); // [p][j][l]
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const Rational& tpq = t.entry(p, q);
      if (tpq == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        auto row = A.table(j, q);
        Rational* w = W.data() + (p * d + j) * d;
        for (std::size_t l = 0; l < d; ++l)
          if (row[l] != 0) w[l] += tpq * row[l];
      }
    }

  std::vector<Rational> U(d * d * d, Rational(0)); // [i][p][l]
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& sij = s.entry(i, j);
      if (sij == 0) continue;
      for (std::size_t p = 0; p < d; ++p) {
        const Rational* w = W.data() + (p * d + j) * d;
        Rational* u = U.data() + (i * d + p) * d;
        for (std::size_t l = 0; l < d; ++l)
          if (w[l] != 0) u[l] += sij * w[l];
      }
    }

  std::vector<Rational> R(d * d, Rational(0)); // [k][l]
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p) {
      const Rational* u = U.data() + (i * d + p) * d;
      bool any = false;
      for (std::size_t l = 0; l < d; ++l)
        if (u[l] != 0) {
          any = true;
          break;
        }
      if (!any) continue;
      auto row = A.table(i, p);
      for (std::size_t k = 0; k < d; ++k) {
        if (row[k] == 0) continue;
        Rational* r = R.data() + k * d;
        for (std::size_t l = 0; l < d; ++l)
          if (u[l] != 0) r[l] += row[k] * u[l];
      }
    }
  return TensorElement(s.algebra(), std::move(R));
}

TensorElement project_tensor(const Polynomial& p, const AlgebraPtr& A) {
  const RingPtr& base = A->ring();
  const std::size_t n = base->size();
  if (p.ring()->size() != 2 * n)
    fail(ErrorKind::RingMismatch, "project_tensor expects the doubled ring");
  const std::size_t d = A->dim();
  std::vector<Rational> R(d * d, Rational(0));

  // NF coordinates per distinct monomial of the base ring, memoized: the
  // divided-difference entries repeat factors heavily.
  std::unordered_map<Monomial, std::vector<Rational>, MonomialHash> memo;
  auto nf_coords = [&](const Monomial& m) -> const std::vector<Rational>& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<Rational> c;
    if (auto k = A->basis_index(m)) {
      c.assign(d, Rational(0));
      c[*k] = 1;
    } else {
      c = coords_of_nf(normal_form(Polynomial::monomial(base, m, 1), A->ideal()), *A);
    }
    return memo.emplace(m, std::move(c)).first->second;
  };

  for (const auto& t : p.terms()) {
    std::vector<std::uint16_t> lo(n), hi(n);
    for (std::size_t v = 0; v < n; ++v) {
      lo[v] = t.mono.exp(v);
      hi[v] = t.mono.exp(n + v);
    }
    const auto& cx = nf_coords(Monomial(std::move(lo)));
    const auto& cy = nf_coords(Monomial(std::move(hi)));
    for (std::size_t i = 0; i < d; ++i) {
      if (cx[i] == 0) continue;
      const Rational s = t.coeff * cx[i];
      Rational* r = R.data() + i * d;
      for (std::size_t j = 0; j < d; ++j)
        if (cy[j] != 0) r[j] += s * cy[j];
    }
  }
  return TensorElement(A, std::move(R));
}

} // namespace topdeg
