#include "topdeg/bezoutian.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "topdeg/errors.hpp"
#include "topdeg/runtime.hpp"

namespace topdeg {

Functional::Functional(AlgebraPtr A, std::vector<Rational> weights)
    : A_(std::move(A)), w_(std::move(weights)) {
  if (w_.size() != A_->dim())
    fail(ErrorKind::Validation, "functional weight vector length does not match dim A");
}

Rational Functional::apply(const AlgElement& a) const {
  if (a.algebra().get() != A_.get())
    fail(ErrorKind::AlgebraMismatch, "functional applied to an element of another algebra");
  Rational r(0);
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != 0 && a.coords()[i] != 0) r += w_[i] * a.coords()[i];
  return r;
}

namespace {

// Divided-difference matrix entries projected into A (x) A:
// E[i][j] = class of (H_i with the first j vars primed - first j+1 primed) / (x_j - x'_j).
std::vector<std::vector<TensorElement>> difference_matrix(std::span<const Polynomial> H,
                                                          const AlgebraPtr& A) {
  const std::size_t n = A->ring()->size();
  if (H.size() != n)
    fail(ErrorKind::Validation, "need exactly one polynomial per variable");
  for (const auto& h : H)
    if (!same_ring(h.ring(), A->ring()))
      fail(ErrorKind::RingMismatch, "matrix entries over a different ring");
  RingPtr doubled = doubled_ring(A->ring());
  std::vector<std::vector<TensorElement>> E(n, std::vector<TensorElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      E[i][j] = project_tensor(divided_difference(H[i], j, doubled), A);
  return E;
}

// Laplace expansion of D[S] along its last row (row |S|-1, columns S).
TensorElement expand_last_row(std::uint32_t mask,
                              const std::vector<std::vector<TensorElement>>& E,
                              const std::vector<TensorElement>& sub_of, const AlgebraPtr& A) {
  const std::size_t row = std::size_t(std::popcount(mask)) - 1;
  TensorElement acc = TensorElement::zero(A);
  std::size_t col_pos = 0;
  for (std::uint32_t t = 0; t < 32; ++t) {
    if (!(mask & (1u << t))) continue;
    const TensorElement& sub = sub_of[mask ^ (1u << t)];
    if (!sub.is_zero() && !E[row][t].is_zero()) {
      TensorElement term = tensor_mul(E[row][t], sub);
      if ((row + col_pos) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    ++col_pos;
  }
  return acc;
}

// Serial reference: top-down recursion with memoization.  Kept deliberately
// independent of the layered scheme below; the two must agree bit for bit.
class RecursiveExpansion {
public:
  RecursiveExpansion(const std::vector<std::vector<TensorElement>>& E, AlgebraPtr A)
      : E_(E), A_(std::move(A)) {}

  const TensorElement& at(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    TensorElement v;
    if (mask == 0) {
      v = TensorElement::one(A_);
    } else {
      const std::size_t row = std::size_t(std::popcount(mask)) - 1;
      v = TensorElement::zero(A_);
      std::size_t col_pos = 0;
      for (std::uint32_t t = 0; t < 32; ++t) {
        if (!(mask & (1u << t))) continue;
        const TensorElement& sub = at(mask ^ (1u << t));
        if (!sub.is_zero() && !E_[row][t].is_zero()) {
          TensorElement term = tensor_mul(E_[row][t], sub);
          if ((row + col_pos) % 2 == 0)
            v += term;
          else
            v -= term;
        }
        ++col_pos;
      }
    }
    return memo_.emplace(mask, std::move(v)).first->second;
  }

private:
  const std::vector<std::vector<TensorElement>>& E_;
  AlgebraPtr A_;
  std::unordered_map<std::uint32_t, TensorElement> memo_;
};

} // namespace

TensorElement bezoutian_tensor(std::span<const Polynomial> H, const AlgebraPtr& A,
                               ExecPolicy policy) {
  const std::size_t n = A->ring()->size();
  if (n > 24) fail(ErrorKind::Validation, "too many variables for determinant expansion");
  auto E = difference_matrix(H, A);
  if (A->dim() == 0) return TensorElement::zero(A);
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

  if (policy == ExecPolicy::serial) {
    RecursiveExpansion rec(E, A);
    return rec.at(full);
  }

  // Layer r holds the minors of the first r rows; each entry of a layer only
  // needs the previous one, so a layer's subsets fill independently.
  std::vector<std::vector<std::uint32_t>> layers(n + 1);
  for (std::uint32_t m = 0; m <= full; ++m)
    layers[std::size_t(std::popcount(m))].push_back(m);

  std::vector<TensorElement> prev(full + 1), cur(full + 1);
  prev[0] = TensorElement::one(A);
  for (std::size_t r = 1; r <= n; ++r) {
    check_deadline();
    const auto& layer = layers[r];
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t k = 0; k < std::int64_t(layer.size()); ++k)
      cur[layer[k]] = expand_last_row(layer[k], E, prev, A);
    std::swap(prev, cur);
  }
  return prev[full];
}

std::vector<AlgElement> dual_basis(const TensorElement& T) {
  const AlgebraPtr& A = T.algebra();
  const std::size_t d = T.dim();
  std::vector<AlgElement> rows;
  rows.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = T.entry(i, j);
    rows.emplace_back(A, std::move(c));
  }
  return rows;
}

Functional trace_functional(const TensorElement& T) {
  const AlgebraPtr& A = T.algebra();
  const std::size_t d = T.dim();
  if (d == 0) return Functional(A, {});

  // Solve t^T w = coords(1) by exact Gauss-Jordan elimination; the augmented
  // system is M[j][i] = t_ij, rhs = e_1.
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
  std::vector<Rational> rhs(d, Rational(0));
  rhs[0] = 1;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) M[j][i] = T.entry(i, j);

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && M[piv][col] == 0) ++piv;
    if (piv == d)
      fail(ErrorKind::SingularBezoutian,
           "bezoutian coordinate matrix is singular; cannot form the dual trace");
    std::swap(M[col], M[piv]);
    std::swap(rhs[col], rhs[piv]);
    const Rational p = M[col][col];
    for (std::size_t i = col; i < d; ++i) M[col][i] /= p;
    rhs[col] /= p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || M[r][col] == 0) continue;
      const Rational f = M[r][col];
      for (std::size_t i = col; i < d; ++i) M[r][i] -= f * M[col][i];
      rhs[r] -= f * rhs[col];
    }
  }
  return Functional(A, std::move(rhs));
}

} // namespace topdeg
