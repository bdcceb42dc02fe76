#include "topdeg/forms.hpp"

#include "topdeg/errors.hpp"

namespace topdeg {

SymBilinearForm::SymBilinearForm(AlgebraPtr A, std::vector<Rational> entries)
    : A_(std::move(A)), d_(A_->dim()), m_(std::move(entries)) {
  if (m_.size() != d_ * d_)
    fail(ErrorKind::Validation, "form entry count does not match dim A");
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i + 1; j < d_; ++j)
      if (m_[i * d_ + j] != m_[j * d_ + i])
        fail(ErrorKind::Internal, "bilinear form is not symmetric");
}

SymBilinearForm build_form(const AlgebraPtr& A, const Functional& phi,
                           const std::optional<Polynomial>& w) {
  if (phi.algebra().get() != A.get())
    fail(ErrorKind::AlgebraMismatch, "functional over a different algebra");
  const std::size_t d = A->dim();

  // v_i = w * e_i (or e_i itself), then
  // P0[l][j] = phi(e_l * e_j) via the table, M[i][j] = sum_l v_i[l] P0[l][j].
  std::vector<AlgElement> v;
  v.reserve(d);
  if (w) {
    AlgElement wc = project(*w, A);
    for (std::size_t i = 0; i < d; ++i)
      v.push_back(alg_mul(wc, AlgElement::basis_element(A, i)));
  } else {
    for (std::size_t i = 0; i < d; ++i) v.push_back(AlgElement::basis_element(A, i));
  }

  std::vector<Rational> P0(d * d, Rational(0));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t j = 0; j < d; ++j) {
      auto row = A->table(l, j);
      Rational s(0);
      for (std::size_t k = 0; k < d; ++k)
        if (row[k] != 0 && phi.weights()[k] != 0) s += row[k] * phi.weights()[k];
      P0[l * d + j] = std::move(s);
    }

  std::vector<Rational> M(d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      const Rational& vil = v[i].coords()[l];
      if (vil == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (P0[l * d + j] != 0) M[i * d + j] += vil * P0[l * d + j];
    }
  return SymBilinearForm(A, std::move(M));
}

Inertia inertia(const SymBilinearForm& form) {
  const std::size_t d = form.dim();
  std::vector<Rational> M(form.entries());
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return M[i * d + j]; };

  Inertia out;
  std::vector<char> used(d, 0);
  for (std::size_t step = 0; step < d; ++step) {
    // Prefer a nonzero diagonal pivot among the unused indices.
    std::size_t p = d;
    for (std::size_t i = 0; i < d; ++i)
      if (!used[i] && at(i, i) != 0) {
        p = i;
        break;
      }
    if (p == d) {
      // All remaining diagonal entries vanish.  If the remaining block is
      // zero we are done; otherwise e_i <- e_i + e_j makes a pivot, since
      // the new (i,i) entry is 2 M[i][j] != 0 in characteristic zero.
      std::size_t bi = d, bj = d;
      for (std::size_t i = 0; i < d && bi == d; ++i) {
        if (used[i]) continue;
        for (std::size_t j = 0; j < d; ++j)
          if (!used[j] && j != i && at(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      }
      if (bi == d) break; // remaining block is zero
      for (std::size_t k = 0; k < d; ++k) at(bi, k) += at(bj, k);
      for (std::size_t k = 0; k < d; ++k) at(k, bi) += at(k, bj);
      p = bi;
    }
    const Rational piv = at(p, p);
    used[p] = 1;
    ++out.rank;
    out.signature += sign(piv) > 0 ? 1 : -1;
    // Congruence by E = I - sum_i (M[i][p]/piv) E_ip maps the unused block to
    // its Schur complement: M[i][j] -= M[i][p] M[p][j] / piv, symmetric by
    // construction.  Snapshot column p first, then wipe row/column p.
    std::vector<Rational> cp(d);
    for (std::size_t k = 0; k < d; ++k) cp[k] = at(k, p);
    for (std::size_t i = 0; i < d; ++i) {
      if (used[i] || cp[i] == 0) continue;
      const Rational f = cp[i] / piv;
      for (std::size_t j = 0; j < d; ++j)
        if (!used[j] && cp[j] != 0) at(i, j) -= f * cp[j];
    }
    for (std::size_t k = 0; k < d; ++k) {
      at(p, k) = 0;
      at(k, p) = 0;
    }
  }
  return out;
}

int signature(const SymBilinearForm& M) { return inertia(M).signature; }

int det_sign(const SymBilinearForm& form) {
  const std::size_t d = form.dim();
  if (d == 0) return 1; // empty product

  // Clear denominators row by row (sign of each multiplier is positive),
  // then run fraction-free Bareiss elimination over Z.
  std::vector<Integer> M(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    Integer den(1);
    for (std::size_t j = 0; j < d; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              form.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& q = form.at(i, j);
      M[i * d + j] = q.get_num() * (den / q.get_den());
    }
  }

  int sign_flips = 0;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (M[k * d + k] == 0) {
      std::size_t p = k + 1;
      while (p < d && M[p * d + k] == 0) ++p;
      if (p == d) return 0;
      for (std::size_t j = 0; j < d; ++j) std::swap(M[k * d + j], M[p * d + j]);
      ++sign_flips;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        Integer t = M[i * d + j] * M[k * d + k] - M[i * d + k] * M[k * d + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        M[i * d + j] = std::move(t);
      }
      M[i * d + k] = 0;
    }
    prev = M[k * d + k];
  }
  int s = sgn(M[(d - 1) * d + (d - 1)]);
  return (sign_flips % 2 == 0) ? s : -s;
}

} // namespace topdeg
