#pragma once

#include <optional>

#include "topdeg/bezoutian.hpp"

namespace topdeg {

// Symmetric bilinear form on A over the standard basis.
class SymBilinearForm {
public:
  SymBilinearForm() = default;
  SymBilinearForm(AlgebraPtr A, std::vector<Rational> entries); // d*d row-major

  const AlgebraPtr& algebra() const { return A_; }
  std::size_t dim() const { return d_; }
  const Rational& at(std::size_t i, std::size_t j) const { return m_[i * d_ + j]; }
  const std::vector<Rational>& entries() const { return m_; }

private:
  AlgebraPtr A_;
  std::size_t d_ = 0;
  std::vector<Rational> m_;
};

// M[i][j] = phi(w * e_i * e_j); omit w for the plain product form phi(e_i e_j).
SymBilinearForm build_form(const AlgebraPtr& A, const Functional& phi,
                           const std::optional<Polynomial>& w = std::nullopt);

struct Inertia {
  int signature = 0;     // #positive - #negative diagonal entries
  std::size_t rank = 0;
};

// Exact congruence diagonalization over Q: pick the first nonzero diagonal
// pivot and clear its row/column; if the diagonal is all zero but M is not,
// make a pivot with e_i <- e_i + e_j for some M[i][j] != 0.
Inertia inertia(const SymBilinearForm& M);
int signature(const SymBilinearForm& M);

// Sign of det M via fraction-free (Bareiss) elimination: -1, 0, or +1.
int det_sign(const SymBilinearForm& M);

} // namespace topdeg
