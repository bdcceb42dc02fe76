#pragma once

#include <span>

#include "topdeg/quotient_algebra.hpp"

namespace topdeg {

// Linear functional on A, stored as weights against the standard basis.
class Functional {
public:
  Functional() = default;
  Functional(AlgebraPtr A, std::vector<Rational> weights);

  const AlgebraPtr& algebra() const { return A_; }
  const std::vector<Rational>& weights() const { return w_; }
  Rational apply(const AlgElement& a) const;

private:
  AlgebraPtr A_;
  std::vector<Rational> w_;
};

// Image in A (x) A of det[T_ij], where T_ij is the divided difference of
// H[i] in variable j.  The determinant is expanded inside A (x) A by dynamic
// programming over column subsets (row r of the minor uses columns S,
// |S| = r+1), so every intermediate stays a d x d coordinate matrix.
TensorElement bezoutian_tensor(std::span<const Polynomial> H, const AlgebraPtr& A,
                               ExecPolicy policy = ExecPolicy::parallel);

// Rows of T as elements of A: writing T = sum t_ij e_i (x) e_j, the i-th
// dual basis element is ê_i = sum_j t_ij e_j.
std::vector<AlgElement> dual_basis(const TensorElement& T);

// The functional phi_T defined by expanding 1 = sum_i w_i ê_i over the dual
// basis and setting phi_T(sum_i f_i e_i) = sum_i f_i w_i; the weights solve
// t^T w = coords(1).  Throws SingularBezoutian if t is singular.
Functional trace_functional(const TensorElement& T);

} // namespace topdeg
