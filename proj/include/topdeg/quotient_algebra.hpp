#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "topdeg/exec.hpp"
#include "topdeg/ideal.hpp"

namespace topdeg {

class QuotientAlgebra;
using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

// Finite-dimensional quotient A = Q[x]/S with the standard-monomial basis
// e_1 = 1, e_2, ..., e_d (ascending in S's order) and an eager d x d
// multiplication table: table(i,j) = coordinates of NF(e_i * e_j).
class QuotientAlgebra {
public:
  // Throws InfiniteDimension unless S is zero-dimensional (or the unit
  // ideal, which yields the zero algebra d = 0).
  static AlgebraPtr build(Ideal S, ExecPolicy policy = ExecPolicy::parallel);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  std::optional<std::size_t> basis_index(const Monomial& m) const;
  // Coordinates of e_i * e_j in the basis.
  std::span<const Rational> table(std::size_t i, std::size_t j) const;

private:
  explicit QuotientAlgebra(Ideal S) : ideal_(std::move(S)) {}
  void fill_table(ExecPolicy policy);

  Ideal ideal_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<Rational> table_; // (i*d + j)*d + k, row-major, symmetric in i,j
};

// Element of A as a coordinate vector over the standard-monomial basis.
class AlgElement {
public:
  AlgElement() = default;
  AlgElement(AlgebraPtr A, std::vector<Rational> coords);
  static AlgElement zero(AlgebraPtr A);
  static AlgElement one(AlgebraPtr A);
  static AlgElement basis_element(AlgebraPtr A, std::size_t k);

  const AlgebraPtr& algebra() const { return A_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  AlgElement operator*(const Rational& s) const;
  bool operator==(const AlgElement& o) const;

private:
  AlgebraPtr A_;
  std::vector<Rational> c_;
};

// Element of A (x) A as a d x d coordinate matrix over e_i (x) e_j.  The
// tensor square is never materialized as a second polynomial ring; products
// use the multiplication table factorwise.
class TensorElement {
public:
  TensorElement() = default;
  TensorElement(AlgebraPtr A, std::vector<Rational> coords); // d*d row-major
  static TensorElement zero(AlgebraPtr A);
  static TensorElement one(AlgebraPtr A); // 1 (x) 1

  const AlgebraPtr& algebra() const { return A_; }
  std::size_t dim() const { return d_; }
  const Rational& entry(std::size_t i, std::size_t j) const { return c_[i * d_ + j]; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement operator*(const Rational& s) const;
  bool operator==(const TensorElement& o) const;

private:
  friend TensorElement tensor_mul(const TensorElement&, const TensorElement&);
  AlgebraPtr A_;
  std::size_t d_ = 0;
  std::vector<Rational> c_;
};

// Class of f in A: coordinates of NF(f) (f lives in A's ring).
AlgElement project(const Polynomial& f, const AlgebraPtr& A);

AlgElement alg_mul(const AlgElement& a, const AlgElement& b);
TensorElement tensor_mul(const TensorElement& s, const TensorElement& t);

// Class in A (x) A of a polynomial over the doubled ring: each term
// x^a * (x')^b maps to NF(x^a) (x) NF(x^b).
TensorElement project_tensor(const Polynomial& p, const AlgebraPtr& A);

} // namespace topdeg
