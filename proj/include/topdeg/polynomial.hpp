#pragma once

#include <span>
#include <string>
#include <vector>

#include "topdeg/monomial.hpp"
#include "topdeg/monomial_order.hpp"
#include "topdeg/rational.hpp"
#include "topdeg/varring.hpp"

namespace topdeg {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial over Q.  Terms are kept sorted descending
// under a fixed canonical order (degrevlex) regardless of the order any
// Groebner computation runs under; order-sensitive code re-sorts internally.
class Polynomial {
public:
  Polynomial() = default; // zero polynomial over a null ring; assign before use
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, Rational c);
  // Sums duplicates, drops zeros, sorts canonically.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Degree of the zero polynomial is -1 by convention.
  long total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;

  Polynomial derivative(std::size_t var) const;
  double eval(std::span<const double> point) const;
  Rational eval(std::span<const Rational> point) const;

  // Grammar-compatible rendering: explicit '*' and '^', "p/q" coefficients.
  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Image of p under x_i -> images[i]; images live in a common target ring.
Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      std::span<const Polynomial> images);

// p rewritten in `target`, matching variables by name (used to embed a
// polynomial into a ring that extends its own).
Polynomial embed(const Polynomial& p, const RingPtr& target);

// h(x') for h over R, result over doubled_ring(R): shifts every variable to
// its primed copy.
Polynomial prime_copy(const Polynomial& h, const RingPtr& doubled);

// Finite-difference quotient in the j-th variable (0-based), over the doubled
// ring: [h(x'_1..x'_{j-1}, x_j..x_n) - h(x'_1..x'_j, x_{j+1}..x_n)] / (x_j - x'_j).
// The numerator is divisible exactly; row i of the matrix [T_ij] used by
// bezoutian_tensor is divided_difference(H[i], j).
Polynomial divided_difference(const Polynomial& h, std::size_t j,
                              const RingPtr& doubled);

// Division of p by a divisor that is monic linear in variable `var`
// (d = x_var + r, r free of x_var); fails unless the remainder is zero.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d, std::size_t var);

} // namespace topdeg
