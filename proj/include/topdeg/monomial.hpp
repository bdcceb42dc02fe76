#pragma once

#include <cstdint>
#include <vector>

namespace topdeg {

// Exponent vector with cached total degree.  The variable count is fixed by
// the ring the monomial belongs to; operations assume equal lengths (checked
// by the polynomial layer, not here).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);
  static Monomial var(std::size_t nvars, std::size_t i, std::uint16_t k = 1);

  std::size_t nvars() const { return exp_.size(); }
  std::uint16_t exp(std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  const std::vector<std::uint16_t>& exponents() const { return exp_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& m) const;     // *this | m
  Monomial divided_by(const Monomial& d) const; // exact; caller checks divides
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& b) const;     // no common variable

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

  // Order-free total order (plain lexicographic on exponents); used for
  // canonical tie-breaks, not as a monomial order.
  static int cmp_exponents(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

private:
  std::vector<std::uint16_t> exp_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace topdeg
