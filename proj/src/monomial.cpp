#include "topdeg/monomial.hpp"

#include "topdeg/errors.hpp"

namespace topdeg {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exp_(std::move(exps)) {
  for (auto e : exp_) deg_ += e;
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint16_t k) {
  Monomial m(nvars);
  m.exp_[i] = k;
  m.deg_ = k;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.exp_.size());
  for (std::size_t i = 0; i < a.exp_.size(); ++i) {
    std::uint32_t s = std::uint32_t(a.exp_[i]) + b.exp_[i];
    if (s > 0xffff) fail(ErrorKind::Validation, "monomial exponent overflow");
    r.exp_[i] = std::uint16_t(s);
  }
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  if (deg_ > m.deg_) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > m.exp_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial r(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i)
    r.exp_[i] = std::uint16_t(exp_[i] - d.exp_[i]);
  r.deg_ = deg_ - d.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exp_.size());
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < a.exp_.size(); ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    deg += r.exp_[i];
  }
  r.deg_ = deg;
  return r;
}

bool Monomial::coprime(const Monomial& b) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] && b.exp_[i]) return false;
  return true;
}

int Monomial::cmp_exponents(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exp_.size(); ++i) {
    if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i] ? -1 : 1;
  }
  return 0;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponents.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace topdeg
