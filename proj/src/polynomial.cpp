#include "topdeg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "topdeg/errors.hpp"

namespace topdeg {

namespace {

// Canonical term order for storage: degrevlex, descending.
const MonomialOrder kCanonical = MonomialOrder::degrevlex();

bool canon_desc(const Term& a, const Term& b) {
  return kCanonical.cmp(a.mono, b.mono) > 0;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) fail(ErrorKind::RingMismatch, "polynomials over different rings");
}

} // namespace

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(p.ring_->size()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) fail(ErrorKind::Validation, "variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::var(ring->size(), index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational c) {
  if (m.nvars() != ring->size()) fail(ErrorKind::Validation, "monomial/ring size mismatch");
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != ring->size())
      fail(ErrorKind::Validation, "term/ring size mismatch");
  std::sort(terms.begin(), terms.end(), canon_desc);
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, long(t.mono.degree()));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kCanonical.cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) merged.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint16_t e = t.mono.exp(var);
    if (e == 0) continue;
    auto exps = t.mono.exponents();
    exps[var] = std::uint16_t(e - 1);
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  return from_terms(ring_, std::move(out));
}

double Polynomial::eval(std::span<const double> point) const {
  if (point.size() != ring_->size()) fail(ErrorKind::Validation, "eval: wrong point size");
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.get_d();
    for (std::size_t i = 0; i < point.size(); ++i)
      for (std::uint16_t k = 0; k < t.mono.exp(i); ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) fail(ErrorKind::Validation, "eval: wrong point size");
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (std::uint16_t k = 0; k < t.mono.exp(i); ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool print_coeff = (c != 1) || t.mono.is_one();
    if (print_coeff) os << to_string(c);
    bool need_star = print_coeff;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      std::uint16_t e = t.mono.exp(i);
      if (e == 0) continue;
      if (need_star) os << "*";
      os << ring_->name(i);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      std::span<const Polynomial> images) {
  if (images.size() != p.ring()->size())
    fail(ErrorKind::Validation, "substitute: one image per variable required");
  for (const auto& im : images)
    if (!same_ring(im.ring(), target))
      fail(ErrorKind::RingMismatch, "substitute: image in wrong ring");

  std::vector<std::vector<Polynomial>> powers(images.size());
  auto image_pow = [&](std::size_t i, std::uint16_t e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };

  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.exp(i)) prod *= image_pow(i, t.mono.exp(i));
    result += prod;
  }
  return result;
}

Polynomial embed(const Polynomial& p, const RingPtr& target) {
  const auto& src = *p.ring();
  std::vector<std::size_t> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto idx = target->index(src.name(i));
    if (!idx) fail(ErrorKind::RingMismatch, "embed: target ring lacks '" + src.name(i) + "'");
    where[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    std::vector<std::uint16_t> exps(target->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) exps[where[i]] = t.mono.exp(i);
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial prime_copy(const Polynomial& h, const RingPtr& doubled) {
  std::size_t n = h.ring()->size();
  if (doubled->size() != 2 * n)
    fail(ErrorKind::RingMismatch, "prime_copy: not a doubling of the base ring");
  std::vector<Term> out;
  out.reserve(h.term_count());
  for (const auto& t : h.terms()) {
    std::vector<std::uint16_t> exps(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) exps[n + i] = t.mono.exp(i);
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(doubled, std::move(out));
}

Polynomial divided_difference(const Polynomial& h, std::size_t j,
                              const RingPtr& doubled) {
  std::size_t n = h.ring()->size();
  if (j >= n) fail(ErrorKind::Validation, "divided_difference: variable index out of range");
  if (doubled->size() != 2 * n)
    fail(ErrorKind::RingMismatch, "divided_difference: not a doubling of the base ring");

  // h with the first `primed` variables replaced by their primed copies.
  auto mixed = [&](std::size_t primed) {
    std::vector<Term> out;
    out.reserve(h.term_count());
    for (const auto& t : h.terms()) {
      std::vector<std::uint16_t> exps(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (i < primed)
          exps[n + i] = t.mono.exp(i);
        else
          exps[i] = t.mono.exp(i);
      }
      out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(doubled, std::move(out));
  };

  Polynomial numerator = mixed(j) - mixed(j + 1);
  Polynomial divisor = Polynomial::variable(doubled, j) - Polynomial::variable(doubled, n + j);
  return exact_divide(numerator, divisor, j);
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d, std::size_t var) {
  require_same_ring(p.ring(), d.ring());
  // d must be x_var + r with r free of x_var.
  bool saw_var = false;
  for (const auto& t : d.terms()) {
    if (t.mono.exp(var) == 0) continue;
    if (saw_var || t.mono.exp(var) != 1 || t.mono.degree() != 1 || t.coeff != 1)
      fail(ErrorKind::Validation, "exact_divide: divisor not monic linear in the variable");
    saw_var = true;
  }
  if (!saw_var) fail(ErrorKind::Validation, "exact_divide: divisor free of the variable");

  Polynomial quotient(p.ring());
  Polynomial rem = p;
  while (!rem.is_zero()) {
    std::uint16_t k = 0;
    for (const auto& t : rem.terms()) k = std::max(k, t.mono.exp(var));
    if (k == 0) fail(ErrorKind::Validation, "exact_divide: nonzero remainder");
    // Top layer in x_var, with one power of x_var stripped.
    std::vector<Term> layer;
    for (const auto& t : rem.terms()) {
      if (t.mono.exp(var) != k) continue;
      auto exps = t.mono.exponents();
      exps[var] = std::uint16_t(k - 1);
      layer.push_back({Monomial(std::move(exps)), t.coeff});
    }
    Polynomial c = Polynomial::from_terms(p.ring(), std::move(layer));
    quotient += c;
    rem -= c * d;
  }
  return quotient;
}

} // namespace topdeg
