#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "topdeg/polynomial.hpp"

namespace topdeg {

// An ideal of Q[x1..xn] given by generators, with a monomial order attached
// and a lazily computed reduced Groebner basis.  The basis cache is shared by
// copies and is filled at most once even under concurrent first access.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens,
        MonomialOrder order = MonomialOrder::degrevlex());

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced Groebner basis: monic, mutually reduced, sorted by leading
  // monomial ascending.  Unique for (ideal, order).
  const std::vector<Polynomial>& groebner_basis() const;

private:
  struct GbCache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  MonomialOrder order_;
  std::shared_ptr<GbCache> cache_;
};

// Unique fully reduced remainder of f modulo I (no term of the result is
// divisible by a basis leading monomial); f - normal_form(f, I) lies in I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

// Intersection via a tag variable: eliminate t from t*I + (1-t)*J under a
// block(1) order on the extended ring (#t, x1..xn).
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

// Colon ideal J : I.  For each generator g of I, J : <g> = (J ∩ <g>)/g
// (principal intersection, then exact division); the results are then
// intersected.  Generators already in J contribute the unit ideal and are
// skipped.  I with no nonzero generator gives the unit ideal.
Ideal ideal_quotient(const Ideal& J, const Ideal& I);

bool is_unit_ideal(const Ideal& I);

// Monomials outside the leading-term ideal, sorted ascending under I's order
// (so the first entry is 1).  nullopt when the quotient is infinite-
// dimensional, i.e. some variable has no pure power among the leading terms.
std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I);

// Exact quotient p/g for p a known multiple of g (leading-term division under
// `order`); used to strip the principal factor after intersecting with <g>.
Polynomial exact_poly_divide(const Polynomial& p, const Polynomial& g,
                             const MonomialOrder& order);

// Buchberger criterion check: every S-polynomial of the reduced basis reduces
// to zero.  Diagnostic used by the test suite.
bool buchberger_certifies(const Ideal& I);

} // namespace topdeg
