#include "topdeg/degree.hpp"

#include <bit>
#include <random>

#include "topdeg/errors.hpp"

namespace topdeg {

namespace {

void validate_immersion(const ImmersionProblem& ip) {
  if (!ip.ring) fail(ErrorKind::Validation, "immersion problem has no ring");
  const std::size_t nm = ip.ring->size();
  const std::size_t n = ip.constraints.size();
  if (n >= nm)
    fail(ErrorKind::Validation, "need at least one free dimension: #constraints < #vars");
  if (ip.map.size() != 2 * (nm - n))
    fail(ErrorKind::Validation,
         "need 2m = " + std::to_string(2 * (nm - n)) + " map components, got " +
             std::to_string(ip.map.size()));
  for (const auto& f : ip.constraints)
    if (!same_ring(f.ring(), ip.ring))
      fail(ErrorKind::RingMismatch, "constraint over a different ring");
  for (const auto& g : ip.map)
    if (!same_ring(g.ring(), ip.ring))
      fail(ErrorKind::RingMismatch, "map component over a different ring");
}

} // namespace

DegreeProblem build_H(const ImmersionProblem& ip) {
  validate_immersion(ip);
  const std::size_t nm = ip.ring->size();

  std::vector<std::string> names = ip.ring->names();
  for (std::size_t k = 1; k <= nm; ++k) {
    std::string partner = "y" + std::to_string(k);
    if (ip.ring->index(partner))
      fail(ErrorKind::Validation,
           "variable name '" + partner + "' collides with the doubled copy");
    names.push_back(std::move(partner));
  }
  RingPtr hring = VarRing::make(std::move(names));

  DegreeProblem dp;
  dp.ring = hring;
  dp.radius = ip.radius;
  for (const auto& f : ip.constraints) dp.map.push_back(embed(f, hring));
  for (const auto& f : ip.constraints) dp.map.push_back(prime_copy(f, hring));
  for (const auto& g : ip.map)
    dp.map.push_back(embed(g, hring) - prime_copy(g, hring));

  for (const auto& f : ip.constraints) dp.excluded.push_back(embed(f, hring));
  for (const auto& f : ip.constraints) dp.excluded.push_back(prime_copy(f, hring));
  for (std::size_t i = 0; i < nm; ++i)
    dp.excluded.push_back(Polynomial::variable(hring, i) -
                          Polynomial::variable(hring, nm + i));
  return dp;
}

namespace {

void validate_degree(const DegreeProblem& dp) {
  if (!dp.ring) fail(ErrorKind::Validation, "degree problem has no ring");
  if (dp.map.size() != dp.ring->size())
    fail(ErrorKind::Validation, "square system required: one map component per variable");
  for (const auto& h : dp.map)
    if (!same_ring(h.ring(), dp.ring))
      fail(ErrorKind::RingMismatch, "map component over a different ring");
  for (const auto& g : dp.excluded)
    if (!same_ring(g.ring(), dp.ring))
      fail(ErrorKind::RingMismatch, "excluded-ideal generator over a different ring");
  if (dp.halfspace && !same_ring(dp.halfspace->ring(), dp.ring))
    fail(ErrorKind::RingMismatch, "halfspace polynomial over a different ring");
}

Ideal excluded_ideal(const DegreeProblem& dp, const MonomialOrder& ord) {
  bool any = false;
  for (const auto& g : dp.excluded)
    if (!g.is_zero()) any = true;
  if (!any) // exclude nothing: V(I) empty, i.e. I = <1>
    return Ideal(dp.ring, {Polynomial::constant(dp.ring, 1)}, ord);
  return Ideal(dp.ring, dp.excluded, ord);
}

// Shared tail of every pipeline: Bezoutian, dual trace, trace form.
struct Core {
  TensorElement bez;
  Functional phi_T;
  SymBilinearForm form_phi_T;
  int sig_phi_T = 0;
};

Core compute_core(const DegreeProblem& dp, const Assumptions& as,
                  const PipelineOptions& opt) {
  Core c;
  c.bez = bezoutian_tensor(dp.map, as.algebra, opt.exec);
  c.phi_T = trace_functional(c.bez);
  c.form_phi_T = build_form(as.algebra, c.phi_T);
  c.sig_phi_T = signature(c.form_phi_T);
  return c;
}

int mod2_bit(std::size_t dim, int det_phi, int det_psi) {
  const long v = long(dim) + 1 + (det_phi + det_psi) / 2;
  return int(((v % 2) + 2) % 2);
}

} // namespace

Assumptions check_assumptions(const DegreeProblem& dp, const PipelineOptions& opt) {
  validate_degree(dp);
  Ideal J(dp.ring, dp.map, opt.order);
  Ideal I = excluded_ideal(dp, opt.order);
  Ideal S = ideal_quotient(J, I);
  if (!standard_monomials(S))
    fail(ErrorKind::InfiniteDimension,
         "quotient ideal is not zero-dimensional: dim Q[x]/(J:I) is infinite");
  if (!is_unit_ideal(ideal_sum(S, I)))
    fail(ErrorKind::NotComaximal, "(J:I) + I is not the unit ideal");
  return Assumptions{S, QuotientAlgebra::build(S, opt.exec)};
}

int degree_sum(const DegreeProblem& dp, const PipelineOptions& opt) {
  return degree_sum(dp, check_assumptions(dp, opt), opt);
}

int degree_sum(const DegreeProblem& dp, const Assumptions& as,
               const PipelineOptions& opt) {
  return compute_core(dp, as, opt).sig_phi_T;
}

int degree_sum_halfspace(const DegreeProblem& dp, const PipelineOptions& opt) {
  return degree_sum_halfspace(dp, check_assumptions(dp, opt), opt);
}

int degree_sum_halfspace(const DegreeProblem& dp, const Assumptions& as,
                         const PipelineOptions& opt) {
  if (!dp.halfspace)
    fail(ErrorKind::Validation, "halfspace count needs a u polynomial");
  Core c = compute_core(dp, as, opt);
  SymBilinearForm psi = build_form(as.algebra, c.phi_T, dp.halfspace);
  if (det_sign(psi) == 0)
    fail(ErrorKind::DegenerateU, "u vanishes at a counted zero: det Psi_T = 0");
  const int s = c.sig_phi_T + signature(psi);
  if (s % 2 != 0)
    fail(ErrorKind::NonIntegerResult,
         "signature sum is odd; half-space count is not an integer");
  return s / 2;
}

int degree_mod2(const DegreeProblem& dp, const Functional& phi,
                const PipelineOptions& opt) {
  // The functional pins the algebra; verify it presents the quotient this
  // problem generates (same ring, same order, same reduced basis) and reuse
  // it, so the caller's weights stay meaningful.
  validate_degree(dp);
  const AlgebraPtr& A = phi.algebra();
  if (!A) fail(ErrorKind::AlgebraMismatch, "functional has no algebra");
  Ideal J(dp.ring, dp.map, opt.order);
  Ideal I = excluded_ideal(dp, opt.order);
  Ideal S = ideal_quotient(J, I);
  if (!same_ring(A->ring(), dp.ring) || !(A->ideal().order() == opt.order) ||
      A->ideal().groebner_basis() != S.groebner_basis())
    fail(ErrorKind::AlgebraMismatch,
         "functional's algebra is not the quotient algebra of this problem");
  if (!is_unit_ideal(ideal_sum(S, I)))
    fail(ErrorKind::NotComaximal, "(J:I) + I is not the unit ideal");
  return degree_mod2(dp, phi, Assumptions{std::move(S), A}, opt);
}

int degree_mod2(const DegreeProblem& dp, const Functional& phi,
                const Assumptions& as, const PipelineOptions& opt) {
  (void)opt;
  if (!dp.halfspace)
    fail(ErrorKind::Validation, "mod-2 count needs a u polynomial");
  if (phi.algebra().get() != as.algebra.get())
    fail(ErrorKind::AlgebraMismatch, "functional over a different algebra");
  SymBilinearForm psi = build_form(as.algebra, phi, dp.halfspace);
  const int dpsi = det_sign(psi);
  if (dpsi == 0)
    fail(ErrorKind::DegeneratePhiPsi, "det Psi = 0: the pair (u, phi) is degenerate");
  SymBilinearForm phi_form = build_form(as.algebra, phi);
  const int dphi = det_sign(phi_form);
  if (dphi == 0)
    fail(ErrorKind::Internal, "det Psi != 0 forces det Phi != 0");
  return mod2_bit(as.algebra->dim(), dphi, dpsi);
}

DegreeReport degree_report(const DegreeProblem& dp, const PipelineOptions& opt) {
  Assumptions as = check_assumptions(dp, opt);
  Core c = compute_core(dp, as, opt);
  Report r;
  r.kind = "degree";
  r.dim_A = as.algebra->dim();
  r.signature_phi_T = c.sig_phi_T;
  r.assumption_checks = {true, true};
  if (dp.halfspace) {
    SymBilinearForm psi = build_form(as.algebra, c.phi_T, dp.halfspace);
    if (det_sign(psi) == 0)
      fail(ErrorKind::DegenerateU, "u vanishes at a counted zero: det Psi_T = 0");
    r.signature_psi_T = signature(psi);
    if ((c.sig_phi_T + *r.signature_psi_T) % 2 != 0)
      fail(ErrorKind::NonIntegerResult,
           "signature sum is odd; half-space count is not an integer");
    r.u_used = dp.halfspace->str();
  }
  return r;
}

ImmersionReport intersection_number(const ImmersionProblem& ip,
                                    const PipelineOptions& opt) {
  const std::size_t m = ip.ring->size() - ip.constraints.size();
  DegreeProblem dp = build_H(ip);
  Assumptions as = check_assumptions(dp, opt);
  Core c = compute_core(dp, as, opt);

  Report r;
  r.kind = "immersion";
  r.dim_A = as.algebra->dim();
  r.signature_phi_T = c.sig_phi_T;
  r.assumption_checks = {true, true};

  if (m % 2 == 0) {
    if (c.sig_phi_T % 2 != 0)
      fail(ErrorKind::OddSignature,
           "signature of Phi_T is odd for even m; 2 I(g) = signature is violated");
    r.intersection_number = c.sig_phi_T / 2;
    r.mod2 = false;
    return r;
  }

  if (m == 1)
    fail(ErrorKind::Validation,
         "m = 1 has no mod-2 intersection class here; the construction needs m > 1");

  // Odd m > 1: a generic pair (u, phi) feeds the mod-2 formula; draw until
  // det Psi != 0 or the retry budget runs out.
  if (opt.fixed_u && !same_ring(opt.fixed_u->ring(), dp.ring))
    fail(ErrorKind::RingMismatch, "u polynomial over a different ring");
  const std::size_t nm = ip.ring->size();
  const std::size_t d = as.algebra->dim();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> ucoef(-5, 5);
  std::uniform_int_distribution<int> fweight(-9, 9);
  const int retries = opt.retries > 0 ? opt.retries : 1;

  for (int attempt = 0; attempt < retries; ++attempt) {
    Polynomial u(dp.ring);
    if (opt.fixed_u) {
      u = *opt.fixed_u;
    } else {
      for (std::size_t i = 0; i < nm; ++i) {
        int a = 0;
        while (a == 0) a = ucoef(rng);
        u += (Polynomial::variable(dp.ring, i) - Polynomial::variable(dp.ring, nm + i)) *
             Rational(a);
      }
    }
    std::vector<Rational> w(d);
    for (std::size_t k = 0; k < d; ++k) w[k] = fweight(rng);
    Functional phi(as.algebra, std::move(w));

    SymBilinearForm psi = build_form(as.algebra, phi, u);
    const int dpsi = det_sign(psi);
    if (dpsi == 0) continue;
    SymBilinearForm phi_form = build_form(as.algebra, phi);
    const int dphi = det_sign(phi_form);
    if (dphi == 0)
      fail(ErrorKind::Internal, "det Psi != 0 forces det Phi != 0");

    r.mod2 = true;
    r.intersection_number = mod2_bit(d, dphi, dpsi);
    r.det_sign_phi = dphi;
    r.det_sign_psi = dpsi;
    r.u_used = u.str();
    r.phi_used = phi.weights();
    return r;
  }
  fail(ErrorKind::Genericity,
       "no (u, phi) pair with det Psi != 0 after " + std::to_string(retries) +
           " retries");
}

namespace {

// det of a k x k polynomial matrix by last-row Laplace expansion with
// memoization over column subsets.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& M, const RingPtr& ring) {
  const std::size_t k = M.size();
  std::vector<Polynomial> prev(1u << k), cur(1u << k);
  prev[0] = Polynomial::constant(ring, 1);
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (std::size_t(std::popcount(mask)) != r) continue;
      Polynomial acc(ring);
      std::size_t col_pos = 0;
      for (std::uint32_t t = 0; t < k; ++t) {
        if (!(mask & (1u << t))) continue;
        const Polynomial& sub = prev[mask ^ (1u << t)];
        if (!sub.is_zero() && !M[r - 1][t].is_zero()) {
          Polynomial term = M[r - 1][t] * sub;
          if ((r - 1 + col_pos) % 2 == 0)
            acc += term;
          else
            acc -= term;
        }
        ++col_pos;
      }
      cur[mask] = std::move(acc);
    }
    std::swap(prev, cur);
  }
  return prev[(1u << k) - 1];
}

} // namespace

Certificate immersion_certificate(const ImmersionProblem& ip) {
  validate_immersion(ip);
  const std::size_t nm = ip.ring->size(); // minor size n+m
  if (nm > 16) fail(ErrorKind::Validation, "too many variables for minor expansion");

  // Stacked Jacobian rows: D(map) then D(constraints).
  std::vector<std::vector<Polynomial>> J;
  for (const auto& g : ip.map) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < nm; ++v) row.push_back(g.derivative(v));
    J.push_back(std::move(row));
  }
  for (const auto& f : ip.constraints) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < nm; ++v) row.push_back(f.derivative(v));
    J.push_back(std::move(row));
  }

  std::vector<Polynomial> gens = ip.constraints;
  // All (n+m) x (n+m) minors: choose n+m of the rows.
  std::vector<std::size_t> pick(nm);
  for (std::size_t i = 0; i < nm; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial>> sub;
    for (auto rI : pick) sub.push_back(J[rI]);
    Polynomial minor = poly_det(sub, ip.ring);
    if (!minor.is_zero()) gens.push_back(std::move(minor));
    // next row combination
    bool advanced = false;
    for (std::size_t i = nm; i-- > 0;) {
      if (pick[i] + (nm - i) < J.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < nm; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  Ideal C(ip.ring, std::move(gens));
  return is_unit_ideal(C) ? Certificate::CertifiedEverywhereComplex
                          : Certificate::Inconclusive;
}

} // namespace topdeg
