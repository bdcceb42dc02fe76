#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "topdeg/forms.hpp"

namespace topdeg {

// Square polynomial map H: R^n -> R^n whose local degrees are summed over
// the real zeros lying off the excluded variety V(I).
struct DegreeProblem {
  RingPtr ring;
  std::vector<Polynomial> map;      // n components over `ring`
  std::vector<Polynomial> excluded; // generators of I; empty = exclude nothing
  std::optional<Polynomial> halfspace; // weight u for one-sided counts
  std::optional<double> radius;     // numeric-check box hint only
};

// Immersion M^m -> R^{2m} with M = f^{-1}(0) in R^{n+m} (n constraints) and
// map components g_1..g_{2m}.
struct ImmersionProblem {
  RingPtr ring;                 // n+m variables
  std::vector<Polynomial> constraints; // f, n components
  std::vector<Polynomial> map;         // g, 2m components
  std::optional<double> radius;

  std::size_t n() const { return constraints.size(); }
  std::size_t m() const { return ring->size() - constraints.size(); }
};

struct PipelineOptions {
  MonomialOrder order = MonomialOrder::degrevlex();
  ExecPolicy exec = ExecPolicy::parallel;
  std::uint64_t seed = 1;
  int retries = 64;                  // draws of (u, phi) in the odd case
  std::optional<Polynomial> fixed_u; // pin u instead of drawing it
};

struct AssumptionChecks {
  bool finite_dim = false;
  bool comaximal = false;
};

struct OracleSummary {
  long long sum = 0;
  std::vector<std::vector<double>> zeros;
  bool regular = true;
  bool operator==(const OracleSummary&) const = default;
};

// Shared result record for both commands; optional fields are present only
// on the path that computes them.
struct Report {
  std::string kind;                    // "degree" | "immersion"
  std::size_t dim_A = 0;
  int signature_phi_T = 0;
  std::optional<int> signature_psi_T;  // half-space path
  std::optional<int> det_sign_phi;     // odd-codimension mod-2 path
  std::optional<int> det_sign_psi;
  std::optional<long long> intersection_number; // integer, or 0/1 when mod2
  bool mod2 = false;
  std::optional<std::string> u_used;
  std::optional<std::vector<Rational>> phi_used; // not serialized
  AssumptionChecks assumption_checks;
  std::optional<OracleSummary> oracle;
};
using DegreeReport = Report;
using ImmersionReport = Report;

// The doubled-variable degree problem of an immersion: ring (x, y) with
// partner names y1..y_{n+m}, map H = (f(x), f(y), g(x) - g(y)) and excluded
// ideal I = (f(x), f(y), x_i - y_i), so V(I) is the diagonal of M x M.
DegreeProblem build_H(const ImmersionProblem& ip);

struct Assumptions {
  Ideal quotient_ideal; // S = (H) : I
  AlgebraPtr algebra;
};

// S = (H) : I must be zero-dimensional and comaximal with I; throws
// InfiniteDimension / NotComaximal otherwise.
Assumptions check_assumptions(const DegreeProblem& dp,
                              const PipelineOptions& opt = {});

// Sum of local degrees of dp.map over the zeros off V(I): the signature of
// the Bezoutian trace form.  Overloads reuse precomputed assumptions.
int degree_sum(const DegreeProblem& dp, const PipelineOptions& opt = {});
int degree_sum(const DegreeProblem& dp, const Assumptions& as,
               const PipelineOptions& opt = {});

// Sum restricted to {u > 0}: (sig Phi_T + sig Psi_T)/2.  Throws DegenerateU
// when det Psi_T = 0 (u vanishes at a zero) and NonIntegerResult if the
// signature sum is odd.
int degree_sum_halfspace(const DegreeProblem& dp, const PipelineOptions& opt = {});
int degree_sum_halfspace(const DegreeProblem& dp, const Assumptions& as,
                         const PipelineOptions& opt = {});

// Parity of the degree sum over {u > 0} from an arbitrary functional phi:
// dim A + 1 + (sgn det Phi + sgn det Psi)/2 mod 2, valid when det Psi != 0.
int degree_mod2(const DegreeProblem& dp, const Functional& phi,
                const PipelineOptions& opt = {});
int degree_mod2(const DegreeProblem& dp, const Functional& phi,
                const Assumptions& as, const PipelineOptions& opt = {});

// Whitney-style self-intersection count of the immersion.  Even m: half the
// signature of Phi_T (OddSignature if that is odd).  Odd m > 1: the mod-2
// class from a generic pair (u, phi), drawn with the options' seed unless u
// is pinned; m = 1 is rejected.
ImmersionReport intersection_number(const ImmersionProblem& ip,
                                    const PipelineOptions& opt = {});

// Full degree-command pipeline (assumptions, signatures, optional halfspace).
DegreeReport degree_report(const DegreeProblem& dp, const PipelineOptions& opt = {});

enum class Certificate { CertifiedEverywhereComplex, Inconclusive };

// Unit-ideal test for (f, all maximal minors of the stacked Jacobian
// [Dg; Df]): certifies the map is an immersion at every complex point of the
// complexified M, or reports Inconclusive.
Certificate immersion_certificate(const ImmersionProblem& ip);

} // namespace topdeg
