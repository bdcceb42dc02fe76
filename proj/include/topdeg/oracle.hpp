#pragma once

#include "topdeg/degree.hpp"

namespace topdeg {

// The only module that touches floating point.  It cross-checks the symbolic
// pipeline and never feeds results back into it.
struct OracleConfig {
  double box = 4.0;            // half-width of the start box, scaled by radius
  int starts = 2000;           // Newton starting points
  double tol = 1e-12;          // residual accepted as a zero
  // The merge radius and singularity floor are sized for multiple zeros: a
  // zero of multiplicity k stalls Newton at |x| ~ tol^(1/k), so the cluster
  // (width ~2e-4 at k = 3) must merge and its ~k tol^((k-1)/k) Jacobian
  // determinant must fall below the floor, or the run would look regular.
  double dedupe = 1e-3;        // merge radius; also the off-V(I) threshold
  double floor = 1e-5;         // |det DH| below this marks the run irregular
  std::uint64_t seed = 1;
};

struct OracleResult {
  long long sum = 0;                    // sum of sgn det DH over kept zeros
  std::vector<std::vector<double>> zeros; // sorted lexicographically
  std::vector<int> degrees;             // sgn det DH per zero
  bool regular = true;                  // false if any kept zero is near-singular
};

// Multi-start Newton over dp.map; converged points are deduplicated, points
// on V(I) (every excluded generator within cfg.dedupe) are discarded, and the
// survivors contribute the sign of the Jacobian determinant.
OracleResult numeric_degree_sum(const DegreeProblem& dp, const OracleConfig& cfg = {},
                                ExecPolicy policy = ExecPolicy::parallel);

} // namespace topdeg
