#include "topdeg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "topdeg/errors.hpp"

namespace topdeg {

namespace {

// LU with partial pivoting.  Returns false if a pivot collapses.  `det`
// receives the determinant (including swap signs) when requested.
bool lu_solve(std::vector<double>& A, std::vector<double>& b, std::size_t n,
              double* det = nullptr) {
  double dsign = 1.0, dprod = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(A[i * n + k]) > std::fabs(A[p * n + k])) p = i;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[k * n + j], A[p * n + j]);
      std::swap(b[k], b[p]);
      dsign = -dsign;
    }
    const double piv = A[k * n + k];
    if (std::fabs(piv) < 1e-300) {
      if (det) *det = 0.0;
      return false;
    }
    dprod *= piv;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = A[i * n + k] / piv;
      if (f == 0.0) continue;
      A[i * n + k] = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) A[i * n + j] -= f * A[k * n + j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= A[k * n + j] * b[j];
    b[k] = s / A[k * n + k];
  }
  if (det) *det = dsign * dprod;
  return true;
}

double det_only(std::vector<double> A, std::size_t n) {
  double dsign = 1.0, dprod = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(A[i * n + k]) > std::fabs(A[p * n + k])) p = i;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[k * n + j], A[p * n + j]);
      dsign = -dsign;
    }
    const double piv = A[k * n + k];
    if (piv == 0.0) return 0.0;
    dprod *= piv;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = A[i * n + k] / piv;
      for (std::size_t j = k + 1; j < n; ++j) A[i * n + j] -= f * A[k * n + j];
    }
  }
  return dsign * dprod;
}

} // namespace

OracleResult numeric_degree_sum(const DegreeProblem& dp, const OracleConfig& cfg,
                                ExecPolicy policy) {
  const std::size_t n = dp.ring->size();
  if (dp.map.size() != n)
    fail(ErrorKind::Validation, "square system required: one map component per variable");
  if (cfg.box <= 0 || cfg.starts <= 0 || cfg.tol <= 0 || cfg.dedupe <= 0 || cfg.floor <= 0)
    fail(ErrorKind::Validation, "oracle configuration values must be positive");

  std::vector<std::vector<Polynomial>> jac(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v) jac[i].push_back(dp.map[i].derivative(v));
  std::vector<Polynomial> excluded;
  for (const auto& g : dp.excluded)
    if (!g.is_zero()) excluded.push_back(g);

  // All seeds are drawn up front so the result is independent of how the
  // starts are scheduled across threads.
  const double half = cfg.box * std::max(1.0, dp.radius.value_or(1.0));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coord(-half, half);
  std::vector<double> seeds(std::size_t(cfg.starts) * n);
  for (auto& s : seeds) s = coord(rng);

  std::vector<std::optional<std::vector<double>>> found(std::size_t(cfg.starts));

  [[maybe_unused]] const bool par = (policy == ExecPolicy::parallel);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (par)
#endif
  for (std::int64_t s = 0; s < std::int64_t(cfg.starts); ++s) {
    std::vector<double> x(seeds.begin() + s * std::int64_t(n),
                          seeds.begin() + (s + 1) * std::int64_t(n));
    std::vector<double> F(n), J(n * n);
    for (int iter = 0; iter < 80; ++iter) {
      double resid = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        F[i] = dp.map[i].eval(std::span<const double>(x));
        resid = std::max(resid, std::fabs(F[i]));
      }
      if (resid < cfg.tol) {
        found[std::size_t(s)] = x;
        break;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v = 0; v < n; ++v)
          J[i * n + v] = jac[i][v].eval(std::span<const double>(x));
      std::vector<double> step = F;
      if (!lu_solve(J, step, n)) break;
      bool bad = false;
      for (std::size_t v = 0; v < n; ++v) {
        x[v] -= step[v];
        if (!std::isfinite(x[v]) || std::fabs(x[v]) > 1e9) bad = true;
      }
      if (bad) break;
    }
  }

  // Deterministic merge: lexicographic sort, then greedy radius dedupe.
  std::vector<std::vector<double>> pts;
  for (const auto& f : found)
    if (f) pts.push_back(*f);
  std::sort(pts.begin(), pts.end());
  std::vector<std::vector<double>> unique;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : unique) {
      double d2 = 0.0;
      for (std::size_t v = 0; v < n; ++v) d2 += (p[v] - q[v]) * (p[v] - q[v]);
      if (std::sqrt(d2) < cfg.dedupe) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(p);
  }

  OracleResult out;
  for (const auto& p : unique) {
    // On V(I) iff every excluded generator vanishes there (within tolerance);
    // no nonzero generators means nothing is excluded.
    if (!excluded.empty()) {
      bool on_vi = true;
      for (const auto& g : excluded)
        if (std::fabs(g.eval(std::span<const double>(p))) >= cfg.dedupe) {
          on_vi = false;
          break;
        }
      if (on_vi) continue;
    }
    std::vector<double> J(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t v = 0; v < n; ++v)
        J[i * n + v] = jac[i][v].eval(std::span<const double>(p));
    const double det = det_only(std::move(J), n);
    if (std::fabs(det) < cfg.floor) out.regular = false;
    const int deg = det > 0 ? 1 : det < 0 ? -1 : 0;
    out.zeros.push_back(p);
    out.degrees.push_back(deg);
    out.sum += deg;
  }
  return out;
}

} // namespace topdeg
