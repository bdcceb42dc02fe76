#include <chrono>
#include <cstdio>
#include <string>

#include "topdeg/bezoutian.hpp"
#include "topdeg/degree.hpp"
#include "topdeg/oracle.hpp"
#include "topdeg/parser.hpp"
#include "topdeg/problem_file.hpp"

// Times the three parallel kernels against their serial reference paths:
// multiplication-table fill, Bezoutian determinant expansion, oracle
// multi-start Newton.  Results must match exactly; timings are informative.
//
// Usage: bench_kernels [problem.imm]
// Without an argument a built-in radius-10 sphere immersion is used.

using namespace topdeg;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

ImmersionProblem builtin_problem() {
  RingPtr ring = VarRing::make({"x1", "x2", "x3"});
  ImmersionProblem ip;
  ip.ring = ring;
  ip.constraints = {parse_polynomial("x1^2 + x2^2 + x3^2 - 100", ring)};
  // Affine terms keep the doubled system zero-dimensional; a map of pure even
  // monomials would glue antipodes and leave a curve of off-diagonal solutions.
  ip.map = {parse_polynomial("2*x1*x2 + x2", ring), parse_polynomial("2*x1*x3 + 4*x3", ring),
            parse_polynomial("4*x3^2 + 5*x2", ring), parse_polynomial("5*x2^2 + 4*x3", ring)};
  ip.radius = 10.0;
  return ip;
}

bool same_table(const QuotientAlgebra& a, const QuotientAlgebra& b) {
  if (a.dim() != b.dim() || a.basis() != b.basis()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto ra = a.table(i, j), rb = b.table(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (ra[k] != rb[k]) return false;
    }
  return true;
}

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s %10.2f ms %10.2f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              match ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  try {
    ImmersionProblem ip =
        argc > 1 ? to_immersion(load_problem_file(argv[1])) : builtin_problem();
    DegreeProblem dp = build_H(ip);

    Ideal J(dp.ring, dp.map);
    Ideal I(dp.ring, dp.excluded);
    Ideal S = ideal_quotient(J, I);
    S.groebner_basis(); // not part of the timed kernels

    std::printf("%-28s %13s %13s %7s\n", "kernel", "serial", "parallel", "");

    auto t0 = std::chrono::steady_clock::now();
    AlgebraPtr As = QuotientAlgebra::build(S, ExecPolicy::serial);
    double table_s = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    AlgebraPtr Ap = QuotientAlgebra::build(S, ExecPolicy::parallel);
    double table_p = ms_since(t0);
    row("multiplication table", table_s, table_p, same_table(*As, *Ap));

    t0 = std::chrono::steady_clock::now();
    TensorElement Bs = bezoutian_tensor(dp.map, As, ExecPolicy::serial);
    double bez_s = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    TensorElement Bp = bezoutian_tensor(dp.map, As, ExecPolicy::parallel);
    double bez_p = ms_since(t0);
    row("bezoutian expansion", bez_s, bez_p, Bs == Bp);

    OracleConfig cfg;
    t0 = std::chrono::steady_clock::now();
    OracleResult rs = numeric_degree_sum(dp, cfg, ExecPolicy::serial);
    double orc_s = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    OracleResult rp = numeric_degree_sum(dp, cfg, ExecPolicy::parallel);
    double orc_p = ms_since(t0);
    bool orc_match = rs.sum == rp.sum && rs.zeros == rp.zeros && rs.regular == rp.regular;
    row("oracle multi-start", orc_s, orc_p, orc_match);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bench_kernels: %s\n", e.what());
    return 1;
  }
}
