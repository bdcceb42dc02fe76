#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "topdeg/bezoutian.hpp"
#include "topdeg/degree.hpp"
#include "topdeg/forms.hpp"
#include "topdeg/oracle.hpp"
#include "topdeg/parser.hpp"
#include "topdeg/problem_file.hpp"
#include "topdeg/report.hpp"
#include "topdeg/runtime.hpp"

namespace {

using namespace topdeg;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InfiniteDimension:
    case ErrorKind::NotComaximal:
      return 2;
    case ErrorKind::DegenerateU:
    case ErrorKind::DegeneratePhiPsi:
    case ErrorKind::Genericity:
      return 3;
    case ErrorKind::Parse:
    case ErrorKind::Validation:
    case ErrorKind::RingMismatch:
    case ErrorKind::AlgebraMismatch:
      return 4;
    case ErrorKind::SingularBezoutian:
    case ErrorKind::OddSignature:
    case ErrorKind::NonIntegerResult:
    case ErrorKind::Internal:
      return 5;
    case ErrorKind::TimeBudget:
      return 6;
  }
  return 5;
}

struct Flags {
  std::string file;
  bool json = false;
  bool verify = false;
  std::uint64_t seed = 1;
  std::string u_text;
  bool dump_algebra = false;
  bool dump_bezoutian = false;
  bool dump_forms = false;
  int retries = 64;
  int time_budget = 0;

  bool any_dump() const { return dump_algebra || dump_bezoutian || dump_forms; }
};

std::string mono_str(const RingPtr& ring, const Monomial& m) {
  return Polynomial::monomial(ring, m, 1).str();
}

void print_algebra(std::ostream& os, const Assumptions& as) {
  const auto& A = *as.algebra;
  os << "== algebra ==\n";
  os << "dim A = " << A.dim() << "\n";
  os << "basis:";
  for (const auto& m : A.basis()) os << " " << mono_str(A.ring(), m);
  os << "\nquotient ideal reduced GB:\n";
  for (const auto& g : as.quotient_ideal.groebner_basis()) os << "  " << g.str() << "\n";
}

void print_bezoutian(std::ostream& os, const TensorElement& T) {
  const auto& A = *T.algebra();
  os << "== bezoutian ==\nT =";
  bool any = false;
  for (std::size_t i = 0; i < T.dim(); ++i)
    for (std::size_t j = 0; j < T.dim(); ++j)
      if (T.entry(i, j) != 0) {
        os << (any ? "  +  " : " ") << "(" << to_string(T.entry(i, j)) << ")*["
           << mono_str(A.ring(), A.basis()[i]) << " (x) "
           << mono_str(A.ring(), A.basis()[j]) << "]";
        any = true;
      }
  if (!any) os << " 0";
  os << "\n";
}

void print_form(std::ostream& os, const std::string& name, const SymBilinearForm& F) {
  os << name << " =\n";
  for (std::size_t i = 0; i < F.dim(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < F.dim(); ++j) os << " " << to_string(F.at(i, j));
    os << " ]\n";
  }
  os << "signature(" << name << ") = " << signature(F) << "\n";
  os << "sgn det(" << name << ") = " << det_sign(F) << "\n";
}

// Dump flags recompute the requested intermediates; they do not alter the
// reported result.
void run_dumps(const Flags& fl, const DegreeProblem& dp, const PipelineOptions& opt) {
  Assumptions as = check_assumptions(dp, opt);
  if (fl.dump_algebra) print_algebra(std::cerr, as);
  if (!fl.dump_bezoutian && !fl.dump_forms) return;
  TensorElement B = bezoutian_tensor(dp.map, as.algebra, opt.exec);
  if (fl.dump_bezoutian) print_bezoutian(std::cerr, B);
  if (fl.dump_forms) {
    std::cerr << "== forms ==\n";
    Functional phi_T = trace_functional(B);
    SymBilinearForm phi_form = build_form(as.algebra, phi_T);
    print_form(std::cerr, "Phi_T", phi_form);
    std::optional<Polynomial> u = dp.halfspace;
    if (!u && opt.fixed_u) u = opt.fixed_u;
    if (u) {
      SymBilinearForm psi_form = build_form(as.algebra, phi_T, u);
      print_form(std::cerr, "Psi_T", psi_form);
    }
  }
}

OracleSummary run_oracle(const DegreeProblem& dp, std::uint64_t seed) {
  OracleConfig cfg;
  cfg.seed = seed;
  OracleResult res = numeric_degree_sum(dp, cfg);
  OracleSummary s;
  s.sum = res.sum;
  s.zeros = res.zeros;
  s.regular = res.regular;
  return s;
}

void emit(const Flags& fl, const Report& rep) {
  if (fl.json)
    std::cout << report_to_json(rep) << "\n";
  else
    std::cout << report_to_text(rep);
}

int run_immersion(const Flags& fl) {
  ProblemFile pf = load_problem_file(fl.file);
  ImmersionProblem ip = to_immersion(pf);

  PipelineOptions opt;
  opt.seed = fl.seed;
  opt.retries = fl.retries;
  if (!fl.u_text.empty()) {
    DegreeProblem hdp = build_H(ip);
    opt.fixed_u = parse_polynomial(fl.u_text, hdp.ring);
  }

  Report rep = intersection_number(ip, opt);
  if (fl.verify) rep.oracle = run_oracle(build_H(ip), fl.seed);
  if (fl.any_dump()) run_dumps(fl, build_H(ip), opt);
  emit(fl, rep);
  return 0;
}

int run_degree(const Flags& fl) {
  ProblemFile pf = load_problem_file(fl.file);
  DegreeProblem dp = to_degree(pf);

  PipelineOptions opt;
  opt.seed = fl.seed;
  opt.retries = fl.retries;
  if (!fl.u_text.empty()) dp.halfspace = parse_polynomial(fl.u_text, dp.ring);

  Report rep = degree_report(dp, opt);
  if (fl.verify) rep.oracle = run_oracle(dp, fl.seed);
  if (fl.any_dump()) run_dumps(fl, dp, opt);
  emit(fl, rep);
  return 0;
}

void add_common(CLI::App* sub, Flags& fl) {
  sub->add_option("file", fl.file, "problem file")->required();
  sub->add_flag("--json", fl.json, "emit a single JSON object on stdout");
  sub->add_flag("--verify", fl.verify, "attach a floating-point cross-check to the report");
  sub->add_option("--seed", fl.seed, "seed for random draws (u, phi, oracle starts)");
  sub->add_option("--u", fl.u_text, "half-space polynomial (overrides any u in the file)");
  sub->add_flag("--dump-algebra", fl.dump_algebra, "print quotient basis and GB to stderr");
  sub->add_flag("--dump-bezoutian", fl.dump_bezoutian, "print Bezoutian coordinates to stderr");
  sub->add_flag("--dump-forms", fl.dump_forms,
                "print form matrices, signatures, det signs to stderr");
  sub->add_option("--retries", fl.retries, "max (u, phi) draws in the odd-m search")
      ->check(CLI::PositiveNumber);
  sub->add_option("--time-budget", fl.time_budget, "abort with exit 6 after this many seconds")
      ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection numbers of polynomial immersions and "
               "sums of local topological degrees"};
  app.require_subcommand(1);
  Flags fl;
  CLI::App* imm = app.add_subcommand(
      "immersion", "Whitney self-intersection count of an immersion problem");
  add_common(imm, fl);
  CLI::App* deg = app.add_subcommand(
      "degree", "sum of local degrees of a square map away from V(I)");
  add_common(deg, fl);
  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<ScopedDeadline> deadline;
    if (fl.time_budget > 0) deadline.emplace(std::chrono::seconds(fl.time_budget));
    return imm->parsed() ? run_immersion(fl) : run_degree(fl);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}
