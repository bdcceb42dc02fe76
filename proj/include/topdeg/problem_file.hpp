#pragma once

#include <string_view>

#include "topdeg/degree.hpp"

namespace topdeg {

// Parsed problem file.  Grammar: '#' comments; first effective line
// "vars: n1 n2 ..."; then tagged polynomial lines.  Immersion files use
// "f:" (constraints) and "g:" (map components); degree files use "h:" (map),
// "i:" (excluded generators, optional) and "u:" (half-space weight, at most
// one).  Mixing the two tag families is an error.
struct ProblemFile {
  enum class Kind { immersion, degree };

  Kind kind;
  RingPtr ring;
  std::vector<Polynomial> f, g; // immersion
  std::vector<Polynomial> h, i; // degree
  std::optional<Polynomial> u;  // degree
};

ProblemFile parse_problem_file(std::string_view text);
ProblemFile load_problem_file(const std::string& path);

ImmersionProblem to_immersion(const ProblemFile& pf);
DegreeProblem to_degree(const ProblemFile& pf);

} // namespace topdeg
