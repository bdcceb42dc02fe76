#include "topdeg/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "topdeg/parser.hpp"

namespace topdeg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_var_name(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(head) && s[0] != '_') return false;
  for (char c : s.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

} // namespace

ProblemFile parse_problem_file(std::string_view text) {
  ProblemFile pf;
  bool have_vars = false;
  bool saw_immersion_tag = false, saw_degree_tag = false;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      fail_line(lineno, "expected 'tag: ...' (vars, f, g, h, i or u)");
    std::string tag(trim(line.substr(0, colon)));
    std::string_view rest = trim(line.substr(colon + 1));

    if (!have_vars) {
      if (tag != "vars")
        fail_line(lineno, "the first statement must be 'vars: name1 name2 ...'");
      std::istringstream names_in{std::string(rest)};
      std::vector<std::string> names;
      for (std::string w; names_in >> w;) {
        if (!valid_var_name(w))
          fail_line(lineno, "invalid variable name '" + w + "'");
        names.push_back(std::move(w));
      }
      if (names.empty()) fail_line(lineno, "vars: needs at least one name");
      try {
        pf.ring = VarRing::make(std::move(names));
      } catch (const Error& e) {
        fail_line(lineno, e.what());
      }
      have_vars = true;
      continue;
    }

    if (tag == "vars") fail_line(lineno, "duplicate vars: line");

    Polynomial p;
    if (tag == "f" || tag == "g" || tag == "h" || tag == "i" || tag == "u") {
      try {
        p = parse_polynomial(rest, pf.ring);
      } catch (const Error& e) {
        fail_line(lineno, e.what());
      }
    } else {
      fail_line(lineno, "unknown tag '" + tag + "'");
    }

    if (tag == "f" || tag == "g")
      saw_immersion_tag = true;
    else
      saw_degree_tag = true;
    if (saw_immersion_tag && saw_degree_tag)
      fail_line(lineno, "mixing immersion tags (f, g) with degree tags (h, i, u)");

    if (tag == "f") pf.f.push_back(std::move(p));
    else if (tag == "g") pf.g.push_back(std::move(p));
    else if (tag == "h") pf.h.push_back(std::move(p));
    else if (tag == "i") pf.i.push_back(std::move(p));
    else {
      if (pf.u) fail_line(lineno, "at most one u: line");
      pf.u = std::move(p);
    }
  }

  if (!have_vars) fail(ErrorKind::Parse, "empty problem file: no vars: line");
  if (!saw_immersion_tag && !saw_degree_tag)
    fail(ErrorKind::Parse, "no statements after vars:");

  const std::size_t nvars = pf.ring->size();
  if (saw_immersion_tag) {
    pf.kind = ProblemFile::Kind::immersion;
    if (pf.f.size() >= nvars)
      fail(ErrorKind::Validation, "need fewer constraints than variables");
    const std::size_t want = 2 * (nvars - pf.f.size());
    if (pf.g.size() != want)
      fail(ErrorKind::Validation,
           "need 2m = " + std::to_string(want) + " map components, got " +
               std::to_string(pf.g.size()));
  } else {
    pf.kind = ProblemFile::Kind::degree;
    if (pf.h.size() != nvars)
      fail(ErrorKind::Validation,
           "need one h: line per variable (" + std::to_string(nvars) + "), got " +
               std::to_string(pf.h.size()));
  }
  return pf;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_file(buf.str());
}

ImmersionProblem to_immersion(const ProblemFile& pf) {
  if (pf.kind != ProblemFile::Kind::immersion)
    fail(ErrorKind::Validation, "not an immersion problem file");
  ImmersionProblem ip;
  ip.ring = pf.ring;
  ip.constraints = pf.f;
  ip.map = pf.g;
  return ip;
}

DegreeProblem to_degree(const ProblemFile& pf) {
  if (pf.kind != ProblemFile::Kind::degree)
    fail(ErrorKind::Validation, "not a degree problem file");
  DegreeProblem dp;
  dp.ring = pf.ring;
  dp.map = pf.h;
  dp.excluded = pf.i;
  dp.halfspace = pf.u;
  return dp;
}

} // namespace topdeg
