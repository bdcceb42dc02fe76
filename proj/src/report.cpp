#include "topdeg/report.hpp"

#include <json.hpp>
#include <sstream>

#include "topdeg/errors.hpp"

namespace topdeg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json oracle_to_json(const OracleSummary& o) {
  ordered_json j;
  j["sum"] = o.sum;
  j["zeros"] = o.zeros;
  j["regular"] = o.regular;
  return j;
}

} // namespace

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["dim_A"] = r.dim_A;
  j["signature_phi_T"] = r.signature_phi_T;
  if (r.signature_psi_T) j["signature_psi_T"] = *r.signature_psi_T;
  if (r.det_sign_phi) j["det_sign_phi"] = *r.det_sign_phi;
  if (r.det_sign_psi) j["det_sign_psi"] = *r.det_sign_psi;
  if (r.intersection_number) j["intersection_number"] = *r.intersection_number;
  j["mod2"] = r.mod2;
  if (r.u_used) j["u_used"] = *r.u_used;
  j["assumption_checks"] = {{"finite_dim", r.assumption_checks.finite_dim},
                            {"comaximal", r.assumption_checks.comaximal}};
  if (r.oracle) j["oracle"] = oracle_to_json(*r.oracle);
  return j.dump();
}

Report report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::Parse, std::string("bad report JSON: ") + e.what());
  }
  try {
    Report r;
    r.kind = j.at("kind").get<std::string>();
    r.dim_A = j.at("dim_A").get<std::size_t>();
    r.signature_phi_T = j.at("signature_phi_T").get<int>();
    if (j.contains("signature_psi_T")) r.signature_psi_T = j["signature_psi_T"].get<int>();
    if (j.contains("det_sign_phi")) r.det_sign_phi = j["det_sign_phi"].get<int>();
    if (j.contains("det_sign_psi")) r.det_sign_psi = j["det_sign_psi"].get<int>();
    if (j.contains("intersection_number"))
      r.intersection_number = j["intersection_number"].get<long long>();
    r.mod2 = j.at("mod2").get<bool>();
    if (j.contains("u_used")) r.u_used = j["u_used"].get<std::string>();
    const auto& ac = j.at("assumption_checks");
    r.assumption_checks.finite_dim = ac.at("finite_dim").get<bool>();
    r.assumption_checks.comaximal = ac.at("comaximal").get<bool>();
    if (j.contains("oracle")) {
      OracleSummary o;
      const auto& jo = j["oracle"];
      o.sum = jo.at("sum").get<long long>();
      o.zeros = jo.at("zeros").get<std::vector<std::vector<double>>>();
      o.regular = jo.at("regular").get<bool>();
      r.oracle = std::move(o);
    }
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::Parse, std::string("bad report JSON: ") + e.what());
  }
}

bool report_equal(const Report& a, const Report& b) {
  return a.kind == b.kind && a.dim_A == b.dim_A &&
         a.signature_phi_T == b.signature_phi_T &&
         a.signature_psi_T == b.signature_psi_T && a.det_sign_phi == b.det_sign_phi &&
         a.det_sign_psi == b.det_sign_psi &&
         a.intersection_number == b.intersection_number && a.mod2 == b.mod2 &&
         a.u_used == b.u_used &&
         a.assumption_checks.finite_dim == b.assumption_checks.finite_dim &&
         a.assumption_checks.comaximal == b.assumption_checks.comaximal &&
         a.oracle == b.oracle;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << r.kind << " report\n";
  out << "  dim A:             " << r.dim_A << "\n";
  out << "  signature Phi_T:   " << r.signature_phi_T << "\n";
  if (r.signature_psi_T) out << "  signature Psi_T:   " << *r.signature_psi_T << "\n";
  if (r.det_sign_phi) out << "  sgn det Phi:       " << *r.det_sign_phi << "\n";
  if (r.det_sign_psi) out << "  sgn det Psi:       " << *r.det_sign_psi << "\n";
  if (r.u_used) out << "  u used:            " << *r.u_used << "\n";
  if (r.kind == "degree") {
    out << "  degree sum:        " << r.signature_phi_T << "\n";
    if (r.signature_psi_T)
      out << "  degree sum {u>0}:  " << (r.signature_phi_T + *r.signature_psi_T) / 2
          << "\n";
  }
  if (r.intersection_number) {
    if (r.mod2)
      out << "  intersection number (mod 2): " << *r.intersection_number << "\n";
    else
      out << "  intersection number: " << *r.intersection_number << "\n";
  }
  out << "  assumptions:       finite_dim="
      << (r.assumption_checks.finite_dim ? "ok" : "FAILED")
      << " comaximal=" << (r.assumption_checks.comaximal ? "ok" : "FAILED") << "\n";
  if (r.oracle) {
    out << "  oracle:            sum=" << r.oracle->sum
        << " zeros=" << r.oracle->zeros.size()
        << " regular=" << (r.oracle->regular ? "yes" : "no") << "\n";
  }
  return out.str();
}

} // namespace topdeg
