#include "simspec/rep/membership.hpp"

#include "simspec/error.hpp"
#include "simspec/galois/serialize.hpp"
#include "simspec/rep/chevalley.hpp"

namespace simspec::rep {

namespace {

std::string name(const char* base, std::size_t i) { return std::string(base) + std::to_string(i + 1); }

void record(MembershipResult& r, bool ok, const std::string& identity) {
  r.certificate.push_back(identity + (ok ? ": holds" : ": FAILS"));
  r.member = r.member && ok;
}

}  // namespace

std::vector<WeylRep> weyl_representatives(const std::string& group, Field f) {
  if (group == "a2") {
    return {{"1", Matrix::identity(f, 3)}, {"nw", Matrix::from_ints(f, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, -1})}};
  }
  if (group == "a3") {
    return {{"1", Matrix::identity(f, 4)},
            {"nw1", Matrix::from_ints(f, 4, 4, {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1})},
            {"nw2", Matrix::from_ints(f, 4, 4, {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0})}};
  }
  if (group == "d4") return build_d4_char2(f).rep.weyl;
  fail(ErrorKind::UnknownCase, "no Weyl representatives for '" + group + "'");
}

MembershipResult membership_check(const std::string& group, const ElementSpec& e) {
  MembershipResult r;
  r.member = true;
  const std::uint64_t q = e.q;
  const auto& t = e.torus;
  if (q < 2) fail(ErrorKind::InvalidArgument, "membership needs q");
  for (std::size_t i = 0; i < t.size(); ++i) record(r, !t[i].is_zero(), name("t", i) + " != 0");
  if (!r.member) return r;
  if (group == "sl3" || group == "su3") {
    if (t.size() != 2) fail(ErrorKind::DimensionMismatch, group + " torus has 2 coordinates");
    std::vector<galois::FieldElement> diag = {t[0], t[1], (t[0] * t[1]).inverse()};
    record(r, diag[0] * diag[1] * diag[2] == t[0].field().one(), "det t = 1");
    for (std::size_t i = 0; i < 3; ++i) {
      if (group == "sl3") {
        record(r, galois::in_subfield(diag[i], q), name("d", i) + " in GF(" + std::to_string(q) + ")");
      } else {
        record(r, galois::in_subfield(diag[i], q * q), name("d", i) + " in GF(" + std::to_string(q * q) + ")");
        // transpose-inverse equals the conjugate: d^-1 = d^q
        record(r, galois::frobenius_power(diag[i], q) == diag[i].inverse(), name("d", i) + "^q = " + name("d", i) + "^-1");
      }
    }
    record(r, e.weyl_id == "1" || e.weyl_id == "nw", "n_w has entries in GF(p) and is fixed by sigma and Frobenius");
    return r;
  }
  if (group == "d4" || group == "3d4") {
    if (t.size() != 4) fail(ErrorKind::DimensionMismatch, group + " torus has 4 root values");
    if (group == "d4") {
      for (std::size_t i = 0; i < 4; ++i) record(r, galois::in_subfield(t[i], q), name("a", i) + " in GF(" + std::to_string(q) + ")");
    } else {
      const auto perm = roots::diagram_automorphism(roots::build_root_system('D', 4), 3).perm;
      for (std::size_t i = 0; i < 4; ++i)
        record(r, t[i] == galois::frobenius_power(t[perm[i]], q), name("a", i) + " = " + name("a", perm[i]) + "^q");
    }
    return r;
  }
  fail(ErrorKind::UnknownCase, "unknown membership case '" + group + "'");
}

nlohmann::json to_json(const ElementSpec& e) {
  nlohmann::json torus = nlohmann::json::array();
  for (const auto& x : e.torus) torus.push_back(galois::element_to_json(x));
  return {{"case", e.case_label}, {"sigma_power", e.sigma_power}, {"weyl_id", e.weyl_id}, {"torus", torus}, {"q", e.q}};
}

ElementSpec element_from_json(const nlohmann::json& j, Field f) {
  ElementSpec e;
  try {
    e.case_label = j.value("case", "");
    e.sigma_power = j.value("sigma_power", 1u);
    e.weyl_id = j.value("weyl_id", std::string("1"));
    e.q = j.value("q", std::uint64_t{0});
    for (const auto& x : j.at("torus")) e.torus.push_back(galois::element_from_json(f, x));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::ParseError, std::string("malformed element: ") + ex.what());
  }
  if (e.sigma_power > 1) fail(ErrorKind::ParseError, "sigma_power must be 0 or 1");
  return e;
}

}  // namespace simspec::rep
