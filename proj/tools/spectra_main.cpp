#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "simspec/error.hpp"
#include "simspec/galois/field.hpp"
#include "simspec/rep/explicit_rep.hpp"
#include "simspec/roots/table1.hpp"
#include "simspec/spectra/checks.hpp"

using namespace simspec;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kMismatch = 3;

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool flat_array(const json& v) {
  return std::all_of(v.begin(), v.end(), [](const json& y) { return y.is_primitive(); });
}

bool flat_object(const json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items())
    if (x.is_structured() && !(x.is_array() && flat_array(x))) return false;
  return true;
}

/// One line per scalar leaf; objects of scalars inside arrays collapse to one line.
void render_text(const json& v, const std::string& path, std::ostream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_text(x, path.empty() ? k : path + "." + k, os);
  } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& y) { return y.is_primitive() || (y.is_array() && flat_array(y)); })) {
    os << path << ": " << v.dump() << "\n";
  } else if (v.is_array()) {
    if (v.empty()) os << path << ": []\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      if (flat_object(v[i])) {
        os << p << ":";
        for (const auto& [k, x] : v[i].items()) os << " " << k << "=" << scalar_text(x);
        os << "\n";
      } else {
        render_text(v[i], p, os);
      }
    }
  } else {
    os << path << ": " << scalar_text(v) << "\n";
  }
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  render_text(report, "", os);
  return os.str();
}

/// "3" is an integer element, "[1,0,1]" a coefficient list.
std::optional<json> element_arg(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return json::parse(s);
  } catch (const json::parse_error&) {
    fail(ErrorKind::ParseError, "cannot parse field element '" + s + "'");
  }
}

std::string q_group(const std::string& label) {
  if (label == "a2-adjoint") return "a2";
  if (label == "a3-2w2" || label == "a3-induced") return "a3";
  if (label == "d4-w2-char2") return "d4";
  fail(ErrorKind::UnknownCase, "unknown case '" + label + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple-spectrum verification for coset elements of groups of Lie type"};
  app.require_subcommand(1);
  std::string format = "json", out;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out, "Write the report to this file instead of stdout");
  app.fallthrough();

  std::uint64_t q = 0;
  std::string t1, t2, t3, case_label, family = "sigma_weyl_t", element;
  galois::Raw twist = 1;
  std::uint64_t budget = 0;
  std::size_t max_hits = 16;
  unsigned ext = 1;
  bool wide = false, no_wide = false;

  auto* table1 = app.add_subcommand("table1", "Embedded Table 1");
  table1->require_subcommand(1);
  auto* table1_verify = table1->add_subcommand("verify", "Cross-check zero-weight multiplicities against Freudenthal");

  std::string type;
  std::uint64_t p = 0;
  unsigned sigma_order = 2;
  auto* filter = app.add_subcommand("filter", "Apply the reduction rules to the Table 1 rows of one system");
  filter->add_option("--type", type, "Cartan type and rank, e.g. A3")->required();
  filter->add_option("--p", p, "Characteristic")->required();
  filter->add_option("--sigma-order", sigma_order, "Order of the graph automorphism")->required();

  auto* check = app.add_subcommand("check", "Verify one of the paper's cases");
  check->require_subcommand(1);
  auto add_q = [&](CLI::App* c) { c->add_option("--q", q, "Field size")->required(); };
  auto add_t = [&](CLI::App* c, bool third) {
    c->add_option("--t1", t1, "Torus coordinate");
    c->add_option("--t2", t2, "Torus coordinate");
    if (third) c->add_option("--t3", t3, "Torus coordinate");
  };
  auto add_twist = [&](CLI::App* c) { c->add_option("--twist", twist, "Scalar twist of sigma (packed field element)"); };
  auto* c_a2 = check->add_subcommand("a2", "Simple spectrum in SL3(q).2 on the adjoint module");
  add_q(c_a2), add_t(c_a2, false), add_twist(c_a2);
  auto* c_su3 = check->add_subcommand("su3", "Simple spectrum in SU3(q).2 on the adjoint module");
  add_q(c_su3), add_t(c_su3, false), add_twist(c_su3);
  auto* c_a3 = check->add_subcommand("a3-negative", "No simple spectrum on V(2 w2) for SL4(q).2");
  add_q(c_a3), add_twist(c_a3);
  c_a3->add_option("--budget", budget, "Maximum candidates (0 = all)");
  auto* c_ind = check->add_subcommand("induced-negative", "Induced module equivalence and negative claim");
  add_q(c_ind), add_twist(c_ind);
  auto* c_d4 = check->add_subcommand("d4", "Eq. (6) for D4(q).3 on the 26-dim module");
  add_q(c_d4), add_t(c_d4, true);
  c_d4->add_option("--budget", budget, "Maximum candidates of the wide search (0 = all)");
  c_d4->add_flag("--wide", wide, "Run the sigma*n_w*t search at any q");
  c_d4->add_flag("--no-wide", no_wide, "Skip the sigma*n_w*t search");
  auto* c_3d4 = check->add_subcommand("3d4", "Twisted family element of 3D4(q)");
  add_q(c_3d4);

  auto* search = app.add_subcommand("search", "Exhaustive search of a canonical family");
  search->add_option("--case", case_label, "Case label")->required();
  add_q(search), add_twist(search);
  search->add_option("--family", family, "sigma_t, sigma_weyl_t, inner_t or twisted_sigma_t");
  search->add_option("--budget", budget, "Maximum candidates (0 = all)");
  search->add_option("--max-hits", max_hits, "Hits to list");

  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial of one element");
  spectrum->add_option("--case", case_label, "Case label")->required();
  add_q(spectrum), add_twist(spectrum);
  spectrum->add_option("--element", element, "Element JSON, or @file")->required();
  spectrum->add_option("--ext", ext, "Work over GF(q^ext)");

  auto* v0 = app.add_subcommand("v0", "Sigma on the zero-weight space of the D4 module");
  add_q(v0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    spectra::CheckOutcome result{nullptr, true};
    const spectra::TorusArgs targs{element_arg(t1), element_arg(t2), element_arg(t3)};
    const spectra::SearchOptions sopt{budget, max_hits, 0};
    if (table1_verify->parsed()) {
      result = spectra::check_table1();
    } else if (filter->parsed()) {
      if (type.size() < 2) fail(ErrorKind::InvalidType, "type must look like A3");
      auto sys = roots::build_root_system(type[0], static_cast<unsigned>(std::stoul(type.substr(1))));
      result.report = {{"type", type}, {"p", p}, {"sigma_order", sigma_order}, {"rows", roots::to_json(roots::theorem_case_filter(sys, p, sigma_order))}};
    } else if (c_a2->parsed()) {
      result = spectra::check_a2(q, targs, twist);
    } else if (c_su3->parsed()) {
      result = spectra::check_su3(q, targs, twist);
    } else if (c_a3->parsed()) {
      result = spectra::check_a3_negative(q, twist, sopt);
    } else if (c_ind->parsed()) {
      result = spectra::check_induced_negative(q, twist);
    } else if (c_d4->parsed()) {
      spectra::D4Options o{targs, std::nullopt, sopt};
      if (wide) o.wide = true;
      if (no_wide) o.wide = false;
      result = spectra::check_d4(q, o);
    } else if (c_3d4->parsed()) {
      result = spectra::check_3d4(q);
    } else if (search->parsed()) {
      spectra::require_q(q_group(case_label), q);
      const auto fam = spectra::parse_family(family);
      const std::uint64_t size = fam == spectra::Family::TwistedSigmaT ? q * q * q : q;
      const auto rep = rep::build_case(case_label, galois::field_of_size(size), twist);
      result.report = spectra::to_json(spectra::family_search(rep, q, fam, sopt));
    } else if (spectrum->parsed()) {
      spectra::require_q(q_group(case_label), q);
      std::uint64_t size = 1;
      for (unsigned i = 0; i < ext; ++i) size *= q;
      const auto rep = rep::build_case(case_label, galois::field_of_size(size), twist);
      std::string text = element;
      if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + text.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      json ej;
      try {
        ej = json::parse(text);
      } catch (const json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("malformed element JSON: ") + e.what());
      }
      if (!ej.contains("case")) ej["case"] = case_label;
      if (!ej.contains("q")) ej["q"] = q;
      result.report = spectra::to_json(spectra::verify_element(rep::element_from_json(ej, rep.field), rep));
    } else if (v0->parsed()) {
      result = spectra::check_v0(q);
    }

    const std::string text = render(result.report, format);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!(f << text)) fail(ErrorKind::InvalidArgument, "cannot write " + out);
    }
    return result.claim_holds ? kOk : kMismatch;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
