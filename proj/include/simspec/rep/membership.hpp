#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simspec/rep/explicit_rep.hpp"

namespace simspec::rep {

/// h = sigma^sigma_power * n_w * t.
struct ElementSpec {
  std::string case_label;
  unsigned sigma_power = 1;
  std::string weyl_id = "1";
  std::vector<FieldElement> torus;
  std::uint64_t q = 0;
};

struct MembershipResult {
  bool member = false;
  std::vector<std::string> certificate;
};

/// Cases "sl3", "su3", "d4", "3d4". Twisted D_4 uses a_i(t) = a_{sigma(i)}(t)^q.
MembershipResult membership_check(const std::string& group, const ElementSpec& e);

/// Identity plus the explicit n_w matrices ("a2", "a3") or the 192 signed
/// permutations ("d4"), as natural-module matrices for A types.
std::vector<WeylRep> weyl_representatives(const std::string& group, Field f);

nlohmann::json to_json(const ElementSpec& e);
ElementSpec element_from_json(const nlohmann::json& j, Field f);

}  // namespace simspec::rep
