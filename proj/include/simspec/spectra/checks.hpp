#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "simspec/spectra/spectra.hpp"

namespace simspec::spectra {

/// A finished verification case: the report and whether the paper's claim
/// survived it.
struct CheckOutcome {
  nlohmann::json report;
  bool claim_holds = false;
};

/// Throws InvalidArgument unless q suits the case ("a2", "su3", "a3", "d4", "3d4").
void require_q(const std::string& group, std::uint64_t q);

/// Torus coordinates given as field-element JSON values (integers or coefficient lists).
struct TorusArgs {
  std::optional<nlohmann::json> t1, t2, t3;
};

/// sigma * n_w * t on the adjoint module; t defaults to (primitive, 1).
CheckOutcome check_a2(std::uint64_t q, const TorusArgs& t = {}, galois::Raw twist = 1);
/// t = diag(t1, 1, t1^-1) with t1 of order q + 1, over GF(q^2).
CheckOutcome check_su3(std::uint64_t q, const TorusArgs& t = {}, galois::Raw twist = 1);
CheckOutcome check_a3_negative(std::uint64_t q, galois::Raw twist = 1, const SearchOptions& opt = {});
CheckOutcome check_induced_negative(std::uint64_t q, galois::Raw twist = 1);

struct D4Options {
  TorusArgs t;
  /// Run the sigma * n_w * t search; unset means only when q <= 16.
  std::optional<bool> wide;
  SearchOptions search;
};

/// sigma * t with epsilon-coordinates (t1, t2, t3, 1), default (xi, xi^2, 1).
CheckOutcome check_d4(std::uint64_t q, const D4Options& opt = {});
/// The twisted family element over GF(q^3).
CheckOutcome check_3d4(std::uint64_t q);
CheckOutcome check_v0(std::uint64_t q);
CheckOutcome check_table1();

/// The d3d family element and its branch data.
struct TwistedElement {
  ElementSpec element;
  FieldElement y, u;
  Branch branch;
};
TwistedElement twisted_family_element(std::uint64_t q, Field ambient);

}  // namespace simspec::spectra
