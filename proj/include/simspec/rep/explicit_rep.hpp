#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "simspec/linalg/matrix.hpp"
#include "simspec/roots/root_system.hpp"

namespace simspec::rep {

using galois::Field;
using galois::FieldElement;
using galois::Raw;
using linalg::Matrix;

/// One weight space of an explicit module. `character` holds the exponents
/// of the weight on the case's torus coordinates.
struct LedgerEntry {
  roots::Weight weight;
  unsigned multiplicity = 0;
  std::vector<std::size_t> basis;
  std::vector<int> character;
};

struct WeylRep {
  std::string id;
  Matrix matrix;
};

/// A module with explicit generator actions over a fixed field.
///
/// Torus coordinates: A_2 (t1, t2) for diag(t1, t2, (t1 t2)^-1); A_3
/// (t1, t2, t3) for diag(t1, t2, t3, (t1 t2 t3)^-1); D_4 the root values
/// (a1, a2, a3, a4).
struct ExplicitRep {
  std::string label;
  std::size_t dim = 0;
  Field field;
  unsigned sigma_order = 1;
  roots::RootSystemPtr system;
  std::size_t torus_rank = 0;
  Matrix sigma;
  /// Identity first.
  std::vector<WeylRep> weyl;
  std::vector<LedgerEntry> ledger;
  /// Image of a matrix of the natural module (A types only).
  std::function<Matrix(const Matrix&)> natural_action;
  /// Coordinates t' with torus_eval(t') = sigma torus_eval(t) sigma^-1.
  std::function<std::vector<FieldElement>(const std::vector<FieldElement>&)> sigma_on_torus;

  /// Through natural_action when present, otherwise from the ledger.
  Matrix torus_eval(const std::vector<FieldElement>& coords) const;
  /// Diagonal of the torus action read off the ledger.
  std::vector<Raw> torus_diagonal(const std::vector<FieldElement>& coords) const;
  const Matrix& weyl_eval(const std::string& id) const;
  std::size_t weyl_index(const std::string& id) const;
  FieldElement weight_value(const LedgerEntry& e, const std::vector<FieldElement>& coords) const;
  std::vector<std::size_t> zero_weight_basis() const;
  std::vector<std::size_t> nonzero_weight_basis() const;
  /// Coordinates as elements of `field`, embedding from subfields.
  std::vector<FieldElement> to_rep_field(const std::vector<FieldElement>& coords) const;
};

/// Conjugation on trace-zero 3x3 matrices. Basis E12, E13, E21, E23, E31,
/// E32, E11-E22, E22-E33.
ExplicitRep build_a2_adjoint(Field f, Raw twist = 1);

/// V(2 w2) for SL_4 inside Sym^2(Lambda^2 F^4), as the orthogonal complement
/// of the invariant Pfaffian line.
ExplicitRep build_a3_two_omega2(Field f, Raw twist = 1);

/// Sym^2(F^4) + Sym^2(F^4)^* with sigma swapping the summands.
ExplicitRep build_a3_induced_pair(Field f, Raw twist = 1);

/// Dispatch on the exact case identifiers "a2-adjoint", "a3-2w2",
/// "a3-induced", "d4-w2-char2".
ExplicitRep build_case(const std::string& label, Field f, Raw twist = 1);

/// Root values (a1..a4) of the D_4 torus element with epsilon-coordinates
/// (t1..t4).
std::vector<FieldElement> d4_root_values(const std::vector<FieldElement>& eps);

/// The torus element of SL_n as an n x n diagonal matrix.
Matrix a_type_torus_matrix(const std::vector<FieldElement>& coords);

nlohmann::json to_json(const ExplicitRep& rep);

}  // namespace simspec::rep
