#pragma once

#include <string>
#include <vector>

#include "simspec/galois/polynomial.hpp"
#include "simspec/linalg/subspace.hpp"
#include "simspec/rep/explicit_rep.hpp"

namespace simspec::rep {

/// Chevalley basis of the D_4 Lie algebra reduced mod 2: X_alpha for the 24
/// roots (positive roots in generation order, then their negatives) followed
/// by H_1..H_4.
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra();

  const roots::RootSystemPtr& system() const { return sys_; }
  std::size_t dim() const { return 28; }
  /// Root of basis vector i < 24, in simple-root coordinates.
  const roots::IVec& root(std::size_t i) const { return roots_[i]; }
  std::size_t root_index(const roots::IVec& c) const;
  std::string basis_label(std::size_t i) const;

  /// Structure constants over GF(2): bracket(i, j) as a 0/1 vector.
  const std::vector<Raw>& bracket(std::size_t i, std::size_t j) const { return table_[i * 28 + j]; }
  std::vector<Raw> bracket(const std::vector<Raw>& x, const std::vector<Raw>& y) const;

  /// Number of basis triples violating Jacobi (28^3 checked).
  std::size_t jacobi_violations() const;
  bool is_alternating() const;

  /// {x : [x, L] = 0}
  linalg::Subspace center() const;
  /// ad(x) as a 28 x 28 matrix over GF(2).
  Matrix ad(const std::vector<Raw>& x) const;

  /// Algebra automorphisms over GF(2).
  Matrix sigma_matrix(const std::vector<unsigned>& perm) const;
  /// Signed permutation of epsilon-coordinates: eps_i -> sign[i] eps_{target[i]}.
  Matrix weyl_matrix(const std::vector<unsigned>& target, const std::vector<int>& sign) const;

  Field gf2() const { return f2_; }

 private:
  roots::RootSystemPtr sys_;
  Field f2_;
  std::vector<roots::IVec> roots_;
  std::vector<std::vector<Raw>> table_;
};

struct D4Construction {
  ChevalleyAlgebra algebra;
  linalg::Subspace center;
  std::vector<std::size_t> quotient_indices;
  ExplicitRep rep;
};

/// The 26-dimensional quotient of the algebra by its centre, over a field of
/// characteristic 2. Throws CenterDimensionUnexpected if dim Z != 2.
D4Construction build_d4_char2(Field f, Raw twist = 1);

struct SigmaOnV0 {
  Matrix v0_matrix;
  galois::Polynomial charpoly;
  std::vector<std::pair<unsigned, galois::Polynomial>> squarefree;
  galois::Polynomial claimed;
  bool matches_claim = false;
  Matrix cartan_matrix;
  galois::Polynomial cartan_charpoly;
  std::vector<std::string> center_basis;
};

/// Sigma restricted to the zero-weight space, compared with x^2 + x + 1.
SigmaOnV0 sigma_action_on_V0(const D4Construction& d4);

nlohmann::json to_json(const SigmaOnV0& r);

}  // namespace simspec::rep
