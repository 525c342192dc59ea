#pragma once

#include <vector>

#include "simspec/linalg/matrix.hpp"

namespace simspec::linalg {

/// Subspace of F^n; the basis rows are kept in reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the given rows (any spanning set; reduced on construction).
  Subspace(Field f, std::size_t ambient_dim, const std::vector<std::vector<Raw>>& rows);
  static Subspace zero(Field f, std::size_t n);
  static Subspace full(Field f, std::size_t n);

  Field field() const { return f_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::vector<Raw>> vectors() const;

  bool contains(const std::vector<Raw>& v) const;
  /// True when M maps the subspace into itself.
  bool is_invariant(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  Field f_;
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0}
Subspace kernel(const Matrix& m);
/// Column space of M.
Subspace image(const Matrix& m);
/// Common fixed vectors of the given square matrices.
Subspace fixed_space(const std::vector<Matrix>& ms);

/// Standard basis vectors completing `sub` to the whole space, chosen greedily
/// in index order; returns their indices.
std::vector<std::size_t> quotient_basis(const Subspace& sub);

/// Action of M on the quotient by `sub` in the greedy complement basis.
Matrix induced_quotient_action(const Matrix& m, const Subspace& sub);

/// Action of M on `sub` in the given basis (columns of `basis_cols`).
Matrix restrict_action(const Matrix& m, const Matrix& basis_cols);
/// Same, in the reduced basis of `sub`.
Matrix restrict_action(const Matrix& m, const Subspace& sub);

}  // namespace simspec::linalg
