#include "simspec/linalg/subspace.hpp"

#include "simspec/error.hpp"

namespace simspec::linalg {

Subspace::Subspace(Field f, std::size_t ambient_dim, const std::vector<std::vector<Raw>>& rows) : f_(f), n_(ambient_dim) {
  std::vector<Raw> e;
  e.reserve(rows.size() * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    e.insert(e.end(), r.begin(), r.end());
  }
  Matrix r = rref(Matrix(f, rows.size(), n_, std::move(e)), &pivots_);
  basis_ = r.block(0, 0, pivots_.size(), n_);
}

Subspace Subspace::zero(Field f, std::size_t n) { return Subspace(f, n, {}); }

Subspace Subspace::full(Field f, std::size_t n) {
  std::vector<std::vector<Raw>> rows(n, std::vector<Raw>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Subspace(f, n, rows);
}

std::vector<std::vector<Raw>> Subspace::vectors() const {
  std::vector<std::vector<Raw>> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const std::vector<Raw>& v) const {
  if (v.size() != n_) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  // Reduce against the echelon basis; the remainder vanishes iff v is inside.
  std::vector<Raw> r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Raw c = r[pivots_[i]];
    if (!c) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (basis_(i, j)) r[j] = f_.sub(r[j], f_.mul(c, basis_(i, j)));
    }
  }
  for (Raw x : r)
    if (x) return false;
  return true;
}

bool Subspace::is_invariant(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) fail(ErrorKind::DimensionMismatch, "operator shape differs from ambient dimension");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!contains(m.apply(basis_.row(i)))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  const Field f = m.field();
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Raw>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Raw> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace(f, m.cols(), basis);
}

Subspace image(const Matrix& m) {
  std::vector<std::vector<Raw>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace(m.field(), m.rows(), cols);
}

Subspace fixed_space(const std::vector<Matrix>& ms) {
  if (ms.empty()) fail(ErrorKind::DimensionMismatch, "no operators");
  const Field f = ms.front().field();
  const std::size_t n = ms.front().rows();
  // Stack (M_i - I) vertically; the common fixed space is its kernel.
  std::vector<Raw> e;
  for (const auto& m : ms) {
    if (!m.is_square() || m.rows() != n) fail(ErrorKind::DimensionMismatch, "operators must share a square shape");
    Matrix d = m - Matrix::identity(f, n);
    e.insert(e.end(), d.raw().begin(), d.raw().end());
  }
  return kernel(Matrix(f, ms.size() * n, n, std::move(e)));
}

std::vector<std::size_t> quotient_basis(const Subspace& sub) {
  const std::size_t n = sub.ambient_dim();
  std::vector<std::vector<Raw>> span = sub.vectors();
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < n && span.size() < n; ++i) {
    std::vector<Raw> e(n, 0);
    e[i] = 1;
    Subspace cur(sub.field(), n, span);
    if (cur.contains(e)) continue;
    span.push_back(std::move(e));
    chosen.push_back(i);
  }
  return chosen;
}

namespace {

// Columns: basis of sub, then the greedy complement.
Matrix adapted_basis(const Subspace& sub, const std::vector<std::size_t>& comp) {
  const std::size_t n = sub.ambient_dim();
  Matrix p(sub.field(), n, n);
  for (std::size_t j = 0; j < sub.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) p.at(i, j) = sub.basis()(j, i);
  for (std::size_t j = 0; j < comp.size(); ++j) p.at(comp[j], sub.dim() + j) = 1;
  return p;
}

}  // namespace

Matrix induced_quotient_action(const Matrix& m, const Subspace& sub) {
  if (!m.is_square() || m.rows() != sub.ambient_dim()) fail(ErrorKind::DimensionMismatch, "operator shape differs from ambient dimension");
  if (!sub.is_invariant(m)) fail(ErrorKind::NotInvariant, "operator does not preserve the subspace");
  auto comp = quotient_basis(sub);
  Matrix p = adapted_basis(sub, comp);
  Matrix conj = inverse(p) * m * p;
  const std::size_t k = sub.dim();
  return conj.block(k, k, comp.size(), comp.size());
}

Matrix restrict_action(const Matrix& m, const Matrix& basis_cols) {
  const Field f = m.field();
  const std::size_t n = basis_cols.rows(), k = basis_cols.cols();
  if (!m.is_square() || m.rows() != n) fail(ErrorKind::DimensionMismatch, "operator shape differs from basis");
  // Left inverse from the pivot rows of B: B[piv] is k x k invertible.
  std::vector<std::size_t> piv;
  rref(basis_cols.transpose(), &piv);
  if (piv.size() != k) fail(ErrorKind::DimensionMismatch, "basis columns are dependent");
  Matrix sel(f, k, n);
  for (std::size_t i = 0; i < k; ++i) sel.at(i, piv[i]) = 1;
  Matrix left = inverse(sel * basis_cols) * sel;
  Matrix image = m * basis_cols;
  Matrix coords = left * image;
  if (basis_cols * coords != image) fail(ErrorKind::NotInvariant, "operator does not preserve the span");
  return coords;
}

Matrix restrict_action(const Matrix& m, const Subspace& sub) { return restrict_action(m, sub.basis().transpose()); }

}  // namespace simspec::linalg
