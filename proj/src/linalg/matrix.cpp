#include "simspec/linalg/matrix.hpp"

#include <sstream>

#include "simspec/error.hpp"

namespace simspec::linalg {

namespace {

void check_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Raw> entries)
    : f_(f), r_(rows), c_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) fail(ErrorKind::DimensionMismatch, "entry count does not match shape");
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries) {
  std::vector<Raw> e;
  e.reserve(entries.size());
  for (auto v : entries) e.push_back(f.from_int(v));
  return Matrix(f, rows, cols, std::move(e));
}

Matrix Matrix::diagonal(Field f, const std::vector<Raw>& diag) {
  Matrix m(f, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

Matrix Matrix::column(Field f, const std::vector<Raw>& v) { return Matrix(f, v.size(), 1, v); }

std::vector<Raw> Matrix::row(std::size_t i) const { return {e_.begin() + i * c_, e_.begin() + (i + 1) * c_}; }

std::vector<Raw> Matrix::col(std::size_t j) const {
  std::vector<Raw> out(r_);
  for (std::size_t i = 0; i < r_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Raw> Matrix::apply(const std::vector<Raw>& v) const {
  if (v.size() != c_) fail(ErrorKind::DimensionMismatch, "vector length does not match columns");
  std::vector<Raw> out(r_, 0);
  for (std::size_t i = 0; i < r_; ++i) {
    Raw acc = 0;
    for (std::size_t j = 0; j < c_; ++j) {
      Raw a = (*this)(i, j);
      if (a && v[j]) acc = f_.add(acc, f_.mul(a, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(Raw c) const {
  Matrix out = *this;
  for (auto& v : out.e_) v = f_.mul(v, c);
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!is_square()) fail(ErrorKind::NonSquare, "power of a non-square matrix");
  Matrix result = identity(f_, r_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) fail(ErrorKind::DimensionMismatch, "block out of range");
  Matrix out(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

bool Matrix::is_zero() const {
  for (Raw v : e_)
    if (v) return false;
  return true;
}

bool Matrix::is_identity() const { return is_square() && *this == identity(f_, r_); }

bool Matrix::is_diagonal() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (i != j && (*this)(i, j)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.c_ != b.r_) fail(ErrorKind::DimensionMismatch, "inner dimensions differ");
  const Field f = a.f_;
  Matrix out(f, a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i) {
    Raw* orow = &out.e_[i * b.c_];
    for (std::size_t k = 0; k < a.c_; ++k) {
      Raw x = a(i, k);
      if (!x) continue;
      const Raw* brow = &b.e_[k * b.c_];
      for (std::size_t j = 0; j < b.c_; ++j) {
        if (brow[j]) orow[j] = f.add(orow[j], f.mul(x, brow[j]));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorKind::DimensionMismatch, "shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = a.f_.add(a.e_[i], b.e_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorKind::DimensionMismatch, "shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = a.f_.sub(a.e_[i], b.e_[i]);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << element(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix embed(const Matrix& m, Field target) {
  if (m.field() == target) return m;
  std::vector<Raw> e;
  e.reserve(m.raw().size());
  for (Raw v : m.raw()) e.push_back(galois::embed(FieldElement(m.field(), v), target).raw());
  return Matrix(target, m.rows(), m.cols(), std::move(e));
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) fail(ErrorKind::DimensionMismatch, "no blocks");
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    check_field(blocks.front(), b);
    r += b.rows();
    c += b.cols();
  }
  Matrix out(blocks.front().field(), r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  const Field f = m.field();
  Matrix a = m;
  std::vector<std::size_t> piv;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < a.cols() && prow < a.rows(); ++col) {
    std::size_t sel = prow;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != prow)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(prow, j));
    Raw inv = f.inv(a(prow, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.at(prow, j) = f.mul(a(prow, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == prow) continue;
      Raw factor = a(i, col);
      if (!factor) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (a(prow, j)) a.at(i, j) = f.sub(a(i, j), f.mul(factor, a(prow, j)));
      }
    }
    piv.push_back(col);
    ++prow;
  }
  if (pivots) *pivots = piv;
  return a;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorKind::Singular, "matrix is singular");
  return r.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

}  // namespace simspec::linalg
