#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "simspec/galois/field.hpp"

namespace simspec::linalg {

using galois::Field;
using galois::FieldElement;
using galois::Raw;

/// Dense row-major matrix over a finite field. Matrices act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Raw> entries);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries);
  static Matrix diagonal(Field f, const std::vector<Raw>& diag);
  static Matrix column(Field f, const std::vector<Raw>& v);

  Field field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  Raw operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  Raw& at(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  FieldElement element(std::size_t i, std::size_t j) const { return {f_, (*this)(i, j)}; }
  const std::vector<Raw>& raw() const { return e_; }

  std::vector<Raw> row(std::size_t i) const;
  std::vector<Raw> col(std::size_t j) const;
  std::vector<Raw> apply(const std::vector<Raw>& v) const;

  Matrix transpose() const;
  Matrix scaled(Raw c) const;
  Matrix pow(std::uint64_t e) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Raw> e_;
};

/// Entrywise image under the canonical embedding into a superfield.
Matrix embed(const Matrix& m, Field target);

Matrix block_diag(const std::vector<Matrix>& blocks);

/// Reduced row-echelon form; pivot columns are written to `pivots` if given.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

}  // namespace simspec::linalg
