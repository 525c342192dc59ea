#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "simspec/galois/field.hpp"

namespace simspec::galois {

/// Univariate polynomial over a finite field; little-endian coefficients with
/// trailing zeros stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field f) : f_(f) {}
  Polynomial(Field f, std::vector<Raw> coeffs);
  Polynomial(Field f, const std::vector<FieldElement>& coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial monomial(Field f, std::size_t degree, Raw coeff = 1);
  /// x - r
  static Polynomial linear_root(const FieldElement& r);
  /// x^k - c
  static Polynomial binomial(unsigned k, const FieldElement& c);

  Field field() const { return f_; }
  const std::vector<Raw>& raw_coeffs() const { return c_; }
  std::vector<FieldElement> coeffs() const;
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement eval(const FieldElement& x) const;
  /// Applies a -> a^q to every coefficient.
  Polynomial map_frobenius(std::uint64_t q) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const FieldElement& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void strip();

  Field f_;
  std::vector<Raw> c_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
Polynomial operator%(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// Exact quotient; throws InvalidArgument if g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
bool divides(const Polynomial& g, const Polynomial& f);
/// Largest e with g^e | f (g non-constant, f nonzero).
unsigned multiplicity(const Polynomial& g, const Polynomial& f);

/// base^e mod m.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m);

bool is_squarefree(const Polynomial& f);

/// Squarefree decomposition f = lc * prod_i g_i^i with g_i squarefree and
/// pairwise coprime. Entry (i, g_i) for each non-constant g_i, increasing i.
std::vector<std::pair<unsigned, Polynomial>> squarefree_factorization(const Polynomial& f);

/// Product of the distinct monic irreducible factors of f.
Polynomial radical(const Polynomial& f);

/// Distinct roots of f lying in f's field, in enumeration order.
std::vector<FieldElement> roots_in_field(const Polynomial& f);

/// Rabin's irreducibility test.
bool is_irreducible(const Polynomial& f);

}  // namespace simspec::galois
