#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace simspec::galois {

/// Packed element value: the coefficient vector (c_0, ..., c_{k-1}) over GF(p)
/// stored as c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
using Raw = std::uint64_t;

namespace detail {
struct FieldData;
}

class FieldElement;

/// Handle to an interned finite field GF(p^k). Handles are cheap to copy and
/// two handles compare equal iff they describe the same (p, k).
class Field {
 public:
  Field() = default;

  bool valid() const { return d_ != nullptr; }
  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t size() const;
  /// Monic modulus over GF(p), little-endian, length degree() + 1.
  const std::vector<std::uint64_t>& modulus() const;
  std::string name() const;

  Raw add(Raw a, Raw b) const;
  Raw sub(Raw a, Raw b) const;
  Raw neg(Raw a) const;
  Raw mul(Raw a, Raw b) const;
  Raw inv(Raw a) const;
  Raw pow(Raw a, std::uint64_t e) const;
  Raw pow_signed(Raw a, std::int64_t e) const;
  Raw from_int(std::int64_t n) const;

  std::vector<std::uint64_t> coeffs(Raw a) const;
  Raw pack(std::span<const std::uint64_t> coeffs) const;

  /// Position of an element in the canonical enumeration (lexicographic on
  /// (c_0, ..., c_{k-1}), c_0 most significant) and its inverse.
  std::uint64_t rank_of(Raw a) const;
  Raw at_rank(std::uint64_t rank) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(Raw packed) const;
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  FieldElement from_integer(std::int64_t n) const;
  FieldElement element_at_rank(std::uint64_t rank) const;

  const detail::FieldData* data() const { return d_; }

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.d_ != b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  friend Field make_field(std::uint64_t, unsigned, std::optional<Field>);

  const detail::FieldData* d_ = nullptr;
};

/// Canonical GF(p^k): the modulus is the lexicographically smallest monic
/// irreducible of degree k over GF(p). A parent, when given, must be a subfield;
/// its embedding is computed and cached.
Field make_field(std::uint64_t p, unsigned k, std::optional<Field> parent = std::nullopt);

/// GF(q) for a prime power q.
Field field_of_size(std::uint64_t q);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, Raw v) : f_(f), v_(v) {}

  Field field() const { return f_; }
  Raw raw() const { return v_; }
  std::vector<std::uint64_t> coeffs() const { return f_.coeffs(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FieldElement operator-() const { return {f_, f_.neg(v_)}; }
  FieldElement pow(std::int64_t e) const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field f_;
  Raw v_ = 0;
};

/// Compares by enumeration rank; both elements must share a field.
bool enumeration_less(const FieldElement& a, const FieldElement& b);

std::uint64_t element_order(const FieldElement& a);

/// First element in enumeration order whose order is size - 1.
FieldElement primitive_element(Field f);

/// a^q for q a power of the characteristic.
FieldElement frobenius_power(const FieldElement& a, std::uint64_t q);

/// True iff a lies in the unique subfield with q elements (a^q == a).
bool in_subfield(const FieldElement& a, std::uint64_t q);

/// Image of a under the canonical embedding of its field into `target`.
FieldElement embed(const FieldElement& a, Field target);

/// Element of the subfield `sub` mapping to a under the canonical embedding.
/// Throws FieldMismatch if a does not lie in the image.
FieldElement restrict_to(const FieldElement& a, Field sub);

/// All roots of x^k - a in `ambient`, in enumeration order.
std::vector<FieldElement> all_kth_roots(const FieldElement& a, unsigned k, Field ambient);

/// Same contract, forcing the polynomial (gcd + splitting) route regardless of
/// field size; exposed for cross-checking the two strategies.
std::vector<FieldElement> all_kth_roots_by_gcd(const FieldElement& a, unsigned k, Field ambient);

}  // namespace simspec::galois
