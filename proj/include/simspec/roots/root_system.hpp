#pragma once

#include <boost/rational.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

// Boost 1.74 rational/integer equality recurses forever under C++20
// reversed-operator rewriting; exact non-template overloads win resolution.
namespace boost {
#define SIMSPEC_RATIONAL_EQ(I)                                                                            \
  inline bool operator==(const rational<long long>& a, I b) { return a == rational<long long>(b); }      \
  inline bool operator==(I b, const rational<long long>& a) { return a == rational<long long>(b); }      \
  inline bool operator!=(const rational<long long>& a, I b) { return !(a == rational<long long>(b)); }   \
  inline bool operator!=(I b, const rational<long long>& a) { return !(a == rational<long long>(b)); }
SIMSPEC_RATIONAL_EQ(int)
SIMSPEC_RATIONAL_EQ(long)
SIMSPEC_RATIONAL_EQ(long long)
SIMSPEC_RATIONAL_EQ(unsigned)
#undef SIMSPEC_RATIONAL_EQ
}  // namespace boost

namespace simspec::roots {

using Q = boost::rational<long long>;
using QVec = std::vector<Q>;
using IVec = std::vector<int>;

/// Finite root system in Bourbaki numbering. Inner products are normalized
/// so that long roots have squared length 2.
struct RootSystem {
  char type = 'A';
  unsigned rank = 0;
  /// cartan[i][j] = <alpha_j, alpha_i^vee>; the Dynkin labels of
  /// sum_j c_j alpha_j are sum_j cartan[i][j] c_j.
  std::vector<IVec> cartan;
  std::vector<QVec> gram;
  /// Simple-root coordinates, ordered by height then lexicographically.
  std::vector<IVec> positive_roots;
  /// Row i is omega_i in simple-root coordinates.
  std::vector<QVec> fundamental_weights;
  /// Row i is alpha_i in epsilon coordinates (types A-D).
  std::optional<std::vector<QVec>> epsilon;
  /// (eps_i, eps_i) in the normalized form.
  Q epsilon_norm = 1;
  QVec weyl_vector;

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  std::size_t num_roots() const { return 2 * positive_roots.size(); }
  IVec labels_of(const IVec& simple_coords) const;
  Q inner(const QVec& a, const QVec& b) const;
  /// Index of a positive root given in simple coordinates, or -1.
  int positive_index(const IVec& simple_coords) const;
  const IVec& highest_root() const { return positive_roots.back(); }
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Valid types: A n>=1, B n>=2, C n>=2, D n>=4, E 6-8, F 4, G 2.
RootSystemPtr build_root_system(char type, unsigned rank);

enum class Basis { Fundamental, SimpleRoot, Epsilon };

/// Weight stored by its rational Dynkin labels.
class Weight {
 public:
  Weight() = default;
  Weight(RootSystemPtr sys, QVec labels);
  static Weight from_coords(RootSystemPtr sys, const QVec& coords, Basis basis);
  static Weight fundamental(RootSystemPtr sys, unsigned i);  // 1-based
  static Weight zero(RootSystemPtr sys);
  static Weight root(RootSystemPtr sys, const IVec& simple_coords);

  const RootSystemPtr& system() const { return sys_; }
  const QVec& labels() const { return labels_; }
  QVec coords(Basis basis) const;

  bool is_dominant() const;
  bool is_integral() const;
  Weight reflect(unsigned i) const;  // 0-based simple reflection
  Weight dominant_conjugate() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(long long k, const Weight& a);
  friend bool operator==(const Weight& a, const Weight& b) { return a.labels_ == b.labels_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.labels_ < b.labels_; }

  /// e.g. "w1+w2", "2w2", "0"
  std::string to_string() const;

 private:
  RootSystemPtr sys_;
  QVec labels_;
};

Q inner(const Weight& a, const Weight& b);

/// Full W-orbit, sorted with the dominant element first and then by labels
/// in decreasing lexicographic order.
std::vector<Weight> weyl_orbit(const Weight& w);

struct DiagramAutomorphism {
  RootSystemPtr system;
  /// sigma(alpha_i) = alpha_{perm[i]}, 0-based.
  std::vector<unsigned> perm;
  unsigned order = 0;

  Weight apply(const Weight& w) const;
  IVec apply_root(const IVec& simple_coords) const;
};

/// A n>=2 / order 2, D n>=4 / order 2, D4 / order 3, E6 / order 2.
DiagramAutomorphism diagram_automorphism(RootSystemPtr sys, unsigned order);

}  // namespace simspec::roots
