#pragma once

#include <vector>

#include "simspec/galois/polynomial.hpp"
#include "simspec/linalg/matrix.hpp"

namespace simspec::linalg {

using galois::Polynomial;

/// det(xI - M). Splits M into strongly connected blocks of its nonzero
/// pattern first; each block is handled by Berkowitz, with a closed form for
/// single-cycle (monomial) blocks.
Polynomial charpoly(const Matrix& m);

/// Berkowitz on the whole matrix, no block splitting.
Polynomial charpoly_berkowitz(const Matrix& m);

/// Characteristic polynomials of the diagonal blocks found by the splitter.
std::vector<Polynomial> charpoly_factors(const Matrix& m);

bool has_simple_spectrum(const Matrix& m);

struct BlockCycleReport {
  std::size_t block_dim = 0;
  std::size_t cycle_length = 0;
  FieldElement scalar;
  Polynomial charpoly;
  /// Common multiplicity of every eigenvalue.
  std::size_t multiplicity = 0;
};

/// Coordinates split into consecutive blocks of size `block_dim`; the map
/// must send block i into block i+1 (cyclically) and its l-th power must act
/// as a scalar on the first block. Throws NotACycle otherwise.
BlockCycleReport block_cycle_multiplicity_check(std::size_t block_dim, const Matrix& cycle_map);

}  // namespace simspec::linalg
