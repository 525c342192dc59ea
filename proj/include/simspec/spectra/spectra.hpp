#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "simspec/galois/polynomial.hpp"
#include "simspec/rep/explicit_rep.hpp"
#include "simspec/rep/membership.hpp"

namespace simspec::spectra {

using galois::Field;
using galois::FieldElement;
using galois::Polynomial;
using linalg::Matrix;
using rep::ElementSpec;
using rep::ExplicitRep;

/// rho(sigma)^a * n_w * t in the representation's field.
Matrix realize(const ElementSpec& e, const ExplicitRep& rep);

struct PredictedFactor {
  enum class Kind { Linear, Binomial, Cyclotomic3 };
  Kind kind = Kind::Linear;
  /// x - c, x^k - c, or x^2 + x + 1
  unsigned k = 1;
  FieldElement c;
  unsigned count = 1;
  /// "root" or "zero": the weight sector the factor comes from.
  std::string sector = "root";

  Polynomial expand(Field f) const;
  std::string describe() const;
};

struct PredictedCharpoly {
  Field field;
  std::vector<PredictedFactor> factors;

  unsigned degree() const;
  Polynomial expand() const;
  Polynomial expand_sector(const std::string& sector) const;
};

PredictedCharpoly predicted_charpoly_a2(const FieldElement& t1, const FieldElement& t2);
/// From (t1, t2, t3); t4 does not enter.
PredictedCharpoly predicted_charpoly_d4(const std::vector<FieldElement>& t);

enum class Branch { Divides, Coprime };
/// Divides: 3 | q - 1 and y^2 = u. Coprime: y^3 = u.
PredictedCharpoly predicted_charpoly_3d4(std::uint64_t q, const FieldElement& y, const FieldElement& u, Branch branch);

struct M1M2Verdict {
  std::size_t m1 = 0, m2 = 0;
  bool three_divides = false;
  /// s^3 not in M2 for all s in M1; only evaluated when 3 does not divide q - 1.
  std::optional<bool> cube_avoidance;
  bool sufficient = false;
};

M1M2Verdict m1_m2_condition(const FieldElement& t1, const FieldElement& t2, const FieldElement& t3, std::uint64_t q);

struct FactorEvidence {
  std::string factor;
  std::string sector;
  unsigned expected = 0;
  bool matched = false;
  int gcd_degree = 0;
};

struct SectorEvidence {
  std::string sector;
  Polynomial computed;
  Polynomial predicted;
  bool match = false;
};

struct SpectrumReport {
  ElementSpec element;
  Field field;
  std::size_t dim = 0;
  Polynomial charpoly;
  bool squarefree = false;
  Polynomial gcd_with_derivative;
  std::optional<PredictedCharpoly> predicted;
  std::optional<bool> prediction_match;
  std::vector<FactorEvidence> evidence;
  std::vector<SectorEvidence> sectors;
  Polynomial residual;
  std::string family_scope = "single element";
  bool exhaustive = true;
  std::uint64_t candidates_tested = 1;
};

SpectrumReport verify_element(const ElementSpec& e, const ExplicitRep& rep, const std::optional<PredictedCharpoly>& predicted = std::nullopt);

enum class Family { SigmaT, SigmaWeylT, InnerT, TwistedSigmaT };

Family parse_family(const std::string& s);
std::string to_string(Family f);

struct SearchOptions {
  /// Maximum candidates; 0 = unlimited.
  std::uint64_t budget = 0;
  std::size_t max_hits = 16;
  /// 0 = SPECTRA_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct SearchReport {
  std::string case_label;
  std::uint64_t q = 0;
  Family family = Family::SigmaWeylT;
  std::uint64_t family_size = 0;
  std::uint64_t candidates_tested = 0;
  std::uint64_t hit_count = 0;
  /// First hits in enumeration order.
  std::vector<ElementSpec> hits;
  bool exhaustive = false;
  bool budget_exceeded = false;
  bool exploratory = false;
  std::string scope;
};

/// Exhaustive search of a canonical family for simple spectrum. Enumeration
/// is lexicographic on (Weyl index, torus coordinates in field order).
/// The representation must be over GF(q), or GF(q^3) for TwistedSigmaT.
SearchReport family_search(const ExplicitRep& rep, std::uint64_t q, Family family, const SearchOptions& opt = {});

/// Torus coordinates of candidate `index` and its Weyl index.
std::pair<std::size_t, std::vector<FieldElement>> family_candidate(const ExplicitRep& rep, std::uint64_t q, Family family, std::uint64_t index);
std::uint64_t family_size(const ExplicitRep& rep, std::uint64_t q, Family family);

struct InducedReport {
  std::uint64_t q = 0;
  std::uint64_t candidates = 0;
  std::uint64_t simple_count = 0;
  std::uint64_t biconditional_holds = 0;
  std::uint64_t block_charpolys_equal = 0;
  /// h^2 takes equal values on the eps1+eps2 and eps3+eps4 lines of block 1.
  std::uint64_t omega2_collisions = 0;
  bool negative_claim_holds = false;
};

InducedReport induced_equivalence_check(const ExplicitRep& induced, std::uint64_t q);

struct Gu1Report {
  bool nonzero_multiplicity_one = true;
  unsigned zero_multiplicity = 0;
  unsigned sigma_order = 0;
  bool passes = false;
};

Gu1Report gu1_property_check(const ExplicitRep& rep, unsigned sigma_order);

struct Ty2Report {
  bool simple = false;
  unsigned l = 1;
  unsigned max_multiplicity = 0;
  int radical_degree = 0;
  bool bound_holds = false;
};

/// If h has simple spectrum, every eigenvalue of h^l has multiplicity <= l.
Ty2Report ty2_check(const Matrix& h, unsigned l);

unsigned search_threads(unsigned requested);

nlohmann::json to_json(const PredictedCharpoly& p);
nlohmann::json to_json(const SpectrumReport& r);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const InducedReport& r);
nlohmann::json to_json(const M1M2Verdict& v);

}  // namespace simspec::spectra
