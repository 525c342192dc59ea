#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "simspec/roots/root_system.hpp"

namespace simspec::roots {

/// One row of the embedded Table 1, as printed.
struct Table1Row {
  std::size_t index = 0;  // 1-based position in the table
  char type = 'A';
  unsigned rank_min = 1;
  std::optional<unsigned> rank_eq;
  std::string printed;
  std::string condition;
  std::vector<std::pair<int, std::string>> highest_weight;
  std::string multiplicity;
  /// Which columns are not printed on the row but carried over from above.
  std::string inherited;

  bool applies_to_rank(unsigned n) const;
  /// p = 0 stands for characteristic 0: "p | E" is false, every other atom true.
  bool condition_holds(unsigned n, std::uint64_t p) const;
  long long multiplicity_at(unsigned n) const;
  Weight highest_weight_in(const RootSystemPtr& sys) const;
};

const std::vector<Table1Row>& table1();

struct FilterVerdict {
  Table1Row row;
  bool survives = false;
  /// 2, 3 or 4 for the surviving cases of the case list; unset otherwise.
  std::optional<int> lemma_case;
  std::string verdict;
  std::vector<std::string> flags;
};

/// Applies the reduction rules to the rows for this system: matching
/// characteristic, p != |sigma|, sigma-invariant highest weight, zero-weight
/// multiplicity <= |sigma|.
std::vector<FilterVerdict> theorem_case_filter(const RootSystemPtr& sys, std::uint64_t p, unsigned sigma_order);

struct Table1Check {
  std::size_t row_index = 0;
  std::string system;
  std::string highest;
  long long table_value = 0;
  std::optional<long long> computed;
  std::optional<long long> weyl_dim;
  std::optional<long long> multiplicity_sum;
  /// "match", "mismatch" or "skipped"
  std::string status;
  std::string note;
};

struct Table1Report {
  std::vector<Table1Check> checks;
  std::size_t matches = 0, mismatches = 0, skipped = 0;
  bool dimensions_consistent = true;
};

/// Freudenthal cross-check of every characteristic-0 row instance of rank
/// <= max_rank, plus the E-type rows within the per-row budget.
Table1Report verify_table1_char0(unsigned max_rank = 4, double e_budget_seconds = 20.0);

nlohmann::json to_json(const Table1Report& r);
nlohmann::json to_json(const std::vector<FilterVerdict>& v);

}  // namespace simspec::roots
