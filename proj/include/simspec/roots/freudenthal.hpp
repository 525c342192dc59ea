#pragma once

#include <chrono>
#include <map>
#include <optional>

#include "simspec/roots/root_system.hpp"

namespace simspec::roots {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Characteristic-0 multiplicities of the dominant weights of L(highest),
/// keyed by Dynkin labels. Memoized per (system, highest). Throws NotDominant
/// and, past the deadline, BudgetExceeded.
const std::map<QVec, long long>& dominant_multiplicities(const Weight& highest, Deadline deadline = std::nullopt);

long long freudenthal_multiplicity(const Weight& highest, const Weight& mu, Deadline deadline = std::nullopt);

long long weyl_dimension(const Weight& highest);

/// sum over dominant mu of m(mu) * |W mu|
long long multiplicity_sum(const Weight& highest, Deadline deadline = std::nullopt);

}  // namespace simspec::roots
