#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace simspec::galois {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order (n >= 1).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Returns e when n == base^e for some e >= 1, otherwise nullopt.
std::optional<unsigned> exact_log(std::uint64_t n, std::uint64_t base);

/// base^e, or nullopt on overflow past 2^63.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned e);

}  // namespace simspec::galois
