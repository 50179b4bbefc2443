#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steiner4/bigint.hpp"

namespace steiner4 {

struct PrimePower {
  std::uint64_t p;
  std::uint32_t e;
};

bool is_prime(std::uint64_t n);

/// Returns p, e with n = p^e (e >= 1), or nullopt when n is not a prime power.
std::optional<PrimePower> prime_power(std::uint64_t n);

/// Floor of the square root, exact.
std::uint64_t isqrt(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

/// Sorted positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sorted distinct prime divisors.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All prime powers p^e with lo <= p^e <= hi, ascending.
std::vector<PrimePower> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace steiner4
