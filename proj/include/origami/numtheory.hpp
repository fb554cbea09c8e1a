#pragma once
//
// Small exact number-theory helpers: deterministic 64-bit primality testing
// (Miller-Rabin with a known-complete base set), Pollard-rho factorization,
// and prime-divisor extraction.  Everything is exact integer arithmetic.
//
#include <cstdint>
#include <vector>

namespace origami {

// Deterministic for every n < 2^64.
bool is_prime_u64(uint64_t n);

// Prime factorization, sorted ascending with multiplicity (12 -> {2,2,3}).
std::vector<uint64_t> factorize_u64(uint64_t n);

// Distinct prime divisors, sorted ascending (12 -> {2,3}).
std::vector<uint64_t> prime_divisors_u64(uint64_t n);

}  // namespace origami
