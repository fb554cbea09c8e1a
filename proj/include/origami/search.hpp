#pragma once
//
// Parameter searches for one-cylinder origamis whose standard witnesses
// certify total non-congruence, and witness harvesting for arbitrary origamis.
//
// For a builder origami of circumference L with q odd pairs the arithmetic
// conditions are
//   i)  gcd(L, 30 q) = 1          (gcd(x, 0) = x, so q = 0 never passes)
//   ii) L - 4q is divisible by neither 3 nor 5.
// find_l scans l = 1..l_max; find_prime_l instead fixes residues of L mod 3
// and mod 5 and asks for L prime, which implies both conditions for L > 4q.
//
#include <string>
#include <vector>

#include "origami/congruence.hpp"
#include "origami/origami.hpp"

namespace origami {

struct SearchResult {
  std::vector<int> stratum;
  long long l = 0;
  long long L = 0;          // builder circumference for this l
  long long q = 0;          // odd pairs
  long long gcd_L_30q = 0;  // condition i) record
  int Lm4q_mod3 = 0;        // condition ii) records
  int Lm4q_mod5 = 0;
  bool primality_checked = false;
  bool L_is_prime = false;
};

bool check_conditions(long long L, long long q);

struct SearchOutcome {
  std::vector<SearchResult> results;
  bool q_zero_vacuous = false;   // stratum has no odd entries; conditions can never hold
  bool exhausted = false;        // find_prime_l ran out of 63-bit headroom (not in practice)
  std::string diagnostic;        // human-readable note for the flags above
};

// All l in 1..l_max passing both conditions.
SearchOutcome find_l(const std::vector<int>& stratum, long long l_max);

// The first `count` values of l whose L is prime with the residue profile
//   L = 4q+1 mod 3 (or 4q+2 if 3 | 4q+1), same mod 5, L > 4q.
// Throws std::invalid_argument when the stratum has no odd entries.
SearchOutcome find_prime_l(const std::vector<int>& stratum, int count);

// Parabolic witnesses from cylinder decompositions of B^-1 . o for every B in
// a deterministic enumeration of words of length <= radius over the alphabet
// {S^±1, T^±1, T'^±1}: horizontal cylinders give (B, lcm of lengths),
// vertical cylinders give (B S, lcm of lengths).  Witnesses with the same
// direction (first column up to sign) are pruned: exact duplicates and moduli
// that are proper multiples of a kept modulus are dropped.
std::vector<ParabolicWitness> harvest_parabolics(const Origami& o, int radius,
                                                 SConvention conv = kDefaultSConvention);

}  // namespace origami
