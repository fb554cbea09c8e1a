#pragma once
//
// Totally-non-congruence (TNC) certification.
//
// A parabolic witness (A, m) asserts A T^m A^-1 lies in the Veech group; its
// direction is the first column A e1.  For a prime p, two witnesses
// (A1, m1), (A2, m2) rule out surjectivity failure mod p whenever p divides
// neither modulus nor D = det([A1 e1 | A2 e1]): then the two parabolic
// directions stay independent mod p and generate all of SL(2,Z/p^r).  A
// certificate is valid when every prime that could possibly interfere — the
// divisors of the witness moduli and of the gcd of the nonzero D values — has
// such a pair; every other prime is covered automatically.  A group whose
// image is full mod every prime power is full mod every n (CRT), i.e. totally
// non-congruence for a proper subgroup.
//
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "origami/modmat.hpp"
#include "origami/sl2.hpp"
#include "origami/veech.hpp"

namespace origami {

enum class Provenance : uint8_t { Horizontal, Vertical, Diagonal, Harvested, User };

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct ParabolicWitness {
  Mat2 A;        // det 1
  long long m;   // positive modulus: A T^m A^-1 is claimed to lie in the group
  Provenance provenance = Provenance::User;

  friend bool operator==(const ParabolicWitness&, const ParabolicWitness&) = default;
};

struct PrimeCheck {
  long long p;
  bool ok;
  int i = -1, j = -1;  // witness pair that covers p, when ok
};

struct TncCertificate {
  std::vector<ParabolicWitness> witnesses;
  std::vector<PrimeCheck> checked_primes;  // ascending by p
  bool valid = false;
  std::string reason;  // nonempty when invalid
};

// True iff the subgroup generated by gens together with -I maps onto all of
// SL(2,Z/n).  The word overload evaluates mod n directly and accepts
// arbitrarily large exponents.
bool image_is_full_mod(std::span<const Mat2> gens, uint32_t n, long long cap = 10'000'000);
bool image_is_full_mod(std::span<const Word> gens, uint32_t n, long long cap = 10'000'000);

// D = det([A1 e1 | A2 e1]) nonzero mod p; p must be prime.
bool condition_A_holds(const Mat2& A1, const Mat2& A2, long long p);

// The three builder witnesses for a one-cylinder origami of circumference L
// with q odd pairs (L > 4q >= 0): (I, L) horizontal, (S, 15) vertical,
// (T', 2(L - 4q)) diagonal.
std::vector<ParabolicWitness> standard_witnesses(long long L, long long q);

// Checks the pairwise-coverage criterion for every relevant prime.
TncCertificate verify_certificate(std::vector<ParabolicWitness> witnesses);

// Two cylinder directions C1, C2 with horizontal/vertical modulus pairs
// (m1, m1') and (m2, m2'): gcd(m1 m1', m2 m2') = 1 certifies TNC.  Returns the
// assembled certificate, or nullopt when the gcd condition fails.
std::optional<TncCertificate> deficiency_criterion(const Mat2& C1, long long m1, long long m1p,
                                                   const Mat2& C2, long long m2, long long m2p);

enum class CongruenceVerdict : uint8_t { Congruence, NonCongruence, UndecidedCap };

const char* to_string(CongruenceVerdict v);

// Wohlfahrt-style test at the level (lcm of cusp widths): congruence iff
// |SL(2,Z/level)| / |mod-level image of the stabilizer| equals the index.
CongruenceVerdict is_congruence_at_level(const CosetGraph& g, long long cap = 10'000'000);

// Certificate JSON: {"witnesses":[{"A":[[..],[..]],"m":..,"provenance":".."}],
// "verdict":"valid"|"invalid", "checked_primes":{...}, "reason":...}.
std::string certificate_to_json_text(const TncCertificate& c);
std::vector<ParabolicWitness> witnesses_from_json_text(const std::string& text);

}  // namespace origami
