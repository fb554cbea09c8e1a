#pragma once
//
// Square-tiled surfaces (origamis) as transitive permutation pairs.
//
// An origami of degree d is a pair (sigma_a, sigma_b) of permutations of the
// squares {0,...,d-1} generating a transitive group: sigma_a moves one square
// right, sigma_b moves one square up.  Two pairs describe the same surface iff
// they are simultaneously conjugate, and canonical_form() picks a distinguished
// representative of that class.
//
// SL(2,Z) acts on origamis through its generators.  All conventions here share
//   T:   (a, b) -> (a, b a^-1)        T^-1: (a, b) -> (a, b a)
// and differ in S:
//   RotateCcw (default): S: (a, b) -> (b^-1, a)      — satisfies the SL(2,Z)
//       relations on conjugacy classes (S^4 = id, S^2 = componentwise inverse,
//       (S T)^3 ~ S^2), so membership tests through word decomposition are
//       well defined;
//   RotateCw:            S: (a, b) -> (b, a^-1)      — the inverse rotation
//       (its S-map is RotateCcw's S^-1-map);
//   InvolutiveSwap:      S: (a, b) -> (b^-1, a^-1)   — a historical variant
//       that is an involution and therefore cannot satisfy the relations;
//       selectable for comparison, not for membership computations.
//
#include <cstdint>
#include <string>
#include <vector>

#include "origami/perm.hpp"
#include "origami/sl2.hpp"

namespace origami {

enum class SConvention : uint8_t { RotateCcw, RotateCw, InvolutiveSwap };
inline constexpr SConvention kDefaultSConvention = SConvention::RotateCcw;

const char* to_string(SConvention c);
SConvention s_convention_from_string(const std::string& s);

struct Origami {
  Perm a;  // right neighbour
  Perm b;  // upper neighbour

  friend bool operator==(const Origami&, const Origami&) = default;
  friend auto operator<=>(const Origami&, const Origami&) = default;
};

// Validates degrees match, degree >= 1 and the pair is transitive.
Origami make_origami(Perm a, Perm b);

int degree(const Origami& o);

// Cone-angle data: orders of the singularities, each cycle of length k >= 2 of
// commutator(sigma_b^-1, sigma_a^-1) contributes k - 1.  Sorted ascending;
// empty for torus covers.
std::vector<int> stratum(const Origami& o);

// genus = 1 + (sum of stratum entries) / 2
int genus(const Origami& o);

enum class Direction : uint8_t { Horizontal, Vertical, Diagonal };

// Cylinder circumferences in the given direction, sorted ascending: cycle type
// of sigma_a (horizontal), sigma_b (vertical), or sigma_b * sigma_a (diagonal).
std::vector<int> cylinders(const Origami& o, Direction dir);

enum class Generator : uint8_t { S, SInv, T, TInv };

Origami apply_generator(const Origami& o, Generator g,
                        SConvention conv = kDefaultSConvention);

// Word letters act left-to-right as written, leftmost factor last (matching
// matrix products).  Letter exponents are applied in closed form, so huge
// T-powers cost O(1).
Origami apply_word(const Origami& o, const Word& w, SConvention conv = kDefaultSConvention);

// Distinguished representative of the simultaneous-conjugation class: for each
// base square, relabel in breadth-first discovery order following edges
// (a, a^-1, b, b^-1), and keep the lexicographically smallest concatenated
// image tuple (images of sigma_a, then sigma_b).
Origami canonical_form(const Origami& o);

// FNV-1a over the canonical form; stable across runs and relabelings.
uint64_t origami_hash(const Origami& o);

enum class Reducedness : uint8_t { Reduced, Undetermined };

// Sufficient criterion for the lattice of the origami to be all of Z^2: the
// gcd of horizontal gaps between singular corners along sigma_a-cycles must be
// 1, and likewise vertically along sigma_b-cycles.  A square is a singular
// corner iff it lies on a commutator cycle of length >= 2.  With no singular
// corners (torus covers) the criterion is silent — Undetermined — except for
// the 1-square torus, which is Reduced by convention.
Reducedness is_reduced_sufficient(const Origami& o);

// Text form "d; sigma_a=(cycles); sigma_b=(cycles)", 1-based cycles, fixed
// points omitted on print, whitespace-insensitive on parse.
std::string to_text(const Origami& o);
Origami origami_from_text(const std::string& text);

// JSON form {"d": d, "sigma_a": [...], "sigma_b": [...]} with 1-based image
// arrays (sigma[i] is the image of square i+1).
std::string to_json_text(const Origami& o);
Origami origami_from_json_text(const std::string& text);

}  // namespace origami
