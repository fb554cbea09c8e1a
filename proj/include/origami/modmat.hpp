#pragma once
//
// 2x2 matrices over Z/n and subgroup closure enumeration.
//
// |SL(2,Z/n)| = n^3 * prod_{p | n} (1 - p^-2); group_closure_mod() computes
// the order of the subgroup generated by a set of invertible matrices by
// breadth-first right multiplication (a finite sub-semigroup containing the
// identity is a subgroup, so forward products suffice).  The inner loop runs
// through the batched kernel in closure_kernel.hpp.
//
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "origami/sl2.hpp"

namespace origami {

struct MatMod {
  uint32_t n = 1;            // modulus, >= 1
  uint16_t a = 0, b = 0, c = 0, d = 0;  // entries in [0, n)

  friend bool operator==(const MatMod&, const MatMod&) = default;
};

MatMod reduce_mod(const Mat2& m, uint32_t n);
uint32_t det_mod(const MatMod& m);
bool is_invertible_mod(const MatMod& m);  // det a unit mod n
MatMod mm_mul(const MatMod& x, const MatMod& y);
MatMod mm_inv(const MatMod& m);           // throws std::domain_error if det is not a unit
MatMod mm_identity(uint32_t n);
MatMod t_power_mod(uint32_t n, long long e);  // [[1, e mod n],[0,1]]

// Word evaluated directly mod n (overflow-free for any exponents).
MatMod eval_word_mod(const Word& w, uint32_t n);

// Exact |SL(2,Z/n)|; throws std::overflow_error if it does not fit in 64 bits.
long long sl2_order_mod(uint32_t n);

struct ClosureOptions {
  long long cap = 10'000'000;  // refuse moduli with sl2_order_mod(n) > cap
  long long stop_at = 0;       // early exit once this many elements are found (0 = never)
};

// Order of the subgroup of GL(2,Z/n) generated by `gens` (all reduced mod the
// same n, all invertible).  {} generates the trivial group.  If stop_at > 0
// and the closure reaches that size, returns stop_at immediately — callers
// comparing against a known target group order use this to exit early.
long long group_closure_mod(std::span<const MatMod> gens, const ClosureOptions& opts = {});

}  // namespace origami
