#pragma once
//
// One-cylinder origami builders: for every stratum these produce an origami
// whose horizontal direction is a single cylinder of circumference d.
//
// sigma_a is always the full d-cycle (1 2 ... d).  sigma_b is a product of
// small blocks: an even cone order alpha = 2k contributes k consecutive
// 3-cycles; a pair of odd cone orders (alpha_1, alpha_2) with k_i =
// (alpha_i - 1)/2 contributes k_1 3-cycles, one special 5-cycle and k_2 more
// 3-cycles.  Blocks for a whole stratum are laid side by side (even entries
// first, then the odd entries in consecutive pairs), and l - 1 extra squares
// extend the cylinder on the right.  Vertical cylinders all have circumference
// 1, 3 or 5, and the diagonal direction decomposes as one cylinder of
// circumference L - 4q plus 2q of circumference 2, where L = d and q is the
// number of odd pairs.
//
#include <vector>

#include "origami/origami.hpp"

namespace origami {

// Even alpha >= 2, l >= 1; degree 3(alpha/2) + l.
Origami build_even(int alpha, int l);

// Odd alpha1, alpha2 >= 1, l >= 1; degree 3(k1 + k2) + 5 + l.
Origami build_odd_pair(int alpha1, int alpha2, int l);

// Any stratum (all entries >= 1, evenly many odd entries) and l >= 1.  Entry
// order is preserved: even entries become blocks in their given order, odd
// entries are paired consecutively in their given order.  The empty stratum
// yields the l-square one-row torus cover.  Throws std::invalid_argument on
// an odd count of odd entries, quoting the parity rule.
Origami build_stratum_origami(const std::vector<int>& stratum, int l);

// Degree the builder will produce: (3/2) sum(alpha) + #evens + 3 #odd_pairs
// + l - 1 for nonempty strata, l for the empty stratum.
long long expected_size(const std::vector<int>& stratum, long long l);

// Number of odd pairs in a stratum (stratum entries are validated).
int odd_pair_count(const std::vector<int>& stratum);

}  // namespace origami
