#include "origami/builders.hpp"

#include <numeric>
#include <stdexcept>

namespace origami {
namespace {

void validate_stratum(const std::vector<int>& stratum) {
  int odd = 0;
  for (int a : stratum) {
    if (a < 1) throw std::invalid_argument("stratum entries must be >= 1");
    if (a % 2 != 0) ++odd;
  }
  if (odd % 2 != 0)
    throw std::invalid_argument(
        "invalid stratum: the number of odd entries must be even (got " + std::to_string(odd) +
        " odd entries)");
}

Perm full_cycle(int d) {
  std::vector<int> img(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) img[static_cast<size_t>(i)] = (i + 1) % d;
  return Perm::from_images(std::move(img));
}

// Writes one cycle (shift+c[0] shift+c[1] ...) into the image array (0-based).
void place_cycle(std::vector<int>& img, int shift, std::initializer_list<int> cycle0) {
  const std::vector<int> c(cycle0);
  for (size_t i = 0; i < c.size(); ++i)
    img[static_cast<size_t>(shift + c[i])] = shift + c[(i + 1) % c.size()];
}

// k consecutive 3-cycles starting at `shift` (0-based squares).
void place_even_block(std::vector<int>& img, int shift, int k) {
  for (int j = 0; j < k; ++j) place_cycle(img, shift + 3 * j, {0, 1, 2});
}

// k1 3-cycles, the 5-cycle (3k1+1, 3k1+5, 3k1+2, 3k1+3, 3k1+4) in 1-based
// terms, then k2 3-cycles.
void place_odd_pair_block(std::vector<int>& img, int shift, int k1, int k2) {
  place_even_block(img, shift, k1);
  place_cycle(img, shift + 3 * k1, {0, 4, 1, 2, 3});
  place_even_block(img, shift + 3 * k1 + 5, k2);
}

}  // namespace

Origami build_even(int alpha, int l) {
  if (alpha < 2 || alpha % 2 != 0) throw std::invalid_argument("build_even: alpha must be even and >= 2");
  if (l < 1) throw std::invalid_argument("build_even: l must be >= 1");
  const int k = alpha / 2;
  const int d = 3 * k + l;
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  place_even_block(img, 0, k);
  return make_origami(full_cycle(d), Perm::from_images(std::move(img)));
}

Origami build_odd_pair(int alpha1, int alpha2, int l) {
  if (alpha1 < 1 || alpha1 % 2 == 0 || alpha2 < 1 || alpha2 % 2 == 0)
    throw std::invalid_argument("build_odd_pair: alphas must be odd and >= 1");
  if (l < 1) throw std::invalid_argument("build_odd_pair: l must be >= 1");
  const int k1 = (alpha1 - 1) / 2, k2 = (alpha2 - 1) / 2;
  const int d = 3 * (k1 + k2) + 5 + l;
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  place_odd_pair_block(img, 0, k1, k2);
  return make_origami(full_cycle(d), Perm::from_images(std::move(img)));
}

Origami build_stratum_origami(const std::vector<int>& stratum, int l) {
  validate_stratum(stratum);
  if (l < 1) throw std::invalid_argument("build_stratum_origami: l must be >= 1");
  if (stratum.empty()) {
    // Torus covers: one row of l squares.
    return make_origami(full_cycle(l), Perm(l));
  }
  const long long d_ll = expected_size(stratum, l);
  const int d = static_cast<int>(d_ll);
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);

  // Even blocks first (input order), then odd entries paired consecutively.
  // Block footprints: 3k + 1 squares per even entry, 3(k1 + k2) + 6 per odd
  // pair — each block carries one trailing cylinder square; the final l - 1
  // squares extend the cylinder further.
  int shift = 0;
  for (int a : stratum) {
    if (a % 2 != 0) continue;
    place_even_block(img, shift, a / 2);
    shift += 3 * (a / 2) + 1;
  }
  int pending = -1;
  for (int a : stratum) {
    if (a % 2 == 0) continue;
    if (pending < 0) {
      pending = a;
    } else {
      const int k1 = (pending - 1) / 2, k2 = (a - 1) / 2;
      place_odd_pair_block(img, shift, k1, k2);
      shift += 3 * (k1 + k2) + 6;
      pending = -1;
    }
  }
  return make_origami(full_cycle(d), Perm::from_images(std::move(img)));
}

long long expected_size(const std::vector<int>& stratum, long long l) {
  validate_stratum(stratum);
  if (l < 1) throw std::invalid_argument("expected_size: l must be >= 1");
  if (stratum.empty()) return l;
  long long sum = 0, evens = 0, odds = 0;
  for (int a : stratum) {
    sum += a;
    (a % 2 == 0 ? evens : odds) += 1;
  }
  return 3 * sum / 2 + evens + 3 * (odds / 2) + l - 1;
}

int odd_pair_count(const std::vector<int>& stratum) {
  validate_stratum(stratum);
  int odds = 0;
  for (int a : stratum)
    if (a % 2 != 0) ++odds;
  return odds / 2;
}

}  // namespace origami
