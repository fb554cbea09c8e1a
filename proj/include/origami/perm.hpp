#pragma once
//
// Permutations of a finite set {0, ..., d-1}, stored as image arrays.
//
// Composition acts right-to-left: (u * v)(x) = u(v(x)), i.e. v is applied
// first.  All external text I/O uses 1-based cycle notation "(1,2,3)(4,5)"
// with fixed points omitted; everything internal is 0-based.
//
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace origami {

class Perm {
 public:
  Perm() = default;              // degree 0
  explicit Perm(int degree);     // identity on {0,...,degree-1}

  // Validates that `images` is a bijection of {0,...,d-1}; throws
  // std::invalid_argument otherwise.
  static Perm from_images(std::vector<int> images);

  // Parses 1-based cycle notation, e.g. "(1,2,3)(4,5)" or "()"; whitespace is
  // ignored and cycles may use commas or spaces as separators.  Entries must
  // lie in 1..degree and may not repeat.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long k) const;

  // (u * v)(x) = u(v(x))
  friend Perm operator*(const Perm& u, const Perm& v);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // 1-based cycle notation with fixed points omitted; identity prints "()".
  std::string to_cycles() const;

 private:
  std::vector<int> img_;
};

// u v u^-1 v^-1
Perm commutator(const Perm& u, const Perm& v);

// Multiset of cycle lengths (fixed points included), sorted ascending.
std::vector<int> cycle_type(const Perm& p);

// +1 for even permutations, -1 for odd ones.
int permutation_sign(const Perm& p);

// True iff the group generated by `gens` acts transitively on {0,...,d-1}.
// All generators must have degree d; d must be at least 1.
bool is_transitive(std::span<const Perm> gens, int degree);

}  // namespace origami
