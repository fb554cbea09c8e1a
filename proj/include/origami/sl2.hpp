#pragma once
//
// Exact 2x2 integer matrices and words in the standard generators of SL(2,Z).
//
//   S = [[0,-1],[1,0]]   T = [[1,1],[0,1]]   T' = [[1,0],[1,1]]
//   T'' = T' T T'^-1 = [[0,1],[-1,2]]
//
// Arithmetic uses 64-bit entries with __int128 intermediates and throws
// std::overflow_error instead of wrapping.  A Word is a normalized list of
// letters S^e / T^e (nonzero exponents, no two adjacent letters of the same
// kind); its text form looks like "S T^3 S^-1 T^-2".  decompose_word() writes
// any unimodular matrix as such a word by continued-fraction reduction, and
// evaluating the word left-to-right reproduces the matrix exactly, sign
// included (-I comes out as S^2).
//
#include <cstdint>
#include <string>
#include <vector>

namespace origami {

struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;  // row-major [[a,b],[c,d]]

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline constexpr Mat2 kIdentity{1, 0, 0, 1};
inline constexpr Mat2 kMinusIdentity{-1, 0, 0, -1};
inline constexpr Mat2 kS{0, -1, 1, 0};
inline constexpr Mat2 kT{1, 1, 0, 1};
inline constexpr Mat2 kTPrime{1, 0, 1, 1};        // T' = lower triangular
inline constexpr Mat2 kTDoublePrime{0, 1, -1, 2}; // T'' = T' T T'^-1

long long det(const Mat2& m);   // overflow-checked
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 inverse(const Mat2& m);    // requires det = 1
Mat2 mat_pow(const Mat2& m, long long k);  // negative k inverts (det 1 required)

// "[[a,b],[c,d]]"; parsing ignores whitespace.
std::string mat_to_text(const Mat2& m);
Mat2 mat_from_text(const std::string& text);

enum class LetterKind : uint8_t { S, T };

struct Letter {
  LetterKind kind;
  long long exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  // Merges adjacent letters of the same kind and drops zero exponents.
  void normalize();
  Word concat(const Word& rhs) const;  // this followed (on the right) by rhs
  Word inverse() const;
  bool empty() const { return letters.empty(); }

  std::string to_text() const;                    // "S T^3 S^-1 T^-2"; empty word is "e"
  static Word from_text(const std::string& text);

  friend bool operator==(const Word&, const Word&) = default;
};

Word word_s(long long exp = 1);
Word word_t(long long exp = 1);

// Left-to-right matrix product of the letters (leftmost letter is the leftmost
// factor).  Overflow-checked.
Mat2 eval_word(const Word& w);

// Writes m (det must be 1) as a word in S and T; eval_word(decompose_word(m))
// equals m exactly.
Word decompose_word(const Mat2& m);

}  // namespace origami
