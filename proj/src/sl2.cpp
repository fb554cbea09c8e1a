#include "origami/sl2.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace origami {
namespace {

using i128 = __int128;

long long checked(i128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error(std::string("2x2 integer matrix overflow in ") + what);
  return static_cast<long long>(v);
}

void require_unimodular(const Mat2& m, const char* what) {
  if (det(m) != 1) throw std::domain_error(std::string(what) + ": matrix must have determinant 1");
}

}  // namespace

long long det(const Mat2& m) {
  return checked(i128(m.a) * m.d - i128(m.b) * m.c, "det");
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{checked(i128(x.a) * y.a + i128(x.b) * y.c, "mul"),
              checked(i128(x.a) * y.b + i128(x.b) * y.d, "mul"),
              checked(i128(x.c) * y.a + i128(x.d) * y.c, "mul"),
              checked(i128(x.c) * y.b + i128(x.d) * y.d, "mul")};
}

Mat2 inverse(const Mat2& m) {
  require_unimodular(m, "inverse");
  return Mat2{m.d, -m.b, -m.c, m.a};
}

Mat2 mat_pow(const Mat2& m, long long k) {
  Mat2 base = m;
  unsigned long long e;
  if (k < 0) {
    base = inverse(m);
    e = -static_cast<unsigned long long>(k);
  } else {
    e = static_cast<unsigned long long>(k);
  }
  Mat2 acc = kIdentity;
  while (e != 0) {
    if (e & 1) acc = acc * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return acc;
}

std::string mat_to_text(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
         "," + std::to_string(m.d) + "]]";
}

Mat2 mat_from_text(const std::string& text) {
  // Expected shape: [[a,b],[c,d]] with arbitrary interior whitespace.
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument("matrix text: expected '" + std::string(1, c) + "'");
    ++i;
  };
  auto number = [&]() -> long long {
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("matrix text: expected integer");
    i128 v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > std::numeric_limits<long long>::max())
        throw std::invalid_argument("matrix text: integer out of range");
      ++i;
    }
    return neg ? -static_cast<long long>(v) : static_cast<long long>(v);
  };
  Mat2 m;
  expect('[');
  expect('[');
  m.a = number();
  expect(',');
  m.b = number();
  expect(']');
  expect(',');
  expect('[');
  m.c = number();
  expect(',');
  m.d = number();
  expect(']');
  expect(']');
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("matrix text: trailing characters");
  return m;
}

void Word::normalize() {
  std::vector<Letter> out;
  for (const Letter& l : letters) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().kind == l.kind) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters = std::move(out);
}

Word Word::concat(const Word& rhs) const {
  Word w;
  w.letters = letters;
  w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
  w.normalize();
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(Letter{it->kind, -it->exp});
  return w;
}

std::string Word::to_text() const {
  if (letters.empty()) return "e";
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    out += l.kind == LetterKind::S ? 'S' : 'T';
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

Word Word::from_text(const std::string& text) {
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    if (c == 'e' && w.letters.empty()) {
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i != text.size()) throw std::invalid_argument("word text: 'e' must stand alone");
      return w;
    }
    if (c != 'S' && c != 'T') throw std::invalid_argument("word text: expected 'S' or 'T'");
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("word text: expected exponent");
      exp = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > (1ll << 62)) throw std::invalid_argument("word text: exponent out of range");
        ++i;
      }
      if (neg) exp = -exp;
    }
    w.letters.push_back(Letter{c == 'S' ? LetterKind::S : LetterKind::T, exp});
  }
  w.normalize();
  return w;
}

Word word_s(long long exp) {
  Word w;
  w.letters.push_back(Letter{LetterKind::S, exp});
  w.normalize();
  return w;
}

Word word_t(long long exp) {
  Word w;
  w.letters.push_back(Letter{LetterKind::T, exp});
  w.normalize();
  return w;
}

Mat2 eval_word(const Word& w) {
  Mat2 acc = kIdentity;
  for (const Letter& l : w.letters) {
    if (l.kind == LetterKind::T) {
      // T^e = [[1,e],[0,1]] without repeated multiplication.
      acc = acc * Mat2{1, l.exp, 0, 1};
    } else {
      long long e = ((l.exp % 4) + 4) % 4;  // S has order 4
      acc = acc * mat_pow(kS, e);
    }
  }
  return acc;
}

Word decompose_word(const Mat2& m_in) {
  if (det(m_in) != 1) throw std::domain_error("decompose_word: matrix must have determinant 1");
  Word w;
  Mat2 m = m_in;
  // Peel factors off the left: emitting T^q and S while keeping the invariant
  // (emitted word) * m == m_in.  |c| strictly decreases, so this terminates.
  while (m.c != 0) {
    long long q = m.a / m.c;  // truncation gives |a - q c| < |c|
    if (q != 0) {
      w.letters.push_back(Letter{LetterKind::T, q});
      m = Mat2{checked(i128(m.a) - i128(q) * m.c, "decompose"),
               checked(i128(m.b) - i128(q) * m.d, "decompose"), m.c, m.d};
    }
    w.letters.push_back(Letter{LetterKind::S, 1});
    m = Mat2{m.c, m.d, checked(-i128(m.a), "decompose"), checked(-i128(m.b), "decompose")};  // S^-1 m
  }
  // Now c = 0 and a d = 1, so m = ±T^(±b).
  if (m.a == 1) {
    if (m.b != 0) w.letters.push_back(Letter{LetterKind::T, m.b});
  } else {
    if (m.b != 0) w.letters.push_back(Letter{LetterKind::T, checked(-i128(m.b), "decompose")});
    w.letters.push_back(Letter{LetterKind::S, 2});  // -I
  }
  w.normalize();
  return w;
}

}  // namespace origami
