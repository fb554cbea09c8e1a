#include "origami/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace origami {

Perm::Perm(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
  img_.resize(static_cast<size_t>(degree));
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  const int d = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<size_t>(d), 0);
  for (int v : images) {
    if (v < 0 || v >= d) throw std::invalid_argument("permutation image out of range");
    if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("permutation image repeated");
    seen[static_cast<size_t>(v)] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  Perm p(degree);
  std::vector<char> used(static_cast<size_t>(degree), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycle notation: expected entry or ')'");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw std::invalid_argument("cycle notation: entry out of range");
        ++i;
      }
      if (v < 1) throw std::invalid_argument("cycle notation: entries are 1-based");
      if (used[static_cast<size_t>(v - 1)])
        throw std::invalid_argument("cycle notation: entry repeated");
      used[static_cast<size_t>(v - 1)] = 1;
      cycle.push_back(static_cast<int>(v - 1));
    }
    for (size_t k = 0; k < cycle.size(); ++k)
      p.img_[static_cast<size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[static_cast<size_t>(x)] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (int x = 0; x < degree(); ++x) r.img_[static_cast<size_t>(img_[static_cast<size_t>(x)])] = x;
  return r;
}

Perm operator*(const Perm& u, const Perm& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("composing permutations of different degree");
  Perm r(u.degree());
  for (int x = 0; x < u.degree(); ++x) r.img_[static_cast<size_t>(x)] = u(v(x));
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Perm acc(degree());
  while (e != 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Perm::to_cycles() const {
  std::vector<char> seen(img_.size(), 0);
  std::string out;
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)] || img_[static_cast<size_t>(start)] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      seen[static_cast<size_t>(x)] = 1;
      x = img_[static_cast<size_t>(x)];
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm commutator(const Perm& u, const Perm& v) { return u * v * u.inverse() * v.inverse(); }

std::vector<int> cycle_type(const Perm& p) {
  std::vector<char> seen(static_cast<size_t>(p.degree()), 0);
  std::vector<int> type;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0, x = start;
    do {
      seen[static_cast<size_t>(x)] = 1;
      x = p(x);
      ++len;
    } while (x != start);
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

int permutation_sign(const Perm& p) {
  int even_cycles = 0;
  for (int len : cycle_type(p))
    if (len % 2 == 0) ++even_cycles;
  return even_cycles % 2 == 0 ? 1 : -1;
}

bool is_transitive(std::span<const Perm> gens, int degree) {
  if (degree < 1) throw std::invalid_argument("is_transitive: degree must be >= 1");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("is_transitive: degree mismatch");
  // Forward edges suffice: permutations have finite order, so the generated
  // semigroup is already the generated group.
  std::vector<char> seen(static_cast<size_t>(degree), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& g : gens) {
      int y = g(x);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++visited;
        stack.push_back(y);
      }
    }
  }
  return visited == degree;
}

}  // namespace origami
