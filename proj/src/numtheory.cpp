#include "origami/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace origami {
namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// One strong-pseudoprime round; n odd, n > 2, n - 1 = d * 2^s.
bool miller_rabin_round(uint64_t n, uint64_t a, uint64_t d, int s) {
  a %= n;
  if (a == 0) return true;
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

uint64_t pollard_rho(uint64_t n) {
  // Brent's variant; n must be odd composite and not a prime power issue-free.
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t q = 1;
    int steps = 0;
    auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with next c
      q = mulmod_u64(q, diff, n);
      if (++steps % 64 == 0 || q == 0) {
        d = std::gcd(q == 0 ? diff : q, n);
        q = 1;
      }
    }
    if (d == 1 && x != y) d = std::gcd(x > y ? x - y : y - x, n);
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 2^64 (Sinclair).
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
    if (!miller_rabin_round(n, a, d, s)) return false;
  return true;
}

std::vector<uint64_t> factorize_u64(uint64_t n) {
  std::vector<uint64_t> out;
  if (n == 0) return out;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint64_t> prime_divisors_u64(uint64_t n) {
  std::vector<uint64_t> f = factorize_u64(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

}  // namespace origami
