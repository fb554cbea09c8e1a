#include "origami/modmat.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "origami/closure_kernel.hpp"
#include "origami/numtheory.hpp"

namespace origami {
namespace {

uint32_t mod_pos(long long v, uint32_t n) {
  long long r = v % static_cast<long long>(n);
  if (r < 0) r += n;
  return static_cast<uint32_t>(r);
}

// Extended gcd inverse of a mod n; nullopt if gcd(a, n) != 1.
std::optional<uint32_t> inv_mod(uint32_t a, uint32_t n) {
  long long t = 0, new_t = 1, r = n, new_r = a % n;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += n;
  return static_cast<uint32_t>(t);
}

void require_same_modulus(const MatMod& x, const MatMod& y, const char* what) {
  if (x.n != y.n) throw std::invalid_argument(std::string(what) + ": mixed moduli");
}

}  // namespace

MatMod reduce_mod(const Mat2& m, uint32_t n) {
  if (n < 1) throw std::invalid_argument("reduce_mod: modulus must be >= 1");
  if (n > 65535) throw std::invalid_argument("reduce_mod: modulus too large (max 65535)");
  return MatMod{n, static_cast<uint16_t>(mod_pos(m.a, n)), static_cast<uint16_t>(mod_pos(m.b, n)),
                static_cast<uint16_t>(mod_pos(m.c, n)), static_cast<uint16_t>(mod_pos(m.d, n))};
}

uint32_t det_mod(const MatMod& m) {
  const uint64_t ad = static_cast<uint64_t>(m.a) * m.d;
  const uint64_t bc = static_cast<uint64_t>(m.b) * m.c;
  return static_cast<uint32_t>((ad + static_cast<uint64_t>(m.n) * m.n - bc) % m.n);
}

bool is_invertible_mod(const MatMod& m) {
  if (m.n == 1) return true;
  return std::gcd(det_mod(m), m.n) == 1;
}

MatMod mm_mul(const MatMod& x, const MatMod& y) {
  require_same_modulus(x, y, "mm_mul");
  const uint64_t n = x.n;
  auto e = [&](uint64_t p, uint64_t q) { return static_cast<uint16_t>((p + q) % n); };
  return MatMod{x.n,
                e(static_cast<uint64_t>(x.a) * y.a % n, static_cast<uint64_t>(x.b) * y.c % n),
                e(static_cast<uint64_t>(x.a) * y.b % n, static_cast<uint64_t>(x.b) * y.d % n),
                e(static_cast<uint64_t>(x.c) * y.a % n, static_cast<uint64_t>(x.d) * y.c % n),
                e(static_cast<uint64_t>(x.c) * y.b % n, static_cast<uint64_t>(x.d) * y.d % n)};
}

MatMod mm_inv(const MatMod& m) {
  auto di = inv_mod(det_mod(m), m.n);
  if (m.n == 1) return m;
  if (!di) throw std::domain_error("mm_inv: determinant is not a unit");
  const uint64_t n = m.n, u = *di;
  auto e = [&](uint64_t v) { return static_cast<uint16_t>(v * u % n); };
  // adjugate * det^-1; entries -b, -c lifted to [0, n).
  return MatMod{m.n, e(m.d), e((n - m.b) % n), e((n - m.c) % n), e(m.a)};
}

MatMod mm_identity(uint32_t n) {
  if (n < 1) throw std::invalid_argument("mm_identity: modulus must be >= 1");
  return MatMod{n, static_cast<uint16_t>(1 % n), 0, 0, static_cast<uint16_t>(1 % n)};
}

MatMod t_power_mod(uint32_t n, long long e) {
  MatMod m = mm_identity(n);
  m.b = static_cast<uint16_t>(mod_pos(e, n));
  return m;
}

MatMod eval_word_mod(const Word& w, uint32_t n) {
  MatMod acc = mm_identity(n);
  const MatMod s = reduce_mod(kS, n);
  for (const Letter& l : w.letters) {
    if (l.kind == LetterKind::T) {
      acc = mm_mul(acc, t_power_mod(n, l.exp));
    } else {
      long long e = ((l.exp % 4) + 4) % 4;
      for (long long i = 0; i < e; ++i) acc = mm_mul(acc, s);
    }
  }
  return acc;
}

long long sl2_order_mod(uint32_t n) {
  if (n < 1) throw std::invalid_argument("sl2_order_mod: modulus must be >= 1");
  if (n == 1) return 1;
  unsigned __int128 order = static_cast<unsigned __int128>(n) * n * n;
  for (uint64_t p : prime_divisors_u64(n)) {
    order = order / (p * p) * (p * p - 1);
  }
  if (order > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
    throw std::overflow_error("sl2_order_mod: order exceeds 64 bits");
  return static_cast<long long>(order);
}

long long group_closure_mod(std::span<const MatMod> gens, const ClosureOptions& opts) {
  uint32_t n = gens.empty() ? 1 : gens.front().n;
  for (const MatMod& g : gens) {
    if (g.n != n) throw std::invalid_argument("group_closure_mod: mixed moduli");
    if (!is_invertible_mod(g)) throw std::domain_error("group_closure_mod: generator not invertible");
  }
  if (n == 1) return 1;
  if (sl2_order_mod(n) > opts.cap)
    throw std::length_error("group_closure_mod: sl2_order_mod(n) exceeds the configured cap");
  if (n > 255) {
    // Outside the batched kernel's domain (cannot occur under the default cap);
    // plain scalar closure on 64-bit keys.
    auto key = [&](const MatMod& m) {
      return ((static_cast<uint64_t>(m.a) * n + m.b) * n + m.c) * n + m.d;
    };
    std::unordered_set<uint64_t> seen;
    std::vector<MatMod> elems = {mm_identity(n)};
    seen.insert(key(elems[0]));
    for (size_t head = 0; head < elems.size(); ++head) {
      for (const MatMod& g : gens) {
        MatMod w = mm_mul(elems[head], g);
        if (seen.insert(key(w)).second) {
          elems.push_back(w);
          if (opts.stop_at > 0 && static_cast<long long>(elems.size()) >= opts.stop_at)
            return opts.stop_at;
        }
      }
    }
    return static_cast<long long>(elems.size());
  }

  // Batched closure: elements live in four u16 entry arrays; the visited set
  // keys pack the four entries (each < 256) into a u32.
  std::vector<uint16_t> ea, eb, ec, ed;
  std::unordered_set<uint32_t> seen;
  seen.reserve(1024);
  auto push_if_new = [&](uint16_t a, uint16_t b, uint16_t c, uint16_t d) {
    const uint32_t k = static_cast<uint32_t>(a) | static_cast<uint32_t>(b) << 8 |
                       static_cast<uint32_t>(c) << 16 | static_cast<uint32_t>(d) << 24;
    if (seen.insert(k).second) {
      ea.push_back(a);
      eb.push_back(b);
      ec.push_back(c);
      ed.push_back(d);
      return true;
    }
    return false;
  };
  const MatMod id = mm_identity(n);
  push_if_new(id.a, id.b, id.c, id.d);

  // Deduplicated generator entry quadruples.
  std::vector<std::array<uint16_t, 4>> gen_entries;
  for (const MatMod& g : gens) {
    std::array<uint16_t, 4> q{g.a, g.b, g.c, g.d};
    bool dup = false;
    for (const auto& h : gen_entries) dup = dup || h == q;
    if (!dup) gen_entries.push_back(q);
  }

  const kernel::BatchMulFn mul = kernel::active_batch_mul();
  std::vector<uint16_t> sa, sb, sc, sd;  // scratch for one block of products
  size_t head = 0;
  while (head < ea.size()) {
    const size_t block = std::min<size_t>(ea.size() - head, 4096);
    sa.resize(block);
    sb.resize(block);
    sc.resize(block);
    sd.resize(block);
    const uint16_t* in[4] = {ea.data() + head, eb.data() + head, ec.data() + head,
                             ed.data() + head};
    uint16_t* out[4] = {sa.data(), sb.data(), sc.data(), sd.data()};
    for (const auto& g : gen_entries) {
      const uint16_t gq[4] = {g[0], g[1], g[2], g[3]};
      mul(in, gq, out, block, static_cast<uint16_t>(n));
      // The in[] pointers above stay valid: push_if_new may reallocate the
      // entry arrays, so re-derive them after each generator's inserts.
      for (size_t k = 0; k < block; ++k) {
        if (push_if_new(sa[k], sb[k], sc[k], sd[k]) && opts.stop_at > 0 &&
            static_cast<long long>(ea.size()) >= opts.stop_at)
          return opts.stop_at;
      }
      in[0] = ea.data() + head;
      in[1] = eb.data() + head;
      in[2] = ec.data() + head;
      in[3] = ed.data() + head;
    }
    head += block;
  }
  return static_cast<long long>(ea.size());
}

}  // namespace origami
