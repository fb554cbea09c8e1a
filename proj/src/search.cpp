#include "origami/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "origami/builders.hpp"
#include "origami/numtheory.hpp"

namespace origami {
namespace {

int mod_pos(long long v, int m) {
  int r = static_cast<int>(v % m);
  return r < 0 ? r + m : r;
}

SearchResult make_result(const std::vector<int>& stratum, long long l, long long L, long long q) {
  SearchResult r;
  r.stratum = stratum;
  r.l = l;
  r.L = L;
  r.q = q;
  r.gcd_L_30q = std::gcd(L, 30 * q);
  r.Lm4q_mod3 = mod_pos(L - 4 * q, 3);
  r.Lm4q_mod5 = mod_pos(L - 4 * q, 5);
  return r;
}

}  // namespace

bool check_conditions(long long L, long long q) {
  if (std::gcd(L, 30 * q) != 1) return false;  // gcd(L, 0) = L: q = 0 never passes
  const long long diff = L - 4 * q;
  return mod_pos(diff, 3) != 0 && mod_pos(diff, 5) != 0;
}

SearchOutcome find_l(const std::vector<int>& stratum, long long l_max) {
  const long long q = odd_pair_count(stratum);  // validates the stratum
  SearchOutcome out;
  if (q == 0) {
    out.q_zero_vacuous = true;
    out.diagnostic =
        "stratum has no odd entries (q = 0), so gcd(L, 30q) = L > 1 for every l; "
        "the one-cylinder criterion is vacuous here";
    return out;
  }
  for (long long l = 1; l <= l_max; ++l) {
    const long long L = expected_size(stratum, l);
    if (check_conditions(L, q)) out.results.push_back(make_result(stratum, l, L, q));
  }
  return out;
}

SearchOutcome find_prime_l(const std::vector<int>& stratum, int count) {
  const long long q = odd_pair_count(stratum);
  if (q == 0)
    throw std::invalid_argument(
        "find_prime_l: stratum has no odd entries (q = 0); the criterion is vacuous");
  if (count < 1) throw std::invalid_argument("find_prime_l: count must be >= 1");

  auto residue = [&](int m) {
    const int r = mod_pos(4 * q + 1, m);
    return r != 0 ? r : mod_pos(4 * q + 2, m);
  };
  const int r3 = residue(3), r5 = residue(5);

  SearchOutcome out;
  const long long base = expected_size(stratum, 1) - 1;  // L = base + l
  constexpr long long kLimit = (1ll << 62);
  for (long long l = 1; static_cast<int>(out.results.size()) < count; ++l) {
    const long long L = base + l;
    if (L > kLimit) {
      out.exhausted = true;
      out.diagnostic = "search stopped before exceeding 63-bit L";
      break;
    }
    if (L <= 4 * q || mod_pos(L, 3) != r3 || mod_pos(L, 5) != r5) continue;
    if (!is_prime_u64(static_cast<uint64_t>(L))) continue;
    SearchResult r = make_result(stratum, l, L, q);
    r.primality_checked = true;
    r.L_is_prime = true;
    out.results.push_back(std::move(r));
  }
  return out;
}

std::vector<ParabolicWitness> harvest_parabolics(const Origami& o, int radius, SConvention conv) {
  if (radius < 0) throw std::invalid_argument("harvest_parabolics: radius must be >= 0");

  // Deterministic enumeration of group elements as words over
  // {S^±1, T^±1, T'^±1}, deduplicated by exact matrix; T' = T S T as a word.
  struct Candidate {
    Mat2 B;
    Word word;
  };
  const Word wTp = word_t(1).concat(word_s(1)).concat(word_t(1));
  const std::pair<Mat2, Word> alphabet[6] = {
      {kS, word_s(1)},        {inverse(kS), word_s(-1)},      {kT, word_t(1)},
      {inverse(kT), word_t(-1)}, {kTPrime, wTp}, {inverse(kTPrime), wTp.inverse()}};

  std::vector<Candidate> frontier = {{kIdentity, Word{}}};
  std::vector<Candidate> all = frontier;
  auto seen_key = [](const Mat2& m) {
    return std::array<long long, 4>{m.a, m.b, m.c, m.d};
  };
  std::map<std::array<long long, 4>, bool> seen;
  seen[seen_key(kIdentity)] = true;
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<Candidate> next;
    for (const Candidate& c : frontier) {
      for (const auto& [mat, w] : alphabet) {
        Candidate nc{c.B * mat, c.word.concat(w)};
        auto [it, fresh] = seen.emplace(seen_key(nc.B), true);
        (void)it;
        if (fresh) {
          next.push_back(nc);
          all.push_back(next.back());
        }
      }
    }
    frontier = std::move(next);
  }

  // For each B: cylinders of B^-1 . o give witnesses (B, m_h) and (B S, m_v).
  std::vector<ParabolicWitness> raw;
  for (const Candidate& c : all) {
    const Origami image = apply_word(o, c.word.inverse(), conv);
    auto lcm_of = [](const std::vector<int>& lens) {
      long long m = 1;
      for (int v : lens) m = std::lcm(m, static_cast<long long>(v));
      return m;
    };
    raw.push_back(ParabolicWitness{c.B, lcm_of(cylinders(image, Direction::Horizontal)),
                                   Provenance::Harvested});
    raw.push_back(ParabolicWitness{c.B * kS, lcm_of(cylinders(image, Direction::Vertical)),
                                   Provenance::Harvested});
  }

  // Prune per direction (first column up to sign): drop exact duplicates and
  // any modulus that is a proper multiple of a kept one.
  auto direction_key = [](const Mat2& A) {
    long long x = A.a, y = A.c;
    if (x < 0 || (x == 0 && y < 0)) {
      x = -x;
      y = -y;
    }
    return std::pair<long long, long long>{x, y};
  };
  std::vector<ParabolicWitness> out;
  for (const ParabolicWitness& w : raw) {
    bool drop = false;
    for (const ParabolicWitness& kept : out) {
      if (direction_key(kept.A) == direction_key(w.A) && w.m % kept.m == 0) {
        drop = true;  // same direction, equal or coarser modulus
        break;
      }
    }
    if (drop) continue;
    // Remove already-kept witnesses this one strictly refines.
    std::erase_if(out, [&](const ParabolicWitness& kept) {
      return direction_key(kept.A) == direction_key(w.A) && kept.m % w.m == 0;
    });
    out.push_back(w);
  }
  return out;
}

}  // namespace origami
