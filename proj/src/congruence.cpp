#include "origami/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "origami/numtheory.hpp"

namespace origami {

using json = nlohmann::ordered_json;

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Horizontal: return "horizontal";
    case Provenance::Vertical: return "vertical";
    case Provenance::Diagonal: return "diagonal";
    case Provenance::Harvested: return "harvested";
    case Provenance::User: return "user";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "horizontal") return Provenance::Horizontal;
  if (s == "vertical") return Provenance::Vertical;
  if (s == "diagonal") return Provenance::Diagonal;
  if (s == "harvested") return Provenance::Harvested;
  if (s == "user") return Provenance::User;
  throw std::invalid_argument("unknown witness provenance: " + s);
}

const char* to_string(CongruenceVerdict v) {
  switch (v) {
    case CongruenceVerdict::Congruence: return "congruence";
    case CongruenceVerdict::NonCongruence: return "non-congruence";
    case CongruenceVerdict::UndecidedCap: return "undecided (cap exceeded)";
  }
  return "?";
}

namespace {

bool closure_is_full(std::vector<MatMod> gens, uint32_t n, long long cap) {
  const long long target = sl2_order_mod(n);
  if (target > cap)
    throw std::length_error("image_is_full_mod: sl2_order_mod(n) exceeds the configured cap");
  ClosureOptions opts;
  opts.cap = cap;
  opts.stop_at = target;
  return group_closure_mod(gens, opts) == target;
}

// det([A1 e1 | A2 e1]) as an exact integer.
long long pair_det(const Mat2& x, const Mat2& y) {
  const __int128 v = static_cast<__int128>(x.a) * y.c - static_cast<__int128>(x.c) * y.a;
  if (v > static_cast<__int128>(9'223'372'036'854'775'807ll) ||
      v < -static_cast<__int128>(9'223'372'036'854'775'807ll) - 1)
    throw std::overflow_error("witness direction determinant overflow");
  return static_cast<long long>(v);
}

}  // namespace

bool image_is_full_mod(std::span<const Mat2> gens, uint32_t n, long long cap) {
  if (n < 1) throw std::invalid_argument("image_is_full_mod: modulus must be >= 1");
  if (n == 1) return true;
  std::vector<MatMod> reduced;
  reduced.reserve(gens.size() + 1);
  for (const Mat2& g : gens) reduced.push_back(reduce_mod(g, n));
  reduced.push_back(reduce_mod(kMinusIdentity, n));
  return closure_is_full(std::move(reduced), n, cap);
}

bool image_is_full_mod(std::span<const Word> gens, uint32_t n, long long cap) {
  if (n < 1) throw std::invalid_argument("image_is_full_mod: modulus must be >= 1");
  if (n == 1) return true;
  std::vector<MatMod> reduced;
  reduced.reserve(gens.size() + 1);
  for (const Word& w : gens) reduced.push_back(eval_word_mod(w, n));
  reduced.push_back(reduce_mod(kMinusIdentity, n));
  return closure_is_full(std::move(reduced), n, cap);
}

bool condition_A_holds(const Mat2& A1, const Mat2& A2, long long p) {
  if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p)))
    throw std::invalid_argument("condition_A_holds: p must be prime");
  return pair_det(A1, A2) % p != 0;
}

std::vector<ParabolicWitness> standard_witnesses(long long L, long long q) {
  if (q < 0 || L <= 4 * q)
    throw std::invalid_argument("standard_witnesses: need L > 4q >= 0");
  return {ParabolicWitness{kIdentity, L, Provenance::Horizontal},
          ParabolicWitness{kS, 15, Provenance::Vertical},
          ParabolicWitness{kTPrime, 2 * (L - 4 * q), Provenance::Diagonal}};
}

TncCertificate verify_certificate(std::vector<ParabolicWitness> witnesses) {
  if (witnesses.empty()) throw std::invalid_argument("verify_certificate: no witnesses");
  for (const ParabolicWitness& w : witnesses) {
    if (det(w.A) != 1) throw std::invalid_argument("verify_certificate: witness matrix must have det 1");
    if (w.m < 1) throw std::invalid_argument("verify_certificate: witness modulus must be positive");
  }
  TncCertificate cert;
  cert.witnesses = std::move(witnesses);
  const int k = static_cast<int>(cert.witnesses.size());

  // Pairwise direction determinants.
  std::vector<std::vector<long long>> D(static_cast<size_t>(k),
                                        std::vector<long long>(static_cast<size_t>(k), 0));
  long long gcd_nonzero = 0;
  bool any_nonzero = false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const long long d = pair_det(cert.witnesses[static_cast<size_t>(i)].A,
                                   cert.witnesses[static_cast<size_t>(j)].A);
      D[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
      if (d != 0) {
        any_nonzero = true;
        gcd_nonzero = std::gcd(gcd_nonzero, d);
      }
    }
  }
  if (!any_nonzero) {
    cert.valid = false;
    cert.reason = "all witness directions are proportional (every pair determinant is zero)";
    return cert;
  }

  // Primes that could interfere: divisors of any witness modulus, plus the
  // divisors of the gcd of the nonzero pair determinants.
  std::set<long long> primes;
  for (const ParabolicWitness& w : cert.witnesses)
    for (uint64_t p : prime_divisors_u64(static_cast<uint64_t>(w.m)))
      primes.insert(static_cast<long long>(p));
  for (uint64_t p : prime_divisors_u64(static_cast<uint64_t>(std::llabs(gcd_nonzero))))
    primes.insert(static_cast<long long>(p));

  cert.valid = true;
  for (long long p : primes) {
    PrimeCheck chk{p, false, -1, -1};
    for (int i = 0; i < k && !chk.ok; ++i) {
      if (cert.witnesses[static_cast<size_t>(i)].m % p == 0) continue;
      for (int j = i + 1; j < k && !chk.ok; ++j) {
        if (cert.witnesses[static_cast<size_t>(j)].m % p == 0) continue;
        const long long d = D[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (d != 0 && d % p != 0) {
          chk.ok = true;
          chk.i = i;
          chk.j = j;
        }
      }
    }
    if (!chk.ok) {
      cert.valid = false;
      if (!cert.reason.empty()) cert.reason += "; ";
      cert.reason += "no witness pair covers p = " + std::to_string(p);
    }
    cert.checked_primes.push_back(chk);
  }
  return cert;
}

std::optional<TncCertificate> deficiency_criterion(const Mat2& C1, long long m1, long long m1p,
                                                   const Mat2& C2, long long m2, long long m2p) {
  for (const Mat2* c : {&C1, &C2})
    if (det(*c) != 1) throw std::invalid_argument("deficiency_criterion: directions must have det 1");
  for (long long m : {m1, m1p, m2, m2p})
    if (m < 1) throw std::invalid_argument("deficiency_criterion: moduli must be positive");
  // gcd(m1 m1', m2 m2') over __int128 (the products may exceed 64 bits).
  __int128 x = static_cast<__int128>(m1) * m1p, y = static_cast<__int128>(m2) * m2p;
  while (y != 0) {
    const __int128 r = x % y;
    x = y;
    y = r;
  }
  if (x != 1) return std::nullopt;
  std::vector<ParabolicWitness> ws = {
      ParabolicWitness{C1, m1, Provenance::Horizontal},
      ParabolicWitness{C1 * kS, m1p, Provenance::Vertical},
      ParabolicWitness{C2, m2, Provenance::Horizontal},
      ParabolicWitness{C2 * kS, m2p, Provenance::Vertical}};
  return verify_certificate(std::move(ws));
}

CongruenceVerdict is_congruence_at_level(const CosetGraph& g, long long cap) {
  const CuspData cd = cusp_data(g);
  const long long level = cd.level;
  if (level > 65535) return CongruenceVerdict::UndecidedCap;  // outside MatMod's modulus range
  long long target;
  try {
    target = sl2_order_mod(static_cast<uint32_t>(level));
  } catch (const std::overflow_error&) {
    return CongruenceVerdict::UndecidedCap;
  }
  if (target > cap) return CongruenceVerdict::UndecidedCap;

  std::vector<MatMod> gens;
  for (const Word& w : stabilizer_words(g)) gens.push_back(eval_word_mod(w, static_cast<uint32_t>(level)));
  ClosureOptions opts;
  opts.cap = cap;
  const long long image = group_closure_mod(gens, opts);
  return (target % image == 0 && target / image == veech_index(g))
             ? CongruenceVerdict::Congruence
             : CongruenceVerdict::NonCongruence;
}

std::string certificate_to_json_text(const TncCertificate& c) {
  json j;
  j["witnesses"] = json::array();
  for (const ParabolicWitness& w : c.witnesses) {
    json jw;
    jw["A"] = {{w.A.a, w.A.b}, {w.A.c, w.A.d}};
    jw["m"] = w.m;
    jw["provenance"] = to_string(w.provenance);
    j["witnesses"].push_back(std::move(jw));
  }
  j["verdict"] = c.valid ? "valid" : "invalid";
  json jp = json::object();
  for (const PrimeCheck& chk : c.checked_primes) {
    json e;
    e["ok"] = chk.ok;
    if (chk.ok) e["pair"] = {chk.i, chk.j};
    jp[std::to_string(chk.p)] = std::move(e);
  }
  j["checked_primes"] = std::move(jp);
  if (!c.valid) j["reason"] = c.reason;
  return j.dump(2);
}

std::vector<ParabolicWitness> witnesses_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("witness json: ") + e.what());
  }
  const json& arr = j.is_object() && j.contains("witnesses") ? j.at("witnesses") : j;
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("witness json: expected a nonempty array of witnesses");
  std::vector<ParabolicWitness> out;
  for (const json& jw : arr) {
    ParabolicWitness w;
    const json& A = jw.at("A");
    w.A = Mat2{A.at(0).at(0).get<long long>(), A.at(0).at(1).get<long long>(),
               A.at(1).at(0).get<long long>(), A.at(1).at(1).get<long long>()};
    w.m = jw.at("m").get<long long>();
    if (jw.contains("provenance")) w.provenance = provenance_from_string(jw.at("provenance"));
    out.push_back(w);
  }
  return out;
}

}  // namespace origami
