#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "origami/builders.hpp"
#include "origami/congruence.hpp"

using namespace origami;

namespace {

Origami two_square() { return make_origami(Perm::from_cycles("(1,2)", 2), Perm(2)); }

const TncCertificate& eleven_certificate() {
  static const TncCertificate cert = verify_certificate(standard_witnesses(11, 1));
  return cert;
}

}  // namespace

TEST_SUITE("congruence") {

TEST_CASE("name round trips") {
  for (Provenance p : {Provenance::Horizontal, Provenance::Vertical, Provenance::Diagonal,
                       Provenance::Harvested, Provenance::User})
    CHECK(provenance_from_string(to_string(p)) == p);
  CHECK_THROWS_AS(provenance_from_string("axial"), std::invalid_argument);
  CHECK(std::string(to_string(CongruenceVerdict::Congruence)) == "congruence");
  CHECK(std::string(to_string(CongruenceVerdict::NonCongruence)) == "non-congruence");
  CHECK(std::string(to_string(CongruenceVerdict::UndecidedCap)) == "undecided (cap exceeded)");
}

TEST_CASE("full-image test adjoins the center") {
  // <T^2, T'^2> misses -I: its mod-8 closure has order 32, but with -I
  // adjoined it doubles.  The fullness test must see the doubled group.
  std::vector<MatMod> sanov = {reduce_mod(mat_pow(kT, 2), 8), reduce_mod(mat_pow(kTPrime, 2), 8)};
  CHECK(group_closure_mod(sanov) == 32);
  sanov.push_back(reduce_mod(kMinusIdentity, 8));
  CHECK(group_closure_mod(sanov) == 64);

  const std::vector<Mat2> two_parabolics = {kT, kTPrime};
  for (uint32_t n : {2u, 3u, 5u, 7u, 8u, 9u, 12u, 13u}) {
    CAPTURE(n);
    CHECK(image_is_full_mod(two_parabolics, n));
  }
  const std::vector<Mat2> t_only = {kT};
  CHECK(!image_is_full_mod(t_only, 2));
  CHECK(!image_is_full_mod(t_only, 5));
  const std::vector<Mat2> none;
  CHECK(image_is_full_mod(none, 1));
  CHECK(!image_is_full_mod(none, 2));
  CHECK_THROWS_AS(image_is_full_mod(t_only, 0), std::invalid_argument);
  CHECK_THROWS_AS(image_is_full_mod(t_only, 9973, 100), std::length_error);

  // The word overload agrees with the matrix overload.
  const std::vector<Word> word_gens = {word_t(1), Word::from_text("T S T")};
  for (uint32_t n : {2u, 3u, 4u, 5u, 11u}) {
    CAPTURE(n);
    CHECK(image_is_full_mod(word_gens, n) == image_is_full_mod(two_parabolics, n));
  }
}

TEST_CASE("direction independence mod p") {
  for (long long p : {2ll, 3ll, 5ll, 7ll, 11ll}) CHECK(condition_A_holds(kIdentity, kS, p));
  CHECK(!condition_A_holds(kIdentity, kT, 5));  // first columns both (1,0)
  CHECK(condition_A_holds(kIdentity, kTPrime, 2));
  CHECK_THROWS_AS(condition_A_holds(kIdentity, kS, 4), std::invalid_argument);
  CHECK_THROWS_AS(condition_A_holds(kIdentity, kS, 1), std::invalid_argument);
}

TEST_CASE("standard witnesses for a one-cylinder surface") {
  const std::vector<ParabolicWitness> ws = standard_witnesses(11, 1);
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == ParabolicWitness{kIdentity, 11, Provenance::Horizontal});
  CHECK(ws[1] == ParabolicWitness{kS, 15, Provenance::Vertical});
  CHECK(ws[2] == ParabolicWitness{kTPrime, 14, Provenance::Diagonal});
  CHECK_THROWS_AS(standard_witnesses(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(standard_witnesses(8, 2), std::invalid_argument);
  CHECK_THROWS_AS(standard_witnesses(5, -1), std::invalid_argument);
}

TEST_CASE("valid certificate for L = 11, q = 1") {
  const TncCertificate& cert = eleven_certificate();
  CHECK(cert.valid);
  CHECK(cert.reason.empty());
  REQUIRE(cert.checked_primes.size() == 5);
  const long long want_primes[5] = {2, 3, 5, 7, 11};
  for (size_t i = 0; i < 5; ++i) {
    CHECK(cert.checked_primes[i].p == want_primes[i]);
    CHECK(cert.checked_primes[i].ok);
    CHECK(cert.checked_primes[i].i >= 0);
    CHECK(cert.checked_primes[i].j > cert.checked_primes[i].i);
    // The covering pair must avoid the prime in both moduli.
    CHECK(cert.witnesses[static_cast<size_t>(cert.checked_primes[i].i)].m % want_primes[i] != 0);
    CHECK(cert.witnesses[static_cast<size_t>(cert.checked_primes[i].j)].m % want_primes[i] != 0);
  }
}

TEST_CASE("certificates that must fail") {
  // Both moduli even: no pair is coprime to 2.
  const TncCertificate c1 = verify_certificate(
      {ParabolicWitness{kIdentity, 2}, ParabolicWitness{kS, 2}});
  CHECK(!c1.valid);
  CHECK(c1.reason == "no witness pair covers p = 2");
  REQUIRE(c1.checked_primes.size() == 1);
  CHECK(c1.checked_primes[0].p == 2);
  CHECK(!c1.checked_primes[0].ok);

  // Parallel directions only: T fixes the first column.
  const TncCertificate c2 = verify_certificate(
      {ParabolicWitness{kIdentity, 3}, ParabolicWitness{kT, 5}, ParabolicWitness{mat_pow(kT, 4), 7}});
  CHECK(!c2.valid);
  CHECK(c2.reason == "all witness directions are proportional (every pair determinant is zero)");
  CHECK(c2.checked_primes.empty());

  CHECK_THROWS_AS(verify_certificate({}), std::invalid_argument);
  CHECK_THROWS_AS(verify_certificate({ParabolicWitness{Mat2{2, 0, 0, 1}, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_certificate({ParabolicWitness{kIdentity, 0}}), std::invalid_argument);
}

TEST_CASE("two-direction deficiency criterion") {
  // gcd(11 * 13, 15 * 14) = 1: certified.
  const std::optional<TncCertificate> ok = deficiency_criterion(kIdentity, 11, 13, kTPrime, 15, 14);
  REQUIRE(ok.has_value());
  CHECK(ok->valid);
  REQUIRE(ok->witnesses.size() == 4);
  CHECK(ok->witnesses[1].A == kIdentity * kS);
  CHECK(ok->witnesses[1].provenance == Provenance::Vertical);
  CHECK(ok->witnesses[3].A == kTPrime * kS);

  // gcd(6 * 5, 4 * 7) = 2: not certified.
  CHECK(!deficiency_criterion(kIdentity, 6, 5, kTPrime, 4, 7).has_value());
  CHECK_THROWS_AS(deficiency_criterion(Mat2{2, 0, 0, 1}, 3, 5, kTPrime, 7, 11),
                  std::invalid_argument);
  CHECK_THROWS_AS(deficiency_criterion(kIdentity, 0, 5, kTPrime, 7, 11), std::invalid_argument);
}

TEST_CASE("congruence test at the cusp level") {
  CHECK(is_congruence_at_level(orbit_coset_graph(make_origami(Perm(1), Perm(1)))) ==
        CongruenceVerdict::Congruence);
  CHECK(is_congruence_at_level(orbit_coset_graph(two_square())) == CongruenceVerdict::Congruence);
  const Origami l3 = make_origami(Perm::from_cycles("(1,2)", 3), Perm::from_cycles("(1,3)", 3));
  CHECK(is_congruence_at_level(orbit_coset_graph(l3)) == CongruenceVerdict::Congruence);

  // The one-cylinder builders below are already non-congruence at their level.
  CHECK(is_congruence_at_level(orbit_coset_graph(build_even(2, 1))) ==
        CongruenceVerdict::NonCongruence);
  CHECK(is_congruence_at_level(orbit_coset_graph(build_stratum_origami({2}, 2))) ==
        CongruenceVerdict::NonCongruence);
  CHECK(is_congruence_at_level(orbit_coset_graph(build_odd_pair(1, 1, 1))) ==
        CongruenceVerdict::NonCongruence);

  // Level 6930 puts the brute-force group order far beyond the cap.
  CHECK(is_congruence_at_level(orbit_coset_graph(build_odd_pair(1, 1, 6))) ==
        CongruenceVerdict::UndecidedCap);
  CHECK(is_congruence_at_level(orbit_coset_graph(two_square()), 1) ==
        CongruenceVerdict::UndecidedCap);
}

TEST_CASE("stabilizer words of the eleven-square surface surject at small levels") {
  const CosetGraph g = orbit_coset_graph(build_odd_pair(1, 1, 6));
  const std::vector<Word> words = stabilizer_words(g);
  for (uint32_t n : {2u, 3u, 4u, 5u, 8u, 9u}) {
    CAPTURE(n);
    CHECK(image_is_full_mod(words, n));
  }
}

TEST_CASE("certificate json round trip") {
  const TncCertificate& cert = eleven_certificate();
  const std::string text = certificate_to_json_text(cert);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("verdict").get<std::string>() == "valid");
  CHECK(j.at("witnesses").size() == 3);
  CHECK(j.at("witnesses").at(0).at("m").get<long long>() == 11);
  CHECK(j.at("witnesses").at(2).at("provenance").get<std::string>() == "diagonal");
  CHECK(j.at("checked_primes").at("11").at("ok").get<bool>());
  CHECK(!j.contains("reason"));

  const std::vector<ParabolicWitness> parsed = witnesses_from_json_text(text);
  CHECK(parsed == cert.witnesses);

  const TncCertificate bad = verify_certificate(
      {ParabolicWitness{kIdentity, 2}, ParabolicWitness{kS, 2}});
  const auto jb = nlohmann::json::parse(certificate_to_json_text(bad));
  CHECK(jb.at("verdict").get<std::string>() == "invalid");
  CHECK(jb.at("reason").get<std::string>() == "no witness pair covers p = 2");

  // A bare array with default provenance is accepted.
  const std::vector<ParabolicWitness> bare =
      witnesses_from_json_text(R"([{"A": [[1, 0], [0, 1]], "m": 5}])");
  REQUIRE(bare.size() == 1);
  CHECK(bare[0].A == kIdentity);
  CHECK(bare[0].m == 5);
  CHECK(bare[0].provenance == Provenance::User);
  CHECK_THROWS_AS(witnesses_from_json_text("[]"), std::invalid_argument);
  CHECK_THROWS_AS(witnesses_from_json_text("nonsense"), std::invalid_argument);
}

}  // TEST_SUITE
