#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framekit/random.hpp"

namespace framekit::testing {

struct AxiomTally {
  std::uint64_t triples = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;
};

// Every field axiom plus text round-trip on `count` random triples.
inline AxiomTally check_field_axioms(const FieldSpec& field, std::uint64_t count,
                                     std::uint64_t seed) {
  AxiomTally tally;
  const Scalar zero = Scalar::zero(field);
  const Scalar one = Scalar::one(field);
  for (std::uint64_t i = 0; i < count; ++i) {
    Rng rng(instance_seed(seed, i));
    const Scalar a = random_scalar(field, rng);
    const Scalar b = random_scalar(field, rng);
    const Scalar c = random_scalar(field, rng);
    std::vector<std::pair<const char*, bool>> checks = {
        {"add assoc", (a + b) + c == a + (b + c)},
        {"mul assoc", (a * b) * c == a * (b * c)},
        {"add comm", a + b == b + a},
        {"mul comm", a * b == b * a},
        {"distrib", a * (b + c) == a * b + a * c},
        {"add id", a + zero == a},
        {"mul id", a * one == a},
        {"add inv", a + (-a) == zero},
        {"sub", (a - b) + b == a},
        {"round trip", Scalar::parse(a.to_string(), field) == a},
    };
    if (!a.is_zero()) {
      checks.emplace_back("mul inv", a * a.inverse() == one);
      checks.emplace_back("div", (b / a) * a == b);
    }
    ++tally.triples;
    for (const auto& [name, ok] : checks) {
      if (ok) continue;
      ++tally.failures;
      if (tally.notes.size() < 5) {
        tally.notes.push_back(std::string(name) + " fails at a=" + a.to_string() +
                              " b=" + b.to_string() + " c=" + c.to_string());
      }
    }
  }
  return tally;
}

// Primes up to `limit` by a sieve, independent of is_prime_u32.
inline std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    if (composite[n]) continue;
    primes.push_back(n);
    for (std::uint32_t k = n * n; k <= limit; k += n) composite[k] = true;
  }
  return primes;
}

// a^(p-1) = 1 for every nonzero a of GF(p); returns the number of violations.
inline std::uint64_t fermat_violations(std::uint32_t p) {
  const FieldSpec field = FieldSpec::prime(p);
  std::uint64_t bad = 0;
  for (std::uint32_t a = 1; a < p; ++a) {
    const Scalar x = Scalar::from_int(field, a);
    if (!x.pow(p - 1).is_one()) ++bad;
    // Independent of pow: repeated multiplication.
    Scalar acc = Scalar::one(field);
    for (std::uint32_t k = 0; k + 1 < p; ++k) acc *= x;
    if (!acc.is_one()) ++bad;
  }
  return bad;
}

}  // namespace framekit::testing
