#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "framekit/oracle.hpp"

// Batch drivers that run many independent instances of a property and count
// failures. Each comes with an OpenMP instance fan-out (Execution::kParallel)
// and a serial reference loop; both draw instance i from
// instance_seed(seed, i), so their reports are identical.
namespace framekit::sweeps {

using oracle::Execution;

struct Report {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  // Extra count a sweep wants to surface (e.g. oracle-confirmed instances).
  std::uint64_t confirmed = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool ok() const { return failures == 0; }
  friend bool operator==(const Report&, const Report&) = default;
};

struct RandomConfig {
  FieldSpec field;
  std::uint64_t instances;
  std::uint64_t seed = 1;
};

struct LemmaReports {
  Report certificates;     // verify_basic_lemma + check_certificate
  Report change_of_basis;  // A * A_inv = A_inv * A = I, A_inv = certificate
  Report traces;           // only when tracing was requested
  friend bool operator==(const LemmaReports&, const LemmaReports&) = default;
};

// Frames e with n <= 5 in ambient m <= 7, f = e * A for random invertible A.
LemmaReports lemma_sweep(const RandomConfig& config, bool with_traces,
                         Execution exec = Execution::kParallel);

// k, l <= 4: a random basis of Λ^(k+l) and a random k-frame.
Report steinitz_sweep(const RandomConfig& config,
                      Execution exec = Execution::kParallel);

// Random base of n <= 5 vectors, derived = up to 2n combinations of it.
Report rank_bound_sweep(const RandomConfig& config,
                        Execution exec = Execution::kParallel);

// Random frame inside a random subspace of Λ^m, m <= 4: exactly one of
// is_maximal_in / extend_frame succeeds. Over fields the oracle handles,
// in-budget instances are also checked against maximality_bruteforce
// (counted in Report::confirmed).
Report dichotomy_sweep(const RandomConfig& config,
                       const oracle::EnumerationBudget& budget = {},
                       Execution exec = Execution::kParallel);

// Every sequence of length n in GF(p)^m against every target vector:
// rank_seq = rank_bruteforce and solve_in_span presence = member_bruteforce.
Report exhaustive_oracle_sweep(const FieldSpec& field, std::size_t ambient_dim,
                               std::size_t length,
                               const oracle::EnumerationBudget& budget = {},
                               Execution exec = Execution::kParallel);

// Random sequences (m, n <= 4) and targets, same comparisons as above.
Report random_oracle_sweep(const RandomConfig& config,
                           const oracle::EnumerationBudget& budget = {},
                           Execution exec = Execution::kParallel);

}  // namespace framekit::sweeps
