#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "framekit/spans.hpp"

// Definition-level reference implementations over small prime fields. They
// enumerate coefficient tuples and subsequences directly and use nothing from
// the elimination engine, only field arithmetic on residues; the VecSequence,
// Frame and Subspace types appear here purely as containers.
namespace framekit::oracle {

// Limits that keep enumeration explicit and bounded. Exceeding any of them
// throws BudgetExceeded instead of running long.
struct EnumerationBudget {
  std::uint32_t max_field_size = 5;
  std::size_t max_ambient_dim = 4;
  std::size_t max_sequence_len = 4;
  // Bound on p^n + p^m for span and rank enumeration, and on the number of
  // sequences visited by maximality_bruteforce.
  std::uint64_t max_enumeration = 1'000'000;
};

enum class Execution { kSerial, kParallel };

// Every linear combination of seq, sorted by base-p encoding, no duplicates.
std::vector<Vector> enum_span(const VecSequence& seq,
                              const EnumerationBudget& budget = {},
                              Execution exec = Execution::kSerial);

bool member_bruteforce(const VecSequence& seq, const Vector& x,
                       const EnumerationBudget& budget = {},
                       Execution exec = Execution::kSerial);

// Longest subsequence whose only null combination is the zero tuple.
std::size_t rank_bruteforce(const VecSequence& seq,
                            const EnumerationBudget& budget = {});

// True iff every sequence of length <= max_len drawn from the elements of
// sub has rank at most |frame|. Throws DomainError if the frame is not
// inside sub.
bool maximality_bruteforce(const Frame& frame, const Subspace& sub,
                           std::size_t max_len,
                           const EnumerationBudget& budget = {},
                           Execution exec = Execution::kSerial);

// Whether maximality_bruteforce(frame-of-length n, sub, max_len) would fit.
bool maximality_within_budget(const Subspace& sub, std::size_t frame_len,
                              std::size_t max_len,
                              const EnumerationBudget& budget = {});

}  // namespace framekit::oracle
