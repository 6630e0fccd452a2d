#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "framekit/spans.hpp"

namespace framekit {

using Rng = std::mt19937_64;

// Independent per-instance seed (splitmix64 of seed and index), so a batch
// gives the same instances whether it runs serially or in parallel.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);  // [lo, hi]

// Uniform over GF(p); over Q a small fraction num/den, |num| <= 9, den <= 5.
Scalar random_scalar(const FieldSpec& field, Rng& rng);
Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng);
Vector random_vector(const FieldSpec& field, std::size_t dim, Rng& rng);
VecSequence random_sequence(const FieldSpec& field, std::size_t dim,
                            std::size_t length, Rng& rng);

// n independent vectors in Λ^m (n <= m), drawn by rejection.
Frame random_frame(const FieldSpec& field, std::size_t dim, std::size_t n,
                   Rng& rng);
ScalarMatrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng);

// `count` random linear combinations of base.
VecSequence random_combinations(const VecSequence& base, std::size_t count,
                                Rng& rng);

// seq * A with the items of seq as columns: item j is sum_k A(k, j) seq[k].
VecSequence transform(const VecSequence& seq, const ScalarMatrix& a);

}  // namespace framekit
