#include "framekit/random.hpp"

#include "framekit/error.hpp"

namespace framekit {

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Scalar random_scalar(const FieldSpec& field, Rng& rng) {
  if (field.is_prime()) {
    return Scalar::from_int(field, static_cast<std::int64_t>(
                                       uniform_index(rng, 0, field.modulus() - 1)));
  }
  const auto num = std::uniform_int_distribution<long>(-9, 9)(rng);
  const auto den = std::uniform_int_distribution<long>(1, 5)(rng);
  return Scalar::from_fraction(field, mpz_class(num), mpz_class(den));
}

Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng) {
  while (true) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

Vector random_vector(const FieldSpec& field, std::size_t dim, Rng& rng) {
  std::vector<Scalar> entries;
  entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) entries.push_back(random_scalar(field, rng));
  return Vector(field, std::move(entries));
}

VecSequence random_sequence(const FieldSpec& field, std::size_t dim,
                            std::size_t length, Rng& rng) {
  VecSequence seq(field, dim);
  for (std::size_t j = 0; j < length; ++j) seq.push_back(random_vector(field, dim, rng));
  return seq;
}

Frame random_frame(const FieldSpec& field, std::size_t dim, std::size_t n,
                   Rng& rng) {
  if (n > dim) throw InputError("a frame cannot be longer than the dimension");
  VecSequence seq(field, dim);
  while (seq.size() < n) {
    Vector v = random_vector(field, dim, rng);
    if (!solve_in_span(seq, v)) seq.push_back(std::move(v));
  }
  return Frame::from(std::move(seq));
}

ScalarMatrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng) {
  const Frame columns = random_frame(field, n, n, rng);
  return ScalarMatrix::from_columns(columns.seq());
}

VecSequence random_combinations(const VecSequence& base, std::size_t count,
                                Rng& rng) {
  VecSequence out(base.field(), base.ambient_dim());
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
      coeffs.push_back(random_scalar(base.field(), rng));
    }
    out.push_back(lin_comb(base, coeffs));
  }
  return out;
}

VecSequence transform(const VecSequence& seq, const ScalarMatrix& a) {
  if (a.rows() != seq.size()) throw InputError("transform: shape mismatch");
  VecSequence out(seq.field(), seq.ambient_dim());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Vector col = a.column(j);
    out.push_back(lin_comb(seq, col.entries()));
  }
  return out;
}

}  // namespace framekit
