#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "framekit/linalg.hpp"

namespace framekit {

// A linear subspace of Λ^m held as its unique reduced-echelon basis, so two
// subspaces are equal iff their canonical bases are equal.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.ambient_dim(); }
  std::size_t dim() const { return basis_.size(); }
  const VecSequence& canonical_basis() const { return basis_; }
  // Column of the leading 1 in each canonical basis vector.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& x) const;
  bool contains_all(const VecSequence& seq) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  friend Subspace span_of(const VecSequence& seq);
  Subspace(VecSequence basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  VecSequence basis_;
  std::vector<std::size_t> pivots_;
};

// A linearly independent sequence. The only way to obtain one is through
// validation, so holding a Frame is the independence certificate.
class Frame {
 public:
  // Throws DomainError if seq is dependent.
  static Frame from(VecSequence seq);
  static std::optional<Frame> try_from(VecSequence seq);
  static Frame empty(const FieldSpec& field, std::size_t ambient_dim);

  const VecSequence& seq() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  const Vector& operator[](std::size_t i) const { return seq_[i]; }
  const FieldSpec& field() const { return seq_.field(); }
  std::size_t ambient_dim() const { return seq_.ambient_dim(); }
  // Pivot columns of the row-reduced frame matrix: a set of coordinates on
  // which the frame restricts to an invertible square matrix.
  const std::vector<std::size_t>& independence_pivots() const {
    return pivots_;
  }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.seq_ == b.seq_;
  }

 private:
  Frame(VecSequence seq, std::vector<std::size_t> pivots)
      : seq_(std::move(seq)), pivots_(std::move(pivots)) {}

  VecSequence seq_;
  std::vector<std::size_t> pivots_;
};

struct Coordinates {
  std::vector<Scalar> coeffs;
  std::size_t frame_length() const { return coeffs.size(); }
};

Subspace span_of(const VecSequence& seq);

// Coordinates of x relative to sub.canonical_basis(), if x lies in sub.
std::optional<Coordinates> member(const Subspace& sub, const Vector& x);

// Maximal length of an independent subsequence (computed as matrix rank).
std::size_t rank_seq(const VecSequence& seq);
bool is_frame(const VecSequence& seq);

// Throws DomainError if some frame vector lies outside sub.
bool is_maximal_in(const Frame& frame, const Subspace& sub);

// First canonical basis vector of sub outside span(frame). Throws
// FrameIsMaximal when the frame already spans sub, DomainError when the
// frame is not contained in sub.
Vector extend_frame(const Frame& frame, const Subspace& sub);

struct GeneratorBasis {
  Frame frame;
  std::vector<std::size_t> indices;  // positions kept from the generators
};

// Greedy left-to-right: keep a generator iff it is independent of those
// already kept.
GeneratorBasis select_basis(const VecSequence& gens);
Frame basis_from_generators(const VecSequence& gens);

std::size_t dimension(const Subspace& sub);

// Throws DomainError if x is outside span(basis).
Coordinates coordinates(const Frame& basis, const Vector& x);

// forward: column j holds the coordinates of f_j in e, so f = e * forward.
// inverse: column j holds the coordinates of e_j in f.
struct ChangeOfBasis {
  ScalarMatrix forward;
  ScalarMatrix inverse;
};

// Throws InputError on length or ambient mismatch and DomainError when some
// f_j is outside span(e). The product identities are checked before
// returning (std::logic_error if they ever fail).
ChangeOfBasis change_of_basis(const Frame& e, const Frame& f);

}  // namespace framekit
