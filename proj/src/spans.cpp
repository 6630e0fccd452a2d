#include "framekit/spans.hpp"

#include <stdexcept>

#include "framekit/error.hpp"

namespace framekit {

namespace {

void require_compatible(const VecSequence& seq, const FieldSpec& field,
                        std::size_t ambient_dim) {
  if (!(seq.field() == field)) throw FieldMismatch();
  if (seq.ambient_dim() != ambient_dim) {
    throw InputError("ambient dimensions differ (" +
                     std::to_string(seq.ambient_dim()) + " vs " +
                     std::to_string(ambient_dim) + ")");
  }
}

void require_contained(const Frame& frame, const Subspace& sub) {
  require_compatible(frame.seq(), sub.field(), sub.ambient_dim());
  if (!sub.contains_all(frame.seq())) {
    throw DomainError("frame is not contained in the subspace");
  }
}

}  // namespace

Subspace span_of(const VecSequence& seq) {
  const ReducedForm rf = reduced_form(ScalarMatrix::from_rows(seq));
  VecSequence basis(seq.field(), seq.ambient_dim());
  for (std::size_t r = 0; r < rf.rank(); ++r) basis.push_back(rf.reduced.row(r));
  return Subspace(std::move(basis), rf.pivots);
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) {
  return span_of(VecSequence(field, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  VecSequence standard(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    standard.push_back(Vector::unit(field, ambient_dim, i));
  }
  return span_of(standard);
}

bool Subspace::contains(const Vector& x) const {
  return member(*this, x).has_value();
}

bool Subspace::contains_all(const VecSequence& seq) const {
  for (const Vector& v : seq) {
    if (!contains(v)) return false;
  }
  return true;
}

Frame Frame::from(VecSequence seq) {
  auto frame = try_from(std::move(seq));
  if (!frame) throw DomainError("sequence is linearly dependent, not a frame");
  return *std::move(frame);
}

std::optional<Frame> Frame::try_from(VecSequence seq) {
  ReducedForm rf = reduced_form(ScalarMatrix::from_rows(seq));
  if (rf.rank() != seq.size()) return std::nullopt;
  return Frame(std::move(seq), std::move(rf.pivots));
}

Frame Frame::empty(const FieldSpec& field, std::size_t ambient_dim) {
  return Frame(VecSequence(field, ambient_dim), {});
}

std::optional<Coordinates> member(const Subspace& sub, const Vector& x) {
  if (!(x.field() == sub.field())) throw FieldMismatch();
  if (x.ambient_dim() != sub.ambient_dim()) {
    throw InputError("vector dimension differs from the subspace's");
  }
  auto coeffs = solve_in_span(sub.canonical_basis(), x);
  if (!coeffs) return std::nullopt;
  return Coordinates{*std::move(coeffs)};
}

std::size_t rank_seq(const VecSequence& seq) {
  return matrix_rank(ScalarMatrix::from_columns(seq));
}

bool is_frame(const VecSequence& seq) { return rank_seq(seq) == seq.size(); }

bool is_maximal_in(const Frame& frame, const Subspace& sub) {
  require_contained(frame, sub);
  return span_of(frame.seq()) == sub;
}

Vector extend_frame(const Frame& frame, const Subspace& sub) {
  require_contained(frame, sub);
  const Subspace spanned = span_of(frame.seq());
  if (spanned == sub) throw FrameIsMaximal();
  for (const Vector& candidate : sub.canonical_basis()) {
    if (!spanned.contains(candidate)) return candidate;
  }
  // A strictly larger subspace always has a basis vector outside.
  throw std::logic_error("extend_frame: no canonical basis vector outside span");
}

GeneratorBasis select_basis(const VecSequence& gens) {
  VecSequence kept(gens.field(), gens.ambient_dim());
  std::vector<std::size_t> indices;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!solve_in_span(kept, gens[j])) {
      kept.push_back(gens[j]);
      indices.push_back(j);
    }
  }
  return {Frame::from(std::move(kept)), std::move(indices)};
}

Frame basis_from_generators(const VecSequence& gens) {
  return select_basis(gens).frame;
}

std::size_t dimension(const Subspace& sub) { return sub.dim(); }

Coordinates coordinates(const Frame& basis, const Vector& x) {
  if (!(x.field() == basis.field())) throw FieldMismatch();
  if (x.ambient_dim() != basis.ambient_dim()) {
    throw InputError("vector dimension differs from the frame's");
  }
  auto coeffs = solve_in_span(basis.seq(), x);
  if (!coeffs) throw DomainError("vector (" + x.to_string() + ") is outside the span");
  return Coordinates{*std::move(coeffs)};
}

ChangeOfBasis change_of_basis(const Frame& e, const Frame& f) {
  require_compatible(f.seq(), e.field(), e.ambient_dim());
  if (e.size() != f.size()) {
    throw InputError("frames have different lengths (" +
                     std::to_string(e.size()) + " vs " +
                     std::to_string(f.size()) + ")");
  }
  const std::size_t n = e.size();
  const FieldSpec& field = e.field();
  ScalarMatrix forward(field, n, n);
  ScalarMatrix inverse(field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto coeffs = solve_in_span(e.seq(), f[j]);
    if (!coeffs) {
      throw DomainError("f_" + std::to_string(j + 1) + " is outside span(e)");
    }
    forward.set_column(j, Vector(field, *std::move(coeffs)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto coeffs = solve_in_span(f.seq(), e[j]);
    if (!coeffs) {
      throw std::logic_error("change_of_basis: e_" + std::to_string(j + 1) +
                             " outside span(f) for frames with f in span(e)");
    }
    inverse.set_column(j, Vector(field, *std::move(coeffs)));
  }
  if (!(forward * inverse).is_identity() || !(inverse * forward).is_identity()) {
    throw std::logic_error("change_of_basis: A * A_inv is not the identity");
  }
  return {std::move(forward), std::move(inverse)};
}

}  // namespace framekit
