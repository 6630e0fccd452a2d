#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "framekit/spans.hpp"

namespace framekit {

// The linear map on span(domain_frame) determined by e_j -> images[j].
class LinearMap {
 public:
  LinearMap(Frame domain, VecSequence images);

  const Frame& domain_frame() const { return domain_; }
  const VecSequence& images() const { return images_; }
  std::size_t domain_ambient_dim() const { return domain_.ambient_dim(); }
  std::size_t codomain_ambient_dim() const { return images_.ambient_dim(); }

  // Throws DomainError if x is outside span(domain_frame).
  Vector apply(const Vector& x) const;

 private:
  Frame domain_;
  VecSequence images_;
};

// The map with L e_j = f_j for j != index and L e_index = 0 (index is
// 0-based). Throws InputError for a bad index or shape, DomainError when
// some f_j is outside span(e).
LinearMap build_exchange_map(const Frame& e, const Frame& f, std::size_t index);

Vector apply_map(const LinearMap& map, const Vector& x);

struct KernelWitness {
  Vector vector;               // nonzero, inside the subspace, mapped to 0
  std::vector<Scalar> coords;  // the same vector in the spanning frame
};

// A nonzero v in span(spanning) with map(v) = 0, scaled so that its leading
// nonzero coordinate in the domain frame is 1; nullopt when the restriction
// is injective. Throws DomainError if span(spanning) is not inside the
// domain span.
std::optional<KernelWitness> restricted_kernel_witness(const LinearMap& map,
                                                       const Frame& spanning);
std::optional<Vector> restricted_kernel_witness(const LinearMap& map,
                                                const Subspace& sub);

// lambda with v == lambda * base, by comparing entries; nullopt if v is not
// a multiple of base. The zero vector is the 0-multiple of anything.
std::optional<Scalar> multiple_of(const Vector& v, const Vector& base);

// e_i = sum_j coeffs(j, i) * f_j for every i.
struct InclusionCertificate {
  VecSequence e;
  VecSequence f;
  ScalarMatrix coeffs;
};

// Establishes e_i in span(f) for every i through the kernels of the exchange
// maps restricted to span(f). Requires |e| = |f| and every f_j in span(e).
InclusionCertificate verify_basic_lemma(const Frame& e, const Frame& f);

// Substitution only: multiply and add, no solving. Any shape or field
// inconsistency makes the certificate invalid rather than throwing.
bool check_certificate(const InclusionCertificate& cert);

struct MapStep {
  std::size_t index;  // 0-based i of L_i
  LinearMap map;
  KernelWitness witness;  // witness.coords are relative to the level's f
  Scalar multiple;        // witness.vector == multiple * e_i
  // The rank k-1 instance the injectivity contradiction appeals to: the
  // frame f without f_i, against a frame chosen greedily from the images
  // L_i f_j (image_sources[t] is the j behind hypothesis.f[t]).
  InclusionCertificate hypothesis;
  std::vector<std::size_t> image_sources;
};

struct TraceLevel {
  std::size_t rank;  // k
  VecSequence e;
  VecSequence f;
  ScalarMatrix forward;  // f_j = sum_l forward(l, j) * e_l
  // Rank 1 only: f_1 = base_multiple * e_1.
  std::optional<Scalar> base_multiple;
  std::vector<MapStep> steps;  // empty at rank 1
  ScalarMatrix coeffs;         // e_i = sum_j coeffs(j, i) * f_j
};

// levels[k - 1] records rank k. Level k - 1 is the hypothesis instance of
// the last map at level k; the top level is the input pair.
struct ProofTrace {
  FieldSpec field;
  std::size_t ambient_dim;
  std::vector<TraceLevel> levels;

  InclusionCertificate final_certificate() const;
};

ProofTrace trace_induction(const Frame& e, const Frame& f);

// Audits a trace by substitution only: every certificate, forward matrix,
// exchange map, witness and hypothesis link.
bool check_trace(const ProofTrace& trace);

struct SteinitzResult {
  Frame extended;                   // f followed by the picked basis vectors
  std::vector<std::size_t> picked;  // 0-based, strictly increasing
  std::size_t r;
};

// Completes frame f to a basis with vectors of the basis B, scanning B left
// to right. Throws DomainError if B does not span the ambient space.
SteinitzResult steinitz_extend(const Frame& basis, const Frame& frame);

// rank(derived) <= rank(base) <= |base|. Throws DomainError if some derived
// vector is outside span(base).
bool rank_bound_check(const VecSequence& base, const VecSequence& derived);

}  // namespace framekit
