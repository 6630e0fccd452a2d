#include "framekit/lemma.hpp"

#include <stdexcept>
#include <utility>

#include "framekit/error.hpp"

namespace framekit {

namespace {

void require_pair(const Frame& e, const Frame& f) {
  if (!(e.field() == f.field())) throw FieldMismatch();
  if (e.ambient_dim() != f.ambient_dim()) {
    throw InputError("frames live in different ambient dimensions");
  }
  if (e.size() != f.size()) {
    throw InputError("frames have different lengths (" +
                     std::to_string(e.size()) + " vs " +
                     std::to_string(f.size()) + ")");
  }
}

// f_j = sum_l forward(l, j) e_l; DomainError if some f_j is outside span(e).
ScalarMatrix forward_matrix(const Frame& e, const Frame& f) {
  const std::size_t n = e.size();
  ScalarMatrix forward(e.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto coeffs = solve_in_span(e.seq(), f[j]);
    if (!coeffs) {
      throw DomainError("f_" + std::to_string(j + 1) + " is outside span(e)");
    }
    forward.set_column(j, Vector(e.field(), *std::move(coeffs)));
  }
  return forward;
}

// sum_j coeffs[j] * seq[j] using only scalar multiply and add.
std::optional<Vector> substitute(const VecSequence& seq,
                                 std::span<const Scalar> coeffs) {
  if (coeffs.size() != seq.size()) return std::nullopt;
  std::vector<Scalar> acc(seq.ambient_dim(), Scalar::zero(seq.field()));
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (!(coeffs[j].field() == seq.field())) return std::nullopt;
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += coeffs[j] * seq[j][t];
  }
  return Vector(seq.field(), std::move(acc));
}

std::vector<Scalar> column_of(const ScalarMatrix& m, std::size_t c) {
  std::vector<Scalar> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.at(r, c));
  return out;
}

struct ExchangeOutcome {
  LinearMap map;
  KernelWitness witness;
  Scalar multiple;
};

// One application of the kernel argument: L_i restricted to span(f) has a
// nonzero kernel, and that kernel is spanned by e_i.
ExchangeOutcome resolve_exchange(const Frame& e, const Frame& f, std::size_t i) {
  LinearMap map = build_exchange_map(e, f, i);
  auto witness = restricted_kernel_witness(map, f);
  if (!witness) {
    throw std::logic_error("exchange map " + std::to_string(i + 1) +
                           " is injective on span(f)");
  }
  auto multiple = multiple_of(witness->vector, e[i]);
  if (!multiple || multiple->is_zero()) {
    throw std::logic_error("kernel witness is not a nonzero multiple of e_" +
                           std::to_string(i + 1));
  }
  return {std::move(map), *std::move(witness), *std::move(multiple)};
}

void set_inclusion_column(ScalarMatrix& coeffs, std::size_t i,
                          const ExchangeOutcome& outcome) {
  const Scalar scale = outcome.multiple.inverse();
  for (std::size_t j = 0; j < coeffs.rows(); ++j) {
    coeffs.at(j, i) = outcome.witness.coords[j] * scale;
  }
}

TraceLevel build_level(const Frame& e, const Frame& f) {
  const std::size_t k = e.size();
  const FieldSpec& field = e.field();
  ScalarMatrix forward = forward_matrix(e, f);
  ScalarMatrix coeffs(field, k, k);

  if (k == 1) {
    // span(e_1) is the family of multiples of e_1.
    auto mu = multiple_of(f[0], e[0]);
    if (!mu || mu->is_zero()) {
      throw std::logic_error("rank 1 frame is not a nonzero multiple of e_1");
    }
    coeffs.at(0, 0) = mu->inverse();
    return {1, e.seq(), f.seq(), std::move(forward), *mu, {}, std::move(coeffs)};
  }

  std::vector<MapStep> steps;
  steps.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    ExchangeOutcome outcome = resolve_exchange(e, f, i);
    set_inclusion_column(coeffs, i, outcome);

    VecSequence images(field, e.ambient_dim());
    for (const Vector& fj : f.seq()) images.push_back(outcome.map.apply(fj));
    GeneratorBasis chosen = select_basis(images);
    if (chosen.frame.size() != k - 1) {
      throw std::logic_error("image of span(f) under L_" + std::to_string(i + 1) +
                             " does not have rank k - 1");
    }
    InclusionCertificate hypothesis =
        verify_basic_lemma(Frame::from(f.seq().without(i)), chosen.frame);

    steps.push_back(MapStep{i, std::move(outcome.map), std::move(outcome.witness),
                            std::move(outcome.multiple), std::move(hypothesis),
                            std::move(chosen.indices)});
  }
  return {k,       e.seq(), f.seq(), std::move(forward), std::nullopt,
          std::move(steps), std::move(coeffs)};
}

bool vectors_equal(const std::optional<Vector>& a, const Vector& b) {
  return a && *a == b;
}

bool check_level(const TraceLevel& level, const FieldSpec& field,
                 std::size_t ambient) {
  const std::size_t k = level.rank;
  if (level.e.size() != k || level.f.size() != k) return false;
  if (!(level.e.field() == field) || !(level.f.field() == field)) return false;
  if (level.e.ambient_dim() != ambient || level.f.ambient_dim() != ambient) return false;
  if (level.forward.rows() != k || level.forward.cols() != k) return false;

  for (std::size_t j = 0; j < k; ++j) {
    if (!vectors_equal(substitute(level.e, column_of(level.forward, j)), level.f[j])) {
      return false;
    }
  }
  if (!check_certificate({level.e, level.f, level.coeffs})) return false;

  if (k == 1) {
    if (!level.base_multiple || level.base_multiple->is_zero()) return false;
    if (!level.steps.empty()) return false;
    const Scalar& mu = *level.base_multiple;
    return level.f[0] == level.e[0].scaled(mu) && (level.coeffs.at(0, 0) * mu).is_one();
  }

  if (level.steps.size() != k) return false;
  const Vector zero = Vector::zero(field, ambient);
  for (std::size_t i = 0; i < k; ++i) {
    const MapStep& step = level.steps[i];
    if (step.index != i) return false;
    if (!(step.map.domain_frame().seq() == level.e)) return false;
    const VecSequence& images = step.map.images();
    if (images.size() != k) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(images[j] == (j == i ? zero : level.f[j]))) return false;
    }

    // L_i f_j by substitution through the forward matrix.
    VecSequence mapped_f(field, ambient);
    for (std::size_t j = 0; j < k; ++j) {
      auto v = substitute(images, column_of(level.forward, j));
      if (!v) return false;
      mapped_f.push_back(*std::move(v));
    }

    const KernelWitness& w = step.witness;
    if (w.vector.is_zero()) return false;
    if (!vectors_equal(substitute(level.f, w.coords), w.vector)) return false;
    if (step.multiple.is_zero() || !(w.vector == level.e[i].scaled(step.multiple))) {
      return false;
    }
    if (!vectors_equal(substitute(mapped_f, w.coords), zero)) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(level.coeffs.at(j, i) * step.multiple == w.coords[j])) return false;
    }

    const InclusionCertificate& hyp = step.hypothesis;
    if (!(hyp.e == level.f.without(i))) return false;
    if (hyp.f.size() != k - 1 || step.image_sources.size() != k - 1) return false;
    for (std::size_t t = 0; t < k - 1; ++t) {
      const std::size_t src = step.image_sources[t];
      if (src >= k || (t > 0 && src <= step.image_sources[t - 1])) return false;
      if (!(hyp.f[t] == mapped_f[src])) return false;
    }
    if (!check_certificate(hyp)) return false;
  }
  return true;
}

}  // namespace

LinearMap::LinearMap(Frame domain, VecSequence images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (!(domain_.field() == images_.field())) throw FieldMismatch();
  if (domain_.size() != images_.size()) {
    throw InputError("a linear map needs one image per domain frame vector");
  }
}

Vector LinearMap::apply(const Vector& x) const {
  if (!(x.field() == domain_.field())) throw FieldMismatch();
  if (x.ambient_dim() != domain_.ambient_dim()) {
    throw InputError("vector dimension differs from the map's domain");
  }
  auto coeffs = solve_in_span(domain_.seq(), x);
  if (!coeffs) throw DomainError("vector is outside the domain span");
  return lin_comb(images_, *coeffs);
}

LinearMap build_exchange_map(const Frame& e, const Frame& f, std::size_t index) {
  require_pair(e, f);
  if (index >= e.size()) {
    throw InputError("map index " + std::to_string(index + 1) +
                     " out of range 1.." + std::to_string(e.size()));
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!solve_in_span(e.seq(), f[j])) {
      throw DomainError("f_" + std::to_string(j + 1) + " is outside span(e)");
    }
  }
  VecSequence images(e.field(), e.ambient_dim());
  for (std::size_t j = 0; j < f.size(); ++j) {
    images.push_back(j == index ? Vector::zero(e.field(), e.ambient_dim()) : f[j]);
  }
  return LinearMap(e, std::move(images));
}

Vector apply_map(const LinearMap& map, const Vector& x) { return map.apply(x); }

std::optional<KernelWitness> restricted_kernel_witness(const LinearMap& map,
                                                       const Frame& spanning) {
  if (!(spanning.field() == map.domain_frame().field())) throw FieldMismatch();
  const FieldSpec& field = spanning.field();
  ScalarMatrix images(field, map.codomain_ambient_dim(), spanning.size());
  for (std::size_t j = 0; j < spanning.size(); ++j) {
    try {
      images.set_column(j, map.apply(spanning[j]));
    } catch (const DomainError&) {
      throw DomainError("subspace is not contained in the map's domain span");
    }
  }
  const VecSequence kernel = kernel_basis(images);
  if (kernel.empty()) return std::nullopt;

  std::vector<Scalar> coords(kernel[0].entries().begin(), kernel[0].entries().end());
  Vector v = lin_comb(spanning.seq(), coords);
  const Coordinates in_domain = coordinates(map.domain_frame(), v);
  const Scalar* lead = nullptr;
  for (const Scalar& c : in_domain.coeffs) {
    if (!c.is_zero()) {
      lead = &c;
      break;
    }
  }
  if (lead == nullptr) throw std::logic_error("kernel witness of a frame is zero");
  const Scalar scale = lead->inverse();
  for (Scalar& c : coords) c *= scale;
  return KernelWitness{v.scaled(scale), std::move(coords)};
}

std::optional<Vector> restricted_kernel_witness(const LinearMap& map,
                                                const Subspace& sub) {
  auto w = restricted_kernel_witness(map, Frame::from(sub.canonical_basis()));
  if (!w) return std::nullopt;
  return std::move(w->vector);
}

std::optional<Scalar> multiple_of(const Vector& v, const Vector& base) {
  if (!(v.field() == base.field()) || v.ambient_dim() != base.ambient_dim()) {
    return std::nullopt;
  }
  const std::size_t lead = base.leading_index();
  if (lead == base.ambient_dim()) {
    if (v.is_zero()) return Scalar::zero(v.field());
    return std::nullopt;
  }
  Scalar lambda = v[lead] / base[lead];
  if (!(base.scaled(lambda) == v)) return std::nullopt;
  return lambda;
}

InclusionCertificate verify_basic_lemma(const Frame& e, const Frame& f) {
  require_pair(e, f);
  forward_matrix(e, f);  // precondition: every f_j in span(e)
  const std::size_t n = e.size();
  ScalarMatrix coeffs(e.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    set_inclusion_column(coeffs, i, resolve_exchange(e, f, i));
  }
  InclusionCertificate cert{e.seq(), f.seq(), std::move(coeffs)};
  if (!check_certificate(cert)) {
    throw std::logic_error("verify_basic_lemma produced an invalid certificate");
  }
  return cert;
}

bool check_certificate(const InclusionCertificate& cert) {
  const std::size_t n = cert.e.size();
  const FieldSpec& field = cert.e.field();
  if (cert.f.size() != n || cert.coeffs.rows() != n || cert.coeffs.cols() != n) {
    return false;
  }
  if (!(cert.f.field() == field) || !(cert.coeffs.field() == field)) return false;
  if (cert.f.ambient_dim() != cert.e.ambient_dim()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!vectors_equal(substitute(cert.f, column_of(cert.coeffs, i)), cert.e[i])) {
      return false;
    }
  }
  return true;
}

InclusionCertificate ProofTrace::final_certificate() const {
  if (levels.empty()) {
    return {VecSequence(field, ambient_dim), VecSequence(field, ambient_dim),
            ScalarMatrix(field, 0, 0)};
  }
  const TraceLevel& top = levels.back();
  return {top.e, top.f, top.coeffs};
}

ProofTrace trace_induction(const Frame& e, const Frame& f) {
  require_pair(e, f);
  forward_matrix(e, f);
  ProofTrace trace{e.field(), e.ambient_dim(), {}};
  if (e.size() == 0) return trace;

  std::vector<TraceLevel> descending;
  Frame cur_e = e;
  Frame cur_f = f;
  while (true) {
    TraceLevel level = build_level(cur_e, cur_f);
    const bool base = level.rank == 1;
    if (!base) {
      const InclusionCertificate& next = level.steps.back().hypothesis;
      cur_e = Frame::from(next.e);
      cur_f = Frame::from(next.f);
    }
    descending.push_back(std::move(level));
    if (base) break;
  }
  trace.levels.assign(std::make_move_iterator(descending.rbegin()),
                      std::make_move_iterator(descending.rend()));
  return trace;
}

bool check_trace(const ProofTrace& trace) {
  try {
    for (std::size_t idx = 0; idx < trace.levels.size(); ++idx) {
      const TraceLevel& level = trace.levels[idx];
      if (level.rank != idx + 1) return false;
      if (!check_level(level, trace.field, trace.ambient_dim)) return false;
      if (idx > 0) {
        const InclusionCertificate& hyp = level.steps.back().hypothesis;
        const TraceLevel& below = trace.levels[idx - 1];
        if (!(below.e == hyp.e) || !(below.f == hyp.f)) return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

SteinitzResult steinitz_extend(const Frame& basis, const Frame& frame) {
  if (!(basis.field() == frame.field())) throw FieldMismatch();
  if (basis.ambient_dim() != frame.ambient_dim()) {
    throw InputError("basis and frame live in different ambient dimensions");
  }
  const std::size_t m = basis.ambient_dim();
  if (basis.size() != m) {
    throw DomainError("B has " + std::to_string(basis.size()) +
                      " vectors; a basis of the ambient space needs " +
                      std::to_string(m));
  }
  VecSequence grown = frame.seq();
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!solve_in_span(grown, basis[i])) {
      grown.push_back(basis[i]);
      picked.push_back(i);
    }
  }
  const std::size_t r = picked.size();
  auto extended = Frame::try_from(std::move(grown));
  if (!extended || extended->size() != m || r != m - frame.size()) {
    throw std::logic_error("steinitz_extend: extension is not a basis with r = l");
  }
  return {*std::move(extended), std::move(picked), r};
}

bool rank_bound_check(const VecSequence& base, const VecSequence& derived) {
  if (!(base.field() == derived.field())) throw FieldMismatch();
  if (base.ambient_dim() != derived.ambient_dim()) {
    throw InputError("base and derived sequences differ in ambient dimension");
  }
  for (std::size_t j = 0; j < derived.size(); ++j) {
    if (!solve_in_span(base, derived[j])) {
      throw DomainError("derived vector " + std::to_string(j + 1) +
                        " is outside span(base)");
    }
  }
  const std::size_t base_rank = rank_seq(base);
  return rank_seq(derived) <= base_rank && base_rank <= base.size();
}

}  // namespace framekit
