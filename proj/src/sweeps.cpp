#include "framekit/sweeps.hpp"

#include <exception>

#include "framekit/error.hpp"
#include "framekit/lemma.hpp"
#include "framekit/random.hpp"

namespace framekit::sweeps {

namespace {

constexpr std::size_t kMaxNotes = 5;

struct Outcome {
  bool ok = true;
  bool confirmed = false;
  std::string note;

  void fail(std::string why) {
    if (ok) note = std::move(why);
    ok = false;
  }
};

// Runs body(i) for i in [0, count) and collects the results in index order.
template <typename T, typename Body>
std::vector<T> fan_out(std::uint64_t count, Execution exec, Body body) {
  std::vector<T> results(count);
  if (exec == Execution::kSerial) {
    for (std::uint64_t i = 0; i < count; ++i) results[i] = body(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      results[static_cast<std::uint64_t>(i)] = body(static_cast<std::uint64_t>(i));
    }
  }
  return results;
}

void tally(Report& report, const Outcome& o, std::uint64_t index) {
  ++report.instances;
  if (o.confirmed) ++report.confirmed;
  if (o.ok) return;
  ++report.failures;
  if (report.notes.size() < kMaxNotes) {
    report.notes.push_back("instance " + std::to_string(index) + ": " + o.note);
  }
}

Report reduce(const std::vector<Outcome>& outcomes) {
  Report report;
  for (std::size_t i = 0; i < outcomes.size(); ++i) tally(report, outcomes[i], i);
  return report;
}

template <typename Body>
Outcome guarded(Body body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& ex) {
    o.fail(std::string("exception: ") + ex.what());
  }
  return o;
}

struct LemmaOutcome {
  Outcome cert;
  Outcome cob;
  Outcome trace;
};

void audit_trace(const ProofTrace& trace, const Frame& e, const Frame& f,
                 const InclusionCertificate& cert, Outcome& o) {
  if (trace.levels.size() != e.size()) o.fail("trace depth differs from n");
  if (!check_trace(trace)) o.fail("check_trace rejected the trace");
  if (!(trace.final_certificate().coeffs == cert.coeffs)) {
    o.fail("final trace level differs from verify_basic_lemma");
  }
  const InclusionCertificate top = trace.final_certificate();
  if (!(top.e == e.seq()) || !(top.f == f.seq())) o.fail("trace top level is not the input");
  // Engine-side witness audit, independent of check_trace's substitutions.
  for (const TraceLevel& level : trace.levels) {
    if (level.rank < 2) continue;
    const Frame level_f = Frame::from(level.f);
    const Subspace span_f = span_of(level.f);
    for (const MapStep& step : level.steps) {
      const Vector& v = step.witness.vector;
      if (v.is_zero()) o.fail("zero kernel witness");
      if (!span_f.contains(v)) o.fail("witness outside span(f)");
      if (!apply_map(step.map, v).is_zero()) o.fail("witness not annihilated by L_i");
      const auto mult = multiple_of(v, level.e[step.index]);
      if (!mult || mult->is_zero()) o.fail("witness is not a multiple of e_i");
      if (!(coordinates(level_f, v).coeffs == step.witness.coords)) {
        o.fail("witness coordinates disagree with the engine");
      }
    }
  }
}

}  // namespace

LemmaReports lemma_sweep(const RandomConfig& config, bool with_traces,
                         Execution exec) {
  const FieldSpec field = config.field;
  auto outcomes = fan_out<LemmaOutcome>(config.instances, exec, [&](std::uint64_t idx) {
    LemmaOutcome out;
    Rng rng(instance_seed(config.seed, idx));
    const std::size_t m = uniform_index(rng, 1, 7);
    const std::size_t n = uniform_index(rng, 1, std::min<std::size_t>(5, m));
    const Frame e = random_frame(field, m, n, rng);
    const ScalarMatrix a = random_invertible(field, n, rng);
    std::optional<Frame> f;
    std::optional<InclusionCertificate> cert;

    out.cert = guarded([&](Outcome& o) {
      f = Frame::from(transform(e.seq(), a));
      cert = verify_basic_lemma(e, *f);
      if (!check_certificate(*cert)) o.fail("check_certificate rejected the certificate");
    });
    out.cob = guarded([&](Outcome& o) {
      if (!f || !cert) return o.fail("no certificate to compare against");
      const ChangeOfBasis cob = change_of_basis(e, *f);
      if (!(cob.forward * cob.inverse).is_identity()) o.fail("A * A_inv != I");
      if (!(cob.inverse * cob.forward).is_identity()) o.fail("A_inv * A != I");
      if (!(cob.inverse == cert->coeffs)) o.fail("A_inv differs from the certificate");
      if (!(cob.forward == a)) o.fail("A differs from the generating matrix");
    });
    if (with_traces) {
      out.trace = guarded([&](Outcome& o) {
        if (!f || !cert) return o.fail("no certificate to compare against");
        audit_trace(trace_induction(e, *f), e, *f, *cert, o);
      });
    }
    return out;
  });

  LemmaReports reports;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    tally(reports.certificates, outcomes[i].cert, i);
    tally(reports.change_of_basis, outcomes[i].cob, i);
    if (with_traces) tally(reports.traces, outcomes[i].trace, i);
  }
  return reports;
}

Report steinitz_sweep(const RandomConfig& config, Execution exec) {
  const FieldSpec field = config.field;
  return reduce(fan_out<Outcome>(config.instances, exec, [&](std::uint64_t idx) {
    return guarded([&](Outcome& o) {
      Rng rng(instance_seed(config.seed, idx));
      const std::size_t k = uniform_index(rng, 0, 4);
      const std::size_t l = uniform_index(rng, 0, 4);
      const std::size_t m = k + l;
      const Frame basis = random_frame(field, m, m, rng);
      const Frame frame = random_frame(field, m, k, rng);
      const SteinitzResult result = steinitz_extend(basis, frame);
      if (result.r != l) o.fail("r = " + std::to_string(result.r) + " but l = " + std::to_string(l));
      for (std::size_t t = 1; t < result.picked.size(); ++t) {
        if (result.picked[t] <= result.picked[t - 1]) o.fail("picked indices not increasing");
      }
      if (rank_seq(result.extended.seq()) != m) o.fail("B' is not of rank k + l");
      if (!(result.extended.seq().prefix(k) == frame.seq())) o.fail("B' does not start with f");
      for (std::size_t t = 0; t < result.picked.size(); ++t) {
        if (!(result.extended[k + t] == basis[result.picked[t]])) {
          o.fail("B' tail is not the picked basis vectors");
        }
      }
    });
  }));
}

Report rank_bound_sweep(const RandomConfig& config, Execution exec) {
  const FieldSpec field = config.field;
  return reduce(fan_out<Outcome>(config.instances, exec, [&](std::uint64_t idx) {
    return guarded([&](Outcome& o) {
      Rng rng(instance_seed(config.seed, idx));
      const std::size_t m = uniform_index(rng, 1, 7);
      const std::size_t n = uniform_index(rng, 1, 5);
      const VecSequence base = random_sequence(field, m, n, rng);
      const VecSequence derived =
          random_combinations(base, uniform_index(rng, 0, 2 * n), rng);
      if (!rank_bound_check(base, derived)) o.fail("rank_bound_check returned false");
    });
  }));
}

Report dichotomy_sweep(const RandomConfig& config,
                       const oracle::EnumerationBudget& budget, Execution exec) {
  const FieldSpec field = config.field;
  const bool oracle_field =
      field.is_prime() && field.modulus() <= budget.max_field_size;
  return reduce(fan_out<Outcome>(config.instances, exec, [&](std::uint64_t idx) {
    return guarded([&](Outcome& o) {
      Rng rng(instance_seed(config.seed, idx));
      const std::size_t m = uniform_index(rng, 1, 4);
      const VecSequence gens = random_sequence(field, m, uniform_index(rng, 0, 4), rng);
      const Subspace sub = span_of(gens);
      const std::size_t len = uniform_index(rng, 0, sub.dim());
      VecSequence chosen(field, m);
      while (chosen.size() < len) {
        const VecSequence pick = random_combinations(sub.canonical_basis(), 1, rng);
        if (!solve_in_span(chosen, pick[0])) chosen.push_back(pick[0]);
      }
      const Frame frame = Frame::from(chosen);

      const bool maximal = is_maximal_in(frame, sub);
      bool extended = false;
      try {
        const Vector v = extend_frame(frame, sub);
        extended = true;
        if (!sub.contains(v) || !is_frame(frame.seq().appended(v))) {
          o.fail("extension vector does not extend the frame inside sub");
        }
      } catch (const FrameIsMaximal&) {
      }
      if (maximal == extended) o.fail("maximal and extendable disagree");

      const std::size_t max_len = frame.size() + 1;
      if (oracle_field && oracle::maximality_within_budget(sub, frame.size(), max_len, budget)) {
        const bool brute = oracle::maximality_bruteforce(frame, sub, max_len, budget,
                                                         Execution::kSerial);
        if (brute != maximal) o.fail("maximality_bruteforce disagrees with is_maximal_in");
        o.confirmed = true;
      }
    });
  }));
}

Report exhaustive_oracle_sweep(const FieldSpec& field, std::size_t ambient_dim,
                               std::size_t length,
                               const oracle::EnumerationBudget& budget,
                               Execution exec) {
  if (!field.is_prime()) throw InputError("exhaustive sweep needs a finite field");
  const std::uint64_t p = field.modulus();
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < ambient_dim; ++i) vectors *= p;
  std::uint64_t sequences = 1;
  for (std::size_t j = 0; j < length; ++j) sequences *= vectors;

  auto vector_at = [&](std::uint64_t code) {
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      entries.push_back(Scalar::from_int(field, static_cast<std::int64_t>(code % p)));
      code /= p;
    }
    return Vector(field, std::move(entries));
  };
  std::vector<Vector> all_vectors;
  for (std::uint64_t c = 0; c < vectors; ++c) all_vectors.push_back(vector_at(c));

  return reduce(fan_out<Outcome>(sequences, exec, [&](std::uint64_t idx) {
    return guarded([&](Outcome& o) {
      VecSequence seq(field, ambient_dim);
      for (std::size_t j = 0; j < length; ++j) {
        seq.push_back(all_vectors[idx % vectors]);
        idx /= vectors;
      }
      const std::size_t engine_rank = rank_seq(seq);
      const std::size_t brute_rank = oracle::rank_bruteforce(seq, budget);
      if (engine_rank != brute_rank) {
        o.fail("rank " + std::to_string(engine_rank) + " vs oracle " + std::to_string(brute_rank));
      }
      for (const Vector& x : all_vectors) {
        const auto coeffs = solve_in_span(seq, x);
        if (coeffs.has_value() != oracle::member_bruteforce(seq, x, budget)) {
          o.fail("membership of (" + x.to_string() + ") disagrees with the oracle");
        }
        if (coeffs && !(lin_comb(seq, *coeffs) == x)) o.fail("solve_in_span is unsound");
      }
    });
  }));
}

Report random_oracle_sweep(const RandomConfig& config,
                           const oracle::EnumerationBudget& budget, Execution exec) {
  const FieldSpec field = config.field;
  const std::size_t max_m = std::min<std::size_t>(4, budget.max_ambient_dim);
  const std::size_t max_n = std::min<std::size_t>(4, budget.max_sequence_len);
  return reduce(fan_out<Outcome>(config.instances, exec, [&](std::uint64_t idx) {
    return guarded([&](Outcome& o) {
      Rng rng(instance_seed(config.seed, idx));
      const std::size_t m = uniform_index(rng, 0, max_m);
      const std::size_t n = uniform_index(rng, 0, max_n);
      const VecSequence seq = random_sequence(field, m, n, rng);
      if (rank_seq(seq) != oracle::rank_bruteforce(seq, budget)) {
        o.fail("rank disagrees with the oracle");
      }
      // Half the targets are drawn from the span so both answers occur.
      const Vector x = uniform_index(rng, 0, 1) == 0
                           ? random_vector(field, m, rng)
                           : random_combinations(seq, 1, rng)[0];
      const auto coeffs = solve_in_span(seq, x);
      if (coeffs.has_value() != oracle::member_bruteforce(seq, x, budget)) {
        o.fail("membership disagrees with the oracle");
      }
      if (coeffs && !(lin_comb(seq, *coeffs) == x)) o.fail("solve_in_span is unsound");
    });
  }));
}

}  // namespace framekit::sweeps
