#include <doctest.h>

#include "framekit/error.hpp"
#include "framekit/lemma.hpp"
#include "framekit/random.hpp"

using namespace framekit;

namespace {
const FieldSpec gf2 = FieldSpec::prime(2);
const FieldSpec gf3 = FieldSpec::prime(3);
const FieldSpec gf5 = FieldSpec::prime(5);
const FieldSpec q = FieldSpec::rationals();

Frame frame(const FieldSpec& field, std::size_t dim,
            std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return Frame::from(VecSequence::from_ints(field, dim, rows));
}
Vector vec(const FieldSpec& field, std::initializer_list<std::int64_t> values) {
  return Vector::from_ints(field, values);
}

const Frame e2 = frame(gf2, 2, {{1, 0}, {0, 1}});
const Frame f2 = frame(gf2, 2, {{1, 1}, {0, 1}});

// e random in Λ^m, f = e * A with A invertible.
std::pair<Frame, Frame> random_pair(const FieldSpec& field, Rng& rng) {
  const std::size_t m = uniform_index(rng, 1, 6);
  const std::size_t n = uniform_index(rng, 1, std::min<std::size_t>(m, 4));
  const Frame e = random_frame(field, m, n, rng);
  return {e, Frame::from(transform(e.seq(), random_invertible(field, n, rng)))};
}
}  // namespace

TEST_CASE("exchange map examples") {
  const LinearMap l1 = build_exchange_map(e2, f2, 0);
  CHECK(l1.images() == VecSequence::from_ints(gf2, 2, {{0, 0}, {0, 1}}));
  CHECK(apply_map(l1, vec(gf2, {0, 1})) == vec(gf2, {0, 1}));
  CHECK(apply_map(l1, vec(gf2, {1, 0})) == vec(gf2, {0, 0}));
  CHECK(apply_map(l1, vec(gf2, {1, 1})) == vec(gf2, {0, 1}));

  const LinearMap zero = build_exchange_map(frame(q, 2, {{1, 2}}), frame(q, 2, {{3, 6}}), 0);
  CHECK(apply_map(zero, vec(q, {5, 10})).is_zero());

  CHECK_THROWS_AS(build_exchange_map(e2, f2, 2), InputError);
  CHECK_THROWS_AS(build_exchange_map(frame(q, 2, {{1, 0}}), frame(q, 2, {{0, 1}}), 0),
                  DomainError);
  CHECK_THROWS_AS(apply_map(zero, vec(q, {0, 1})), DomainError);
}

TEST_CASE("restricted kernel witness examples") {
  const LinearMap l1 = build_exchange_map(e2, f2, 0);
  const auto w = restricted_kernel_witness(l1, f2);
  REQUIRE(w);
  CHECK(w->vector == vec(gf2, {1, 0}));
  CHECK(lin_comb(f2.seq(), w->coords) == w->vector);
  const auto ws = restricted_kernel_witness(l1, Subspace::full(gf2, 2));
  REQUIRE(ws);
  CHECK(*ws == vec(gf2, {1, 0}));

  const Frame e3 = frame(q, 3, {{1, 0, 0}, {0, 1, 0}});
  const LinearMap identity(e3, e3.seq());
  CHECK_FALSE(restricted_kernel_witness(identity, e3));
  CHECK_FALSE(restricted_kernel_witness(l1, Subspace::zero(gf2, 2)));
  CHECK_THROWS_AS(restricted_kernel_witness(identity, Subspace::full(q, 3)), DomainError);
}

TEST_CASE("multiple_of") {
  CHECK(*multiple_of(vec(q, {2, 4}), vec(q, {1, 2})) == Scalar::from_int(q, 2));
  CHECK(multiple_of(vec(q, {0, 0}), vec(q, {1, 2}))->is_zero());
  CHECK_FALSE(multiple_of(vec(q, {2, 5}), vec(q, {1, 2})));
  CHECK_FALSE(multiple_of(vec(q, {1, 0}), vec(q, {0, 0})));
}

TEST_CASE("verify_basic_lemma examples") {
  const auto cert = verify_basic_lemma(e2, f2);
  CHECK(cert.coeffs == ScalarMatrix::from_ints(gf2, 2, 2, {{1, 0}, {1, 1}}));
  CHECK(check_certificate(cert));

  const Frame e = frame(gf5, 3, {{1, 2, 3}, {4, 0, 1}});
  CHECK(verify_basic_lemma(e, e).coeffs.is_identity());

  const auto diag = verify_basic_lemma(frame(q, 2, {{1, 0}, {0, 1}}), frame(q, 2, {{2, 0}, {0, 3}}));
  CHECK(diag.coeffs.at(0, 0) == Scalar::parse("1/2", q));
  CHECK(diag.coeffs.at(1, 1) == Scalar::parse("1/3", q));
  CHECK(diag.coeffs.at(1, 0).is_zero());

  CHECK_THROWS_AS(verify_basic_lemma(frame(q, 2, {{1, 0}}), frame(q, 2, {{0, 1}})), DomainError);
  CHECK_THROWS_AS(verify_basic_lemma(frame(q, 2, {{1, 0}}), frame(q, 2, {{1, 0}, {0, 1}})),
                  InputError);
  CHECK_THROWS_AS(verify_basic_lemma(frame(q, 2, {{1, 0}}), frame(q, 3, {{1, 0, 0}})),
                  InputError);
  CHECK_THROWS_AS(verify_basic_lemma(e2, frame(gf3, 2, {{1, 0}, {0, 1}})), FieldMismatch);
}

TEST_CASE("check_certificate rejects tampering and malformed input") {
  auto cert = verify_basic_lemma(e2, f2);
  auto flipped = cert;
  flipped.coeffs.at(1, 0) = flipped.coeffs.at(1, 0) + Scalar::one(gf2);
  CHECK_FALSE(check_certificate(flipped));

  auto short_f = cert;
  short_f.f = cert.f.prefix(1);
  CHECK_FALSE(check_certificate(short_f));

  auto wrong_field = cert;
  wrong_field.coeffs = ScalarMatrix::identity(gf3, 2);
  CHECK_FALSE(check_certificate(wrong_field));

  auto wrong_shape = cert;
  wrong_shape.coeffs = ScalarMatrix::identity(gf2, 3);
  CHECK_FALSE(check_certificate(wrong_shape));

  const Frame e = frame(q, 2, {{1, 0}, {0, 1}});
  CHECK(check_certificate({e.seq(), e.seq(), ScalarMatrix::identity(q, 2)}));
  CHECK(check_certificate({VecSequence(q, 2), VecSequence(q, 2), ScalarMatrix(q, 0, 0)}));
}

TEST_CASE("trace examples") {
  const ProofTrace one = trace_induction(frame(gf5, 1, {{2}}), frame(gf5, 1, {{3}}));
  REQUIRE(one.levels.size() == 1);
  CHECK(one.levels[0].base_multiple == Scalar::from_int(gf5, 4));
  CHECK(one.levels[0].coeffs.at(0, 0) == Scalar::from_int(gf5, 4));
  CHECK(check_trace(one));

  const ProofTrace two = trace_induction(e2, f2);
  REQUIRE(two.levels.size() == 2);
  const TraceLevel& top = two.levels[1];
  REQUIRE(top.steps.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const MapStep& step = top.steps[i];
    CHECK(step.index == i);
    CHECK_FALSE(step.witness.vector.is_zero());
    CHECK(multiple_of(step.witness.vector, e2[i]) == step.multiple);
    CHECK_FALSE(step.multiple.is_zero());
    CHECK(apply_map(step.map, step.witness.vector).is_zero());
  }
  CHECK(two.final_certificate().coeffs == verify_basic_lemma(e2, f2).coeffs);
  CHECK(check_trace(two));

  const Frame e = frame(q, 4, {{1, 2, 0, 1}, {0, 1, 1, 0}, {3, 0, 0, 1}});
  const ProofTrace same = trace_induction(e, e);
  CHECK(same.final_certificate().coeffs.is_identity());
  CHECK(same.levels.size() == 3);
  CHECK(check_trace(same));
}

TEST_CASE("check_trace rejects tampered traces") {
  const Frame e = frame(gf3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Frame f = frame(gf3, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const ProofTrace trace = trace_induction(e, f);
  REQUIRE(check_trace(trace));
  const Scalar one = Scalar::one(gf3);

  SUBCASE("final coefficients") {
    ProofTrace t = trace;
    t.levels.back().coeffs.at(0, 0) += one;
    CHECK_FALSE(check_trace(t));
  }
  SUBCASE("witness") {
    ProofTrace t = trace;
    MapStep& step = t.levels.back().steps[0];
    step.witness.vector = step.witness.vector + step.witness.vector;
    CHECK_FALSE(check_trace(t));
  }
  SUBCASE("multiple") {
    ProofTrace t = trace;
    t.levels.back().steps[1].multiple += one;
    CHECK_FALSE(check_trace(t));
  }
  SUBCASE("hypothesis certificate") {
    ProofTrace t = trace;
    t.levels.back().steps[2].hypothesis.coeffs.at(0, 0) += one;
    CHECK_FALSE(check_trace(t));
  }
  SUBCASE("forward matrix") {
    ProofTrace t = trace;
    t.levels[1].forward.at(0, 0) += one;
    CHECK_FALSE(check_trace(t));
  }
  SUBCASE("base multiple") {
    ProofTrace t = trace;
    t.levels[0].base_multiple = *t.levels[0].base_multiple + one;
    CHECK_FALSE(check_trace(t));
  }
  SUBCASE("missing level") {
    ProofTrace t = trace;
    t.levels.erase(t.levels.begin());
    CHECK_FALSE(check_trace(t));
  }
}

TEST_CASE("random lemma instances") {
  Rng rng(31);
  for (const FieldSpec& field : {gf2, gf3, gf5, q}) {
    CAPTURE(field.to_string());
    for (int trial = 0; trial < 60; ++trial) {
      const auto [e, f] = random_pair(field, rng);
      const InclusionCertificate cert = verify_basic_lemma(e, f);
      CHECK(check_certificate(cert));
      const ChangeOfBasis cob = change_of_basis(e, f);
      CHECK(cob.inverse == cert.coeffs);
      CHECK((cob.forward * cert.coeffs).is_identity());
      const ProofTrace trace = trace_induction(e, f);
      CHECK(trace.levels.size() == e.size());
      CHECK(check_trace(trace));
      CHECK(trace.final_certificate().coeffs == cert.coeffs);
    }
  }
}

TEST_CASE("steinitz examples") {
  const Frame std3 = frame(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Frame f = frame(q, 3, {{1, 1, 0}, {0, 1, 1}});
  const SteinitzResult r = steinitz_extend(std3, f);
  CHECK(r.picked == std::vector<std::size_t>{0});
  CHECK(r.r == 1);
  CHECK(r.extended.seq() == f.seq().appended(std3[0]));

  const Frame full = frame(q, 3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const SteinitzResult none = steinitz_extend(std3, full);
  CHECK(none.picked.empty());
  CHECK(none.extended == full);

  const SteinitzResult all = steinitz_extend(std3, Frame::empty(q, 3));
  CHECK(all.extended == std3);
  CHECK(all.r == 3);

  CHECK_THROWS_AS(steinitz_extend(frame(q, 3, {{1, 0, 0}}), f), DomainError);
  CHECK_THROWS_AS(steinitz_extend(std3, frame(q, 2, {{1, 0}})), InputError);
}

TEST_CASE("random steinitz instances") {
  Rng rng(37);
  for (const FieldSpec& field : {gf2, gf5, q}) {
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t k = uniform_index(rng, 0, 4), l = uniform_index(rng, 0, 4);
      const Frame basis = random_frame(field, k + l, k + l, rng);
      const Frame fr = random_frame(field, k + l, k, rng);
      const SteinitzResult r = steinitz_extend(basis, fr);
      CHECK(r.r == l);
      CHECK(r.picked.size() == l);
      for (std::size_t t = 1; t < r.picked.size(); ++t) CHECK(r.picked[t - 1] < r.picked[t]);
      CHECK(rank_seq(r.extended.seq()) == k + l);
      CHECK(r.extended.seq().prefix(k) == fr.seq());
    }
  }
}

TEST_CASE("rank_bound_check") {
  const auto base = VecSequence::from_ints(gf2, 2, {{1, 0}, {0, 1}});
  CHECK(rank_bound_check(base, VecSequence::from_ints(gf2, 2, {{1, 1}, {1, 0}, {0, 1}})));
  const auto one = VecSequence::from_ints(q, 2, {{1, 2}});
  CHECK(rank_bound_check(one, VecSequence::from_ints(q, 2, {{2, 4}, {-1, -2}, {0, 0}})));
  CHECK(rank_bound_check(VecSequence(q, 2), VecSequence::from_ints(q, 2, {{0, 0}})));
  CHECK_THROWS_AS(rank_bound_check(one, VecSequence::from_ints(q, 2, {{0, 1}})), DomainError);

  Rng rng(41);
  for (const FieldSpec& field : {gf2, gf3, q}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = uniform_index(rng, 0, 5);
      const VecSequence b = random_sequence(field, uniform_index(rng, 1, 6), n, rng);
      CHECK(rank_bound_check(b, random_combinations(b, uniform_index(rng, 0, 2 * n), rng)));
    }
  }
}
