#include "framekit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "framekit/error.hpp"

namespace framekit::oracle {

namespace {

using Residues = std::vector<std::uint32_t>;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Flat residue view of a sequence: n vectors of m residues mod p.
struct Table {
  std::uint32_t p;
  std::size_t m;
  std::vector<Residues> rows;
};

Residues residues_of(const Vector& v) {
  Residues out;
  out.reserve(v.ambient_dim());
  for (const Scalar& s : v.entries()) out.push_back(s.residue());
  return out;
}

void require_finite(const FieldSpec& field) {
  if (!field.is_prime()) {
    throw InputError("the oracle enumerates finite fields only; Q is infinite");
  }
}

void check_shape(const FieldSpec& field, std::size_t m, std::size_t n,
                 const EnumerationBudget& budget) {
  require_finite(field);
  const std::uint32_t p = field.modulus();
  if (p > budget.max_field_size) {
    throw BudgetExceeded("field size " + std::to_string(p) + " exceeds budget " +
                         std::to_string(budget.max_field_size));
  }
  if (m > budget.max_ambient_dim) {
    throw BudgetExceeded("ambient dimension " + std::to_string(m) +
                         " exceeds budget " + std::to_string(budget.max_ambient_dim));
  }
  if (n > budget.max_sequence_len) {
    throw BudgetExceeded("sequence length " + std::to_string(n) +
                         " exceeds budget " + std::to_string(budget.max_sequence_len));
  }
  const std::uint64_t work = saturating_add(saturating_pow(p, n), saturating_pow(p, m));
  if (work > budget.max_enumeration) {
    throw BudgetExceeded("enumeration of " + std::to_string(work) +
                         " elements exceeds budget " +
                         std::to_string(budget.max_enumeration));
  }
}

Table table_of(const VecSequence& seq, const EnumerationBudget& budget) {
  check_shape(seq.field(), seq.ambient_dim(), seq.size(), budget);
  Table t{seq.field().modulus(), seq.ambient_dim(), {}};
  t.rows.reserve(seq.size());
  for (const Vector& v : seq) t.rows.push_back(residues_of(v));
  return t;
}

void add_into(Residues& acc, const Residues& v, std::uint32_t p) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const std::uint32_t s = acc[i] + v[i];
    acc[i] = s >= p ? s - p : s;
  }
}

bool all_zero(const Residues& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t encode(const Residues& v, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

Residues decode(std::uint64_t code, std::uint32_t p, std::size_t m) {
  Residues v(m);
  for (std::size_t i = 0; i < m; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

// Walks every coefficient tuple of `vecs` with an odometer. Bumping digit j
// from c to c + 1 (mod p) always adds vecs[j] to the running sum, because
// wrapping from p - 1 to 0 subtracts (p - 1) vecs[j], which equals vecs[j].
// visit(sum, is_zero_tuple) returns false to stop early.
template <typename Visit>
void for_each_combination(const std::vector<const Residues*>& vecs,
                          std::uint32_t p, std::size_t m, Visit&& visit) {
  Residues sum(m, 0);
  std::vector<std::uint32_t> digits(vecs.size(), 0);
  std::size_t nonzero_digits = 0;
  if (!visit(sum, true)) return;
  while (true) {
    std::size_t j = 0;
    while (j < digits.size()) {
      add_into(sum, *vecs[j], p);
      const std::uint32_t before = digits[j];
      digits[j] = before + 1 == p ? 0 : before + 1;
      if (before == 0) ++nonzero_digits;
      if (digits[j] == 0) {
        --nonzero_digits;
        ++j;
        continue;
      }
      break;
    }
    if (j == digits.size()) return;
    if (!visit(sum, nonzero_digits == 0)) return;
  }
}

// The only null combination is the zero tuple.
bool independent(const std::vector<const Residues*>& vecs, std::uint32_t p,
                 std::size_t m) {
  bool found_null = false;
  for_each_combination(vecs, p, m, [&](const Residues& sum, bool zero_tuple) {
    if (!zero_tuple && all_zero(sum)) {
      found_null = true;
      return false;
    }
    return true;
  });
  return !found_null;
}

// Some subsequence of length r + 1 is independent. Subsequences of an
// independent sequence are independent, so this is rank > r.
bool rank_exceeds(const std::vector<const Residues*>& seq, std::size_t r,
                  std::uint32_t p, std::size_t m) {
  const std::size_t n = seq.size();
  const std::size_t want = r + 1;
  if (want > n) return false;
  std::vector<const Residues*> subset(want);
  std::vector<std::size_t> pick(want);
  for (std::size_t i = 0; i < want; ++i) pick[i] = i;
  while (true) {
    for (std::size_t i = 0; i < want; ++i) subset[i] = seq[pick[i]];
    if (independent(subset, p, m)) return true;
    std::size_t i = want;
    while (i-- > 0) {
      if (pick[i] != i + n - want) break;
      if (i == 0) return false;
    }
    ++pick[i];
    for (std::size_t t = i + 1; t < want; ++t) pick[t] = pick[t - 1] + 1;
  }
}

std::vector<const Residues*> pointers(const Table& t) {
  std::vector<const Residues*> out;
  out.reserve(t.rows.size());
  for (const Residues& r : t.rows) out.push_back(&r);
  return out;
}

// sum_j digit_j(index) * rows[j], the tuple read off `index` in base p.
Residues combination_at(const Table& t, std::uint64_t index) {
  Residues sum(t.m, 0);
  for (const Residues& row : t.rows) {
    const std::uint64_t c = index % t.p;
    index /= t.p;
    for (std::size_t i = 0; i < t.m; ++i) {
      sum[i] = static_cast<std::uint32_t>((sum[i] + c * row[i]) % t.p);
    }
  }
  return sum;
}

std::vector<std::uint64_t> span_codes(const Table& t, Execution exec) {
  const std::uint64_t space = saturating_pow(t.p, t.m);
  std::vector<char> seen(space, 0);
  if (exec == Execution::kSerial) {
    for_each_combination(pointers(t), t.p, t.m, [&](const Residues& sum, bool) {
      seen[encode(sum, t.p)] = 1;
      return true;
    });
  } else {
    const std::int64_t tuples = static_cast<std::int64_t>(saturating_pow(t.p, t.rows.size()));
    // Concurrent writes all store 1; the flag array is the only shared state.
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < tuples; ++idx) {
      const std::uint64_t code = encode(combination_at(t, static_cast<std::uint64_t>(idx)), t.p);
      std::atomic_ref<char>(seen[code]).store(1, std::memory_order_relaxed);
    }
  }
  std::vector<std::uint64_t> codes;
  for (std::uint64_t c = 0; c < space; ++c) {
    if (seen[c]) codes.push_back(c);
  }
  return codes;
}

Vector vector_of(const Residues& r, const FieldSpec& field) {
  std::vector<Scalar> entries;
  entries.reserve(r.size());
  for (std::uint32_t x : r) entries.push_back(Scalar::from_int(field, x));
  return Vector(field, std::move(entries));
}

std::uint64_t maximality_work(std::uint64_t elements, std::size_t frame_len,
                              std::size_t max_len) {
  std::uint64_t work = 0;
  for (std::size_t len = frame_len + 1; len <= max_len; ++len) {
    work = saturating_add(work, saturating_pow(elements, len));
  }
  return work;
}

}  // namespace

std::vector<Vector> enum_span(const VecSequence& seq,
                              const EnumerationBudget& budget, Execution exec) {
  const Table t = table_of(seq, budget);
  std::vector<Vector> out;
  for (std::uint64_t code : span_codes(t, exec)) {
    out.push_back(vector_of(decode(code, t.p, t.m), seq.field()));
  }
  return out;
}

bool member_bruteforce(const VecSequence& seq, const Vector& x,
                       const EnumerationBudget& budget, Execution exec) {
  if (!(x.field() == seq.field())) throw FieldMismatch();
  if (x.ambient_dim() != seq.ambient_dim()) {
    throw InputError("vector dimension differs from the sequence's");
  }
  const Table t = table_of(seq, budget);
  const Residues target = residues_of(x);
  if (exec == Execution::kSerial) {
    bool found = false;
    for_each_combination(pointers(t), t.p, t.m, [&](const Residues& sum, bool) {
      found = sum == target;
      return !found;
    });
    return found;
  }
  const std::int64_t tuples = static_cast<std::int64_t>(saturating_pow(t.p, t.rows.size()));
  bool found = false;
#pragma omp parallel for schedule(static) reduction(|| : found)
  for (std::int64_t idx = 0; idx < tuples; ++idx) {
    if (combination_at(t, static_cast<std::uint64_t>(idx)) == target) found = true;
  }
  return found;
}

std::size_t rank_bruteforce(const VecSequence& seq,
                            const EnumerationBudget& budget) {
  const Table t = table_of(seq, budget);
  const auto all = pointers(t);
  std::size_t rank = 0;
  while (rank_exceeds(all, rank, t.p, t.m)) ++rank;
  return rank;
}

bool maximality_within_budget(const Subspace& sub, std::size_t frame_len,
                              std::size_t max_len,
                              const EnumerationBudget& budget) {
  if (!sub.field().is_prime()) return false;
  try {
    check_shape(sub.field(), sub.ambient_dim(), sub.dim(), budget);
  } catch (const BudgetExceeded&) {
    return false;
  }
  if (frame_len > budget.max_sequence_len) return false;
  const std::uint64_t elements = saturating_pow(sub.field().modulus(), sub.dim());
  return maximality_work(elements, frame_len, max_len) <= budget.max_enumeration;
}

bool maximality_bruteforce(const Frame& frame, const Subspace& sub,
                           std::size_t max_len, const EnumerationBudget& budget,
                           Execution exec) {
  require_finite(sub.field());
  if (!(frame.field() == sub.field())) throw FieldMismatch();
  if (frame.ambient_dim() != sub.ambient_dim()) {
    throw InputError("frame and subspace differ in ambient dimension");
  }
  if (!maximality_within_budget(sub, frame.size(), max_len, budget)) {
    throw BudgetExceeded("maximality enumeration exceeds the budget");
  }

  const Table gens = table_of(sub.canonical_basis(), budget);
  const std::vector<std::uint64_t> codes = span_codes(gens, exec);
  std::vector<Residues> elements;
  elements.reserve(codes.size());
  for (std::uint64_t c : codes) elements.push_back(decode(c, gens.p, gens.m));

  for (const Vector& v : frame.seq()) {
    if (!std::binary_search(codes.begin(), codes.end(), encode(residues_of(v), gens.p))) {
      throw DomainError("frame is not contained in the subspace");
    }
  }

  const std::size_t r = frame.size();
  const std::uint64_t count = elements.size();
  // A sequence no longer than r has rank at most r, so start at r + 1.
  for (std::size_t len = r + 1; len <= max_len; ++len) {
    const std::uint64_t sequences = saturating_pow(count, len);
    auto violates = [&](std::uint64_t idx) {
      std::vector<const Residues*> seq(len);
      for (std::size_t j = 0; j < len; ++j) {
        seq[j] = &elements[idx % count];
        idx /= count;
      }
      return rank_exceeds(seq, r, gens.p, gens.m);
    };
    if (exec == Execution::kSerial) {
      for (std::uint64_t idx = 0; idx < sequences; ++idx) {
        if (violates(idx)) return false;
      }
    } else {
      std::atomic<bool> violated{false};
#pragma omp parallel for schedule(dynamic, 256)
      for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(sequences); ++idx) {
        if (violated.load(std::memory_order_relaxed)) continue;
        if (violates(static_cast<std::uint64_t>(idx))) {
          violated.store(true, std::memory_order_relaxed);
        }
      }
      if (violated.load()) return false;
    }
  }
  return true;
}

}  // namespace framekit::oracle
