#include "framekit/linalg.hpp"

#include <utility>

#include "framekit/error.hpp"

namespace framekit {

namespace {

void require_field(const FieldSpec& expected, const FieldSpec& actual) {
  if (!(expected == actual)) throw FieldMismatch();
}

// Gauss-Jordan over GF(p) on raw residues, first nonzero entry as pivot.
ReducedForm reduce_prime(const ScalarMatrix& m) {
  const FieldSpec& field = m.field();
  const std::uint64_t p = field.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c).residue();
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& {
    return a[r * cols + c];
  };

  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && at(found, c) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(found, j), at(pivot_row, j));
    }
    const std::uint64_t inv =
        Scalar::from_int(field, at(pivot_row, c)).inverse().residue();
    for (std::size_t j = c; j < cols; ++j) {
      at(pivot_row, j) = static_cast<std::uint32_t>(at(pivot_row, j) * inv % p);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || at(r, c) == 0) continue;
      const std::uint64_t factor = p - at(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        at(r, j) = static_cast<std::uint32_t>(
            (at(r, j) + factor * at(pivot_row, j)) % p);
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }

  std::vector<Scalar> entries;
  entries.reserve(a.size());
  for (std::uint32_t v : a) entries.push_back(Scalar::from_int(field, v));
  return {ScalarMatrix(field, rows, cols, std::move(entries)), std::move(pivots)};
}

// Rationals: clear denominators row by row, run fraction-free Bareiss
// elimination to an integer echelon form, then normalize pivots and clear
// above them by back-substitution.
ReducedForm reduce_rational(const ScalarMatrix& m) {
  const FieldSpec& field = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::vector<mpz_class> a(rows * cols);
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& {
    return a[r * cols + c];
  };
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpz_class& den = m.at(r, c).rational().get_den();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      at(r, c) = q.get_num() * (scale / q.get_den());
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && at(found, c) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(found, j), at(pivot_row, j));
    }
    const mpz_class pivot = at(pivot_row, c);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = pivot * at(r, j) - at(r, c) * at(pivot_row, j);
        // Every entry is a minor of the input, so this division is exact.
        mpz_divexact(at(r, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      at(r, c) = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++pivot_row;
  }

  std::vector<mpq_class> q(rows * cols);
  auto qat = [&](std::size_t r, std::size_t c) -> mpq_class& {
    return q[r * cols + c];
  };
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& pivot = at(r, pivots[r]);
    for (std::size_t c = 0; c < cols; ++c) {
      qat(r, c) = mpq_class(at(r, c), pivot);
      qat(r, c).canonicalize();
    }
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      const mpq_class factor = qat(above, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) qat(above, j) -= factor * qat(r, j);
    }
  }

  std::vector<Scalar> entries;
  entries.reserve(q.size());
  for (const mpq_class& v : q) {
    entries.push_back(Scalar::from_fraction(field, v.get_num(), v.get_den()));
  }
  return {ScalarMatrix(field, rows, cols, std::move(entries)), std::move(pivots)};
}

}  // namespace

Vector::Vector(FieldSpec field, std::vector<Scalar> entries)
    : field_(field), entries_(std::move(entries)) {
  for (const Scalar& s : entries_) require_field(field_, s.field());
}

Vector Vector::zero(const FieldSpec& field, std::size_t dim) {
  return Vector(field, std::vector<Scalar>(dim, Scalar::zero(field)));
}

Vector Vector::unit(const FieldSpec& field, std::size_t dim, std::size_t index) {
  if (index >= dim) throw InputError("unit vector index out of range");
  std::vector<Scalar> entries(dim, Scalar::zero(field));
  entries[index] = Scalar::one(field);
  return Vector(field, std::move(entries));
}

Vector Vector::from_ints(const FieldSpec& field,
                         std::initializer_list<std::int64_t> values) {
  return from_ints(field, std::span<const std::int64_t>(values.begin(), values.size()));
}

Vector Vector::from_ints(const FieldSpec& field,
                         std::span<const std::int64_t> values) {
  std::vector<Scalar> entries;
  entries.reserve(values.size());
  for (std::int64_t v : values) entries.push_back(Scalar::from_int(field, v));
  return Vector(field, std::move(entries));
}

bool Vector::is_zero() const {
  for (const Scalar& s : entries_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector Vector::scaled(const Scalar& s) const {
  std::vector<Scalar> out;
  out.reserve(entries_.size());
  for (const Scalar& x : entries_) out.push_back(x * s);
  return Vector(field_, std::move(out));
}

std::size_t Vector::leading_index() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) return i;
  }
  return entries_.size();
}

std::string Vector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) out += ' ';
    out += entries_[i].to_string();
  }
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_field(a.field_, b.field_);
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InputError("vector dimensions differ");
  }
  std::vector<Scalar> out;
  out.reserve(a.entries_.size());
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    out.push_back(a.entries_[i] + b.entries_[i]);
  }
  return Vector(a.field_, std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  return a + b.scaled(-Scalar::one(b.field()));
}

bool operator==(const Vector& a, const Vector& b) {
  return a.field_ == b.field_ && a.entries_ == b.entries_;
}

VecSequence::VecSequence(FieldSpec field, std::size_t ambient_dim,
                         std::vector<Vector> items)
    : field_(field), ambient_dim_(ambient_dim), items_() {
  items_.reserve(items.size());
  for (Vector& v : items) push_back(std::move(v));
}

VecSequence VecSequence::from_ints(
    const FieldSpec& field, std::size_t ambient_dim,
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  VecSequence seq(field, ambient_dim);
  for (const auto& row : rows) seq.push_back(Vector::from_ints(field, row));
  return seq;
}

void VecSequence::push_back(Vector v) {
  require_field(field_, v.field());
  if (v.ambient_dim() != ambient_dim_) {
    throw InputError("vector of dimension " + std::to_string(v.ambient_dim()) +
                     " in a sequence of ambient dimension " +
                     std::to_string(ambient_dim_));
  }
  items_.push_back(std::move(v));
}

VecSequence VecSequence::appended(Vector v) const {
  VecSequence out = *this;
  out.push_back(std::move(v));
  return out;
}

VecSequence VecSequence::without(std::size_t index) const {
  if (index >= items_.size()) throw InputError("sequence index out of range");
  VecSequence out(field_, ambient_dim_);
  for (std::size_t j = 0; j < items_.size(); ++j) {
    if (j != index) out.items_.push_back(items_[j]);
  }
  return out;
}

VecSequence VecSequence::prefix(std::size_t length) const {
  if (length > items_.size()) throw InputError("prefix longer than sequence");
  VecSequence out(field_, ambient_dim_);
  out.items_.assign(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(length));
  return out;
}

ScalarMatrix::ScalarMatrix(const FieldSpec& field, std::size_t rows,
                           std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Scalar::zero(field)) {}

ScalarMatrix::ScalarMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                           std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("matrix entry count does not match its shape");
  }
  for (const Scalar& s : entries_) require_field(field_, s.field());
}

ScalarMatrix ScalarMatrix::identity(const FieldSpec& field, std::size_t n) {
  ScalarMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

ScalarMatrix ScalarMatrix::from_ints(
    const FieldSpec& field, std::size_t rows, std::size_t cols,
    std::initializer_list<std::initializer_list<std::int64_t>> values) {
  if (values.size() != rows) throw InputError("row count mismatch");
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (const auto& row : values) {
    if (row.size() != cols) throw InputError("column count mismatch");
    for (std::int64_t v : row) entries.push_back(Scalar::from_int(field, v));
  }
  return ScalarMatrix(field, rows, cols, std::move(entries));
}

ScalarMatrix ScalarMatrix::from_columns(const VecSequence& seq) {
  ScalarMatrix m(seq.field(), seq.ambient_dim(), seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) m.set_column(j, seq[j]);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const VecSequence& seq) {
  std::vector<Scalar> entries;
  entries.reserve(seq.size() * seq.ambient_dim());
  for (const Vector& v : seq) {
    entries.insert(entries.end(), v.entries().begin(), v.entries().end());
  }
  return ScalarMatrix(seq.field(), seq.size(), seq.ambient_dim(), std::move(entries));
}

Vector ScalarMatrix::row(std::size_t r) const {
  const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return Vector(field_, std::vector<Scalar>(first, first + static_cast<std::ptrdiff_t>(cols_)));
}

Vector ScalarMatrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return Vector(field_, std::move(out));
}

void ScalarMatrix::set_column(std::size_t c, const Vector& v) {
  require_field(field_, v.field());
  if (v.ambient_dim() != rows_ || c >= cols_) {
    throw InputError("column does not fit the matrix");
  }
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool ScalarMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& s = at(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

Vector lin_comb(const VecSequence& seq, std::span<const Scalar> coeffs) {
  if (coeffs.size() != seq.size()) {
    throw InputError("expected " + std::to_string(seq.size()) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  Vector sum = Vector::zero(seq.field(), seq.ambient_dim());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    require_field(seq.field(), coeffs[j].field());
    if (coeffs[j].is_zero()) continue;
    sum = sum + seq[j].scaled(coeffs[j]);
  }
  return sum;
}

std::optional<std::vector<Scalar>> solve_in_span(const VecSequence& seq,
                                                 const Vector& target) {
  require_field(seq.field(), target.field());
  if (target.ambient_dim() != seq.ambient_dim()) {
    throw InputError("target dimension differs from the sequence's");
  }
  const std::size_t n = seq.size();
  const FieldSpec& field = seq.field();
  ScalarMatrix augmented(field, seq.ambient_dim(), n + 1);
  for (std::size_t j = 0; j < n; ++j) augmented.set_column(j, seq[j]);
  augmented.set_column(n, target);

  const ReducedForm rf = reduced_form(augmented);
  if (!rf.pivots.empty() && rf.pivots.back() == n) return std::nullopt;

  std::vector<Scalar> coeffs(n, Scalar::zero(field));
  for (std::size_t r = 0; r < rf.pivots.size(); ++r) {
    coeffs[rf.pivots[r]] = rf.reduced.at(r, n);
  }
  return coeffs;
}

VecSequence kernel_basis(const ScalarMatrix& m) {
  const FieldSpec& field = m.field();
  const ReducedForm rf = reduced_form(m);
  VecSequence basis(field, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : rf.pivots) is_pivot[pc] = true;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> x(m.cols(), Scalar::zero(field));
    x[free_col] = Scalar::one(field);
    for (std::size_t r = 0; r < rf.pivots.size(); ++r) {
      x[rf.pivots[r]] = -rf.reduced.at(r, free_col);
    }
    basis.push_back(Vector(field, std::move(x)));
  }
  return basis;
}

ScalarMatrix mat_product(const ScalarMatrix& a, const ScalarMatrix& b) {
  require_field(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw InputError("cannot multiply " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " by " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ScalarMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  return mat_product(a, b);
}

ReducedForm reduced_form(const ScalarMatrix& m) {
  return m.field().is_prime() ? reduce_prime(m) : reduce_rational(m);
}

std::size_t matrix_rank(const ScalarMatrix& m) { return reduced_form(m).rank(); }

}  // namespace framekit
