#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "framekit/field.hpp"

namespace framekit {

// A coordinate vector in Λ^m. m = 0 is legal.
class Vector {
 public:
  Vector(FieldSpec field, std::vector<Scalar> entries);

  static Vector zero(const FieldSpec& field, std::size_t dim);
  static Vector unit(const FieldSpec& field, std::size_t dim,
                     std::size_t index);
  static Vector from_ints(const FieldSpec& field,
                          std::initializer_list<std::int64_t> values);
  static Vector from_ints(const FieldSpec& field,
                          std::span<const std::int64_t> values);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;
  Vector scaled(const Scalar& s) const;
  // Index of the first nonzero entry, or ambient_dim() for the zero vector.
  std::size_t leading_index() const;

  // Space separated canonical scalars.
  std::string to_string() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

// An ordered sequence of vectors ||x_1, ..., x_n||, duplicates allowed.
// It is a function from {1..n} into Λ^m, so the ambient dimension is kept
// even when n = 0.
class VecSequence {
 public:
  VecSequence(FieldSpec field, std::size_t ambient_dim,
              std::vector<Vector> items = {});

  static VecSequence from_ints(
      const FieldSpec& field, std::size_t ambient_dim,
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Vector& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vector>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  void push_back(Vector v);
  VecSequence appended(Vector v) const;
  VecSequence without(std::size_t index) const;
  VecSequence prefix(std::size_t length) const;

  friend bool operator==(const VecSequence&, const VecSequence&) = default;

 private:
  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<Vector> items_;
};

// Dense r x c matrix of scalars, row-major.
class ScalarMatrix {
 public:
  ScalarMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  ScalarMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
               std::vector<Scalar> entries);

  static ScalarMatrix identity(const FieldSpec& field, std::size_t n);
  static ScalarMatrix from_ints(
      const FieldSpec& field, std::size_t rows, std::size_t cols,
      std::initializer_list<std::initializer_list<std::int64_t>> values);
  // Sequence items become the columns (an m x n matrix).
  static ScalarMatrix from_columns(const VecSequence& seq);
  // Sequence items become the rows (an n x m matrix).
  static ScalarMatrix from_rows(const VecSequence& seq);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  bool is_identity() const;

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

// sum_j coeffs[j] * seq[j]; the zero vector for an empty sequence.
Vector lin_comb(const VecSequence& seq, std::span<const Scalar> coeffs);

// Coefficients c with lin_comb(seq, c) == target, free variables fixed to 0,
// or nullopt when target is outside the span.
std::optional<std::vector<Scalar>> solve_in_span(const VecSequence& seq,
                                                 const Vector& target);

// Canonical null space basis: one vector per free column of the reduced
// form, with that free coordinate equal to 1.
VecSequence kernel_basis(const ScalarMatrix& m);

ScalarMatrix mat_product(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

struct ReducedForm {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank() const { return pivots.size(); }
};

// Unique reduced row echelon form. GF(p): Gauss-Jordan with first-nonzero
// pivoting. Q: fraction-free Bareiss to echelon form over the integers,
// then back-substitution.
ReducedForm reduced_form(const ScalarMatrix& m);

std::size_t matrix_rank(const ScalarMatrix& m);

}  // namespace framekit
