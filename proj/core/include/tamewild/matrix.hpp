// Copyright 2026 The tamewild Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <ostream>
#include <vector>

#include "tamewild/field.hpp"

namespace tamewild {

/// Dense row-major matrix over F_p. Value type; equality is entrywise.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);
  Matrix(std::size_t rows, std::size_t cols, PrimeField field, std::vector<Fe> entries);

  static Matrix from_rows(PrimeField field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix identity(std::size_t n, PrimeField field);
  static Matrix scalar(std::size_t n, const Fe& lambda);
  /// I_{i,j}: zero except a one at (i, j); indices are 0-based.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  PrimeField field() const noexcept { return field_; }
  const std::vector<Fe>& entries() const noexcept { return entries_; }

  const Fe& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Fe& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_zero() const noexcept;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Fe& scalar);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Fe& rhs) { return lhs *= rhs; }
  friend Matrix operator*(const Fe& lhs, Matrix rhs) { return rhs *= lhs; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.entries_ == b.entries_;
  }
  /// Lexicographic on the row-major entry vector (shapes compared first).
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  void require_same_shape(const Matrix& rhs) const;

  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<Fe> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::size_t mat_rank(const Matrix& a);
Fe mat_det(const Matrix& a);
Matrix mat_inverse(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// An a-tuple of n x n matrices sharing one size and one field.
class MatrixTuple {
 public:
  explicit MatrixTuple(std::vector<Matrix> parts);
  MatrixTuple(std::initializer_list<Matrix> parts) : MatrixTuple(std::vector<Matrix>(parts)) {}

  std::size_t arity() const noexcept { return parts_.size(); }
  std::size_t size() const noexcept { return parts_.front().rows(); }
  PrimeField field() const noexcept { return parts_.front().field(); }
  const std::vector<Matrix>& parts() const noexcept { return parts_; }
  const Matrix& operator[](std::size_t k) const { return parts_[k]; }

  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;
  friend std::strong_ordering operator<=>(const MatrixTuple& a, const MatrixTuple& b);

 private:
  std::vector<Matrix> parts_;
};

/// (S A_1 S^-1, ..., S A_a S^-1) with a single shared S.
MatrixTuple conjugate_tuple(const MatrixTuple& t, const Matrix& s);

// ---------------------------------------------------------------------------
// Enumeration of M_{n x m}(F_p) in lexicographic order of the row-major entry
// vector (first entry most significant). Position in this order is the
// matrix's index; it is the canonical order used for orbit representatives.

inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

/// p^(count), or TooLarge once it passes `limit`.
std::uint64_t checked_power(std::uint32_t p, std::size_t count, std::uint64_t limit);

std::uint64_t matrix_index(const Matrix& m);
Matrix matrix_at_index(std::size_t rows, std::size_t cols, PrimeField field, std::uint64_t index);

/// Index of a tuple in the lexicographic order of its concatenated entries.
std::uint64_t tuple_index(const MatrixTuple& t);
MatrixTuple tuple_at_index(std::size_t arity, std::size_t n, PrimeField field, std::uint64_t index);

/// Restartable lazy range over every matrix of a shape, optionally only the
/// invertible ones. Each begin() starts a fresh independent stream.
class MatrixRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Matrix;
    using difference_type = std::ptrdiff_t;
    using pointer = const Matrix*;
    using reference = const Matrix&;

    iterator() = default;
    const Matrix& operator*() const { return *current_; }
    const Matrix* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    friend class MatrixRange;
    iterator(const MatrixRange* range, std::uint64_t index);
    void skip_singular();

    const MatrixRange* range_ = nullptr;
    std::uint64_t index_ = 0;
    std::optional<Matrix> current_;
  };

  MatrixRange(std::size_t rows, std::size_t cols, PrimeField field, bool invertible_only);

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(nullptr, total_); }
  std::uint64_t total_matrices() const noexcept { return total_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  bool invertible_only_;
  std::uint64_t total_;
};

/// Every n x m matrix over F_p; TooLarge if p^(n m) exceeds 10^7.
MatrixRange enumerate_matrices(std::size_t rows, std::size_t cols, PrimeField field);
/// Every invertible n x n matrix over F_p, each exactly once.
MatrixRange enumerate_gl(std::size_t n, PrimeField field);
/// |GL_n(F_p)| = prod_{k<n} (p^n - p^k).
std::uint64_t gl_order(std::size_t n, std::uint32_t p);

/// Materialized GL_n(F_p) with inverses, for repeated orbit scans.
struct GroupElement {
  Matrix s;
  Matrix s_inverse;
};
std::vector<GroupElement> general_linear_group(std::size_t n, PrimeField field);

}  // namespace tamewild
