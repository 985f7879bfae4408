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

#include "tamewild/matrix.hpp"

#include <string>
#include <utility>

namespace tamewild {
namespace {

std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_field(PrimeField a, PrimeField b) {
  if (a != b) {
    throw Error(Errc::ModulusMismatch,
                "F_" + std::to_string(a.modulus()) + " vs F_" + std::to_string(b.modulus()));
  }
}

// Row echelon form by Gaussian elimination; returns (rank, det-sign-and-pivots product).
struct Elimination {
  std::size_t rank = 0;
  bool swapped_odd = false;
};

Elimination eliminate(Matrix& m) {
  Elimination e;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && e.rank < rows; ++c) {
    std::size_t pivot = e.rank;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != e.rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(e.rank, j));
      e.swapped_odd = !e.swapped_odd;
    }
    const Fe inv = m(e.rank, c).inverse();
    for (std::size_t i = e.rank + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Fe factor = m(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(e.rank, j);
    }
    ++e.rank;
  }
  return e;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, field.zero()) {
  if (rows == 0 || cols == 0) throw Error(Errc::ShapeMismatch, "matrix dimensions must be >= 1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field, std::vector<Fe> entries)
    : rows_(rows), cols_(cols), field_(field), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(Errc::ShapeMismatch, "matrix dimensions must be >= 1");
  if (entries_.size() != rows * cols) {
    throw Error(Errc::ShapeMismatch, std::to_string(entries_.size()) + " entries for a " +
                                         shape_str(rows, cols) + " matrix");
  }
  for (const Fe& e : entries_) require_same_field(field_, e.field());
}

Matrix Matrix::from_rows(PrimeField field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Fe> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::ShapeMismatch, "ragged row list");
    for (std::int64_t v : row) entries.push_back(field(v));
  }
  return Matrix(r, c, field, std::move(entries));
}

Matrix Matrix::identity(std::size_t n, PrimeField field) { return scalar(n, field.one()); }

Matrix Matrix::scalar(std::size_t n, const Fe& lambda) {
  Matrix m(n, n, lambda.field());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j, PrimeField field) {
  Matrix m(n, n, field);
  m(i, j) = field.one();
  return m;
}

bool Matrix::is_zero() const noexcept {
  for (const Fe& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void Matrix::require_same_shape(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(Errc::ShapeMismatch, shape_str(rows_, cols_) + " vs " + shape_str(rhs.rows_, rhs.cols_));
  }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Fe& scalar) {
  for (Fe& e : entries_) e *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) {
    throw Error(Errc::ShapeMismatch, "cannot multiply " + shape_str(a.rows_, a.cols_) + " by " +
                                         shape_str(b.rows_, b.cols_));
  }
  // Accumulate in 64 bits and reduce once per entry.
  const std::uint64_t p = a.field_.modulus();
  std::vector<Fe> out;
  out.reserve(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        acc += std::uint64_t{a(i, k).value()} * b(k, j).value() % p;
      }
      out.emplace_back(static_cast<std::int64_t>(acc % p), a.field_);
    }
  }
  return Matrix(a.rows_, b.cols_, a.field_, std::move(out));
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.field_.modulus() <=> b.field_.modulus(); c != 0) return c;
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (auto c = a.entries_[k].value() <=> b.entries_[k].value(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

std::size_t mat_rank(const Matrix& a) {
  Matrix work = a;
  return eliminate(work).rank;
}

Fe mat_det(const Matrix& a) {
  if (!a.is_square()) {
    throw Error(Errc::NotSquare, "determinant of a " + shape_str(a.rows(), a.cols()) + " matrix");
  }
  Matrix work = a;
  const Elimination e = eliminate(work);
  if (e.rank < a.rows()) return a.field().zero();
  Fe det = a.field().one();
  for (std::size_t i = 0; i < a.rows(); ++i) det *= work(i, i);
  return e.swapped_odd ? -det : det;
}

Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) {
    throw Error(Errc::NotSquare, "inverse of a " + shape_str(a.rows(), a.cols()) + " matrix");
  }
  const std::size_t n = a.rows();
  const PrimeField field = a.field();
  // Gauss-Jordan on [A | I].
  Matrix aug(n, 2 * n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = field.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw Error(Errc::Singular, "matrix is not invertible");
    if (pivot != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(pivot, j), aug(c, j));
    }
    const Fe inv = aug(c, c).inverse();
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c).is_zero()) continue;
      const Fe factor = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= factor * aug(c, j);
    }
  }
  Matrix inv(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).value();
    }
    os << ']';
  }
  return os << ']';
}

MatrixTuple::MatrixTuple(std::vector<Matrix> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::ShapeMismatch, "a matrix tuple needs at least one part");
  const Matrix& first = parts_.front();
  if (!first.is_square()) throw Error(Errc::NotSquare, "tuple parts must be square");
  for (const Matrix& m : parts_) {
    require_same_field(first.field(), m.field());
    if (m.rows() != first.rows() || m.cols() != first.cols()) {
      throw Error(Errc::ShapeMismatch, "tuple parts must share one size");
    }
  }
}

std::strong_ordering operator<=>(const MatrixTuple& a, const MatrixTuple& b) {
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t k = 0; k < a.arity(); ++k) {
    if (auto c = a.parts_[k] <=> b.parts_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MatrixTuple conjugate_tuple(const MatrixTuple& t, const Matrix& s) {
  if (!s.is_square() || s.rows() != t.size()) {
    throw Error(Errc::ShapeMismatch, "conjugator size does not match the tuple");
  }
  const Matrix s_inv = mat_inverse(s);
  std::vector<Matrix> out;
  out.reserve(t.arity());
  for (const Matrix& a : t.parts()) out.push_back(s * a * s_inv);
  return MatrixTuple(std::move(out));
}

std::uint64_t checked_power(std::uint32_t p, std::size_t count, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < count; ++k) {
    total *= p;
    if (total > limit) {
      throw Error(Errc::TooLarge, std::to_string(p) + "^" + std::to_string(count) +
                                      " exceeds the enumeration limit " + std::to_string(limit));
    }
  }
  return total;
}

std::uint64_t matrix_index(const Matrix& m) {
  std::uint64_t idx = 0;
  const std::uint64_t p = m.field().modulus();
  for (const Fe& e : m.entries()) idx = idx * p + e.value();
  return idx;
}

Matrix matrix_at_index(std::size_t rows, std::size_t cols, PrimeField field, std::uint64_t index) {
  std::vector<Fe> entries(rows * cols, field.zero());
  const std::uint64_t p = field.modulus();
  for (std::size_t k = entries.size(); k-- > 0;) {
    entries[k] = field(static_cast<std::int64_t>(index % p));
    index /= p;
  }
  return Matrix(rows, cols, field, std::move(entries));
}

std::uint64_t tuple_index(const MatrixTuple& t) {
  std::uint64_t idx = 0;
  const std::uint64_t p = t.field().modulus();
  for (const Matrix& m : t.parts()) {
    for (const Fe& e : m.entries()) idx = idx * p + e.value();
  }
  return idx;
}

MatrixTuple tuple_at_index(std::size_t arity, std::size_t n, PrimeField field, std::uint64_t index) {
  const std::uint64_t per = checked_power(field.modulus(), n * n, ~std::uint64_t{0} / field.modulus());
  std::vector<Matrix> parts;
  parts.reserve(arity);
  std::vector<std::uint64_t> digits(arity);
  for (std::size_t k = arity; k-- > 0;) {
    digits[k] = index % per;
    index /= per;
  }
  for (std::uint64_t d : digits) parts.push_back(matrix_at_index(n, n, field, d));
  return MatrixTuple(std::move(parts));
}

MatrixRange::MatrixRange(std::size_t rows, std::size_t cols, PrimeField field, bool invertible_only)
    : rows_(rows), cols_(cols), field_(field), invertible_only_(invertible_only),
      total_(checked_power(field.modulus(), rows * cols, kMaxEnumeration)) {
  if (invertible_only && rows != cols) {
    throw Error(Errc::NotSquare, "GL enumeration needs square matrices");
  }
}

MatrixRange::iterator::iterator(const MatrixRange* range, std::uint64_t index)
    : range_(range), index_(index) {
  if (range_ != nullptr && index_ < range_->total_) {
    current_ = matrix_at_index(range_->rows_, range_->cols_, range_->field_, index_);
    skip_singular();
  }
}

void MatrixRange::iterator::skip_singular() {
  if (!range_->invertible_only_) return;
  while (index_ < range_->total_ && mat_det(*current_).is_zero()) {
    ++index_;
    if (index_ < range_->total_) {
      current_ = matrix_at_index(range_->rows_, range_->cols_, range_->field_, index_);
    }
  }
  if (index_ == range_->total_) current_.reset();
}

MatrixRange::iterator& MatrixRange::iterator::operator++() {
  ++index_;
  if (index_ >= range_->total_) {
    current_.reset();
    return *this;
  }
  // Increment the entry vector with carry from the last entry.
  Matrix& m = *current_;
  const std::uint32_t p = range_->field_.modulus();
  for (std::size_t k = m.rows() * m.cols(); k-- > 0;) {
    Fe& e = m(k / m.cols(), k % m.cols());
    if (e.value() + 1 < p) {
      e += range_->field_.one();
      break;
    }
    e = range_->field_.zero();
  }
  skip_singular();
  return *this;
}

MatrixRange enumerate_matrices(std::size_t rows, std::size_t cols, PrimeField field) {
  return MatrixRange(rows, cols, field, false);
}

MatrixRange enumerate_gl(std::size_t n, PrimeField field) { return MatrixRange(n, n, field, true); }

std::uint64_t gl_order(std::size_t n, std::uint32_t p) {
  const std::uint64_t pn = checked_power(p, n, ~std::uint64_t{0});
  std::uint64_t order = 1;
  std::uint64_t pk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    order *= pn - pk;
    pk *= p;
  }
  return order;
}

std::vector<GroupElement> general_linear_group(std::size_t n, PrimeField field) {
  std::vector<GroupElement> group;
  for (const Matrix& s : enumerate_gl(n, field)) group.push_back({s, mat_inverse(s)});
  return group;
}

}  // namespace tamewild
