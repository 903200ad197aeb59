// Copyright 2026 The crcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "crcodes/gfq.hpp"

namespace crcodes {

class GFVector {
 public:
  GFVector(FieldRef field, std::size_t n);
  GFVector(FieldRef field, std::vector<Elem> entries);

  const FieldRef& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Elem operator[](std::size_t i) const { return entries_[i]; }
  Elem& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Elem> entries() const noexcept { return entries_; }

  // Number of nonzero entries.
  std::size_t weight() const noexcept;

  bool operator==(const GFVector& other) const noexcept { return entries_ == other.entries_; }

 private:
  FieldRef field_;
  std::vector<Elem> entries_;
};

std::size_t hamming_distance(const GFVector& a, const GFVector& b);

// Dense row-major matrix over GF(q).
class GFMatrix {
 public:
  GFMatrix(FieldRef field, std::size_t rows, std::size_t cols);
  GFMatrix(FieldRef field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
  GFMatrix(FieldRef field, std::initializer_list<std::initializer_list<unsigned>> rows);

  static GFMatrix identity(FieldRef field, std::size_t n);
  static GFMatrix from_rows(FieldRef field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

  const FieldRef& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { entries_[r * cols_ + c] = v; }
  std::span<const Elem> row(std::size_t r) const {
    return std::span<const Elem>(entries_).subspan(r * cols_, cols_);
  }
  std::span<Elem> row(std::size_t r) { return std::span<Elem>(entries_).subspan(r * cols_, cols_); }
  GFVector row_vector(std::size_t r) const;
  GFVector column_vector(std::size_t c) const;
  std::span<const Elem> entries() const noexcept { return entries_; }

  // Places `block` with its top-left corner at (r, c).
  void paste(const GFMatrix& block, std::size_t r, std::size_t c);
  void append_row(std::span<const Elem> values);

  GFMatrix transpose() const;
  GFMatrix operator*(const GFMatrix& rhs) const;
  // M * v^T as a vector of length rows().
  GFVector apply(const GFVector& v) const;
  bool is_zero() const noexcept;

  bool operator==(const GFMatrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  FieldRef field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

struct RrefResult {
  GFMatrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

// Gauss-Jordan elimination taking the first nonzero entry of each column as pivot.
RrefResult rref(const GFMatrix& m);
std::size_t rank(const GFMatrix& m);
// The nonzero rows of rref(m).
GFMatrix row_basis(const GFMatrix& m);
// Basis of {x : m x^T = 0}, one row per free column in increasing column order.
GFMatrix null_space(const GFMatrix& m);
// Throws ColumnMismatch if the column counts or fields differ.
bool row_space_equal(const GFMatrix& a, const GFMatrix& b);
// Inverse of a square nonsingular matrix; throws BadShape otherwise.
GFMatrix inverse(const GFMatrix& m);
GFMatrix hstack(const GFMatrix& a, const GFMatrix& b);
GFMatrix vstack(const GFMatrix& a, const GFMatrix& b);

// "p m r n" header line, then r lines of n encoded elements.
std::string to_text(const GFMatrix& m);
GFMatrix parse_matrix_text(const std::string& text);
std::ostream& operator<<(std::ostream& os, const GFMatrix& m);

}  // namespace crcodes
