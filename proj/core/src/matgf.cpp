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

#include "crcodes/matgf.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "crcodes/error.hpp"

namespace crcodes {

namespace {

void check_entries(const Field& f, std::span<const Elem> entries) {
  for (Elem e : entries) {
    if (e >= f.q()) throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(e) + " not in GF(" + std::to_string(f.q()) + ")");
  }
}

void check_same_field(const GFMatrix& a, const GFMatrix& b) {
  if (!(*a.field() == *b.field())) throw Error(ErrorKind::ColumnMismatch, "matrices over different fields");
}

}  // namespace

GFVector::GFVector(FieldRef field, std::size_t n) : field_(std::move(field)), entries_(n, 0) {}

GFVector::GFVector(FieldRef field, std::vector<Elem> entries) : field_(std::move(field)), entries_(std::move(entries)) {
  check_entries(*field_, entries_);
}

std::size_t GFVector::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](Elem e) { return e != 0; }));
}

std::size_t hamming_distance(const GFVector& a, const GFVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "vectors of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

GFMatrix::GFMatrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

GFMatrix::GFMatrix(FieldRef field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw Error(ErrorKind::BadShape, "entry count does not match shape");
  check_entries(*field_, entries_);
}

GFMatrix::GFMatrix(FieldRef field, std::initializer_list<std::initializer_list<unsigned>> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::BadShape, "ragged matrix literal");
    for (unsigned v : r) {
      if (v >= field_->q()) throw Error(ErrorKind::OutOfRange, "entry not in field");
      entries_.push_back(static_cast<Elem>(v));
    }
  }
}

GFMatrix GFMatrix::identity(FieldRef field, std::size_t n) {
  GFMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GFMatrix GFMatrix::from_rows(FieldRef field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
  GFMatrix m(std::move(field), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

GFVector GFMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return GFVector(field_, std::vector<Elem>(s.begin(), s.end()));
}

GFVector GFMatrix::column_vector(std::size_t c) const {
  std::vector<Elem> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return GFVector(field_, std::move(v));
}

void GFMatrix::paste(const GFMatrix& block, std::size_t r, std::size_t c) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw Error(ErrorKind::BadShape, "block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i) {
    std::copy_n(block.row(i).begin(), block.cols_, entries_.begin() + static_cast<std::ptrdiff_t>((r + i) * cols_ + c));
  }
}

void GFMatrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw Error(ErrorKind::ColumnMismatch, "row length does not match column count");
  check_entries(*field_, values);
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

GFMatrix GFMatrix::operator*(const GFMatrix& rhs) const {
  check_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw Error(ErrorKind::ColumnMismatch, "inner dimensions differ");
  const Field& f = *field_;
  GFMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(a, rhs.at(k, j))));
      }
    }
  }
  return out;
}

GFVector GFMatrix::apply(const GFVector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::LengthMismatch, "vector length does not match column count");
  const Field& f = *field_;
  std::vector<Elem> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(at(r, c), v[c]));
    out[r] = acc;
  }
  return GFVector(field_, std::move(out));
}

bool GFMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
}

RrefResult rref(const GFMatrix& m) {
  const Field& f = *m.field();
  GFMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pr = lead;
    while (pr < a.rows() && a.at(pr, col) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != lead) {
      auto x = a.row(pr);
      auto y = a.row(lead);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const Elem s = f.inv(a.at(lead, col));
    for (auto& e : a.row(lead)) e = f.mul(e, s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const Elem factor = a.at(r, col);
      if (factor == 0) continue;
      auto dst = a.row(r);
      auto src = a.row(lead);
      for (std::size_t c = 0; c < a.cols(); ++c) dst[c] = f.sub(dst[c], f.mul(factor, src[c]));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(a), lead, std::move(pivots)};
}

std::size_t rank(const GFMatrix& m) { return rref(m).rank; }

GFMatrix row_basis(const GFMatrix& m) {
  auto r = rref(m);
  GFMatrix out(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.matrix.row(i));
  return out;
}

GFMatrix null_space(const GFMatrix& m) {
  const Field& f = *m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  GFMatrix out(m.field(), 0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Elem{0});
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.matrix.at(i, free));
    out.append_row(v);
  }
  return out;
}

bool row_space_equal(const GFMatrix& a, const GFMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::ColumnMismatch, "row spaces in different ambient spaces");
  check_same_field(a, b);
  return row_basis(a) == row_basis(b);
}

GFMatrix inverse(const GFMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::BadShape, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto r = rref(hstack(m, GFMatrix::identity(m.field(), n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw Error(ErrorKind::BadShape, "matrix is singular");
  GFMatrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, r.matrix.at(i, n + j));
  }
  return out;
}

GFMatrix hstack(const GFMatrix& a, const GFMatrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw Error(ErrorKind::BadShape, "hstack of matrices with different row counts");
  GFMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.paste(a, 0, 0);
  out.paste(b, 0, a.cols());
  return out;
}

GFMatrix vstack(const GFMatrix& a, const GFMatrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) throw Error(ErrorKind::ColumnMismatch, "vstack of matrices with different column counts");
  GFMatrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.paste(a, 0, 0);
  out.paste(b, a.rows(), 0);
  return out;
}

std::string to_text(const GFMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GFMatrix& m) {
  os << m.field()->p() << ' ' << m.field()->m() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << static_cast<unsigned>(m.at(r, c));
    }
    os << '\n';
  }
  return os;
}

GFMatrix parse_matrix_text(const std::string& text) {
  std::istringstream is(text);
  long long p = 0, m = 0, rows = -1, cols = -1;
  if (!(is >> p >> m >> rows >> cols) || rows < 0 || cols < 0 || p < 0 || m < 0) {
    throw Error(ErrorKind::ParseError, "expected header \"p m r n\"");
  }
  if (rows > (1 << 16) || cols > (1 << 16)) throw Error(ErrorKind::TooLarge, "matrix dimensions exceed 65536");
  auto field = Field::make(static_cast<unsigned>(p), static_cast<unsigned>(m));
  std::vector<Elem> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long long i = 0; i < rows * cols; ++i) {
    long long v = -1;
    if (!(is >> v)) throw Error(ErrorKind::ParseError, "matrix body truncated");
    if (v < 0 || v >= field->q()) throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(v) + " out of range");
    entries.push_back(static_cast<Elem>(v));
  }
  std::string extra;
  if (is >> extra) throw Error(ErrorKind::ParseError, "trailing data after matrix body");
  return GFMatrix(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

}  // namespace crcodes
