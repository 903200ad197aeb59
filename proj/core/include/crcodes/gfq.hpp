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

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace crcodes {

// A field element, encoded as the integer sum a_i * b^i of its coefficients
// a_0..a_{d-1} over the base field of order b. For a prime field this is the
// residue itself.
using Elem = std::uint8_t;

class Field;
using FieldRef = std::shared_ptr<const Field>;

// Table-driven GF(q), q <= 256. Immutable after construction.
//
// A field is built as GF(b)[x] / (f) where GF(b) is the base field and f is the
// lexicographically smallest (by integer encoding) monic irreducible polynomial
// of the requested degree. The distinguished primitive element is the smallest
// element, under the integer encoding, of multiplicative order q - 1.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 256;

  // GF(p^m) over the prime field. Throws NonPrimeP / FieldTooLarge.
  static FieldRef make(unsigned p, unsigned m);
  // GF(q) for a prime power q.
  static FieldRef of_order(unsigned q);
  // GF(b^degree) as a degree-`degree` extension of `base`.
  static FieldRef extension(const FieldRef& base, unsigned degree);

  unsigned p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  unsigned q() const noexcept { return q_; }
  unsigned base_order() const noexcept { return base_order_; }
  unsigned degree() const noexcept { return degree_; }
  // Monic modulus over the base field, coefficients a_0..a_degree.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }
  Elem primitive() const noexcept { return primitive_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, unsigned long long e) const noexcept;

  // Multiplicative order of a nonzero element.
  unsigned order_of(Elem a) const;

  // Coefficients of `a` over the base field (length degree()).
  std::vector<Elem> coordinates(Elem a) const;
  Elem from_coordinates(std::span<const Elem> coords) const;

  bool operator==(const Field& other) const noexcept {
    return base_order_ == other.base_order_ && degree_ == other.degree_ && p_ == other.p_ &&
           modulus_ == other.modulus_;
  }

 private:
  friend struct FieldBuilder;

  Field() = default;
  std::size_t idx(Elem a, Elem b) const noexcept { return std::size_t{a} * q_ + b; }

  unsigned p_ = 0;
  unsigned m_ = 0;
  unsigned q_ = 0;
  unsigned base_order_ = 0;
  unsigned degree_ = 0;
  std::vector<Elem> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  Elem primitive_ = 0;
};

bool is_prime(unsigned n) noexcept;

// Splits q into (p, m) with q = p^m; returns false if q is not a prime power.
bool prime_power(unsigned q, unsigned& p, unsigned& m) noexcept;

}  // namespace crcodes
