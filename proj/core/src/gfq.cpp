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

#include "crcodes/gfq.hpp"

#include <string>

#include "crcodes/error.hpp"

namespace crcodes {

namespace {

// Arithmetic of the field the polynomials are taken over.
struct BaseOps {
  unsigned order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  std::vector<Elem> neg;
  std::vector<Elem> inv;

  Elem plus(Elem a, Elem b) const { return add[a * order + b]; }
  Elem minus(Elem a, Elem b) const { return add[a * order + neg[b]]; }
  Elem times(Elem a, Elem b) const { return mul[a * order + b]; }
};

BaseOps prime_ops(unsigned p) {
  BaseOps ops;
  ops.order = p;
  ops.add.resize(p * p);
  ops.mul.resize(p * p);
  ops.neg.resize(p);
  ops.inv.assign(p, 0);
  for (unsigned a = 0; a < p; ++a) {
    ops.neg[a] = static_cast<Elem>((p - a) % p);
    for (unsigned b = 0; b < p; ++b) {
      ops.add[a * p + b] = static_cast<Elem>((a + b) % p);
      ops.mul[a * p + b] = static_cast<Elem>((a * b) % p);
      if ((a * b) % p == 1) ops.inv[a] = static_cast<Elem>(b);
    }
  }
  return ops;
}

using Poly = std::vector<Elem>;  // a_0..a_d, low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g (g nonzero).
Poly poly_mod(Poly f, const Poly& g, const BaseOps& ops) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const Elem lead_inv = ops.inv[g.back()];
  while (f.size() > dg) {
    const Elem factor = ops.times(f.back(), lead_inv);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = ops.minus(f[shift + i], ops.times(factor, g[i]));
    }
    trim(f);
  }
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, const BaseOps& ops) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = ops.plus(r[i + j], ops.times(a[i], b[j]));
    }
  }
  return r;
}

Poly decode(unsigned e, unsigned base, unsigned len) {
  Poly f(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = static_cast<Elem>(e % base);
    e /= base;
  }
  return f;
}

unsigned encode(const Poly& f, unsigned base) {
  unsigned e = 0;
  for (std::size_t i = f.size(); i-- > 0;) e = e * base + f[i];
  return e;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible(const Poly& f, const BaseOps& ops) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    const unsigned count = ipow(ops.order, d);
    for (unsigned low = 0; low < count; ++low) {
      Poly g = decode(low, ops.order, d);
      g.push_back(1);
      if (poly_mod(f, g, ops).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(unsigned degree, const BaseOps& ops) {
  const unsigned count = ipow(ops.order, degree);
  for (unsigned low = 0; low < count; ++low) {
    Poly f = decode(low, ops.order, degree);
    f.push_back(1);
    if (irreducible(f, ops)) return f;
  }
  throw Error(ErrorKind::FieldTooLarge, "no irreducible polynomial of degree " + std::to_string(degree));
}

// Checks the order-limit before any table is allocated.
void check_order(unsigned base, unsigned degree) {
  unsigned long long q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    q *= base;
    if (q > Field::kMaxOrder) {
      throw Error(ErrorKind::FieldTooLarge,
                  std::to_string(base) + "^" + std::to_string(degree) + " exceeds " +
                      std::to_string(Field::kMaxOrder));
    }
  }
}

}  // namespace

struct FieldBuilder {
  static FieldRef build(unsigned p, unsigned m, const BaseOps& base, unsigned degree) {
    check_order(base.order, degree);
    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->m_ = m;
    f->base_order_ = base.order;
    f->degree_ = degree;
    f->q_ = ipow(base.order, degree);
    f->modulus_ = smallest_irreducible(degree, base);

    const unsigned q = f->q_;
    f->add_.resize(std::size_t{q} * q);
    f->mul_.resize(std::size_t{q} * q);
    f->neg_.resize(q);
    f->inv_.assign(q, 0);
    std::vector<Poly> polys(q);
    for (unsigned a = 0; a < q; ++a) polys[a] = decode(a, base.order, degree);
    for (unsigned a = 0; a < q; ++a) {
      Poly n(degree);
      for (unsigned i = 0; i < degree; ++i) n[i] = base.neg[polys[a][i]];
      f->neg_[a] = static_cast<Elem>(encode(n, base.order));
      for (unsigned b = 0; b < q; ++b) {
        Poly s(degree);
        for (unsigned i = 0; i < degree; ++i) s[i] = base.plus(polys[a][i], polys[b][i]);
        f->add_[std::size_t{a} * q + b] = static_cast<Elem>(encode(s, base.order));
        Poly prod = poly_mod(poly_mul(polys[a], polys[b], base), f->modulus_, base);
        prod.resize(degree, 0);
        const auto e = static_cast<Elem>(encode(prod, base.order));
        f->mul_[std::size_t{a} * q + b] = e;
        if (e == 1) f->inv_[a] = static_cast<Elem>(b);
      }
    }
    for (unsigned a = 1; a < q; ++a) {
      if (f->order_of(static_cast<Elem>(a)) == q - 1) {
        f->primitive_ = static_cast<Elem>(a);
        break;
      }
    }
    return f;
  }

  static BaseOps ops_of(const Field& f) {
    BaseOps ops;
    ops.order = f.q_;
    ops.add = f.add_;
    ops.mul = f.mul_;
    ops.neg = f.neg_;
    ops.inv = f.inv_;
    return ops;
  }
};

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(unsigned q, unsigned& p, unsigned& m) noexcept {
  if (q < 2) return false;
  unsigned d = 2;
  while (q % d != 0) ++d;
  unsigned e = 0;
  while (q % d == 0) {
    q /= d;
    ++e;
  }
  if (q != 1) return false;
  p = d;
  m = e;
  return true;
}

FieldRef Field::make(unsigned p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::FieldTooLarge, "extension degree must be at least 1");
  check_order(p, m);
  return FieldBuilder::build(p, m, prime_ops(p), m);
}

FieldRef Field::of_order(unsigned q) {
  unsigned p = 0;
  unsigned m = 0;
  if (q > kMaxOrder) throw Error(ErrorKind::FieldTooLarge, std::to_string(q) + " exceeds 256");
  if (!prime_power(q, p, m)) throw Error(ErrorKind::NonPrimeP, std::to_string(q) + " is not a prime power");
  return make(p, m);
}

FieldRef Field::extension(const FieldRef& base, unsigned degree) {
  if (degree == 0) throw Error(ErrorKind::FieldTooLarge, "extension degree must be at least 1");
  check_order(base->q(), degree);
  return FieldBuilder::build(base->p(), base->m() * degree, FieldBuilder::ops_of(*base), degree);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvOfZero, "zero has no multiplicative inverse");
  return inv_[a];
}

Elem Field::pow(Elem a, unsigned long long e) const noexcept {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

unsigned Field::order_of(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvOfZero, "zero has no multiplicative order");
  unsigned k = 1;
  Elem x = a;
  while (x != 1) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<Elem> Field::coordinates(Elem a) const { return decode(a, base_order_, degree_); }

Elem Field::from_coordinates(std::span<const Elem> coords) const {
  return static_cast<Elem>(encode(Poly(coords.begin(), coords.end()), base_order_));
}

}  // namespace crcodes
