// Copyright 2026 The becc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "becc/field.hpp"

#include <sstream>
#include <stdexcept>

namespace becc {

namespace {

// Remainder of polynomial division over GF(2).
std::uint32_t poly_mod(std::uint64_t a, std::uint32_t m) {
  int dm = 31;
  while (!((m >> dm) & 1)) --dm;
  for (int d = 63; d >= dm; --d) {
    if ((a >> d) & 1) a ^= static_cast<std::uint64_t>(m) << (d - dm);
  }
  return static_cast<std::uint32_t>(a);
}

}  // namespace

std::uint32_t FieldTable::default_poly(int b) {
  switch (b) {
    case 2: return 0x7;       // x^2 + x + 1
    case 3: return 0xB;       // x^3 + x + 1
    case 4: return 0x13;      // x^4 + x + 1
    case 5: return 0x25;      // x^5 + x^2 + 1
    case 6: return 0x43;      // x^6 + x + 1
    case 7: return 0x89;      // x^7 + x^3 + 1
    case 8: return 0x11D;     // x^8 + x^4 + x^3 + x^2 + 1
    case 9: return 0x211;     // x^9 + x^4 + 1
    case 10: return 0x409;    // x^10 + x^3 + 1
    case 11: return 0x805;    // x^11 + x^2 + 1
    case 12: return 0x1053;   // x^12 + x^6 + x^4 + x + 1
    case 13: return 0x201B;   // x^13 + x^4 + x^3 + x + 1
    case 14: return 0x4443;   // x^14 + x^10 + x^6 + x + 1
    case 15: return 0x8003;   // x^15 + x + 1
    case 16: return 0x1100B;  // x^16 + x^12 + x^3 + x + 1
    default:
      throw std::invalid_argument("field: b must satisfy 2 <= b <= 16");
  }
}

FieldTable FieldTable::make(int b, std::uint32_t poly) {
  if (b < 2 || b > 16)
    throw std::invalid_argument("field: b must satisfy 2 <= b <= 16");
  if (poly >= (2u << b) || !((poly >> b) & 1)) {
    std::ostringstream os;
    os << "field: polynomial 0x" << std::hex << poly
       << " is not monic of degree " << std::dec << b;
    throw std::invalid_argument(os.str());
  }
  // Trial division by every polynomial of degree 1..b/2 detects any factor.
  for (int d = 1; d <= b / 2; ++d) {
    for (std::uint32_t f = 1u << d; f < (2u << d); ++f) {
      if (poly_mod(poly, f) == 0) {
        std::ostringstream os;
        os << "field: polynomial 0x" << std::hex << poly
           << " is reducible (divisible by 0x" << f << ")";
        throw std::invalid_argument(os.str());
      }
    }
  }

  FieldTable t;
  t.b_ = b;
  t.poly_ = poly;
  std::uint32_t q1 = (1u << b) - 1;
  t.antilog_.assign(q1, 0);
  t.log_.assign(std::size_t{1} << b, -1);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q1; ++i) {
    if (x == 1 && i != 0) {
      std::ostringstream os;
      os << "field: polynomial 0x" << std::hex << poly
         << " is irreducible but non-primitive (alpha has order " << std::dec
         << i << ")";
      throw std::invalid_argument(os.str());
    }
    t.antilog_[i] = static_cast<FieldElem>(x);
    t.log_[x] = static_cast<int>(i);
    x <<= 1;
    if (x >> b) x ^= poly;
  }
  if (x != 1)
    throw std::invalid_argument("field: table construction failed to cycle");
  return t;
}

FieldElem FieldTable::inv(FieldElem x) const {
  if (x == 0) throw std::domain_error("field: inverse of zero");
  return antilog_[(group_order() - log_[x]) % group_order()];
}

FieldElem FieldTable::pow(FieldElem x, long long e) const {
  if (x == 0) {
    if (e == 0) return 1;
    if (e > 0) return 0;
    throw std::domain_error("field: zero to a negative power");
  }
  long long m = static_cast<long long>(group_order());
  long long r = (static_cast<long long>(log_[x]) * (e % m)) % m;
  if (r < 0) r += m;
  return antilog_[r];
}

FieldElem FieldTable::alpha_pow(long long e) const {
  long long m = static_cast<long long>(group_order());
  long long r = e % m;
  if (r < 0) r += m;
  return antilog_[r];
}

int FieldTable::log(FieldElem x) const {
  if (x == 0) throw std::domain_error("field: log of zero");
  return log_[x];
}

BitMatrix FieldTable::companion_matrix(FieldElem x) const {
  BitMatrix m(b_, b_);
  for (int j = 0; j < b_; ++j) {
    FieldElem col = mul(x, static_cast<FieldElem>(1u << j));
    for (int i = 0; i < b_; ++i) m.set(i, j, (col >> i) & 1);
  }
  return m;
}

}  // namespace becc
