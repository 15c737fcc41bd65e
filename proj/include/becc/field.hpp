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

#ifndef BECC_FIELD_HPP_
#define BECC_FIELD_HPP_

#include <cstdint>
#include <vector>

#include "becc/gf2.hpp"

namespace becc {

// Element of GF(2^b), 2 <= b <= 16, in polynomial basis: bit i is the
// coefficient of alpha^i.
using FieldElem = std::uint16_t;

// Log/antilog arithmetic for GF(2^b) built from a primitive polynomial.
// Immutable after construction; safe to share across threads.
class FieldTable {
 public:
  // Conventional minimal-weight primitive polynomial for each b. The value
  // includes the leading term: bit b is always set.
  static std::uint32_t default_poly(int b);

  static FieldTable make(int b) { return make(b, default_poly(b)); }
  // Rejects polynomials that are not monic of degree b, reducible, or
  // irreducible but non-primitive; the error message names the reason.
  static FieldTable make(int b, std::uint32_t poly);

  int b() const { return b_; }
  std::uint32_t poly() const { return poly_; }
  std::uint32_t field_size() const { return 1u << b_; }
  std::uint32_t group_order() const { return (1u << b_) - 1; }

  FieldElem add(FieldElem x, FieldElem y) const { return x ^ y; }

  FieldElem mul(FieldElem x, FieldElem y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t s = static_cast<std::uint32_t>(log_[x]) +
                      static_cast<std::uint32_t>(log_[y]);
    if (s >= group_order()) s -= group_order();
    return antilog_[s];
  }

  FieldElem inv(FieldElem x) const;
  FieldElem div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }

  // x^e with the exponent reduced mod 2^b - 1 for nonzero x; e may be
  // negative. pow(0, 0) = 1 and pow(0, e > 0) = 0.
  FieldElem pow(FieldElem x, long long e) const;

  // alpha^e for any integer e (exponent reduced mod 2^b - 1).
  FieldElem alpha_pow(long long e) const;

  // Exponent of nonzero x: antilog[log(x)] == x.
  int log(FieldElem x) const;

  // b x b binary matrix of the linear map y -> x*y in the polynomial basis.
  BitMatrix companion_matrix(FieldElem x) const;

  const std::vector<FieldElem>& antilog_table() const { return antilog_; }
  const std::vector<int>& log_table() const { return log_; }

 private:
  FieldTable() = default;

  int b_ = 0;
  std::uint32_t poly_ = 0;
  std::vector<FieldElem> antilog_;  // length 2^b - 1
  std::vector<int> log_;            // length 2^b; log_[0] = -1
};

}  // namespace becc

#endif  // BECC_FIELD_HPP_
