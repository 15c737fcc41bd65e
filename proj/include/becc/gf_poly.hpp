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

#ifndef BECC_GF_POLY_HPP_
#define BECC_GF_POLY_HPP_

#include <vector>

#include "becc/field.hpp"

namespace becc {

// Polynomial over GF(2^b), coefficient of x^i at index i.
// The zero polynomial is the empty coefficient vector; deg() is then -1.
struct GfPoly {
  std::vector<FieldElem> c;

  GfPoly() = default;
  explicit GfPoly(std::vector<FieldElem> coeffs) : c(std::move(coeffs)) {
    trim();
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  FieldElem at(std::size_t i) const { return i < c.size() ? c[i] : 0; }

  bool operator==(const GfPoly& o) const { return c == o.c; }
};

GfPoly poly_add(const GfPoly& a, const GfPoly& b);
GfPoly poly_mul(const FieldTable& f, const GfPoly& a, const GfPoly& b);
FieldElem poly_eval(const FieldTable& f, const GfPoly& p, FieldElem x);
// Returns {quotient, remainder}; throws std::domain_error when b is zero.
std::pair<GfPoly, GfPoly> poly_divmod(const FieldTable& f, const GfPoly& a,
                                      const GfPoly& b);

}  // namespace becc

#endif  // BECC_GF_POLY_HPP_
