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

#include "becc/gf_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace becc {

GfPoly poly_add(const GfPoly& a, const GfPoly& b) {
  GfPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) ^ b.at(i);
  r.trim();
  return r;
}

GfPoly poly_mul(const FieldTable& f, const GfPoly& a, const GfPoly& b) {
  if (a.c.empty() || b.c.empty()) return GfPoly{};
  GfPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] ^= f.mul(a.c[i], b.c[j]);
  }
  r.trim();
  return r;
}

FieldElem poly_eval(const FieldTable& f, const GfPoly& p, FieldElem x) {
  FieldElem acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) acc = f.mul(acc, x) ^ p.c[i];
  return acc;
}

std::pair<GfPoly, GfPoly> poly_divmod(const FieldTable& f, const GfPoly& a,
                                      const GfPoly& b) {
  if (b.c.empty()) throw std::domain_error("poly: division by zero");
  GfPoly q, r = a;
  if (r.deg() < b.deg()) return {q, r};
  q.c.assign(r.c.size() - b.c.size() + 1, 0);
  FieldElem lead_inv = f.inv(b.c.back());
  for (int d = r.deg(); d >= b.deg(); --d) {
    FieldElem coeff = r.at(d);
    if (coeff == 0) continue;
    FieldElem s = f.mul(coeff, lead_inv);
    int shift = d - b.deg();
    q.c[shift] = s;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[i + shift] ^= f.mul(s, b.c[i]);
  }
  q.trim();
  r.trim();
  return {q, r};
}

}  // namespace becc
