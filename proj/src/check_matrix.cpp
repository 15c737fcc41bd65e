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

#include "becc/check_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace becc {

CodeSpec spec_for(const CheckMatrix& h) {
  CodeSpec s;
  s.b = h.b;
  s.r_sym = h.r_sym;
  s.extra_parity_bits = h.has_parity() ? 1 : 0;
  s.n_sym = h.n_sym;
  s.n_bits = static_cast<long long>(h.n_sym) * h.b;
  s.k_bits = s.n_bits - s.r_bits();
  return s;
}

BitMatrix binary_expansion(const FieldTable& f, const CheckMatrix& h) {
  if (f.b() != h.b)
    throw std::invalid_argument("matrix: field width mismatch");
  int b = h.b;
  std::size_t cols = static_cast<std::size_t>(h.n_sym) * b;
  std::size_t rows = static_cast<std::size_t>(h.r_sym) * b +
                     (h.has_parity() ? 1 : 0);
  BitMatrix m(rows, cols);
  for (int i = 0; i < h.r_sym; ++i) {
    for (int j = 0; j < h.n_sym; ++j) {
      FieldElem e = h.rows[i][j];
      if (e == 0) continue;
      for (int v = 0; v < b; ++v) {
        FieldElem col = f.mul(e, static_cast<FieldElem>(1u << v));
        for (int u = 0; u < b; ++u) {
          if ((col >> u) & 1)
            m.set(static_cast<std::size_t>(i) * b + u,
                  static_cast<std::size_t>(j) * b + v, true);
        }
      }
    }
  }
  if (h.has_parity()) {
    if (h.parity_row.size() != cols)
      throw std::invalid_argument("matrix: parity row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(rows - 1, c, h.parity_row.get(c));
  }
  return m;
}

void write_matrix(std::ostream& os, const CheckMatrix& h) {
  os << h.b << ' ' << h.r_sym << ' ' << h.n_sym << ' '
     << (h.has_parity() ? 1 : 0) << '\n';
  for (int i = 0; i < h.r_sym; ++i) {
    for (int j = 0; j < h.n_sym; ++j) {
      if (j) os << ' ';
      os << std::hex << static_cast<unsigned>(h.rows[i][j]) << std::dec;
    }
    os << '\n';
  }
  if (h.has_parity()) {
    for (std::size_t c = 0; c < h.parity_row.size(); ++c)
      os << (h.parity_row.get(c) ? '1' : '0');
    os << '\n';
  }
}

CheckMatrix read_matrix(std::istream& is) {
  CheckMatrix h;
  int parity = 0;
  if (!(is >> h.b >> h.r_sym >> h.n_sym >> parity))
    throw std::runtime_error("matrix: bad header");
  if (h.b < 2 || h.b > 16 || h.r_sym < 1 || h.n_sym < 1 ||
      (parity != 0 && parity != 1))
    throw std::runtime_error("matrix: header out of range");
  h.rows.assign(h.r_sym, std::vector<FieldElem>(h.n_sym, 0));
  for (int i = 0; i < h.r_sym; ++i) {
    for (int j = 0; j < h.n_sym; ++j) {
      unsigned v = 0;
      if (!(is >> std::hex >> v >> std::dec))
        throw std::runtime_error("matrix: truncated entries");
      if (v >= (1u << h.b))
        throw std::runtime_error("matrix: entry exceeds field size");
      h.rows[i][j] = static_cast<FieldElem>(v);
    }
  }
  if (parity) {
    std::string bits;
    if (!(is >> bits))
      throw std::runtime_error("matrix: missing parity row");
    std::size_t want = static_cast<std::size_t>(h.n_sym) * h.b;
    if (bits.size() != want)
      throw std::runtime_error("matrix: parity row length mismatch");
    h.parity_row = BitVec(want);
    for (std::size_t c = 0; c < want; ++c) {
      if (bits[c] == '1')
        h.parity_row.set(c, true);
      else if (bits[c] != '0')
        throw std::runtime_error("matrix: parity row must be 0/1");
    }
  }
  return h;
}

}  // namespace becc
