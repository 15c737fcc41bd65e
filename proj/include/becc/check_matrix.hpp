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

#ifndef BECC_CHECK_MATRIX_HPP_
#define BECC_CHECK_MATRIX_HPP_

#include <iosfwd>
#include <vector>

#include "becc/field.hpp"
#include "becc/gf2.hpp"

namespace becc {

// Symbol-level parity check matrix over GF(2^b), plus an optional single
// binary parity row spanning the bit expansion (used by code doubling).
struct CheckMatrix {
  int b = 0;
  int r_sym = 0;
  int n_sym = 0;
  std::vector<std::vector<FieldElem>> rows;  // r_sym rows of n_sym entries
  BitVec parity_row;                         // empty or n_sym*b bits
  bool allow_zero_column = false;  // set when row stripping zeroes a column

  bool has_parity() const { return parity_row.size() != 0; }
  FieldElem at(int i, int j) const { return rows[i][j]; }
  std::vector<FieldElem> column(int j) const {
    std::vector<FieldElem> c(r_sym);
    for (int i = 0; i < r_sym; ++i) c[i] = rows[i][j];
    return c;
  }
  // Total binary check rows: r_sym*b plus the parity row if present.
  int r_bits() const { return r_sym * b + (has_parity() ? 1 : 0); }
};

// Bit-level code parameters. For shortened codes n_bits < n_sym*b; the
// difference is the count of information bits pinned to zero.
struct CodeSpec {
  int b = 0;
  int r_sym = 0;
  int extra_parity_bits = 0;  // 0 or 1
  int n_sym = 0;
  long long n_bits = 0;
  long long k_bits = 0;

  long long r_bits() const {
    return static_cast<long long>(r_sym) * b + extra_parity_bits;
  }
  long long pinned_bits() const {
    return static_cast<long long>(n_sym) * b - n_bits;
  }
};

// Spec implied by an unshortened matrix: n_bits = n_sym*b.
CodeSpec spec_for(const CheckMatrix& h);

// Binary image: entry (i, j) becomes the b x b multiplication matrix of
// h[i][j]; the parity row, when present, is appended as the final row.
BitMatrix binary_expansion(const FieldTable& f, const CheckMatrix& h);

// Text format: header "b r_sym n_sym parity", r_sym lines of hex symbols,
// then (if parity = 1) one line of n_sym*b '0'/'1' characters.
void write_matrix(std::ostream& os, const CheckMatrix& h);
CheckMatrix read_matrix(std::istream& is);

}  // namespace becc

#endif  // BECC_CHECK_MATRIX_HPP_
