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

#ifndef BECC_CONSTRUCT_HPP_
#define BECC_CONSTRUCT_HPP_

#include <cstdint>
#include <vector>

#include "becc/check_matrix.hpp"
#include "becc/field.hpp"

namespace becc {

// Distance-4 base: columns (1, x, x^2) for every nonzero x, then the three
// unit columns. 3 rows, 2^b + 2 columns.
CheckMatrix base_matrix(const FieldTable& f);

// The 2x2 symbol matrix [[1,1],[0,1]] used as the even-r factor.
CheckMatrix even_pair_matrix(const FieldTable& f);

struct AllOnesResult {
  CheckMatrix h;
  // Columns whose combined first entry was zero; they are kept unscaled.
  std::vector<int> unnormalized;
};

// Row combination row0 + a*row1 + row2 replaces the top row, then every
// column with a nonzero first entry is scaled to make that entry 1.
AllOnesResult to_all_ones_row(const FieldTable& f, const CheckMatrix& h,
                              FieldElem a);
// General form: row0 + sum coeffs[i-1]*row_i over rows 1..r_sym-1.
AllOnesResult to_all_ones_row(const FieldTable& f, const CheckMatrix& h,
                              const std::vector<FieldElem>& coeffs);

// Number of scalars a for which to_all_ones_row(base_matrix, a) normalizes
// every column. Equals 2^{b-1}.
int count_valid_scalars(const FieldTable& f);

CheckMatrix strip_top_row(const CheckMatrix& h);

// Columns are every stacked pair (column i of hv over column j of hw2),
// i outer, j inner.
CheckMatrix product_construct(const CheckMatrix& hv, const CheckMatrix& hw2);

// Symbol length of the r_sym-row construction: (2^b+2)^{(r-1)/2} for odd r,
// 2(2^b+2)^{(r-2)/2} for even r. Throws on uint64 overflow.
std::uint64_t code_length_bound(int b, int r_sym);

struct BuiltCode {
  CodeSpec spec;
  CheckMatrix h;
};

// Recursive construction: r=3 base, r=4 base x stripped pair matrix,
// r>=5 base x stripped all-ones transform of the (r-2)-row code.
BuiltCode build_sbec_dbed(const FieldTable& f, int r_sym);

// Doubling: [H | H] plus one binary parity bit over the second half's bits.
CheckMatrix double_code(const CheckMatrix& h);

// Reduce information capacity to target_k_bits by deleting the highest
// information bit positions; symbol columns whose bits are all deleted are
// dropped, partially deleted symbols keep the remaining bits pinned to zero
// (tracked through CodeSpec::pinned_bits).
BuiltCode shorten(const FieldTable& f, const BuiltCode& code,
                  long long target_k_bits);

struct Violation {
  enum Kind {
    kSingleIsZero,       // single-byte error with zero syndrome
    kDuplicateSingle,    // two single-byte errors share a syndrome
    kDoubleIsZero,       // double-byte error with zero syndrome
    kDoubleEqualsSingle  // double-byte error aliases a single-byte syndrome
  };
  Kind kind;
  int j1 = -1;
  FieldElem e1 = 0;
  int j2 = -1;
  FieldElem e2 = 0;
  // Populated for kDoubleEqualsSingle: the aliased single error.
  int sj = -1;
  FieldElem se = 0;
};

struct ValidateBudget {
  std::uint64_t max_single = 1'000'000;
  std::uint64_t max_double = 50'000'000;
  std::size_t max_violations = 1000;
};

struct ValidationReport {
  bool ok = false;
  std::uint64_t singles_checked = 0;
  std::uint64_t doubles_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // capped at max_violations
};

// Checks that all single-byte-error syndromes are nonzero and pairwise
// distinct, and that no double-byte-error syndrome is zero or collides
// with a single-byte-error syndrome.
ValidationReport validate_sbec_dbed(const FieldTable& f, const CheckMatrix& h,
                                    const ValidateBudget& budget = {});

}  // namespace becc

#endif  // BECC_CONSTRUCT_HPP_
