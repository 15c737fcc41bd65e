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

#ifndef BECC_RS_CODE_HPP_
#define BECC_RS_CODE_HPP_

#include <cstdint>
#include <vector>

#include "becc/field.hpp"
#include "becc/gf_poly.hpp"

namespace becc {

struct RsParams {
  int n;
  int k;
  int d_min;
};

// Requires 1 <= t and 2t < 2^b - 1.
RsParams rs_params(int b, int t);

// Per-call decoder workspace, returned for inspection.
struct RsDecodeState {
  std::vector<FieldElem> syndromes;  // s_1 .. s_2t
  GfPoly locator;                    // sigma(x), sigma(0) = 1
  GfPoly evaluator;                  // z(x)
  std::vector<int> positions;        // error locations, ascending
  std::vector<FieldElem> values;     // error values, parallel to positions
};

struct RsDecodeResult {
  bool ok = false;  // false: no codeword within distance t was found
  std::vector<FieldElem> codeword;
  std::vector<FieldElem> data;
  RsDecodeState state;
};

// Reed-Solomon code of length n = 2^b - 1 over GF(2^b) with k = n - 2t.
// t = 0 yields the degenerate distance-1 code with k = n.
class RsCode {
 public:
  static RsCode make(FieldTable field, int t);

  const FieldTable& field() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int t() const { return t_; }
  const GfPoly& generator() const { return g_; }

  // Systematic: data symbol i lands at codeword position (n - k) + i,
  // check symbols (the remainder of the shifted data polynomial by g)
  // occupy positions 0 .. n-k-1.
  std::vector<FieldElem> encode(const std::vector<FieldElem>& data) const;
  RsDecodeResult decode(const std::vector<FieldElem>& received) const;

  // Shortened variants: the highest-order data symbols are fixed to zero
  // and not transmitted. data may hold any 1 <= k_s <= k symbols; the
  // codeword then has n - (k - k_s) symbols.
  std::vector<FieldElem> encode_shortened(
      const std::vector<FieldElem>& data) const;
  RsDecodeResult decode_shortened(const std::vector<FieldElem>& received) const;

  std::vector<FieldElem> extract_data(
      const std::vector<FieldElem>& codeword) const;

  // Minimum nonzero-codeword symbol weight by full enumeration.
  // Throws when (2^b)^k exceeds the budget.
  int min_distance_bruteforce(std::uint64_t budget = 1ull << 22) const;

 private:
  RsCode(FieldTable field, int t, GfPoly g);

  FieldTable field_;
  int t_;
  int n_;
  int k_;
  GfPoly g_;
};

}  // namespace becc

#endif  // BECC_RS_CODE_HPP_
