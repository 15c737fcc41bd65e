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

#ifndef BECC_GF2_HPP_
#define BECC_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace becc {

// Dense bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= m;
    } else {
      w_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& o);
  // Parity of the AND of two equal-length vectors (GF(2) dot product).
  bool dot(const BitVec& o) const;
  std::size_t popcount() const;
  bool any() const;

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Dense binary matrix; rows are BitVecs.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }

  BitVec& row(std::size_t i) { return r_[i]; }
  const BitVec& row(std::size_t i) const { return r_[i]; }

  BitMatrix mul(const BitMatrix& o) const;  // product over GF(2)
  BitMatrix operator^(const BitMatrix& o) const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
  }
  friend bool operator!=(const BitMatrix& a, const BitMatrix& b) {
    return !(a == b);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVec> r_;
};

// In-place reduced row echelon form. Columns are scanned from the highest
// index downward when prefer_high is set, so pivots (check positions) land on
// the highest-index columns available. Returns the pivot column of each of the
// first rank(rows) rows.
std::vector<std::size_t> gf2_rref(std::vector<BitVec>& rows, std::size_t cols,
                                  bool prefer_high);

}  // namespace becc

#endif  // BECC_GF2_HPP_
