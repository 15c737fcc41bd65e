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

#include "becc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace becc {

void BitVec::xor_with(const BitVec& o) {
  if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool BitVec::dot(const BitVec& o) const {
  if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool BitVec::any() const {
  for (std::uint64_t w : w_)
    if (w) return true;
  return false;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("BitMatrix shape mismatch");
  BitMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (r_[i].get(k)) out.r_[i].xor_with(o.r_[k]);
    }
  }
  return out;
}

BitMatrix BitMatrix::operator^(const BitMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("BitMatrix shape mismatch");
  BitMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out.r_[i].xor_with(o.r_[i]);
  return out;
}

std::vector<std::size_t> gf2_rref(std::vector<BitVec>& rows, std::size_t cols,
                                  bool prefer_high) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t col = prefer_high ? cols - 1 - c : c;
    std::size_t hit = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (rows[i].get(col)) {
        hit = i;
        break;
      }
    }
    if (hit == rows.size()) continue;
    std::swap(rows[next], rows[hit]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].get(col)) rows[i].xor_with(rows[next]);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace becc
