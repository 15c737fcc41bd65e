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

#include "becc/byte_code.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace becc {

ErrorDirection classify_byte_error(FieldElem sent, FieldElem received) {
  if (sent == received) return ErrorDirection::kNone;
  FieldElem up = received & static_cast<FieldElem>(~sent);
  FieldElem down = sent & static_cast<FieldElem>(~received);
  if (down == 0) return ErrorDirection::kUpOnly;
  if (up == 0) return ErrorDirection::kDownOnly;
  return ErrorDirection::kMixed;
}

ByteCode ByteCode::make(const FieldTable& f, const BuiltCode& code,
                        std::size_t syndrome_map_budget) {
  ByteCode bc;
  bc.spec_ = code.spec;
  bc.h_ = code.h;
  bc.word_bits_ = static_cast<std::size_t>(code.h.n_sym) * code.h.b;
  if (code.h.r_bits() > 63)
    throw std::invalid_argument("codec: more than 63 check bits unsupported");

  BitMatrix expansion = binary_expansion(f, code.h);
  bc.syn_rows_.reserve(expansion.rows());
  for (std::size_t i = 0; i < expansion.rows(); ++i)
    bc.syn_rows_.push_back(expansion.row(i));

  std::vector<BitVec> rref = bc.syn_rows_;
  bc.checks_ = gf2_rref(rref, bc.word_bits_, true);
  if (bc.checks_.size() != expansion.rows()) {
    std::ostringstream os;
    os << "codec: check matrix rank " << bc.checks_.size() << " below "
       << expansion.rows() << " rows; information capacity exceeds spec";
    throw std::invalid_argument(os.str());
  }
  bc.rref_rows_ = std::move(rref);

  std::vector<bool> is_pivot(bc.word_bits_, false);
  for (std::size_t p : bc.checks_) is_pivot[p] = true;
  for (std::size_t c = 0; c < bc.word_bits_; ++c)
    if (!is_pivot[c]) bc.info_.push_back(c);
  if (static_cast<long long>(bc.info_.size()) !=
      bc.spec_.k_bits + bc.spec_.pinned_bits())
    throw std::logic_error("codec: spec disagrees with matrix rank");

  bc.bit_syn_.assign(bc.word_bits_, 0);
  for (std::size_t idx = 0; idx < bc.syn_rows_.size(); ++idx) {
    const BitVec& row = bc.syn_rows_[idx];
    for (std::size_t p = 0; p < bc.word_bits_; ++p)
      if (row.get(p)) bc.bit_syn_[p] |= std::uint64_t{1} << idx;
  }

  std::size_t entries = static_cast<std::size_t>(code.h.n_sym) *
                        ((std::size_t{1} << code.h.b) - 1);
  if (entries <= syndrome_map_budget) {
    bc.has_map_ = true;
    int q1 = (1 << code.h.b) - 1;
    for (int j = 0; j < code.h.n_sym; ++j) {
      for (int e = 1; e <= q1; ++e) {
        std::uint64_t s = bc.error_syndrome(j, static_cast<FieldElem>(e));
        auto [it, fresh] = bc.map_.try_emplace(s, j, static_cast<FieldElem>(e));
        if (!fresh) it->second.first = -1;  // ambiguous, never guess
      }
    }
  }
  return bc;
}

std::uint64_t ByteCode::packed_syndrome(const BitVec& word) const {
  std::uint64_t s = 0;
  for (std::size_t idx = 0; idx < syn_rows_.size(); ++idx)
    if (syn_rows_[idx].dot(word)) s |= std::uint64_t{1} << idx;
  return s;
}

std::uint64_t ByteCode::error_syndrome(int byte_pos, FieldElem pattern) const {
  std::uint64_t s = 0;
  for (int t = 0; t < spec_.b; ++t)
    if ((pattern >> t) & 1)
      s ^= bit_syn_[static_cast<std::size_t>(byte_pos) * spec_.b + t];
  return s;
}

BitVec ByteCode::encode(const BitVec& data) const {
  if (static_cast<long long>(data.size()) != spec_.k_bits)
    throw std::invalid_argument("codec: encode expects k_bits of data");
  BitVec c(word_bits_);
  for (long long i = 0; i < spec_.k_bits; ++i)
    if (data.get(i)) c.set(info_[i], true);
  for (std::size_t r = 0; r < rref_rows_.size(); ++r)
    if (rref_rows_[r].dot(c)) c.set(checks_[r], true);
  return c;
}

BitVec ByteCode::extract_data(const BitVec& codeword) const {
  if (codeword.size() != word_bits_)
    throw std::invalid_argument("codec: bad codeword length");
  BitVec d(spec_.k_bits);
  for (long long i = 0; i < spec_.k_bits; ++i)
    if (codeword.get(info_[i])) d.set(i, true);
  return d;
}

BitVec ByteCode::syndrome(const BitVec& word) const {
  if (word.size() != word_bits_)
    throw std::invalid_argument("codec: bad word length");
  BitVec s(syn_rows_.size());
  for (std::size_t idx = 0; idx < syn_rows_.size(); ++idx)
    if (syn_rows_[idx].dot(word)) s.set(idx, true);
  return s;
}

ByteCode::DecodeResult ByteCode::decode(const BitVec& received) const {
  if (received.size() != word_bits_)
    throw std::invalid_argument("codec: bad word length");
  DecodeResult res;
  std::uint64_t s = packed_syndrome(received);
  if (s == 0) {
    res.outcome.status = DecodeStatus::kNoError;
    res.codeword = received;
    res.data = extract_data(received);
    return res;
  }

  int pos = -1;
  FieldElem pattern = 0;
  if (has_map_) {
    auto it = map_.find(s);
    if (it != map_.end() && it->second.first >= 0) {
      pos = it->second.first;
      pattern = it->second.second;
    }
  } else {
    int q1 = (1 << spec_.b) - 1;
    int matches = 0;
    for (int j = 0; j < spec_.n_sym && matches < 2; ++j) {
      for (int e = 1; e <= q1; ++e) {
        if (error_syndrome(j, static_cast<FieldElem>(e)) == s) {
          if (++matches == 1) {
            pos = j;
            pattern = static_cast<FieldElem>(e);
          } else {
            pos = -1;
            break;
          }
        }
      }
    }
  }

  if (pos < 0) {
    res.outcome.status = DecodeStatus::kDetectedUncorrectable;
    return res;
  }
  res.outcome.status = DecodeStatus::kCorrected;
  res.outcome.byte_pos = pos;
  res.outcome.pattern = pattern;
  res.codeword = received;
  for (int t = 0; t < spec_.b; ++t)
    if ((pattern >> t) & 1)
      res.codeword.flip(static_cast<std::size_t>(pos) * spec_.b + t);
  res.data = extract_data(res.codeword);
  return res;
}

void write_codeword_stream(std::ostream& os, const ByteCode& code,
                           const std::vector<BitVec>& codewords,
                           std::uint64_t data_bytes) {
  const CodeSpec& sp = code.spec();
  std::uint64_t implied =
      (data_bytes * 8 + sp.k_bits - 1) / static_cast<std::uint64_t>(sp.k_bits);
  if (implied != codewords.size())
    throw std::invalid_argument(
        "codec: data_bytes disagrees with the codeword count");
  os << sp.b << ' ' << sp.n_sym << ' ' << sp.k_bits << ' ' << data_bytes
     << '\n';
  for (const BitVec& c : codewords) {
    if (c.size() != code.word_bits())
      throw std::invalid_argument("codec: stream codeword length mismatch");
    unsigned acc = 0;
    int nbits = 0;
    for (int j = 0; j < sp.n_sym; ++j) {
      for (int t = sp.b - 1; t >= 0; --t) {
        acc = (acc << 1) |
              (c.get(static_cast<std::size_t>(j) * sp.b + t) ? 1u : 0u);
        if (++nbits == 8) {
          os.put(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits) os.put(static_cast<char>(acc << (8 - nbits)));
  }
}

CodewordStream read_codeword_stream(std::istream& is) {
  CodewordStream st;
  if (!(is >> st.b >> st.n_sym >> st.k_bits >> st.data_bytes))
    throw std::runtime_error("codec: bad stream header");
  if (st.b < 2 || st.b > 16 || st.n_sym < 1 || st.k_bits < 1)
    throw std::runtime_error("codec: stream header out of range");
  if (is.get() != '\n')
    throw std::runtime_error("codec: stream header not newline-terminated");
  std::uint64_t total_bits = st.data_bytes * 8;
  std::uint64_t words = (total_bits + st.k_bits - 1) / st.k_bits;
  std::size_t word_bits = static_cast<std::size_t>(st.n_sym) * st.b;
  std::size_t bytes = (word_bits + 7) / 8;
  std::string buf(bytes, '\0');
  for (std::uint64_t w = 0; w < words; ++w) {
    if (!is.read(buf.data(), static_cast<std::streamsize>(bytes)))
      throw std::runtime_error("codec: truncated codeword stream");
    BitVec c(word_bits);
    std::size_t stream_bit = 0;
    for (int j = 0; j < st.n_sym; ++j) {
      for (int t = st.b - 1; t >= 0; --t, ++stream_bit) {
        unsigned byte = static_cast<unsigned char>(buf[stream_bit / 8]);
        if ((byte >> (7 - stream_bit % 8)) & 1)
          c.set(static_cast<std::size_t>(j) * st.b + t, true);
      }
    }
    st.codewords.push_back(std::move(c));
  }
  return st;
}

}  // namespace becc
