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

#ifndef BECC_BYTE_CODE_HPP_
#define BECC_BYTE_CODE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "becc/check_matrix.hpp"
#include "becc/construct.hpp"
#include "becc/field.hpp"
#include "becc/gf2.hpp"

namespace becc {

enum class DecodeStatus { kNoError, kCorrected, kDetectedUncorrectable };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::kDetectedUncorrectable;
  int byte_pos = -1;      // set when status == kCorrected
  FieldElem pattern = 0;  // set when status == kCorrected
};

enum class ErrorDirection { kNone, kUpOnly, kDownOnly, kMixed };

ErrorDirection classify_byte_error(FieldElem sent, FieldElem received);

// Systematic byte-oriented encoder/decoder for a check matrix. Codewords
// are n_sym*b-bit words; for shortened codes the highest information bit
// positions are pinned to zero and k_bits of data remain.
class ByteCode {
 public:
  ByteCode() = default;  // empty shell, usable only after assignment
  static ByteCode make(const FieldTable& f, const BuiltCode& code,
                       std::size_t syndrome_map_budget = std::size_t{1} << 22);

  const CodeSpec& spec() const { return spec_; }
  const CheckMatrix& matrix() const { return h_; }
  const std::vector<std::size_t>& check_positions() const { return checks_; }
  // Ascending; the top pinned_bits() of these are fixed to zero.
  const std::vector<std::size_t>& info_positions() const { return info_; }
  std::size_t word_bits() const { return word_bits_; }

  BitVec encode(const BitVec& data) const;  // k_bits -> n_sym*b bits
  BitVec extract_data(const BitVec& codeword) const;
  BitVec syndrome(const BitVec& word) const;  // r_bits

  struct DecodeResult {
    DecodeOutcome outcome;
    BitVec data;      // valid unless detected-uncorrectable
    BitVec codeword;  // corrected word, same validity
  };
  DecodeResult decode(const BitVec& received) const;

 private:
  std::uint64_t packed_syndrome(const BitVec& word) const;
  std::uint64_t error_syndrome(int byte_pos, FieldElem pattern) const;

  CodeSpec spec_;
  CheckMatrix h_;
  std::size_t word_bits_ = 0;
  std::vector<BitVec> rref_rows_;       // encoder equations
  std::vector<std::size_t> checks_;     // pivot per rref row
  std::vector<std::size_t> info_;
  std::vector<BitVec> syn_rows_;        // original expansion, for syndromes
  std::vector<std::uint64_t> bit_syn_;  // packed syndrome per bit position
  bool has_map_ = false;
  // -1 byte_pos marks an ambiguous syndrome (only on unvalidated matrices).
  std::map<std::uint64_t, std::pair<int, FieldElem>> map_;
};

// Codeword stream: text header "b n_sym k_bits data_bytes", then each
// codeword's symbols packed most-significant-bit-first into octets, every
// codeword padded to an octet boundary.
void write_codeword_stream(std::ostream& os, const ByteCode& code,
                           const std::vector<BitVec>& codewords,
                           std::uint64_t data_bytes);
struct CodewordStream {
  int b = 0;
  int n_sym = 0;
  long long k_bits = 0;
  std::uint64_t data_bytes = 0;
  std::vector<BitVec> codewords;
};
CodewordStream read_codeword_stream(std::istream& is);

}  // namespace becc

#endif  // BECC_BYTE_CODE_HPP_
