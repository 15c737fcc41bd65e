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

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "becc/byte_code.hpp"
#include "becc/construct.hpp"
#include "becc/field.hpp"
#include "doctest.h"

namespace becc {
namespace {

BitVec random_bits(std::mt19937_64& g, long long n) {
  BitVec v(n);
  for (long long i = 0; i < n; ++i) v.set(i, g() & 1);
  return v;
}

void xor_byte(BitVec& word, int b, int chip, FieldElem pattern) {
  for (int t = 0; t < b; ++t)
    if ((pattern >> t) & 1) word.flip(static_cast<std::size_t>(chip) * b + t);
}

TEST_CASE("encoded words satisfy every check equation") {
  std::mt19937_64 g(37);
  FieldTable f2 = FieldTable::make(2);
  FieldTable f3 = FieldTable::make(3);
  struct Case {
    const FieldTable& f;
    BuiltCode built;
  };
  for (Case c : {Case{f2, build_sbec_dbed(f2, 4)},
                 Case{f2, build_sbec_dbed(f2, 5)},
                 Case{f3, {spec_for(base_matrix(f3)), base_matrix(f3)}}}) {
    ByteCode code = ByteCode::make(c.f, c.built);
    CHECK(code.check_positions().size() ==
          static_cast<std::size_t>(c.built.spec.r_bits()));
    BitMatrix bin = binary_expansion(c.f, c.built.h);
    for (int trial = 0; trial < 20; ++trial) {
      BitVec data = random_bits(g, c.built.spec.k_bits);
      BitVec cw = code.encode(data);
      CHECK(cw.size() == code.word_bits());
      CHECK_FALSE(code.syndrome(cw).any());
      for (std::size_t row = 0; row < bin.rows(); ++row)
        CHECK_FALSE(bin.row(row).dot(cw));
      CHECK(code.extract_data(cw) == data);
      ByteCode::DecodeResult clean = code.decode(cw);
      CHECK(clean.outcome.status == DecodeStatus::kNoError);
      CHECK(clean.data == data);
    }
  }
}

TEST_CASE("doubled matrix still has full rank") {
  FieldTable f = FieldTable::make(2);
  CheckMatrix doubled = double_code(base_matrix(f));
  ByteCode code = ByteCode::make(f, {spec_for(doubled), doubled});
  CHECK(code.spec().r_bits() == 7);
  CHECK(code.check_positions().size() == 7);
  CHECK(code.word_bits() == 24);
  std::mt19937_64 g(41);
  BitVec data = random_bits(g, code.spec().k_bits);
  BitVec cw = code.encode(data);
  CHECK_FALSE(code.syndrome(cw).any());
  CHECK(code.extract_data(cw) == data);
}

TEST_CASE("single corruptions corrected, double corruptions detected") {
  FieldTable f = FieldTable::make(2);
  BuiltCode built = build_sbec_dbed(f, 4);
  ByteCode code = ByteCode::make(f, built);
  const int n = built.spec.n_sym;
  std::mt19937_64 g(43);
  for (int trial = 0; trial < 5; ++trial) {
    BitVec data = random_bits(g, built.spec.k_bits);
    BitVec cw = code.encode(data);
    for (int j = 0; j < n; ++j) {
      for (FieldElem e = 1; e < 4; ++e) {
        BitVec bad = cw;
        xor_byte(bad, 2, j, e);
        ByteCode::DecodeResult res = code.decode(bad);
        CHECK(res.outcome.status == DecodeStatus::kCorrected);
        CHECK(res.outcome.byte_pos == j);
        CHECK(res.outcome.pattern == e);
        CHECK(res.data == data);
        CHECK(res.codeword == cw);
      }
    }
    for (int j1 = 0; j1 < n; ++j1) {
      for (int j2 = j1 + 1; j2 < n; ++j2) {
        for (FieldElem e1 = 1; e1 < 4; ++e1) {
          for (FieldElem e2 = 1; e2 < 4; ++e2) {
            BitVec bad = cw;
            xor_byte(bad, 2, j1, e1);
            xor_byte(bad, 2, j2, e2);
            ByteCode::DecodeResult res = code.decode(bad);
            CHECK(res.outcome.status ==
                  DecodeStatus::kDetectedUncorrectable);
          }
        }
      }
    }
  }
}

TEST_CASE("ambiguous syndromes are reported, never guessed") {
  // Append a copy of column 0, so errors there and in the clone alias.
  FieldTable f = FieldTable::make(2);
  CheckMatrix h = base_matrix(f);
  for (int i = 0; i < h.r_sym; ++i) h.rows[i].push_back(h.rows[i][0]);
  h.n_sym += 1;
  ByteCode code = ByteCode::make(f, {spec_for(h), h});
  BitVec cw = code.encode(BitVec(code.spec().k_bits));
  for (FieldElem e = 1; e < 4; ++e) {
    BitVec bad = cw;
    xor_byte(bad, 2, 0, e);
    CHECK(code.decode(bad).outcome.status ==
          DecodeStatus::kDetectedUncorrectable);
  }
  // Errors on a column without a twin still come back corrected.
  BitVec bad = cw;
  xor_byte(bad, 2, 1, 2);
  CHECK(code.decode(bad).outcome.status == DecodeStatus::kCorrected);
}

TEST_CASE("decoder works without the syndrome map") {
  FieldTable f = FieldTable::make(2);
  BuiltCode built = build_sbec_dbed(f, 4);
  ByteCode mapped = ByteCode::make(f, built);
  ByteCode scanning = ByteCode::make(f, built, 0);  // force linear scan
  std::mt19937_64 g(47);
  BitVec data = random_bits(g, built.spec.k_bits);
  BitVec cw = mapped.encode(data);
  for (int j = 0; j < built.spec.n_sym; ++j) {
    for (FieldElem e = 1; e < 4; ++e) {
      BitVec bad = cw;
      xor_byte(bad, 2, j, e);
      ByteCode::DecodeResult a = mapped.decode(bad);
      ByteCode::DecodeResult b = scanning.decode(bad);
      CHECK(a.outcome.status == b.outcome.status);
      CHECK(a.outcome.byte_pos == b.outcome.byte_pos);
      CHECK(a.outcome.pattern == b.outcome.pattern);
    }
  }
}

TEST_CASE("error direction classification") {
  CHECK(classify_byte_error(0b1010, 0b1010) == ErrorDirection::kNone);
  CHECK(classify_byte_error(0b1010, 0b1000) == ErrorDirection::kDownOnly);
  CHECK(classify_byte_error(0b0001, 0b0011) == ErrorDirection::kUpOnly);
  CHECK(classify_byte_error(0b0010, 0b0001) == ErrorDirection::kMixed);
  CHECK(classify_byte_error(0b1111, 0b0000) == ErrorDirection::kDownOnly);
}

TEST_CASE("construction rejects deficient or oversized matrices") {
  FieldTable f = FieldTable::make(2);
  CheckMatrix dep;
  dep.b = 2;
  dep.r_sym = 2;
  dep.n_sym = 4;
  dep.rows = {{1, 2, 3, 1}, {1, 2, 3, 1}};
  CHECK_THROWS_AS(ByteCode::make(f, {spec_for(dep), dep}),
                  std::invalid_argument);

  FieldTable f13 = FieldTable::make(13);
  CheckMatrix wide;
  wide.b = 13;
  wide.r_sym = 5;  // 65 check bits cannot pack into one word
  wide.n_sym = 6;
  wide.rows.assign(5, std::vector<FieldElem>(6, 1));
  CHECK_THROWS_AS(ByteCode::make(f13, {spec_for(wide), wide}),
                  std::invalid_argument);
}

TEST_CASE("codeword streams round-trip with byte padding") {
  // 10 symbols of 3 bits: 30-bit words, stored as 4 octets with 2 pad bits.
  FieldTable f = FieldTable::make(3);
  BuiltCode built = build_sbec_dbed(f, 3);
  ByteCode code = ByteCode::make(f, built);
  REQUIRE(built.spec.k_bits == 21);
  std::mt19937_64 g(53);
  std::vector<BitVec> words;
  for (int i = 0; i < 5; ++i)
    words.push_back(code.encode(random_bits(g, built.spec.k_bits)));

  // 13 data bytes = 104 bits, ceil(104 / 21) = 5 codewords.
  std::stringstream ss;
  write_codeword_stream(ss, code, words, 13);
  CodewordStream back = read_codeword_stream(ss);
  CHECK(back.b == 3);
  CHECK(back.n_sym == built.spec.n_sym);
  CHECK(back.k_bits == built.spec.k_bits);
  CHECK(back.data_bytes == 13);
  REQUIRE(back.codewords.size() == words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    CHECK(back.codewords[i] == words[i]);

  std::stringstream truncated(ss.str().substr(0, ss.str().size() - 2));
  CHECK_THROWS_AS(read_codeword_stream(truncated), std::runtime_error);
  std::stringstream junk("no header here\n");
  CHECK_THROWS_AS(read_codeword_stream(junk), std::runtime_error);
  std::stringstream inconsistent;
  CHECK_THROWS_AS(write_codeword_stream(inconsistent, code, words, 7),
                  std::invalid_argument);
}

}  // namespace
}  // namespace becc
