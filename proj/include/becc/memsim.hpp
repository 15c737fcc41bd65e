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

#ifndef BECC_MEMSIM_HPP_
#define BECC_MEMSIM_HPP_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "becc/byte_code.hpp"
#include "becc/gf2.hpp"

namespace becc {

// Byte-per-chip memory fault models. Transient faults pick a fresh location
// per event; intermittent and permanent ones are pinned to a location when
// the simulator is created (randomly if left at -1).
enum class FaultKind {
  kTransientBit,
  kIntermittentBit,
  kPermanentChipStuck,
  kUnidirectionalByte,
  kDoubleByte,
  kMultiUnidirectionalByte,
};

const char* fault_kind_name(FaultKind kind);  // snake_case, as in JSON
FaultKind fault_kind_from_name(const std::string& name);

struct FaultModel {
  FaultKind kind = FaultKind::kTransientBit;
  double p = 1.0;   // activation probability per read
  int chip = -1;    // -1 = unpinned
  int bit = -1;     // -1 = unpinned, bit index within the byte
  FieldElem stuck_value = 0;
  ErrorDirection direction = ErrorDirection::kDownOnly;
  int byte_count = 3;  // MultiUnidirectionalByte only
};

struct MemoryConfig {
  ByteCode code;
  long long words = 1;
  std::uint64_t seed = 0;
  std::vector<FaultModel> fault_models;
};

struct Memory {
  MemoryConfig config;
  std::vector<BitVec> image;   // stored codewords, faults act on read copies
  std::vector<BitVec> truth;   // data as written, the classification oracle
  std::vector<bool> valid;
  std::mt19937_64 rng;
};

Memory sim_new(const MemoryConfig& config);

void write_word(Memory& mem, long long addr, const BitVec& data);

struct ReadResult {
  DecodeOutcome outcome;
  BitVec data;
  bool corrupted = false;  // read copy differed from the stored image
};
ReadResult read_word(Memory& mem, long long addr);

// Direct image mutation, for permanent damage and tests.
struct FaultEvent {
  enum Kind { kXorByte, kUnidirectional, kDoubleByte, kChipStuck };
  Kind kind = kXorByte;
  long long addr = 0;
  int chip = 0;
  FieldElem pattern = 0;  // xor mask, direction candidates, or stuck value
  int chip2 = 1;
  FieldElem pattern2 = 0;
  ErrorDirection direction = ErrorDirection::kDownOnly;
};
void inject(Memory& mem, const FaultEvent& event);

// Pure byte-level form of the direction rule: returns the post-fault byte.
FieldElem apply_unidirectional(FieldElem byte, FieldElem candidates,
                               ErrorDirection direction);

struct CampaignStats {
  long long trials = 0;
  long long no_error = 0;
  long long corrected = 0;
  long long detected = 0;
  long long miscorrected = 0;  // Corrected but data differs from truth
  long long silent = 0;        // NoError but data differs from truth
  long long corrupted_reads = 0;
  std::uint64_t seed = 0;
  std::string rng;  // generator identity, for reproducibility
};

CampaignStats run_campaign(const MemoryConfig& config, long long trials);

// Campaign config as JSON: {"b":2, "r":5, "matrix":"file", "words":64,
// "trials":10000, "seed":1, "fault_models":[{"kind":"double_byte", ...}]}.
// Either r or matrix selects the code; the caller resolves it.
struct SimSetup {
  int b = 0;
  int r = 0;
  std::string matrix_file;
  long long words = 1;
  long long trials = 1;
  std::uint64_t seed = 0;
  std::vector<FaultModel> fault_models;
};
SimSetup sim_setup_from_json(const std::string& text);

std::string stats_to_json(const CampaignStats& stats);
std::string stats_summary(const CampaignStats& stats);  // one line

}  // namespace becc

#endif  // BECC_MEMSIM_HPP_
