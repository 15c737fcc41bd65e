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

#include "becc/memsim.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace becc {

namespace {

// Modulo draw: the tiny bias is irrelevant here and the output is stable
// across platforms, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t m) {
  return g() % m;
}

bool bernoulli(std::mt19937_64& g, double p) {
  return (g() >> 11) * 0x1.0p-53 < p;
}

FieldElem nonzero_pattern(std::mt19937_64& g, int b) {
  return static_cast<FieldElem>(1 + uniform_below(g, (1ull << b) - 1));
}

FieldElem get_byte(const BitVec& w, int chip, int b) {
  FieldElem x = 0;
  for (int t = 0; t < b; ++t)
    if (w.get(static_cast<std::size_t>(chip) * b + t)) x |= FieldElem(1) << t;
  return x;
}

void set_byte(BitVec& w, int chip, int b, FieldElem x) {
  for (int t = 0; t < b; ++t)
    w.set(static_cast<std::size_t>(chip) * b + t, (x >> t) & 1);
}

// First `count` entries of a partial Fisher-Yates shuffle of 0..n-1.
std::vector<int> distinct_chips(std::mt19937_64& g, int n, int count) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < count; ++i)
    std::swap(pool[i], pool[i + uniform_below(g, n - i)]);
  pool.resize(count);
  return pool;
}

bool is_unidirectional_kind(FaultKind k) {
  return k == FaultKind::kUnidirectionalByte ||
         k == FaultKind::kMultiUnidirectionalByte;
}

void apply_model(Memory& mem, const FaultModel& m, BitVec& word) {
  const CodeSpec& spec = mem.config.code.spec();
  const int b = spec.b;
  const int n = spec.n_sym;
  std::mt19937_64& g = mem.rng;
  switch (m.kind) {
    case FaultKind::kTransientBit:
    case FaultKind::kIntermittentBit: {
      int chip = m.chip >= 0 ? m.chip : static_cast<int>(uniform_below(g, n));
      int bit = m.bit >= 0 ? m.bit : static_cast<int>(uniform_below(g, b));
      word.flip(static_cast<std::size_t>(chip) * b + bit);
      break;
    }
    case FaultKind::kPermanentChipStuck:
      set_byte(word, m.chip, b, m.stuck_value);
      break;
    case FaultKind::kUnidirectionalByte: {
      int chip = m.chip >= 0 ? m.chip : static_cast<int>(uniform_below(g, n));
      FieldElem v = get_byte(word, chip, b);
      set_byte(word, chip, b,
               apply_unidirectional(v, nonzero_pattern(g, b), m.direction));
      break;
    }
    case FaultKind::kDoubleByte: {
      std::vector<int> chips = distinct_chips(g, n, 2);
      for (int chip : chips)
        set_byte(word, chip, b,
                 get_byte(word, chip, b) ^ nonzero_pattern(g, b));
      break;
    }
    case FaultKind::kMultiUnidirectionalByte: {
      std::vector<int> chips = distinct_chips(g, n, m.byte_count);
      for (int chip : chips) {
        FieldElem v = get_byte(word, chip, b);
        set_byte(word, chip, b,
                 apply_unidirectional(v, nonzero_pattern(g, b), m.direction));
      }
      break;
    }
  }
}

void check_model(const FaultModel& m, const CodeSpec& spec) {
  if (m.p < 0.0 || m.p > 1.0)
    throw std::invalid_argument("memsim: probability outside [0,1]");
  if (m.chip >= spec.n_sym)
    throw std::invalid_argument("memsim: chip index past n_sym");
  if (m.bit >= spec.b)
    throw std::invalid_argument("memsim: bit index past b");
  if (m.stuck_value >= (FieldElem(1) << spec.b))
    throw std::invalid_argument("memsim: stuck value not a b-bit byte");
  if (is_unidirectional_kind(m.kind) &&
      m.direction != ErrorDirection::kUpOnly &&
      m.direction != ErrorDirection::kDownOnly)
    throw std::invalid_argument("memsim: direction must be up or down");
  if (m.kind == FaultKind::kMultiUnidirectionalByte &&
      (m.byte_count < 1 || m.byte_count > spec.n_sym))
    throw std::invalid_argument("memsim: byte_count outside 1..n_sym");
}

}  // namespace

FieldElem apply_unidirectional(FieldElem byte, FieldElem candidates,
                               ErrorDirection direction) {
  switch (direction) {
    case ErrorDirection::kDownOnly:
      return byte & static_cast<FieldElem>(~candidates);
    case ErrorDirection::kUpOnly:
      return byte | candidates;
    default:
      throw std::invalid_argument("memsim: direction must be up or down");
  }
}

Memory sim_new(const MemoryConfig& config) {
  if (config.words < 1)
    throw std::invalid_argument("memsim: need at least one word");
  Memory mem;
  mem.config = config;
  mem.rng.seed(config.seed);
  const CodeSpec& spec = config.code.spec();
  for (FaultModel& m : mem.config.fault_models) {
    check_model(m, spec);
    // Intermittent and permanent faults sit at one physical location.
    bool pinned = m.kind == FaultKind::kIntermittentBit ||
                  m.kind == FaultKind::kPermanentChipStuck;
    if (pinned && m.chip < 0)
      m.chip = static_cast<int>(uniform_below(mem.rng, spec.n_sym));
    if (m.kind == FaultKind::kIntermittentBit && m.bit < 0)
      m.bit = static_cast<int>(uniform_below(mem.rng, spec.b));
  }
  mem.image.assign(config.words, BitVec(config.code.word_bits()));
  mem.truth.assign(config.words, BitVec(spec.k_bits));
  mem.valid.assign(config.words, false);
  return mem;
}

void write_word(Memory& mem, long long addr, const BitVec& data) {
  if (addr < 0 || addr >= mem.config.words)
    throw std::out_of_range("memsim: address out of range");
  mem.image[addr] = mem.config.code.encode(data);
  mem.truth[addr] = data;
  mem.valid[addr] = true;
}

ReadResult read_word(Memory& mem, long long addr) {
  if (addr < 0 || addr >= mem.config.words)
    throw std::out_of_range("memsim: address out of range");
  if (!mem.valid[addr])
    throw std::invalid_argument("memsim: reading an unwritten word");
  BitVec copy = mem.image[addr];
  for (const FaultModel& m : mem.config.fault_models) {
    // A stuck chip needs no activation draw; it is broken on every read.
    if (m.kind == FaultKind::kPermanentChipStuck || bernoulli(mem.rng, m.p))
      apply_model(mem, m, copy);
  }
  ReadResult rr;
  rr.corrupted = !(copy == mem.image[addr]);
  ByteCode::DecodeResult dec = mem.config.code.decode(copy);
  rr.outcome = dec.outcome;
  rr.data = dec.data;
  return rr;
}

void inject(Memory& mem, const FaultEvent& event) {
  if (event.addr < 0 || event.addr >= mem.config.words)
    throw std::out_of_range("memsim: address out of range");
  const CodeSpec& spec = mem.config.code.spec();
  const int b = spec.b;
  if (event.chip < 0 || event.chip >= spec.n_sym)
    throw std::invalid_argument("memsim: invalid chip");
  BitVec& w = mem.image[event.addr];
  switch (event.kind) {
    case FaultEvent::kXorByte:
      set_byte(w, event.chip, b, get_byte(w, event.chip, b) ^ event.pattern);
      break;
    case FaultEvent::kUnidirectional:
      set_byte(w, event.chip, b,
               apply_unidirectional(get_byte(w, event.chip, b), event.pattern,
                                    event.direction));
      break;
    case FaultEvent::kDoubleByte:
      if (event.chip2 < 0 || event.chip2 >= spec.n_sym ||
          event.chip2 == event.chip)
        throw std::invalid_argument("memsim: need two distinct chips");
      set_byte(w, event.chip, b, get_byte(w, event.chip, b) ^ event.pattern);
      set_byte(w, event.chip2, b,
               get_byte(w, event.chip2, b) ^ event.pattern2);
      break;
    case FaultEvent::kChipStuck:
      set_byte(w, event.chip, b, event.pattern);
      break;
  }
}

CampaignStats run_campaign(const MemoryConfig& config, long long trials) {
  if (trials < 1)
    throw std::invalid_argument("memsim: trials must be >= 1");
  Memory mem = sim_new(config);
  CampaignStats st;
  st.trials = trials;
  st.seed = config.seed;
  st.rng = "mt19937_64";
  const long long k = config.code.spec().k_bits;
  for (long long t = 0; t < trials; ++t) {
    long long addr =
        static_cast<long long>(uniform_below(mem.rng, mem.config.words));
    BitVec data(k);
    for (long long i = 0; i < k; ++i) data.set(i, mem.rng() & 1);
    write_word(mem, addr, data);
    ReadResult rr = read_word(mem, addr);
    if (rr.corrupted) ++st.corrupted_reads;
    switch (rr.outcome.status) {
      case DecodeStatus::kNoError:
        (rr.data == data ? st.no_error : st.silent) += 1;
        break;
      case DecodeStatus::kCorrected:
        (rr.data == data ? st.corrected : st.miscorrected) += 1;
        break;
      case DecodeStatus::kDetectedUncorrectable:
        ++st.detected;
        break;
    }
  }
  return st;
}

const char* fault_kind_name(FaultKind kind) {
  switch (kind) {
    case FaultKind::kTransientBit: return "transient_bit";
    case FaultKind::kIntermittentBit: return "intermittent_bit";
    case FaultKind::kPermanentChipStuck: return "permanent_chip_stuck";
    case FaultKind::kUnidirectionalByte: return "unidirectional_byte";
    case FaultKind::kDoubleByte: return "double_byte";
    case FaultKind::kMultiUnidirectionalByte:
      return "multi_unidirectional_byte";
  }
  return "?";
}

FaultKind fault_kind_from_name(const std::string& name) {
  for (FaultKind k :
       {FaultKind::kTransientBit, FaultKind::kIntermittentBit,
        FaultKind::kPermanentChipStuck, FaultKind::kUnidirectionalByte,
        FaultKind::kDoubleByte, FaultKind::kMultiUnidirectionalByte}) {
    if (name == fault_kind_name(k)) return k;
  }
  throw std::invalid_argument("memsim: unknown fault kind " + name);
}

SimSetup sim_setup_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    SimSetup s;
    s.b = j.at("b").get<int>();
    s.r = j.value("r", 0);
    s.matrix_file = j.value("matrix", std::string());
    s.words = j.value("words", 1ll);
    s.trials = j.value("trials", 1ll);
    s.seed = j.value("seed", std::uint64_t{0});
    for (const nlohmann::json& m :
         j.value("fault_models", nlohmann::json::array())) {
      FaultModel fm;
      fm.kind = fault_kind_from_name(m.at("kind").get<std::string>());
      fm.p = m.value("p", 1.0);
      fm.chip = m.value("chip", -1);
      fm.bit = m.value("bit", -1);
      fm.stuck_value = static_cast<FieldElem>(m.value("stuck_value", 0));
      std::string dir = m.value("direction", std::string("down"));
      if (dir == "down") {
        fm.direction = ErrorDirection::kDownOnly;
      } else if (dir == "up") {
        fm.direction = ErrorDirection::kUpOnly;
      } else {
        throw std::invalid_argument("direction must be \"up\" or \"down\"");
      }
      fm.byte_count = m.value("byte_count", 3);
      s.fault_models.push_back(fm);
    }
    return s;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("memsim: bad config: ") + e.what());
  }
}

std::string stats_to_json(const CampaignStats& st) {
  nlohmann::json j;
  j["trials"] = st.trials;
  j["no_error"] = st.no_error;
  j["corrected"] = st.corrected;
  j["detected"] = st.detected;
  j["miscorrected"] = st.miscorrected;
  j["silent"] = st.silent;
  j["corrupted_reads"] = st.corrupted_reads;
  j["seed"] = st.seed;
  j["rng"] = st.rng;
  return j.dump();
}

std::string stats_summary(const CampaignStats& st) {
  std::ostringstream os;
  os << "trials=" << st.trials << " no_error=" << st.no_error
     << " corrected=" << st.corrected << " detected=" << st.detected
     << " miscorrected=" << st.miscorrected << " silent=" << st.silent
     << " corrupted_reads=" << st.corrupted_reads << " seed=" << st.seed
     << " rng=" << st.rng;
  return os.str();
}

}  // namespace becc
