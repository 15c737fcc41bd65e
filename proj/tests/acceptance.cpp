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

// Acceptance gate: every release-blocking property in one binary, one
// verdict line each. Any FAIL is a build failure; details go to stderr.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "becc/byte_code.hpp"
#include "becc/construct.hpp"
#include "becc/field.hpp"
#include "becc/memsim.hpp"
#include "becc/params.hpp"
#include "becc/rs_code.hpp"

namespace becc {
namespace {

struct Ctx {
  std::ostringstream detail;
  bool ok = true;

  template <typename A, typename B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want))) {
      ok = false;
      detail << "  " << what << ": got " << got << ", want " << want << "\n";
    }
  }
  void is(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "  " << what << "\n";
    }
  }
};

BitVec random_bits(std::mt19937_64& g, long long n) {
  BitVec v(n);
  for (long long i = 0; i < n; ++i) v.set(i, g() & 1);
  return v;
}

void xor_byte(BitVec& word, int b, int chip, FieldElem pattern) {
  for (int t = 0; t < b; ++t)
    if ((pattern >> t) & 1) word.flip(static_cast<std::size_t>(chip) * b + t);
}

// 1. Full-length parameter regeneration, plus a clean audit.
void full_length_tables(Ctx& c) {
  struct Pin {
    int b, r;
    long long n, k;
  };
  for (Pin p : {Pin{5, 3, 170, 155}, Pin{5, 6, 11560, 11530},
                Pin{8, 3, 2064, 2040}, Pin{10, 4, 20520, 20480},
                Pin{12, 3, 49176, 49140}, Pin{15, 3, 491550, 491505}}) {
    bool found = false;
    for (const TableEntry& e : gen_table2(p.b)) {
      if (e.r_bits != static_cast<long long>(p.r) * p.b) continue;
      found = true;
      std::ostringstream what;
      what << "table 2 b=" << p.b << " r=" << p.r;
      c.eq(e.n_bits, p.n, what.str() + " n");
      c.eq(e.k_bits, p.k, what.str() + " k");
    }
    c.is(found, "table 2 row present");
  }
  std::vector<DiffRow> rows = diff_tables();
  c.is(diff_clean(rows), "table audit has no unlisted discrepancies");
  for (const DiffRow& r : rows)
    if (r.status == "unexpected")
      c.detail << "  unexpected: table " << r.table << " b=" << r.b << " "
               << r.row_key << " printed=" << r.printed
               << " computed=" << r.computed << "\n";
}

// 2. Shortened-table columns, in full, for two byte widths.
void shortened_tables(Ctx& c) {
  const std::vector<long long> expect5{47,    79,    143,    276,    537,
                                       1049,  2073,  4121,   8222,   16419,
                                       32803, 65571, 131107, 262184, 524333};
  const std::vector<long long> expect8{280,   536,   1048,   2080,
                                       4128,  8232,  16424,  32808,
                                       65576, 131112, 262184, 524328};
  std::vector<TableEntry> got5 = gen_table3(5);
  std::vector<TableEntry> got8 = gen_table3(8);
  c.eq(got5.size(), expect5.size(), "table 3 b=5 row count");
  c.eq(got8.size(), expect8.size(), "table 3 b=8 row count");
  for (std::size_t i = 0; i < got5.size() && i < expect5.size(); ++i)
    c.eq(got5[i].n_bits, expect5[i], "table 3 b=5 row " + std::to_string(i));
  for (std::size_t i = 0; i < got8.size() && i < expect8.size(); ++i)
    c.eq(got8[i].n_bits, expect8[i], "table 3 b=8 row " + std::to_string(i));
}

// 3. Doubled-code tables.
void doubled_tables(Ctx& c) {
  struct Pin {
    int b;
    long long r, n, k;
  };
  for (Pin p : {Pin{5, 16, 340, 324}, Pin{5, 21, 680, 659},
                Pin{5, 26, 11560, 11534}, Pin{8, 25, 4128, 4103},
                Pin{8, 33, 8256, 8223}}) {
    bool found = false;
    for (const TableEntry& e : gen_table4(p.b)) {
      if (e.r_bits != p.r) continue;
      found = true;
      std::ostringstream what;
      what << "table 4 b=" << p.b << " r=" << p.r;
      c.eq(e.n_bits, p.n, what.str() + " n");
      c.eq(e.k_bits, p.k, what.str() + " k");
    }
    c.is(found, "table 4 row present");
  }
  bool found = false;
  for (const TableEntry& e : gen_table5(5)) {
    if (e.k_bits != 32) continue;
    found = true;
    c.eq(e.r_bits, 16ll, "table 5 b=5 k=32 r_bits");
    c.eq(e.n_bits, 48ll, "table 5 b=5 k=32 n");
  }
  c.is(found, "table 5 b=5 k=32 present");
}

// 4. Best-code selection and its flagged discrepancies.
void best_selection(Ctx& c) {
  struct Pin {
    int b;
    long long k, n;
  };
  for (Pin p : {Pin{5, 256, 272}, Pin{5, 512, 533}, Pin{8, 1024, 1048},
                Pin{11, 16384, 16417}, Pin{15, 524288, 524334}}) {
    BestResult best = best_code(p.b, p.k);
    std::ostringstream what;
    what << "best b=" << p.b << " k=" << p.k;
    c.eq(best.entry.n_bits, p.n, what.str());
  }
  std::set<std::tuple<int, std::string, std::string>> flagged;
  for (const DiffRow& r : diff_tables())
    if (r.table == 6) flagged.insert({r.b, r.row_key, r.status});
  c.is(flagged.count({7, "k=16384", "misprint"}) == 1,
       "best-table value misprint flagged at b=7 k=16384");
  c.is(flagged.count({7, "k=524288", "misprint"}) == 1,
       "best-table value misprint flagged at b=7 k=524288");
  c.is(flagged.count({14, "k=524288", "misprint"}) == 1,
       "best-table value misprint flagged at b=14 k=524288");
  c.eq(flagged.size(), std::size_t{8}, "best-table flag count");
}

// 5. The detection property itself, checked by enumeration.
void syndrome_disjointness(Ctx& c) {
  for (int b : {2, 3, 4}) {
    FieldTable f = FieldTable::make(b);
    ValidationReport rep = validate_sbec_dbed(f, base_matrix(f));
    c.is(rep.ok, "base matrix b=" + std::to_string(b) + " validates");
  }
  FieldTable f = FieldTable::make(2);
  for (int r : {4, 5}) {
    ValidationReport rep = validate_sbec_dbed(f, build_sbec_dbed(f, r).h);
    c.is(rep.ok, "built code b=2 r=" + std::to_string(r) + " validates");
    if (r == 5) {
      c.eq(rep.singles_checked, std::uint64_t{108}, "single syndromes at r=5");
      c.eq(rep.doubles_checked, std::uint64_t{5670}, "double syndromes at r=5");
    }
    for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
      const Violation& v = rep.violations[i];
      c.detail << "  violation kind " << v.kind << " at columns " << v.j1
               << "," << v.j2 << " patterns " << v.e1 << "," << v.e2 << "\n";
    }
  }
}

// 6. Exhaustive decoder behavior on the 36-symbol code.
void codec_exhaustive(Ctx& c) {
  FieldTable f = FieldTable::make(2);
  BuiltCode built = build_sbec_dbed(f, 5);
  ByteCode code = ByteCode::make(f, built);
  const int n = built.spec.n_sym;
  std::mt19937_64 g(101);
  long long miscorrected = 0, wrong_single = 0, undetected_double = 0;
  for (int w = 0; w < 20; ++w) {
    BitVec data = random_bits(g, built.spec.k_bits);
    BitVec cw = code.encode(data);
    for (int j = 0; j < n; ++j) {
      for (FieldElem e = 1; e < 4; ++e) {
        BitVec bad = cw;
        xor_byte(bad, 2, j, e);
        ByteCode::DecodeResult res = code.decode(bad);
        if (res.outcome.status != DecodeStatus::kCorrected ||
            res.outcome.byte_pos != j || res.outcome.pattern != e ||
            !(res.data == data))
          ++wrong_single;
      }
    }
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = j1 + 1; j2 < n; ++j2)
        for (FieldElem e1 = 1; e1 < 4; ++e1)
          for (FieldElem e2 = 1; e2 < 4; ++e2) {
            BitVec bad = cw;
            xor_byte(bad, 2, j1, e1);
            xor_byte(bad, 2, j2, e2);
            DecodeStatus st = code.decode(bad).outcome.status;
            if (st != DecodeStatus::kDetectedUncorrectable) {
              ++undetected_double;
              if (st == DecodeStatus::kCorrected) ++miscorrected;
            }
          }
  }
  c.eq(wrong_single, 0ll, "single-byte corruptions decoded exactly");
  c.eq(undetected_double, 0ll, "double-byte corruptions all detected");
  c.eq(miscorrected, 0ll, "miscorrections");
}

// 7. Reed-Solomon codec against the nearest-codeword oracle.
void rs_codec(Ctx& c) {
  FieldTable f = FieldTable::make(3);
  RsCode rs = RsCode::make(f, 1);
  std::vector<std::vector<FieldElem>> book;
  std::vector<FieldElem> data(5, 0);
  for (;;) {
    book.push_back(rs.encode(data));
    int i = 0;
    while (i < 5 && ++data[i] == 8) data[i++] = 0;
    if (i == 5) break;
  }
  auto distance = [](const std::vector<FieldElem>& a,
                     const std::vector<FieldElem>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
  };
  std::mt19937_64 g(103);
  long long bad_decodes = 0, oracle_mismatch = 0;
  for (int w = 0; w < 50; ++w) {
    std::vector<FieldElem> dw(5);
    for (FieldElem& x : dw) x = static_cast<FieldElem>(g() % 8);
    std::vector<FieldElem> cw = rs.encode(dw);
    for (int p = 0; p < 7; ++p) {
      for (FieldElem e = 1; e < 8; ++e) {
        std::vector<FieldElem> rec = cw;
        rec[p] = f.add(rec[p], e);
        const std::vector<FieldElem>* near = nullptr;
        int hits = 0;
        for (const auto& cand : book)
          if (distance(cand, rec) <= 1) ++hits, near = &cand;
        if (hits != 1 || !(*near == cw)) ++oracle_mismatch;
        RsDecodeResult res = rs.decode(rec);
        if (!res.ok || !(res.codeword == *near)) ++bad_decodes;
      }
    }
  }
  c.eq(oracle_mismatch, 0ll, "oracle: unique nearest codeword");
  c.eq(bad_decodes, 0ll, "decoder returns the oracle codeword");
  c.eq(rs.min_distance_bruteforce(), 3, "minimum distance at t=1");
  c.eq(RsCode::make(f, 2).min_distance_bruteforce(), 5,
       "minimum distance at t=2");
}

// 8. Field arithmetic against an independent carry-less oracle.
void field_oracle(Ctx& c) {
  long long mul_mismatch = 0;
  for (int b = 2; b <= 8; ++b) {
    FieldTable f = FieldTable::make(b);
    for (std::uint32_t x = 0; x < f.field_size(); ++x) {
      for (std::uint32_t y = 0; y < f.field_size(); ++y) {
        std::uint64_t v = 0;
        for (int i = 0; i < b; ++i)
          if ((x >> i) & 1) v ^= std::uint64_t{y} << i;
        for (int d = 2 * b; d >= b; --d)
          if ((v >> d) & 1) v ^= std::uint64_t{f.poly()} << (d - b);
        if (f.mul(static_cast<FieldElem>(x), static_cast<FieldElem>(y)) != v)
          ++mul_mismatch;
      }
    }
  }
  c.eq(mul_mismatch, 0ll, "products matching the oracle, b = 2..8");

  long long hom_mismatch = 0;
  for (int b = 2; b <= 4; ++b) {
    FieldTable f = FieldTable::make(b);
    for (std::uint32_t u = 0; u < f.field_size(); ++u)
      for (std::uint32_t w = 0; w < f.field_size(); ++w) {
        FieldElem x = static_cast<FieldElem>(u);
        FieldElem y = static_cast<FieldElem>(w);
        if (!(f.companion_matrix(f.mul(x, y)) ==
              f.companion_matrix(x).mul(f.companion_matrix(y))))
          ++hom_mismatch;
      }
  }
  c.eq(hom_mismatch, 0ll, "companion-matrix homomorphism, b = 2..4");
}

// 9. Count of usable normalization scalars.
void scalar_count(Ctx& c) {
  for (int b = 2; b <= 5; ++b) {
    FieldTable f = FieldTable::make(b);
    c.eq(count_valid_scalars(f), 1 << (b - 1),
         "valid scalars at b=" + std::to_string(b));
  }
}

// 10. Campaign-level behavior of the validated 36-symbol code.
void campaigns(Ctx& c) {
  FieldTable f = FieldTable::make(2);
  ByteCode code = ByteCode::make(f, build_sbec_dbed(f, 5));

  FaultModel single;
  single.kind = FaultKind::kUnidirectionalByte;
  single.direction = ErrorDirection::kDownOnly;
  MemoryConfig cfg1{code, 32, 12345, {single}};
  CampaignStats s1 = run_campaign(cfg1, 10000);
  c.eq(s1.trials, 10000ll, "single-byte campaign trials");
  c.eq(s1.miscorrected, 0ll, "single-byte campaign miscorrections");
  c.eq(s1.silent, 0ll, "single-byte campaign silent corruptions");

  FaultModel dbl;
  dbl.kind = FaultKind::kDoubleByte;
  MemoryConfig cfg2{code, 32, 54321, {dbl}};
  CampaignStats s2 = run_campaign(cfg2, 10000);
  c.eq(s2.detected, s2.corrupted_reads, "double-byte detection coverage");
  c.eq(s2.corrupted_reads, 10000ll, "double-byte corrupted reads");
  c.eq(s2.miscorrected, 0ll, "double-byte campaign miscorrections");
  c.eq(s2.silent, 0ll, "double-byte campaign silent corruptions");

  CampaignStats r1 = run_campaign(cfg1, 10000);
  CampaignStats r2 = run_campaign(cfg2, 10000);
  c.is(r1.no_error == s1.no_error && r1.corrected == s1.corrected &&
           r1.corrupted_reads == s1.corrupted_reads,
       "single-byte campaign deterministic");
  c.is(r2.detected == s2.detected &&
           r2.corrupted_reads == s2.corrupted_reads,
       "double-byte campaign deterministic");
}

}  // namespace
}  // namespace becc

int main() {
  using becc::Ctx;
  struct Criterion {
    const char* name;
    void (*fn)(Ctx&);
    double limit_s;
  };
  const Criterion criteria[] = {
      {"full-length table pins and clean audit", becc::full_length_tables, 1.0},
      {"shortened table columns b=5 and b=8", becc::shortened_tables, 1.0},
      {"doubled table pins", becc::doubled_tables, 1.0},
      {"best-code pins and flagged misprints", becc::best_selection, 1.0},
      {"single/double syndrome disjointness", becc::syndrome_disjointness,
       10.0},
      {"exhaustive byte codec behavior", becc::codec_exhaustive, 30.0},
      {"Reed-Solomon codec vs oracle", becc::rs_codec, 30.0},
      {"field arithmetic vs oracle", becc::field_oracle, 30.0},
      {"normalization scalar count", becc::scalar_count, 1.0},
      {"fault campaigns", becc::campaigns, 10.0},
  };

  int failures = 0;
  int idx = 0;
  for (const Criterion& cr : criteria) {
    ++idx;
    Ctx ctx;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.fn(ctx);
    } catch (const std::exception& e) {
      ctx.ok = false;
      ctx.detail << "  exception: " << e.what() << "\n";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs > cr.limit_s) {
      ctx.ok = false;
      ctx.detail << "  over time budget: " << secs << "s > " << cr.limit_s
                 << "s\n";
    }
    std::cout << (ctx.ok ? "PASS" : "FAIL") << "  " << idx << ". " << cr.name
              << " (" << std::fixed << std::setprecision(2) << secs << "s)"
              << std::endl;
    if (!ctx.ok) {
      ++failures;
      std::cerr << ctx.detail.str();
    }
  }
  if (failures) std::cerr << failures << " criteria failed" << std::endl;
  return failures ? 1 : 0;
}
