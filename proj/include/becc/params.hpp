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

#ifndef BECC_PARAMS_HPP_
#define BECC_PARAMS_HPP_

#include <string>
#include <vector>

namespace becc {

// Information lengths used throughout the published tables.
std::vector<long long> k_schedule();  // 32, 64, ..., 524288

struct TableEntry {
  int b = 0;
  long long r_bits = 0;
  long long n_bits = 0;
  long long k_bits = 0;
  int source = 0;  // originating table, 1..5
};

// Table 1 is reference data: the 3-check-byte code family has no published
// construction, only its maximum byte length per b.
std::vector<TableEntry> table1_reference();

// Full-length codes, n_sym = code_length_bound(b, r).
std::vector<TableEntry> gen_table2(int b, int r_min, int r_max);
std::vector<TableEntry> gen_table2(int b);  // r 3..6 for b<=7, 3..4 above

// Shortened codes: minimal r with ceil(k/b) + r <= code_length_bound(b, r).
std::vector<TableEntry> gen_table3(int b);

// Doubling applied to every default Table-2 entry: (n,k) -> (2n, n+k-1)
// with r_bits = n - k + 1.
std::vector<TableEntry> gen_table4(int b);

// Shortened doubled codes: minimal r whose doubled capacity n+k-1 admits
// the scheduled k (r scanned past the Table-2 defaults as needed).
std::vector<TableEntry> gen_table5(int b);

std::vector<TableEntry> gen_table(int table, int b);  // dispatch, 1..5

struct BestResult {
  TableEntry entry;
  std::vector<int> sources;  // every table attaining the minimum n
};
BestResult best_code(int b, long long k_bits);

// Header "b,r_bits,n_bits,k_bits,source".
std::string tables_csv(const std::vector<TableEntry>& entries);

// Computed-versus-printed audit. Statuses:
//   misprint    printed cell disagrees with the formulas (allowlisted)
//   attribution best-table credit differs, values agree (allowlisted)
//   unprinted   computed row with no printed counterpart (allowlisted)
//   unexpected  any unlisted disagreement; a failure
struct DiffRow {
  int table = 0;  // 1..6
  int b = 0;
  std::string row_key;  // "r=5" or "k=16384"
  std::string printed;
  std::string computed;
  std::string status;
};
std::vector<DiffRow> diff_tables();
std::string diff_csv(const std::vector<DiffRow>& rows);
bool diff_clean(const std::vector<DiffRow>& rows);

// Published table transcriptions, kept verbatim including misprints.
struct PrintedT1Row {
  int b;
  long long l_max;  // maximum code length in bytes
  long long n;
  long long k;
};
struct PrintedT2Row {
  int b;
  int r_sym;
  long long n;
  long long k;
};
struct PrintedKnRow {  // tables 3 and 5, keyed by k
  int b;
  long long k;
  long long n;
};
struct PrintedT4Row {
  int b;
  long long r_bits;
  long long n;
  long long k;
};
struct PrintedBestRow {
  int b;
  long long k;
  long long n;
  std::vector<int> sources;
};
const std::vector<PrintedT1Row>& printed_table1();
const std::vector<PrintedT2Row>& printed_table2();
const std::vector<PrintedKnRow>& printed_table3();
const std::vector<PrintedT4Row>& printed_table4();
const std::vector<PrintedKnRow>& printed_table5();
const std::vector<PrintedBestRow>& printed_table6();

}  // namespace becc

#endif  // BECC_PARAMS_HPP_
