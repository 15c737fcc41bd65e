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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "becc/byte_code.hpp"
#include "becc/construct.hpp"
#include "becc/field.hpp"
#include "becc/memsim.hpp"
#include "becc/params.hpp"
#include "becc/rs_code.hpp"

namespace becc {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;
constexpr int kIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared flags selecting a code: either an explicit matrix file or a
// generated (b, r) construction, optionally doubled.
struct CodeChoice {
  std::string matrix_path;
  int b = 0;
  int r = 0;
  bool doubled = false;
};

void add_code_flags(CLI::App* cmd, CodeChoice* cc) {
  auto* m = cmd->add_option("--matrix", cc->matrix_path,
                            "read the check matrix from a file");
  auto* b = cmd->add_option("--b", cc->b, "bits per byte");
  cmd->add_option("--r", cc->r, "check bytes")->needs(b);
  cmd->add_flag("--doubled", cc->doubled,
                "apply the code-doubling transform (adds a parity bit)");
  m->excludes(b);
}

struct ResolvedCode {
  FieldTable field;
  BuiltCode built;
};

ResolvedCode resolve_code(const CodeChoice& cc) {
  if (!cc.matrix_path.empty()) {
    std::ifstream in(cc.matrix_path);
    if (!in) throw IoError("cannot open " + cc.matrix_path);
    CheckMatrix h = read_matrix(in);
    if (cc.doubled) h = double_code(h);
    FieldTable f = FieldTable::make(h.b);
    return {std::move(f), {spec_for(h), h}};
  }
  if (cc.b == 0)
    throw std::invalid_argument("need either --matrix or --b/--r");
  FieldTable f = FieldTable::make(cc.b);
  BuiltCode built = build_sbec_dbed(f, cc.r == 0 ? 3 : cc.r);
  if (cc.doubled) {
    built.h = double_code(built.h);
    built.spec = spec_for(built.h);
  }
  return {std::move(f), std::move(built)};
}

std::vector<FieldElem> parse_symbol_csv(const std::string& text,
                                        std::uint32_t field_size) {
  std::vector<FieldElem> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = std::stoul(tok, &used);
    if (used != tok.size() || v >= field_size)
      throw std::invalid_argument("bad symbol '" + tok + "'");
    out.push_back(static_cast<FieldElem>(v));
  }
  return out;
}

std::string symbol_csv(const std::vector<FieldElem>& syms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < syms.size(); ++i)
    os << (i ? "," : "") << syms[i];
  return os.str();
}

int cmd_tables(int table, int b, bool diff, std::ostream& out) {
  if (diff) {
    std::vector<DiffRow> rows = diff_tables();
    out << diff_csv(rows);
    return diff_clean(rows) ? kOk : kInvalid;
  }
  std::vector<TableEntry> entries;
  for (int bb = (b ? b : 5); bb <= (b ? b : 15); ++bb) {
    std::vector<TableEntry> part = gen_table(table, bb);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  out << tables_csv(entries);
  return kOk;
}

int cmd_best(int b, long long k, std::ostream& out) {
  BestResult best = best_code(b, k);
  out << '(' << best.entry.n_bits << ',' << best.entry.k_bits << ") (";
  for (std::size_t i = 0; i < best.sources.size(); ++i)
    out << (i ? "," : "") << best.sources[i];
  out << ")\n";
  return kOk;
}

int cmd_construct(const CodeChoice& cc, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  ResolvedCode rc = resolve_code(cc);
  if (out_path.empty()) {
    write_matrix(out, rc.built.h);
  } else {
    std::ofstream os(out_path);
    if (!os) throw IoError("cannot write " + out_path);
    write_matrix(os, rc.built.h);
  }
  err << "n_sym=" << rc.built.spec.n_sym << " r_bits=" << rc.built.spec.r_bits()
      << " k_bits=" << rc.built.spec.k_bits << "\n";
  return kOk;
}

void print_violation(std::ostream& err, const Violation& v) {
  switch (v.kind) {
    case Violation::kSingleIsZero:
      err << "zero syndrome: single j=" << v.j1 << " e=" << v.e1;
      break;
    case Violation::kDuplicateSingle:
      err << "duplicate: single j=" << v.j1 << " e=" << v.e1
          << " vs single j=" << v.j2 << " e=" << v.e2;
      break;
    case Violation::kDoubleIsZero:
      err << "zero syndrome: double j1=" << v.j1 << " e1=" << v.e1
          << " j2=" << v.j2 << " e2=" << v.e2;
      break;
    case Violation::kDoubleEqualsSingle:
      err << "alias: double j1=" << v.j1 << " e1=" << v.e1 << " j2=" << v.j2
          << " e2=" << v.e2 << " matches single j=" << v.sj << " e=" << v.se;
      break;
  }
  err << "\n";
}

int cmd_validate(const CodeChoice& cc, std::ostream& out, std::ostream& err) {
  ResolvedCode rc = resolve_code(cc);
  ValidationReport rep = validate_sbec_dbed(rc.field, rc.built.h);
  if (rep.ok) {
    out << "PASS singles=" << rep.singles_checked
        << " doubles=" << rep.doubles_checked << "\n";
    return kOk;
  }
  out << "FAIL singles=" << rep.singles_checked
      << " doubles=" << rep.doubles_checked
      << " violations=" << rep.violation_count << "\n";
  std::size_t shown = std::min<std::size_t>(rep.violations.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) print_violation(err, rep.violations[i]);
  if (rep.violation_count > shown)
    err << "(" << rep.violation_count - shown << " more)\n";
  return kInvalid;
}

// File bits are consumed most-significant first; the tail of the last
// data word is zero padding, recorded via the byte count in the header.
int cmd_encode(const CodeChoice& cc, const std::string& in_path,
               const std::string& out_path, std::ostream& err) {
  ResolvedCode rc = resolve_code(cc);
  ByteCode code = ByteCode::make(rc.field, rc.built);
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + in_path);
  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
  const long long k = code.spec().k_bits;
  const std::uint64_t total_bits = std::uint64_t{8} * bytes.size();
  const std::uint64_t words = (total_bits + k - 1) / k;
  std::vector<BitVec> codewords;
  codewords.reserve(words);
  for (std::uint64_t w = 0; w < words; ++w) {
    BitVec data(k);
    for (long long i = 0; i < k; ++i) {
      std::uint64_t pos = w * k + i;
      if (pos >= total_bits) break;
      data.set(i, (bytes[pos >> 3] >> (7 - (pos & 7))) & 1);
    }
    codewords.push_back(code.encode(data));
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw IoError("cannot write " + out_path);
  write_codeword_stream(os, code, codewords, bytes.size());
  err << "encoded " << bytes.size() << " bytes into " << words << " words\n";
  return kOk;
}

int cmd_decode(const CodeChoice& cc, const std::string& in_path,
               const std::string& out_path, std::ostream& err) {
  ResolvedCode rc = resolve_code(cc);
  ByteCode code = ByteCode::make(rc.field, rc.built);
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + in_path);
  CodewordStream cs = read_codeword_stream(in);
  const CodeSpec& spec = code.spec();
  if (cs.b != spec.b || cs.n_sym != spec.n_sym || cs.k_bits != spec.k_bits)
    throw IoError("stream header does not match the selected code");
  std::vector<unsigned char> bytes(cs.data_bytes, 0);
  const long long k = spec.k_bits;
  long long corrected = 0;
  for (std::size_t w = 0; w < cs.codewords.size(); ++w) {
    ByteCode::DecodeResult res = code.decode(cs.codewords[w]);
    if (res.outcome.status == DecodeStatus::kDetectedUncorrectable) {
      err << "word " << w << ": uncorrectable error\n";
      return kInvalid;
    }
    if (res.outcome.status == DecodeStatus::kCorrected) ++corrected;
    for (long long i = 0; i < k; ++i) {
      std::uint64_t pos = w * k + i;
      if (pos >= std::uint64_t{8} * bytes.size()) break;
      if (res.data.get(i))
        bytes[pos >> 3] |= static_cast<unsigned char>(1u << (7 - (pos & 7)));
    }
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw IoError("cannot write " + out_path);
  os.write(reinterpret_cast<const char*>(bytes.data()),
           static_cast<std::streamsize>(bytes.size()));
  err << "decoded " << cs.codewords.size() << " words, corrected " << corrected
      << "\n";
  return kOk;
}

int cmd_simulate(const std::string& config_path, std::ostream& out,
                 std::ostream& err) {
  std::ifstream in(config_path);
  if (!in) throw IoError("cannot open " + config_path);
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  SimSetup setup = sim_setup_from_json(text);
  ResolvedCode rc =
      resolve_code({setup.matrix_file, setup.b, setup.r, false});
  MemoryConfig cfg{ByteCode::make(rc.field, rc.built), setup.words, setup.seed,
                   setup.fault_models};
  CampaignStats stats = run_campaign(cfg, setup.trials);
  out << stats_to_json(stats) << "\n";
  err << stats_summary(stats) << "\n";
  return kOk;
}

int cmd_rs(int b, int t, const std::string& encode_csv,
           const std::string& decode_csv, std::ostream& out,
           std::ostream& err) {
  FieldTable f = FieldTable::make(b);
  RsCode rs = RsCode::make(f, t);
  if (!encode_csv.empty()) {
    std::vector<FieldElem> data = parse_symbol_csv(encode_csv, f.field_size());
    if (static_cast<int>(data.size()) != rs.k())
      throw std::invalid_argument("expected k=" + std::to_string(rs.k()) +
                                  " data symbols");
    out << symbol_csv(rs.encode(data)) << "\n";
    return kOk;
  }
  if (!decode_csv.empty()) {
    std::vector<FieldElem> recv = parse_symbol_csv(decode_csv, f.field_size());
    if (static_cast<int>(recv.size()) != rs.n())
      throw std::invalid_argument("expected n=" + std::to_string(rs.n()) +
                                  " received symbols");
    RsDecodeResult res = rs.decode(recv);
    if (!res.ok) {
      err << "uncorrectable word\n";
      return kInvalid;
    }
    out << symbol_csv(res.data) << "\n";
    return kOk;
  }
  const GfPoly& g = rs.generator();
  out << "n=" << rs.n() << " k=" << rs.k() << " t=" << rs.t()
      << " d=" << rs.n() - rs.k() + 1 << " generator=" << symbol_csv(g.c)
      << "\n";
  return kOk;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"SbEC-DbED byte error control code toolkit"};
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("tables", "regenerate parameter tables");
  int table_no = 0;
  int tables_b = 0;
  bool diff = false;
  auto* topt = tables->add_option("--table", table_no, "table number 1..5")
                   ->check(CLI::Range(1, 5));
  tables->add_option("--b", tables_b, "bits per byte")->check(CLI::Range(5, 15));
  tables->add_flag("--diff", diff, "audit against the published tables");
  tables->callback([&] {
    if (!diff && topt->count() == 0)
      throw CLI::RequiredError("--table (or --diff)");
  });

  auto* best = app.add_subcommand("best", "pick the shortest code");
  int best_b = 0;
  long long best_k = 0;
  best->add_option("--b", best_b, "bits per byte")->required();
  best->add_option("--k", best_k, "information bits")->required();

  auto* construct = app.add_subcommand("construct", "emit a check matrix");
  CodeChoice construct_cc;
  std::string construct_out;
  add_code_flags(construct, &construct_cc);
  construct->add_option("--out", construct_out, "output file (default stdout)");

  auto* validate =
      app.add_subcommand("validate", "exhaustive SbEC-DbED syndrome check");
  CodeChoice validate_cc;
  add_code_flags(validate, &validate_cc);

  auto* encode = app.add_subcommand("encode", "encode a file into codewords");
  CodeChoice encode_cc;
  std::string encode_in, encode_out;
  add_code_flags(encode, &encode_cc);
  encode->add_option("--in", encode_in, "input file")->required();
  encode->add_option("--out", encode_out, "output stream file")->required();

  auto* decode = app.add_subcommand("decode", "decode a codeword stream");
  CodeChoice decode_cc;
  std::string decode_in, decode_out;
  add_code_flags(decode, &decode_cc);
  decode->add_option("--in", decode_in, "input stream file")->required();
  decode->add_option("--out", decode_out, "output file")->required();

  auto* simulate = app.add_subcommand("simulate", "run a fault campaign");
  std::string sim_config;
  simulate->add_option("--config", sim_config, "JSON campaign config")
      ->required();

  auto* rs = app.add_subcommand("rs", "Reed-Solomon codec over GF(2^b)");
  int rs_b = 0, rs_t = 1;
  std::string rs_encode, rs_decode;
  rs->add_option("--b", rs_b, "bits per symbol")->required();
  rs->add_option("--t", rs_t, "correctable symbols");
  rs->add_option("--encode", rs_encode, "k data symbols, comma separated");
  rs->add_option("--decode", rs_decode, "n received symbols, comma separated");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (tables->parsed()) return cmd_tables(table_no, tables_b, diff, out);
    if (best->parsed()) return cmd_best(best_b, best_k, out);
    if (construct->parsed())
      return cmd_construct(construct_cc, construct_out, out, err);
    if (validate->parsed()) return cmd_validate(validate_cc, out, err);
    if (encode->parsed()) return cmd_encode(encode_cc, encode_in, encode_out, err);
    if (decode->parsed()) return cmd_decode(decode_cc, decode_in, decode_out, err);
    if (simulate->parsed()) return cmd_simulate(sim_config, out, err);
    if (rs->parsed()) return cmd_rs(rs_b, rs_t, rs_encode, rs_decode, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}

}  // namespace becc
