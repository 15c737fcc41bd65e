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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "becc/params.hpp"
#include "cli.hpp"
#include "doctest.h"

namespace becc {
namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli_run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() /
             ("becc_test_" + name)) {}
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

TEST_CASE("tables subcommand emits the generator output") {
  RunResult r = run({"tables", "--table", "2", "--b", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == tables_csv(gen_table2(5)));

  RunResult all = run({"tables", "--table", "3"});
  CHECK(all.status == 0);
  CHECK(all.out.find("5,15,47,32,3\n") != std::string::npos);
  CHECK(all.out.find("8,24,280,256,3\n") != std::string::npos);

  // Byte-identical across runs.
  RunResult again = run({"tables", "--table", "2", "--b", "5"});
  CHECK(again.out == r.out);
}

TEST_CASE("tables audit lists only known discrepancies") {
  RunResult r = run({"tables", "--diff"});
  CHECK(r.status == 0);
  CHECK(r.out.find("table,b,row,printed,computed,status\n") == 0);
  CHECK(r.out.find("attribution") != std::string::npos);
  CHECK(r.out.find("unexpected") == std::string::npos);
}

TEST_CASE("best subcommand prints length and credits") {
  RunResult r = run({"best", "--b", "8", "--k", "1024"});
  CHECK(r.status == 0);
  CHECK(r.out == "(1048,1024) (1,3)\n");

  CHECK(run({"best", "--b", "8", "--k", "1000"}).status == 2);
  CHECK(run({"best", "--b", "8"}).status == 2);
}

TEST_CASE("validate passes a sound code and fails a doubled one") {
  RunResult ok = run({"validate", "--b", "2", "--r", "4"});
  CHECK(ok.status == 0);
  CHECK(ok.out == "PASS singles=36 doubles=594\n");

  RunResult bad = run({"validate", "--b", "2", "--r", "3", "--doubled"});
  CHECK(bad.status == 3);
  CHECK(bad.out.find("FAIL") == 0);
  CHECK(bad.err.find("duplicate") != std::string::npos);
}

TEST_CASE("construct writes a matrix that validates from file") {
  TempFile m("matrix.txt");
  RunResult w =
      run({"construct", "--b", "2", "--r", "4", "--out", m.str()});
  CHECK(w.status == 0);
  CHECK(w.err.find("n_sym=12") != std::string::npos);

  RunResult v = run({"validate", "--matrix", m.str()});
  CHECK(v.status == 0);
  CHECK(v.out.find("PASS") == 0);

  RunResult stdout_form = run({"construct", "--b", "2", "--r", "4"});
  std::ifstream in(m.str());
  std::stringstream file_text;
  file_text << in.rdbuf();
  CHECK(stdout_form.out == file_text.str());

  CHECK(run({"validate", "--matrix", "/no/such/file"}).status == 4);
  CHECK(run({"construct"}).status == 2);
}

TEST_CASE("encode and decode round-trip a binary file") {
  TempFile input("payload.bin");
  TempFile stream("words.becc");
  TempFile output("restored.bin");
  std::mt19937_64 g(83);
  std::string payload(257, '\0');
  for (char& c : payload) c = static_cast<char>(g() & 0xff);
  std::ofstream(input.str(), std::ios::binary) << payload;

  RunResult enc = run({"encode", "--b", "2", "--r", "4", "--in", input.str(),
                       "--out", stream.str()});
  CHECK(enc.status == 0);

  RunResult dec = run({"decode", "--b", "2", "--r", "4", "--in", stream.str(),
                       "--out", output.str()});
  CHECK(dec.status == 0);

  std::ifstream back(output.str(), std::ios::binary);
  std::stringstream restored;
  restored << back.rdbuf();
  CHECK(restored.str() == payload);

  // The stream remembers which code produced it.
  RunResult wrong = run({"decode", "--b", "2", "--r", "5", "--in",
                         stream.str(), "--out", output.str()});
  CHECK(wrong.status == 4);
  CHECK(run({"encode", "--b", "2", "--r", "4", "--in", "/no/such/file",
             "--out", stream.str()})
            .status == 4);
}

TEST_CASE("simulate runs a campaign from a json config") {
  TempFile cfg("sim.json");
  std::ofstream(cfg.str()) << R"({
    "b": 2, "r": 4, "words": 8, "trials": 50, "seed": 9,
    "fault_models": [{"kind": "double_byte"}]
  })";
  RunResult r = run({"simulate", "--config", cfg.str()});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"detected\":50") != std::string::npos);
  CHECK(r.err.find("detected=50") != std::string::npos);

  RunResult again = run({"simulate", "--config", cfg.str()});
  CHECK(again.out == r.out);

  CHECK(run({"simulate", "--config", "/no/such/config"}).status == 4);
  TempFile broken("broken.json");
  std::ofstream(broken.str()) << "{ not json";
  CHECK(run({"simulate", "--config", broken.str()}).status == 4);
}

TEST_CASE("rs subcommand encodes, decodes, and reports parameters") {
  RunResult params = run({"rs", "--b", "3", "--t", "1"});
  CHECK(params.status == 0);
  CHECK(params.out == "n=7 k=5 t=1 d=3 generator=3,6,1\n");

  RunResult enc = run({"rs", "--b", "3", "--t", "1", "--encode", "1,0,0,0,0"});
  CHECK(enc.status == 0);
  CHECK(enc.out == "3,6,1,0,0,0,0\n");

  RunResult dec = run({"rs", "--b", "3", "--t", "1", "--decode",
                       "3,6,1,0,7,0,0"});
  CHECK(dec.status == 0);
  CHECK(dec.out == "1,0,0,0,0\n");

  CHECK(run({"rs", "--b", "3", "--t", "1", "--encode", "1,2"}).status == 2);
  CHECK(run({"rs", "--b", "3", "--t", "1", "--encode", "9,0,0,0,0"}).status ==
        2);
}

TEST_CASE("usage errors exit with the usage status") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"tables"}).status == 2);
  CHECK(run({"tables", "--table", "9"}).status == 2);
  RunResult help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("tables") != std::string::npos);
}

}  // namespace
}  // namespace becc
