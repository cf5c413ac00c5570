/*
   Copyright 2026 The blocktest authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* binary() {
  const char* bin = std::getenv("BLOCKTEST_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "BLOCKTEST_BIN must point at the blocktest binary (set by ctest)");
  return bin;
}

RunResult run(const std::string& args) {
  const fs::path out_path = fs::temp_directory_path() / "blocktest_cli_out.txt";
  const std::string cmd =
      std::string(binary()) + " " + args + " > " + out_path.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path data_dir() { return BLOCKTEST_DATA_DIR; }

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("generate is deterministic and honors block sizes") {
  auto e1 = temp_file("gen1.edges"), l1 = temp_file("gen1.labels");
  auto e2 = temp_file("gen2.edges"), l2 = temp_file("gen2.labels");
  std::string flags = "generate --n 200 --k 2 --w-in 0.2 --w-out 0.02 --seed 7";
  CHECK(run(flags + " --out-edges " + e1.string() + " --out-labels " + l1.string()).exit_code == 0);
  CHECK(run(flags + " --out-edges " + e2.string() + " --out-labels " + l2.string()).exit_code == 0);
  CHECK(slurp(e1) == slurp(e2));
  CHECK(slurp(l1) == slurp(l2));

  // truth has two communities of 100
  std::istringstream labels(slurp(l1));
  int zeros = 0, ones = 0;
  std::string v;
  int c;
  while (labels >> v >> c) (c == 0 ? zeros : ones)++;
  CHECK(zeros == 100);
  CHECK(ones == 100);
}

TEST_CASE("generate accepts explicit block sizes and a theta file") {
  auto theta = temp_file("theta.txt");
  {
    std::ofstream out(theta);
    for (int i = 0; i < 30; ++i) out << 1.0 + 0.01 * i << "\n";
  }
  auto e = temp_file("gen_theta.edges"), l = temp_file("gen_theta.labels");
  auto r = run("generate --block-sizes 10,20 --w-in 0.5 --w-out 0.05 --theta file "
               "--theta-file " + theta.string() + " --seed 2 --out-edges " + e.string() +
               " --out-labels " + l.string());
  CHECK(r.exit_code == 0);
  std::istringstream labels(slurp(l));
  int zeros = 0, ones = 0;
  std::string v;
  int c;
  while (labels >> v >> c) (c == 0 ? zeros : ones)++;
  CHECK(zeros == 10);
  CHECK(ones == 20);

  // wrong theta count is a data error
  auto bad = run("generate --block-sizes 5,5 --theta file --theta-file " + theta.string() +
                 " --out-edges " + e.string() + " --out-labels " + l.string());
  CHECK(bad.exit_code == 2);
}

TEST_CASE("generate with zero rates writes an edgeless file") {
  auto e = temp_file("gen0.edges"), l = temp_file("gen0.labels");
  auto r = run("generate --n 50 --k 2 --w-in 0 --w-out 0 --seed 1 --out-edges " + e.string() +
               " --out-labels " + l.string());
  CHECK(r.exit_code == 0);
  std::istringstream in(slurp(e));
  std::string line;
  while (std::getline(in, line)) CHECK((line.empty() || line[0] == '#'));
}

TEST_CASE("detect and eval reproduce the karate split") {
  auto out = temp_file("karate_result.json");
  auto karate = (data_dir() / "karate.edges").string();
  auto r = run("detect --input " + karate + " --seed 1 --out " + out.string());
  CHECK(r.exit_code == 0);

  auto eval = run("eval --pred " + out.string() + " --truth " +
                  (data_dir() / "karate.labels").string());
  CHECK(eval.exit_code == 0);
  CHECK(eval.out.find("communities_pred 2") != std::string::npos);
  CHECK(eval.out.find("communities_truth 2") != std::string::npos);
  CHECK(eval.out.find("ari 0.77") != std::string::npos);
}

TEST_CASE("detect with vanishing significance keeps one community") {
  auto out = temp_file("karate_whole.json");
  auto r = run("detect --input " + (data_dir() / "karate.edges").string() +
               " --significance 1e-12 --seed 1 --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(slurp(out).find("\"communities\": 1") != std::string::npos);
}

TEST_CASE("eval against identical labels yields perfect scores") {
  auto truth = (data_dir() / "karate.labels").string();
  auto r = run("eval --pred " + truth + " --truth " + truth);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ari 1.000000") != std::string::npos);
  CHECK(r.out.find("f1 1.000000") != std::string::npos);
}

TEST_CASE("dissim of a file with itself is zero and symmetric otherwise") {
  auto karate = (data_dir() / "karate.edges").string();
  auto football = (data_dir() / "football.edges").string();
  auto self = run("dissim " + karate + " " + karate);
  CHECK(self.exit_code == 0);
  CHECK(self.out == "0.000000\n");

  auto ab = run("dissim " + karate + " " + football);
  auto ba = run("dissim " + football + " " + karate);
  CHECK(ab.exit_code == 0);
  CHECK(ab.out == ba.out);
  CHECK(ab.out != "0.000000\n");
}

TEST_CASE("bad weights are a usage error") {
  auto karate = (data_dir() / "karate.edges").string();
  auto r = run("dissim " + karate + " " + karate + " --gamma 0.5,0.5,0.5");
  CHECK(r.exit_code == 1);
}

TEST_CASE("missing input file is a data error") {
  auto r = run("detect --input /nonexistent/graph.edges");
  CHECK(r.exit_code == 2);
}

TEST_CASE("sweep validates its flags and writes csv") {
  CHECK(run("sweep --experiment nope --runs 2").exit_code == 1);
  CHECK(run("sweep --experiment balanced_w12 --runs 0").exit_code == 1);

  auto csv = temp_file("mini_sweep.csv");
  auto r = run("sweep --experiment balanced_w12 --runs 1 --n 60 --seed 3 --out " + csv.string());
  CHECK(r.exit_code == 0);
  auto text = slurp(csv);
  CHECK(text.find("param,mean_pvalue,std_pvalue,reject_rate") == 0);
  CHECK(text.find("\n0.02,") != std::string::npos);
  CHECK(text.find("\n0.2,") != std::string::npos);
}

TEST_CASE("vertex set mismatch between prediction and truth is a data error") {
  auto pred = temp_file("pred.labels");
  std::ofstream(pred) << "a 0\nb 1\n";
  auto truth = temp_file("truth.labels");
  std::ofstream(truth) << "a 0\nc 1\n";
  auto r = run("eval --pred " + pred.string() + " --truth " + truth.string());
  CHECK(r.exit_code == 2);
}

} // TEST_SUITE
