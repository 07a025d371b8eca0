#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hopfcyc/cli.hpp"
#include "hopfcyc/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfcyc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int const code = hopfcyc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(HOPFCYC_DATA_DIR) + "/" + name; }

std::string temp_file(const char* name, const std::string& content) {
  auto const path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("check-hopf exit codes") {
  auto const good = run({"check-hopf", "--input", data("h4.json"), "--character", "delta"});
  CHECK(good.code == 0);
  CHECK(good.out.find("result: pass") != std::string::npos);

  auto const bad = run({"check-hopf", "--input", data("h4.json"), "--character", "epsilon",
                        "--require-involution"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("witness: at x:") != std::string::npos);

  auto const lenient = run({"check-hopf", "--input", data("h4.json"), "--character", "epsilon"});
  CHECK(lenient.code == 0);
  CHECK(lenient.out.find("info: twisted_involution epsilon: fails at x") != std::string::npos);

  for (const char* f : {"trivial.json", "z2.json", "z3.json", "z3_cyclotomic.json", "functions_z2.json"}) {
    CHECK(run({"check-hopf", "--input", data(f)}).code == 0);
  }
}

TEST_CASE("parse errors exit 2 without a report") {
  auto const broken = temp_file("hopfcyc_broken.json", "{\"name\": \"x\", \"dim\": ");
  auto const r = run({"check-hopf", "--input", broken});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("malformed JSON") != std::string::npos);

  auto const missing = temp_file("hopfcyc_missing.json", "{\"name\": \"x\", \"dim\": 1, \"unit\": [1]}");
  CHECK(run({"cohomology", "--input", missing}).code == 2);
  auto const bad_scalar = temp_file(
      "hopfcyc_scalar.json",
      "{\"dim\":1,\"unit\":[\"1/0x\"],\"product\":[],\"coproduct\":[],\"counit\":[1],\"antipode\":[]}");
  CHECK(run({"check-hopf", "--input", bad_scalar}).code == 2);
  CHECK(run({"check-hopf", "--input", data("does_not_exist.json")}).code == 2);
  CHECK(run({"cohomology", "--input", data("h4.json"), "--character", "nope"}).out.empty());
  CHECK(run({"cohomology", "--input", data("h4.json"), "--character", "nope"}).code == 2);
  CHECK(run({"cohomology", "--input", data("z2.json"), "--method", "fast"}).code == 2);
  CHECK(run({"cohomology"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("cyclic-relations") {
  CHECK(run({"cyclic-relations", "--input", data("z2.json"), "--max-degree", "4"}).code == 0);
  auto const bad = run({"cyclic-relations", "--input", data("h4.json"), "--max-degree", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("check tau_power degree=2 n=2: FAIL") != std::string::npos);
  auto const lie = run({"cyclic-relations", "--input", data("axb.json"), "--max-degree", "3", "--seed", "7"});
  CHECK(lie.code == 0);
  CHECK(lie.out.find("seed: 7") != std::string::npos);
}

TEST_CASE("cohomology reports are deterministic") {
  auto const a = run({"cohomology", "--input", data("z2.json"), "--max-degree", "3"});
  auto const b = run({"cohomology", "--input", data("z2.json"), "--max-degree", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("agreement: pass") != std::string::npos);
  auto const k = run({"cohomology", "--input", data("trivial.json")});
  CHECK(k.out.find("HC: 1 0 1 0 1\n") != std::string::npos);
  auto const refused = run({"cohomology", "--input", data("h4.json")});
  CHECK(refused.code == 1);
  CHECK(refused.out.find("refused:") != std::string::npos);

  auto const path = (std::filesystem::temp_directory_path() / "hopfcyc_report.txt").string();
  auto const to_file = run({"cohomology", "--input", data("z2.json"), "--max-degree", "3", "--output", path});
  CHECK(to_file.out.empty());
  CHECK(hopfcyc::io::read_file(path) == a.out);
}

TEST_CASE("gamma-check and pair") {
  auto const good = run({"gamma-check", "--input", data("gamma_translation_z2.json")});
  CHECK(good.code == 0);
  CHECK(good.out.find("gamma(g) = (p_1,p_g)* + (p_g,p_1)*") != std::string::npos);
  auto const bad = run({"gamma-check", "--input", data("gamma_point_z2.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("check gamma_cyclic degree=1: FAIL") != std::string::npos);
  CHECK(bad.out.find("check gamma_face degree=1 i=0: pass") != std::string::npos);

  auto const p = run({"pair", "--input", data("pair_z2.json"), "--seed", "3"});
  CHECK(p.code == 0);
  CHECK(p.out.find("pairing: 3/2") != std::string::npos);
  CHECK(p.out.find("similarity_invariant: yes") != std::string::npos);
  CHECK(run({"pair", "--input", data("pair_scalars.json")}).code == 0);
}

TEST_CASE("reports match frozen goldens byte for byte") {
  auto golden = [](const char* name) { return hopfcyc::io::read_file(std::string(HOPFCYC_GOLDEN_DIR) + "/" + name); };
  CHECK(run({"cohomology", "--input", data("z2.json")}).out == golden("cli_cohomology_z2.txt"));
  CHECK(run({"cohomology", "--input", data("h4.json"), "--character", "delta"}).out ==
        golden("cli_cohomology_h4_delta.txt"));
  CHECK(run({"cyclic-relations", "--input", data("h4.json"), "--max-degree", "2"}).out ==
        golden("cli_relations_h4_epsilon.txt"));
}
