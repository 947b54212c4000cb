#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "icode/cli.hpp"
#include "icode/instance.hpp"

using namespace icode;
using icode::test::data_path;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
public:
  explicit TempFile(const std::string &content) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("icode_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("solve the six-receiver example") {
  const auto r = run({"solve", data_path("paper6.json")});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind(R"({"rate":3,"transmissions":[[1,3,4],[2,5],[6]],)", 0) == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["solver"] == "exact");
  CHECK(doc["cover"] == json::parse("[[1,3,4],[2,5],[6]]"));
  CHECK(doc["assignment"].size() == 6);
  CHECK(doc["assignment"][5] == json::parse(R"({"receiver":6,"demand":1,"want":6,"transmission":3})"));
}

TEST_CASE("solve the groupcast example") {
  const auto r = run({"solve", data_path("eq1.json")});
  CHECK(r.code == exit_ok);
  const auto doc = json::parse(r.out);
  CHECK(doc["rate"] == 2);
  CHECK(doc["transmissions"] == json::parse("[[1,2],[3]]"));
}

TEST_CASE("solve reports input errors with exit 1") {
  const auto overlap = run({"solve", data_path("overlap.json")});
  CHECK(overlap.code == exit_input_error);
  CHECK(overlap.out.empty());
  CHECK(overlap.err.find("receiver 2: wants/has overlap") != std::string::npos);

  CHECK(run({"solve", data_path("no-such-file.json")}).code == exit_input_error);
  TempFile garbage("{not json");
  CHECK(run({"solve", garbage.path()}).code == exit_input_error);
  CHECK(run({"solve"}).code == exit_input_error);
  CHECK(run({"solve", data_path("paper6.json"), "--solver", "magic"}).code == exit_input_error);
  CHECK(run({"solve", data_path("paper6.json"), "--word-width", "65"}).code == exit_input_error);
  CHECK(run({}).code == exit_input_error);
}

TEST_CASE("solver selection and caps") {
  const auto path = data_path("paper6.json");
  const auto exact = run({"solve", path, "--solver", "exact", "--exact-cap", "3"});
  CHECK(exact.code == exit_cap_exceeded);
  CHECK(exact.err.find("cap") != std::string::npos);

  const auto fallback = run({"solve", path, "--exact-cap", "3"});
  CHECK(fallback.code == exit_ok);
  CHECK(fallback.err.find("warning") != std::string::npos);
  CHECK(json::parse(fallback.out)["solver"] == "greedy");

  const auto forced = run({"solve", path, "--solver", "exact", "--exact-cap", "3", "--force-exact"});
  CHECK(forced.code == exit_ok);
  CHECK(json::parse(forced.out)["solver"] == "exact");

  const auto greedy = run({"solve", path, "--solver", "greedy"});
  CHECK(json::parse(greedy.out)["rate"] == 3);
}

TEST_CASE("solve with duplicates reports every original demand") {
  TempFile dup(R"({"num_messages":3,"receivers":[{"wants":[1,2],"has":[3]},{"wants":[1,2],"has":[3]}]})");
  const auto deduped = json::parse(run({"solve", dup.path()}).out);
  CHECK(deduped["cover"].size() == deduped["rate"]);
  REQUIRE(deduped["assignment"].size() == 4);
  CHECK(deduped["assignment"][0]["transmission"] == deduped["assignment"][2]["transmission"]);
  CHECK(deduped["assignment"][1]["transmission"] == deduped["assignment"][3]["transmission"]);

  const auto raw = json::parse(run({"solve", dup.path(), "--no-dedup"}).out);
  CHECK(raw["dedup"] == false);
  CHECK(raw["rate"] == deduped["rate"]);

  const auto strict = json::parse(run({"solve", dup.path(), "--strict-cross-neighbor", "--no-dedup"}).out);
  CHECK(strict["rate"] == 4);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", data_path("paper6.json"), data_path("paper6.scheme.json")});
  CHECK(ok.code == exit_ok);
  const auto doc = json::parse(ok.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["random"]["trials"] == 100);

  const auto missing =
      run({"verify", data_path("paper6.json"), data_path("paper6_missing6.scheme.json")});
  CHECK(missing.code == exit_verification_failed);
  const auto bad = json::parse(missing.out);
  CHECK(bad["pass"] == false);
  REQUIRE(bad["symbolic"]["unsatisfied"].size() == 1);
  CHECK(bad["symbolic"]["unsatisfied"][0]["receiver"] == 6);
  CHECK(bad["random"].is_null());
  CHECK(missing.err.find("receiver 6") != std::string::npos);

  const auto eq = run({"verify", data_path("eq1.json"), data_path("eq1.scheme.json"),
                       "--word-width", "64", "--trials", "100", "--seed", "1"});
  CHECK(eq.code == exit_ok);
  const auto assignment = json::parse(eq.out)["assignment"];
  CHECK(assignment[1] == json::parse(R"({"receiver":2,"demand":1,"want":2,"transmission":1})"));
  CHECK(assignment[2] == json::parse(R"({"receiver":2,"demand":2,"want":3,"transmission":2})"));

  TempFile bad_scheme(R"({"transmissions":[[9]]})");
  CHECK(run({"verify", data_path("paper6.json"), bad_scheme.path()}).code == exit_input_error);
}

TEST_CASE("gap") {
  const auto paper = run({"gap", data_path("paper6.json")});
  CHECK(paper.code == exit_ok);
  CHECK(json::parse(paper.out)["gap"] == 0);

  const auto cycle = run({"gap", data_path("cycle3.json")});
  CHECK(cycle.code == exit_ok);
  CHECK(cycle.out ==
        "{\"mais\":2,\"oracle\":2,\"cover_exact\":3,\"cover_greedy\":3,\"gap\":1,"
        "\"counterexample\":true}\n");

  CHECK(json::parse(run({"gap", data_path("eq1.json")}).out)["gap"] == 0);
  CHECK(run({"gap", data_path("overlap.json")}).code == exit_input_error);
  CHECK(json::parse(run({"gap", data_path("paper6.json"), "--oracle-cap", "3"}).out)["oracle"]
            .is_null());
}

TEST_CASE("gen") {
  const std::vector<std::string> args{"gen", "--n", "6", "--m", "6", "--p", "0.4",
                                      "--demand-min", "1", "--demand-max", "1", "--seed", "7"};
  const auto a = run(args);
  CHECK(a.code == exit_ok);
  CHECK(run(args).out == a.out);
  const auto inst = parse_instance(a.out);
  CHECK(inst.receivers.size() == 6);
  for (const auto &r : inst.receivers)
    CHECK(r.wants.size() == 1);

  const auto empty_side = parse_instance(run({"gen", "--n", "5", "--m", "4", "--p", "0"}).out);
  for (const auto &r : empty_side.receivers)
    CHECK(r.has.empty());

  const auto full = run({"gen", "--n", "5", "--m", "7", "--p", "1", "--seed", "3"});
  for (const auto &r : parse_instance(full.out).receivers)
    CHECK(r.wants.size() + r.has.size() == 5);
  TempFile full_file(full.out);
  CHECK(json::parse(run({"solve", full_file.path()}).out)["rate"] == 1);

  CHECK(run({"gen", "--n", "3", "--m", "2", "--demand-max", "4"}).code == exit_input_error);
  CHECK(run({"gen", "--n", "3", "--m", "2", "--p", "1.5"}).code == exit_input_error);
  CHECK(run({"gen", "--n", "0", "--m", "2"}).code == exit_input_error);
}

TEST_CASE("export-dot") {
  const auto bip = run({"export-dot", data_path("eq1.json"), "--variant", "bipartite"});
  CHECK(bip.code == exit_ok);
  CHECK(bip.out.rfind("graph bipartite {", 0) == 0);

  const auto derived = run({"export-dot", data_path("paper6.json"), "--variant", "derived"});
  CHECK(derived.code == exit_ok);
  std::size_t edges = 0;
  for (auto pos = derived.out.find(" -- "); pos != std::string::npos;
       pos = derived.out.find(" -- ", pos + 1))
    ++edges;
  CHECK(edges == 4);

  const auto overlay = run({"export-dot", data_path("paper6.json"), "--overlay-cover"});
  CHECK(overlay.code == exit_ok);
  CHECK(overlay.out.find("cluster_3") != std::string::npos);
  CHECK(overlay.out.find("cluster_4") == std::string::npos);

  CHECK(run({"export-dot", data_path("overlap.json")}).code == exit_input_error);
}

TEST_CASE("determinism and pipeline closure on generated instances") {
  for (int seed = 1; seed <= 25; ++seed) {
    const auto gen = run({"gen", "--n", "6", "--m", "5", "--p", "0.5", "--demand-max", "3",
                          "--seed", std::to_string(seed)});
    TempFile inst(gen.out);
    const auto first = run({"solve", inst.path()});
    const auto second = run({"solve", inst.path()});
    CAPTURE(seed);
    CHECK(first.out == second.out);
    TempFile scheme(first.out);
    CHECK(run({"verify", inst.path(), scheme.path(), "--trials", "10"}).code == exit_ok);
  }
}
