#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "bpd/format.hpp"
#include "bpd/generate.hpp"
#include "doctest.h"

using namespace bpd;
using nlohmann::json;

namespace {

const std::string kData = BPD_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bpd_cli_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve exit codes on a single P3") {
  CHECK(invoke({"solve", "--input", data("p3.bpd"), "--k", "1"}).code == cli::kExitYes);
  CHECK(invoke({"solve", "--input", data("p3.bpd"), "--k", "0"}).code == cli::kExitNo);
  const Outcome o = invoke({"solve", "--input", data("p3.bpd"), "--k", "1"});
  const json r = o.report();
  CHECK(r["command"] == "solve");
  CHECK(r["payload"]["answer"] == "yes");
  CHECK(r["payload"]["deleted_edges"].size() == 1);
  CHECK(r["input_digest"] == cli::fnv1a_hex(write_bpd(read_bpd_file(data("p3.bpd")))));
}

TEST_CASE("errors exit 2 with a diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", "--input", data("missing.bpd"), "--k", "1"},
           {"solve", "--input", data("truncated.bpd"), "--k", "1"},
           {"solve", "--input", data("p3.bpd")},
           {"solve", "--input", data("p3.bpd"), "--k", "1", "--method", "bogus"},
           {"solve", "--input", data("star.bpd"), "--k", "1", "--method", "deg2"},
           {"solve", "--input", data("clause_gadget.bpd"), "--k", "14", "--method", "vc"},
           {"verify", "--input", data("p3.bpd"), "--solution", data("malformed.json"), "--k", "1"},
           {"verify", "--input", data("p3.bpd"), "--solution", data("empty.json")},
           {"generate", "gadget", "pentagon"},
           {"bench", "--family", "nope"},
           {"frobnicate"},
       }) {
    const Outcome o = invoke(args);
    CHECK_MESSAGE(o.code == cli::kExitError, args[0]);
    CHECK_FALSE(o.err.empty());
  }
}

TEST_CASE("--k and --optimize are exclusive") {
  CHECK(invoke({"solve", "--input", data("p3.bpd"), "--k", "1", "--optimize"}).code == cli::kExitError);
}

TEST_CASE("specialized methods are reachable") {
  CHECK(invoke({"solve", "--input", data("p3.bpd"), "--k", "1", "--method", "deg2"}).code == cli::kExitYes);
  CHECK(invoke({"solve", "--input", data("p3.bpd"), "--k", "1", "--method", "oracle"}).code == cli::kExitYes);
  CHECK(invoke({"solve", "--input", data("p3.bpd"), "--k", "0", "--method", "branch"}).code == cli::kExitNo);
}

TEST_CASE("verify") {
  CHECK(invoke({"verify", "--input", data("p3.bpd"), "--solution", data("p3_blue.json"), "--k", "1"}).code ==
        cli::kExitYes);
  CHECK(invoke({"verify", "--input", data("p3.bpd"), "--solution", data("empty.json"), "--k", "1"}).code ==
        cli::kExitNo);
  CHECK(invoke({"verify", "--input", data("p3.bpd"), "--solution", data("p3_blue.json"), "--k", "0"}).code ==
        cli::kExitNo);
  // the two A-vertices 0 and 1 lose all their edges; k comes from the file
  CHECK(invoke({"verify", "--input", data("clause_gadget.bpd"), "--solution", data("clause_14.json")}).code ==
        cli::kExitYes);
  CHECK(invoke({"verify", "--input", data("clause_gadget.bpd"), "--solution", data("clause_14.json"), "--k", "13"})
            .code == cli::kExitNo);
}

TEST_CASE("clause gadget optimum and solve/verify round trip") {
  const std::string report = scratch("clause_report.json");
  const Outcome o = invoke({"solve", "--input", data("clause_gadget.bpd"), "--optimize"});
  REQUIRE(o.code == cli::kExitYes);
  CHECK(o.report()["payload"]["optimum"] == 14);
  write_text_file(report, o.out);
  CHECK(invoke({"verify", "--input", data("clause_gadget.bpd"), "--solution", report}).code == cli::kExitYes);
  std::filesystem::remove(report);
}

TEST_CASE("round trip over generated instances and methods") {
  const std::string graph = scratch("rt.bpd"), report = scratch("rt.json");
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    write_bpd_file(random_instance(8, 0.45, 0.5, seed), graph);
    for (const char* method : {"auto", "branch", "oracle"}) {
      const Outcome o = invoke({"solve", "--input", graph, "--optimize", "--method", method});
      REQUIRE(o.code == cli::kExitYes);
      write_text_file(report, o.out);
      CHECK(invoke({"verify", "--input", graph, "--solution", report}).code == cli::kExitYes);
    }
  }
  std::filesystem::remove(graph);
  std::filesystem::remove(report);
}

TEST_CASE("reports are identical modulo timing") {
  const std::vector<std::vector<std::string>> runs = {
      {"solve", "--input", data("clause_gadget.bpd"), "--optimize"},
      {"kernelize", "--input", data("clause_gadget.bpd"), "--k", "14", "--bridge-rule"},
      {"detect", "--input", data("clause_gadget.bpd")},
      {"generate", "random", "--n", "12", "--p", "0.3", "--seed", "7"},
      {"bench", "--family", "random", "--count", "3", "--n", "7", "--seed", "5"},
  };
  for (const auto& args : runs) {
    const json a = invoke(args).report(), b = invoke(args).report();
    CHECK(cli::without_timing(a) == cli::without_timing(b));
    CHECK(a["report_digest"] == b["report_digest"]);
  }
}

TEST_CASE("report digest ignores timing only") {
  json r = {{"command", "x"}, {"payload", {{"stats", {{"time_ms", 1.5}, {"nodes_expanded", 3}}}}}};
  cli::seal(r);
  json t = r;
  t["payload"]["stats"]["time_ms"] = 99.0;
  cli::seal(t);
  CHECK(r["report_digest"] == t["report_digest"]);
  t["payload"]["stats"]["nodes_expanded"] = 4;
  cli::seal(t);
  CHECK(r["report_digest"] != t["report_digest"]);
}

TEST_CASE("fnv1a reference values") {
  CHECK(cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(cli::fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("generate writes parseable files") {
  const std::string cnf = scratch("f.cnf"), graph = scratch("sat.bpd"), layout = scratch("layout.json");
  write_text_file(cnf, "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  const Outcome o = invoke({"generate", "sat", "--cnf", cnf, "-o", graph, "--layout", layout});
  REQUIRE(o.code == cli::kExitYes);
  const json r = o.report();
  CHECK(r["payload"]["k"] == 4 * 3 + 14 * 2);
  const ColoredGraph g = read_bpd_file(graph);
  CHECK(g.num_vertices() == 9 * 3 + 7 * 2);
  CHECK(g.num_edges() == 8 * 3 + 42 * 2);
  const json l = json::parse(read_text_file(layout));
  CHECK(l["variables"].size() == 3);
  CHECK(l["clauses"].size() == 2);
  CHECK(l["clauses"][0]["slots"][1]["identified_with"] == "f_2^1");

  const Outcome solved = invoke({"solve", "--input", graph, "--k", "40"});
  CHECK(solved.code == cli::kExitYes);
  for (const auto& f : {cnf, graph, layout}) std::filesystem::remove(f);
}

TEST_CASE("bench families") {
  const json d = invoke({"bench", "--family", "disjoint", "--count", "10"}).report();
  const auto& rows = d["payload"]["instances"];
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i]["k"] == i + 1);
    CHECK(rows[i]["nodes"].get<std::uint64_t>() <= i + 2);
  }
  const json c = invoke({"bench", "--family", "clause"}).report();
  CHECK(c["payload"]["instances"][0]["k"] == 14);
  const auto dir = std::filesystem::temp_directory_path() / "bpd_cli_corpus";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK(invoke({"bench", "--corpus", dir.string()}).code == cli::kExitError);
  std::filesystem::copy_file(data("p3.bpd"), dir / "a.bpd");
  std::filesystem::copy_file(data("clause_gadget.bpd"), dir / "b.bpd");
  const Outcome o = invoke({"bench", "--corpus", dir.string()});
  CHECK(o.code == cli::kExitYes);
  CHECK(o.report()["payload"]["aggregate"]["count"] == 2);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
