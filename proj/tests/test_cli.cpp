#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include <json.hpp>

#include "logder/cli.hpp"
#include "logder/io.hpp"
#include "logder/ziegler.hpp"

namespace fs = std::filesystem;
using logder::cli::kExitDomain;
using logder::cli::kExitOk;
using logder::cli::kExitUsage;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = logder::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory holding the fixture files the commands read.
struct Workspace {
  fs::path dir;
  Workspace() : dir(fs::temp_directory_path() / ("logder_cli_" + std::to_string(std::random_device{}()))) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    REQUIRE(run({"example", "ziegler", "--emit-files", dir.string()}).code == kExitOk);
    write("bool2.arr", "2 2\n1 0\n0 1\n");
    write("bad.der", "x2\n0\n");
    write("flat.arr", "3 3\n1 0 0\n0 1 0\n1 1 0\n");
    write("small.arr", "2 3\n1 1\n1 -1\n1 0\n");
    write("b3.arr", "3 9\n1 0 0\n0 1 0\n0 0 1\n1 -1 0\n1 1 0\n1 0 -1\n1 0 1\n0 1 -1\n0 1 1\n");
    write("id.perm", "1 2 3 4 5 6 7 8 9\n");
  }
  ~Workspace() { fs::remove_all(dir); }
  void write(const std::string& name, const std::string& text) const { logder::write_text_file(dir / name, text); }
  std::string operator[](const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("example ziegler writes the transcribed fixture") {
  Workspace ws;
  CHECK(logder::read_text_file(ws["x2.arr"]) == logder::ziegler_x2_text());
  CHECK(logder::read_text_file(ws["theta_z.der"]) == logder::ziegler_theta_z_text());
  const Outcome o = run({"--json", "example", "ziegler"});
  CHECK(o.code == kExitOk);
  CHECK(o.json()["results"]["n"] == 9);
  CHECK(o.json()["results"]["ell"] == 3);
}

TEST_CASE("deriv check") {
  Workspace ws;
  const Outcome o = run({"--json", "deriv", "check", ws["x2.arr"], ws["theta_z.der"]});
  REQUIRE(o.code == kExitOk);
  const auto j = o.json();
  CHECK(j["results"]["logarithmic"] == true);
  CHECK(j["results"]["derivation_degree"] == 5);
  CHECK(j["results"]["k_degrees"] == nlohmann::json(std::vector<int>(9, 4)));
  CHECK(j["results"]["zero_k"] == nlohmann::json({9}));

  const Outcome bad = run({"--json", "deriv", "check", ws["bool2.arr"], ws["bad.der"]});
  CHECK(bad.code == kExitDomain);
  const auto d = bad.json()["diagnostics"][0];
  CHECK(d["error"] == "NotLogarithmic");
  CHECK(d["hyperplane"] == 1);
  CHECK(bad.err.find("NotLogarithmic(1)") != std::string::npos);
}

TEST_CASE("domain errors exit 2 with a stable name") {
  Workspace ws;
  const Outcome flat = run({"--json", "arr", "lattice", ws["flat.arr"]});
  CHECK(flat.code == kExitDomain);
  CHECK(flat.json()["diagnostics"][0]["error"] == "NonEssential");
  const Outcome missing = run({"arr", "lattice", ws["nope.arr"]});
  CHECK(missing.code == kExitDomain);
  const Outcome critical =
      run({"critical", "verify", ws["x2.arr"], ws["theta_z.der"], "--basis", "1,4,5", "--point", "2,3,-1"});
  CHECK(critical.code == kExitDomain);
}

TEST_CASE("usage errors exit 1") {
  Workspace ws;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"deriv", "graded", ws["x2.arr"]}).code == kExitUsage);
  CHECK(run({"deriv", "graded", ws["x2.arr"], "-d", "13"}).code == kExitUsage);
  CHECK(run({"--max-degree", "13", "deriv", "graded", ws["small.arr"], "-d", "13"}).code == kExitOk);
  CHECK(run({"syzygy", "gens", ws["x2.arr"]}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("rationals stay exact in JSON") {
  Workspace ws;
  const Outcome o = run({"--json", "arr", "canonical", ws["small.arr"]});
  REQUIRE(o.code == kExitOk);
  const auto j = o.json()["results"];
  CHECK(j["inverse"][0][0] == "1/2");
  CHECK(j["forms"][2] == "1/2*x1 + 1/2*x2");
  CHECK(j["permutation"] == nlohmann::json({1, 2, 3}));
}

TEST_CASE("command results") {
  Workspace ws;
  const auto free = run({"--json", "free", "check", ws["b3.arr"]}).json()["results"];
  CHECK(free["verdict"] == "free");
  CHECK(free["exponents"] == nlohmann::json({1, 3, 5}));

  const auto gens = run({"--json", "syzygy", "gens", ws["x2.arr"], "-j", "4"}).json()["results"];
  CHECK(gens["generators"].size() == 4);
  CHECK(gens["generates_solutions"] == true);

  const auto crit = run({"--json", "critical", "search", ws["x2.arr"], ws["theta_z.der"], "--basis", "4,5,6"});
  CHECK(crit.code == kExitOk);
  CHECK(crit.json()["results"]["critical_points"][0] == nlohmann::json({"2", "3", "-1"}));
  CHECK_FALSE(crit.json()["diagnostics"].empty());

  const auto graded = run({"--json", "deriv", "graded", ws["x2.arr"], "-d", "5"}).json()["results"];
  CHECK(graded["dimension"] == 16);
  CHECK(graded["euler_multiple_dimension"] == 15);

  const auto transport =
      run({"--json", "transport", ws["x2.arr"], ws["x2.arr"], ws["theta_z.der"], "--perm", ws["id.perm"]});
  CHECK(transport.code == kExitOk);
  CHECK(transport.json()["results"]["witness_satisfies_transported_constraints"] == true);

  const auto constraints = run({"--json", "constraints", ws["x2.arr"], ws["theta_z.der"]}).json()["results"];
  CHECK(constraints["rank"] == 149);
}

TEST_CASE("reports are byte-identical across runs") {
  Workspace ws;
  const std::vector<std::vector<std::string>> commands = {
      {"deriv", "check", ws["x2.arr"], ws["theta_z.der"]},
      {"constraints", ws["x2.arr"], ws["theta_z.der"]},
      {"arr", "lattice", ws["x2.arr"]},
      {"critical", "search", ws["x2.arr"], ws["theta_z.der"], "--basis", "4,5,6", "--height", "2"},
  };
  for (auto args : commands) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    args.insert(args.begin(), "--json");
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("shipped fixture files") {
  const fs::path data = LOGDER_DATA_DIR;
  const std::string x2 = (data / "ziegler" / "x2.arr").string();
  const auto free = run({"--json", "free", "check", (data / "fixtures" / "b3.arr").string()});
  CHECK(free.json()["results"]["exponents"] == nlohmann::json({1, 3, 5}));
  const auto boolean = run({"--json", "free", "check", (data / "fixtures" / "boolean3.arr").string()});
  CHECK(boolean.json()["results"]["verdict"] == "free");
  const auto a2 = run({"--json", "deriv", "graded", (data / "fixtures" / "a2.arr").string(), "-d", "2"});
  CHECK(a2.json()["results"]["dimension"] == 3);

  const auto verify =
      run({"--json", "syzygy", "verify", x2, (data / "fixtures" / "theta_z_k123.der").string(), "-j", "4"});
  REQUIRE(verify.code == kExitOk);
  CHECK(verify.json()["results"]["ok"] == true);
  CHECK(verify.json()["results"]["k_j"] == logder::to_string(logder::emit_ziegler_fixture().printed_q[0]));

  const auto transport = run({"--json", "transport", x2, x2, (data / "ziegler" / "theta_z.der").string(), "--perm",
                              (data / "fixtures" / "identity9.perm").string()});
  CHECK(transport.code == kExitOk);
}
