#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "prodgraph_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const fs::path out_file = workdir() / "stdout.txt";
  std::string command = env + " " + std::string(PRODGRAPH_CLI_PATH) + " " +
                        args + " > " + out_file.string() + " 2>&1";
  const int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.out = buffer.str();
  return result;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path path = workdir() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("product subcommand emits the expected edge list") {
  const fs::path c5 = write_file("c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const fs::path out = workdir() / "cart.el";
  RunResult r = run("product --kind cartesian --g " + c5.string() + " --h " +
                    c5.string() + " --out " + out.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "25 50");
}

TEST_CASE("product supports graph6 output and input") {
  const fs::path c5 = write_file("c5b.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const fs::path g6 = workdir() / "cart.g6";
  RunResult r = run("product --kind cartesian --g " + c5.string() + " --h " +
                    c5.string() + " --format graph6 --out " + g6.string());
  REQUIRE(r.exit_code == 0);

  RunResult spec = run("spectrum --matrix adjacency --g " + g6.string() +
                       " --json");
  REQUIRE(spec.exit_code == 0);
  const json doc = json::parse(spec.out);
  CHECK(doc["order"] == 25);
}

TEST_CASE("spectrum json output") {
  const fs::path c5 = write_file("c5c.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  RunResult r = run("spectrum --matrix adjacency --g " + c5.string() + " --json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["order"] == 5);
  CHECK(doc["tol"] == 1e-6);
  REQUIRE(doc["clusters"].size() == 3);
  CHECK(doc["clusters"][0][0].get<double>() == doctest::Approx(2.0));
  CHECK(doc["clusters"][0][1] == 1);

  RunResult dist = run("spectrum --matrix distance --g " + c5.string() + " --json");
  const json ddoc = json::parse(dist.out);
  REQUIRE(ddoc["clusters"].size() == 3);
  CHECK(ddoc["clusters"][0][0].get<double>() == doctest::Approx(6.0));
}

TEST_CASE("spectral tolerance env override") {
  const fs::path c5 = write_file("c5d.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  RunResult r = run("spectrum --matrix adjacency --g " + c5.string() + " --json",
                    "PRODGRAPH_TOL=5.0");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["tol"] == 5.0);
  CHECK(doc["clusters"].size() == 1);
}

TEST_CASE("check-iso writes a valid map") {
  const fs::path c5 = write_file("c5e.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const fs::path cart = workdir() / "cart5.el";
  const fs::path kron = workdir() / "kron5.el";
  REQUIRE(run("product --kind cartesian --g " + c5.string() + " --h " +
              c5.string() + " --out " + cart.string())
              .exit_code == 0);
  REQUIRE(run("product --kind kronecker --g " + c5.string() + " --h " +
              c5.string() + " --out " + kron.string())
              .exit_code == 0);

  const fs::path map = workdir() / "map.txt";
  RunResult r = run("check-iso --g1 " + cart.string() + " --g2 " +
                    kron.string() + " --map-out " + map.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("isomorphic") == 0);

  std::ifstream in(map);
  std::vector<int> image(25, -1);
  int v, fv, lines = 0;
  while (in >> v >> fv) {
    REQUIRE(v >= 0);
    REQUIRE(v < 25);
    image[v] = fv;
    ++lines;
  }
  CHECK(lines == 25);
  std::sort(image.begin(), image.end());
  for (int i = 0; i < 25; ++i) CHECK(image[i] == i);
}

TEST_CASE("drg-check json") {
  const fs::path c5 = write_file("c5f.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  RunResult cycle = run("drg-check --g " + c5.string() + " --json");
  REQUIRE(cycle.exit_code == 0);
  json cdoc = json::parse(cycle.out);
  CHECK(cdoc["distance_regular"] == true);
  CHECK(cdoc["intersection_array"]["b"] == json::array({2, 1}));
  CHECK(cdoc["intersection_array"]["c"] == json::array({1, 1}));

  const fs::path cart = workdir() / "cart5b.el";
  REQUIRE(run("product --kind cartesian --g " + c5.string() + " --h " +
              c5.string() + " --out " + cart.string())
              .exit_code == 0);
  RunResult square = run("drg-check --g " + cart.string() + " --json");
  REQUIRE(square.exit_code == 0);
  json sdoc = json::parse(square.out);
  CHECK(sdoc["distance_regular"] == false);
  CHECK(sdoc["witness"]["family"] == "c");
  CHECK(sdoc["witness"]["distance"] == 2);
  std::set<int> counts{sdoc["witness"]["count_y"].get<int>(),
                       sdoc["witness"]["count_z"].get<int>()};
  CHECK(counts == std::set<int>{1, 2});
}

TEST_CASE("characterize json") {
  const fs::path c6 = write_file("c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  RunResult r = run("characterize --pair cart-kron --g " + c6.string() +
                    " --h " + c6.string() + " --json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["isomorphic"] == false);
  CHECK(doc["rule"] == "cart-kron/connectivity");
  CHECK(doc["certificate"]["type"] == "connectivity-obstruction");
  CHECK(doc["certificate"]["components_a"] == 1);
  CHECK(doc["certificate"]["components_b"] == 2);

  const fs::path p3 = write_file("p3.el", "3 2\n0 1\n1 2\n");
  const fs::path k3 = write_file("k3.el", "3 3\n0 1\n1 2\n2 0\n");
  RunResult strong_lex = run("characterize --pair strong-lex --g " +
                             p3.string() + " --h " + k3.string() + " --json");
  REQUIRE(strong_lex.exit_code == 0);
  const json sdoc = json::parse(strong_lex.out);
  CHECK(sdoc["isomorphic"] == true);
  CHECK(sdoc["certificate"]["type"] == "explicit-map");
}

TEST_CASE("parse errors exit with code 2 and name the line") {
  const fs::path bad = write_file("bad.el", "3 2\n0 1\nnot an edge\n");
  RunResult r = run("spectrum --matrix adjacency --g " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("line 3") != std::string::npos);

  RunResult usage = run("spectrum --matrix sideways --g " + bad.string());
  CHECK(usage.exit_code == 2);

  RunResult missing = run("spectrum --matrix adjacency --g /nonexistent.el");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("reproduce at a small cap") {
  const fs::path report = workdir() / "report.json";
  RunResult r = run("reproduce --max-n 3 --out " + report.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("thm3.3-n3") != std::string::npos);
  CHECK(r.out.find("all claims pass") != std::string::npos);
  const json doc = json::parse(std::ifstream(report));
  CHECK(doc["all_pass"] == true);
  CHECK(doc["max_n"] == 3);
}
