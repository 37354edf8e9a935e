#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

const std::string kCli = QCW_CLI_PATH;
const std::string kTmp = QCW_TEST_TMPDIR;

std::string write_file(const std::string& name, const std::string& body) {
  const std::string path = kTmp + "/cli_" + name;
  std::ofstream(path) << body;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string out = kTmp + "/cli_stdout.txt";
  const std::string cmd = kCli + " " + args + " > " + out + " 2> " + kTmp + "/cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

const char* kWernerHalf = R"({"x": [0, 0, 0], "y": [0, 0, 0], "c": [-0.5, -0.5, -0.5]})";
const char* kMixed = R"({"x": [0, 0, 0], "y": [0, 0, 0], "c": [0, 0, 0]})";

}  // namespace

TEST_CASE("classify exit codes") {
  const auto werner = write_file("werner.json", kWernerHalf);
  auto r = run("classify " + werner);
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["verdict"] == "NonclassicalCertified");
  CHECK(j["W"].get<double>() == doctest::Approx(0.75));

  CHECK(run("classify " + write_file("mixed.json", kMixed)).code == 0);
  CHECK(run("classify --mode randomized --trials 3 --seed 5 " + werner).code == 1);

  CHECK(run("classify " + write_file("bad.json", "{not json")).code == 64);
  CHECK(run("classify " + kTmp + "/cli_does_not_exist.json").code == 64);
  CHECK(run("classify " + write_file("neg.json", R"({"x": [0,0,0], "y": [0,0,0], "c": [1,1,1]})")).code == 65);
  CHECK(run("classify " + write_file("prod.json", R"({"matrix": [0.25,0,0,0, 0,0.25,0,0, 0,0,0.25,0, 0,0,0,0.25]})")).code == 0);
  // product of two x-polarized qubits: diagonal T but nonzero local vectors
  const auto aligned = write_file("aligned.json", R"({"matrix": [[0.25,0],[0.125,0],[0.125,0],[0.0625,0],
      [0.125,0],[0.25,0],[0.0625,0],[0.125,0],[0.125,0],[0.0625,0],[0.25,0],[0.125,0],
      [0.0625,0],[0.125,0],[0.125,0],[0.25,0]]})");
  CHECK(run("classify " + aligned).code == 2);
  CHECK(run("classify --mode sideways " + werner).code == 64);
  CHECK(run("").code == 64);
}

TEST_CASE("classify rejects states outside the diagonal class") {
  // |+><+| (x) |0><0|: T has only the (x, z) entry
  const auto path = write_file("plus_zero.json", R"({"matrix": [[0.5,0],[0,0],[0.5,0],[0,0],
      [0,0],[0,0],[0,0],[0,0],[0.5,0],[0,0],[0.5,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})");
  CHECK(run("classify " + path).code == 66);
  CHECK(run("nmr-verify " + path).code == 66);
  CHECK(run("report " + path).code == 0);
}

TEST_CASE("report") {
  const auto r = run("report " + write_file("werner_report.json", kWernerHalf));
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j.contains("witness"));
  CHECK(j["discord"].contains("D"));
  CHECK(j["entanglement"]["ppt"] == false);
}

TEST_CASE("sweep-werner") {
  const std::string csv = kTmp + "/cli_sweep.csv";
  REQUIRE(run("sweep-werner --alphas 0:1:101 --out " + csv).code == 0);
  const std::string first = slurp(csv);
  std::istringstream lines(first);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "alpha,W,discord,mutual_info,negativity,chsh_max");
  int rows = 0;
  double first_negative_alpha = -1;
  std::string last;
  while (std::getline(lines, line)) {
    ++rows;
    last = line;
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> v;
    while (std::getline(cells, cell, ',')) v.push_back(cell);
    REQUIRE(v.size() == 6);
    CHECK(v[2] == "nan");
    if (first_negative_alpha < 0 && std::stod(v[4]) > 0) first_negative_alpha = std::stod(v[0]);
  }
  CHECK(rows == 101);
  CHECK(last.rfind("1,3,nan,", 0) == 0);
  CHECK(first_negative_alpha == doctest::Approx(0.34));

  REQUIRE(run("sweep-werner --alphas 0:1:101 --out " + csv).code == 0);
  CHECK(slurp(csv) == first);

  const auto js = run("sweep-werner --alphas 0:1:3 --format json --with-discord");
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["discord"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(run("sweep-werner --alphas 0:2:5").code == 64);
  CHECK(run("sweep-werner --alphas 0.5:0.2:5").code == 64);
  CHECK(run("sweep-werner --alphas 0:1:1").code == 64);
  CHECK(run("sweep-werner --alphas nonsense").code == 64);
}

TEST_CASE("nmr-verify") {
  const auto werner = write_file("werner_nmr.json", kWernerHalf);
  const auto exact = run("nmr-verify " + werner);
  CHECK(exact.code == 0);
  const auto j = nlohmann::json::parse(exact.out);
  CHECK(j["pass"] == true);
  CHECK(j["shots"].is_null());

  const auto a = run("nmr-verify --shots 10000 --seed 3 " + werner);
  const auto b = run("nmr-verify --shots 10000 --seed 3 " + werner);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 3);
  CHECK(run("nmr-verify --shots 0 " + werner).code == 64);
}
