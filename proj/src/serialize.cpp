#include "qcw/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcw/state_factory.hpp"

namespace qcw {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Vec3 read_vec3(const json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 3) parse_error(std::string("'") + key + "' must be an array of 3 numbers");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) parse_error(std::string("'") + key + "' must contain numbers");
    out(i) = v[i].get<double>();
  }
  return out;
}

Complex read_complex(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  parse_error("matrix entries must be [re, im] pairs");
}

json mode_fields(json j, const WitnessMode& mode) {
  if (const auto* r = std::get_if<Randomized>(&mode)) {
    j["mode"] = "randomized";
    j["n_trials"] = r->n_trials;
    j["seed"] = r->seed;
  } else {
    j["mode"] = "deterministic";
    j["n_trials"] = nullptr;
    j["seed"] = nullptr;
  }
  return j;
}

}  // namespace

DensityMatrix parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) parse_error("state file must hold a JSON object");

  if (j.contains("matrix")) {
    const json& m = j.at("matrix");
    if (!m.is_array() || m.size() != 16) parse_error("'matrix' must list 16 entries row-major");
    Mat4 out;
    for (int i = 0; i < 16; ++i) out(i / 4, i % 4) = read_complex(m[i]);
    return DensityMatrix::from_matrix(out);
  }
  if (j.contains("x") || j.contains("y") || j.contains("c"))
    return make_general(read_vec3(j, "x"), read_vec3(j, "y"), read_vec3(j, "c"));
  parse_error("state file needs either 'matrix' or 'x','y','c'");
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

json state_to_json(const DensityMatrix& rho) {
  json m = json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.push_back({rho(r, c).real(), rho(r, c).imag()});
  return {{"matrix", m}};
}

json params_to_json(const Vec3& x, const Vec3& y, const Vec3& c) {
  auto arr = [](const Vec3& v) { return json::array({v(0), v(1), v(2)}); };
  return {{"x", arr(x)}, {"y", arr(y)}, {"c", arr(c)}};
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format12(v));
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json to_json(const WitnessReport& r) {
  json j = {
      {"e1", round12(r.expectations[0])},
      {"e2", round12(r.expectations[1])},
      {"e3", round12(r.expectations[2])},
      {"e4", round12(r.expectations[3])},
      {"W", round12(r.W)},
  };
  j = mode_fields(std::move(j), r.mode);
  j["verdict"] = to_string(r.verdict);
  j["matched_form"] = to_string(r.matched_form);
  return j;
}

json to_json(const DiscordReport& r) {
  return {
      {"I", round12(r.I)},
      {"J_star", round12(r.J_star)},
      {"D", round12(r.D)},
      {"theta_opt", round12(r.optimal_basis.theta)},
      {"phi_opt", round12(r.optimal_basis.phi)},
      {"evals", r.optimizer_evals},
  };
}

json to_json(const EntanglementReport& r) {
  return {
      {"min_pt_eig", round12(r.min_pt_eigenvalue)},
      {"negativity", round12(r.negativity)},
      {"ppt", r.ppt},
      {"chsh_max", round12(r.chsh_max)},
      {"chsh_violated", r.chsh_violated},
  };
}

json to_json(const ProtocolRun& r) {
  json j = {
      {"m_eta", round12(r.magnetizations[0])},
      {"m_zeta", round12(r.magnetizations[1])},
      {"m_xi", round12(r.magnetizations[2])},
      {"residuals", {round12(r.residuals[0]), round12(r.residuals[1]), round12(r.residuals[2])}},
  };
  j["shots"] = r.shots ? json(*r.shots) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  if (r.shots) j["stderr"] = {round12(r.stderrs[0]), round12(r.stderrs[1]), round12(r.stderrs[2])};
  return j;
}

json to_json(const SweepRow& r) {
  return {
      {"alpha", round12(r.alpha)},
      {"W", round12(r.W)},
      {"discord", round12(r.discord)},
      {"mutual_info", round12(r.mutual_info)},
      {"negativity", round12(r.negativity)},
      {"chsh_max", round12(r.chsh_max)},
  };
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format12(r.alpha) << ',' << format12(r.W) << ',' << format12(r.discord) << ','
       << format12(r.mutual_info) << ',' << format12(r.negativity) << ',' << format12(r.chsh_max) << '\n';
  }
}

void write_sweep_json(std::ostream& os, std::span<const SweepRow> rows) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back(to_json(r));
  os << j.dump(2) << '\n';
}

}  // namespace qcw
