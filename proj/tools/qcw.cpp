// qcw: command-line front end for the two-qubit classicality witness library.
//
//   qcw classify STATE [--tol T] [--mode deterministic|randomized] [--trials N] [--seed S]
//   qcw report STATE
//   qcw sweep-werner --alphas a:b:n [--out PATH] [--format csv|json] [--with-discord]
//   qcw nmr-verify STATE [--shots N] [--seed S]
//
// Exit codes: classify returns 0 / 1 / 2 for ClassicalCertified /
// NonclassicalCertified / Inconclusive. Errors: 64 parse or usage, 65 invalid
// state, 66 state outside the diagonal-correlation class, 70 anything else.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qcw/correlations.hpp"
#include "qcw/entanglement.hpp"
#include "qcw/kernels.hpp"
#include "qcw/nmr_protocol.hpp"
#include "qcw/serialize.hpp"
#include "qcw/witness.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInvalidState = 65;
constexpr int kExitOutOfClass = 66;
constexpr int kExitSoftware = 70;

using nlohmann::json;

int exit_code_for(const qcw::Error& e) {
  switch (e.kind()) {
    case qcw::ErrorKind::Parse:
    case qcw::ErrorKind::InvalidArgument: return kExitUsage;
    case qcw::ErrorKind::InvalidState:
    case qcw::ErrorKind::NotPositive:
    case qcw::ErrorKind::NonHermitian: return kExitInvalidState;
    case qcw::ErrorKind::OutOfClass: return kExitOutOfClass;
    default: return kExitSoftware;
  }
}

void emit(const json& record) {
  json out = {{"schema_version", qcw::kSchemaVersion}};
  out.update(record);
  std::cout << out.dump(2) << '\n';
}

struct ClassifyArgs {
  std::string state;
  double tol = qcw::tol::witness_zero;
  std::string mode = "deterministic";
  int trials = 5;
  std::uint64_t seed = 0;
};

int run_classify(const ClassifyArgs& a) {
  const qcw::DensityMatrix rho = qcw::read_state_file(a.state);
  qcw::WitnessMode mode = qcw::Deterministic{};
  if (a.mode == "randomized") mode = qcw::Randomized{a.trials, a.seed};
  const qcw::WitnessReport r = qcw::witness_value(rho, mode, a.tol);
  emit(qcw::to_json(r));
  switch (r.verdict) {
    case qcw::Verdict::ClassicalCertified: return 0;
    case qcw::Verdict::NonclassicalCertified: return 1;
    case qcw::Verdict::Inconclusive: return 2;
  }
  return kExitSoftware;
}

int run_report(const std::string& path) {
  const qcw::DensityMatrix rho = qcw::read_state_file(path);
  json out;
  try {
    out["witness"] = qcw::to_json(qcw::witness_value(rho));
  } catch (const qcw::Error& e) {
    if (e.kind() != qcw::ErrorKind::OutOfClass) throw;
    out["witness"] = nullptr;
    std::cerr << "note: " << e.what() << '\n';
  }
  out["discord"] = qcw::to_json(qcw::discord(rho));
  out["entanglement"] = qcw::to_json(qcw::entanglement_report(rho));
  emit(out);
  return 0;
}

struct SweepArgs {
  std::string alphas;
  std::string out;
  std::string format = "csv";
  bool with_discord = false;
};

std::vector<double> parse_alphas(const std::string& spec) {
  double a = 0, b = 0;
  int n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    throw qcw::Error(qcw::ErrorKind::InvalidArgument, "--alphas must look like a:b:n");
  if (!(0.0 <= a && a <= b && b <= 1.0) || n < 2)
    throw qcw::Error(qcw::ErrorKind::InvalidArgument, "--alphas needs 0 <= a <= b <= 1 and n >= 2");
  return qcw::linspace(a, b, n);
}

int run_sweep(const SweepArgs& a) {
  const auto alphas = parse_alphas(a.alphas);
  const auto rows = qcw::werner_sweep(alphas, a.with_discord);
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw qcw::Error(qcw::ErrorKind::InvalidArgument, "cannot write " + a.out);
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  if (a.format == "json")
    qcw::write_sweep_json(os, rows);
  else
    qcw::write_sweep_csv(os, rows);
  return 0;
}

struct NmrArgs {
  std::string state;
  std::optional<std::int64_t> shots;
  std::uint64_t seed = 0;
};

int run_nmr_verify(const NmrArgs& a) {
  const qcw::DensityMatrix rho = qcw::read_state_file(a.state);
  if (!qcw::validate(rho.matrix()).in_diagonal_class)
    throw qcw::Error(qcw::ErrorKind::OutOfClass, "state has off-diagonal correlations; protocol witness not applicable");
  if (a.shots && *a.shots < 1) throw qcw::Error(qcw::ErrorKind::InvalidArgument, "--shots must be >= 1");

  const qcw::ProtocolRun run = qcw::run_protocol(rho, a.shots, a.seed);
  const qcw::ProtocolWitness w = qcw::witness_via_protocol(rho, a.shots, a.seed);

  bool pass = true;
  for (int i = 0; i < 3; ++i) {
    const double limit = a.shots ? 5.0 * run.stderrs[i] + 1e-12 : 1e-12;
    pass = pass && run.residuals[i] <= limit;
  }
  json out = qcw::to_json(run);
  out["witness"] = qcw::to_json(w.report);
  out["witness"]["W_stderr"] = qcw::round12(w.W_stderr);
  out["pass"] = pass;
  emit(out);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit classicality witness, discord and NMR readout simulation"};
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* cls = app.add_subcommand("classify", "Evaluate the witness and print the verdict");
  cls->add_option("state", classify.state, "State file (JSON)")->required();
  cls->add_option("--tol", classify.tol, "Zero threshold for W");
  cls->add_option("--mode", classify.mode, "deterministic or randomized")
      ->check(CLI::IsMember({"deterministic", "randomized"}));
  cls->add_option("--trials", classify.trials, "Direction pairs in randomized mode")->check(CLI::PositiveNumber);
  cls->add_option("--seed", classify.seed, "Seed for randomized mode");

  std::string report_state;
  auto* rep = app.add_subcommand("report", "Witness, discord and entanglement reports for one state");
  rep->add_option("state", report_state, "State file (JSON)")->required();

  SweepArgs sweep;
  auto* swp = app.add_subcommand("sweep-werner", "Tabulate the Werner family");
  swp->add_option("--alphas", sweep.alphas, "Range a:b:n")->required();
  swp->add_option("--out", sweep.out, "Output path (default: standard output)");
  swp->add_option("--format", sweep.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  swp->add_flag("--with-discord", sweep.with_discord, "Also compute the discord column");

  NmrArgs nmr;
  auto* nv = app.add_subcommand("nmr-verify", "Simulate the CNOT/rotation magnetization readout");
  nv->add_option("state", nmr.state, "State file (JSON)")->required();
  nv->add_option("--shots", nmr.shots, "Shots per readout (default: exact)");
  nv->add_option("--seed", nmr.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cls) return run_classify(classify);
    if (*rep) return run_report(report_state);
    if (*swp) return run_sweep(sweep);
    if (*nv) return run_nmr_verify(nmr);
  } catch (const qcw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSoftware;
  }
  return kExitSoftware;
}
