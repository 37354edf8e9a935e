#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "qcw/correlations.hpp"
#include "qcw/entanglement.hpp"
#include "qcw/kernels.hpp"
#include "qcw/nmr_protocol.hpp"
#include "qcw/witness.hpp"

namespace qcw {

inline constexpr const char* kSchemaVersion = "1";

// State file, either form:
//   {"matrix": [[re, im], ... 16 entries row-major]}
//   {"x": [3], "y": [3], "c": [3]}
// Throws Error(Parse) for malformed text, InvalidState / NotPositive for
// well-formed input that is not a density matrix.
DensityMatrix parse_state(const std::string& text);
DensityMatrix read_state_file(const std::string& path);

nlohmann::json state_to_json(const DensityMatrix& rho);
nlohmann::json params_to_json(const Vec3& x, const Vec3& y, const Vec3& c);

// Rounds to 12 significant digits so serialized numbers print that way.
double round12(double v);
// printf-style %.12g
std::string format12(double v);

nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const DiscordReport& r);
nlohmann::json to_json(const EntanglementReport& r);
nlohmann::json to_json(const ProtocolRun& r);
nlohmann::json to_json(const SweepRow& r);

inline constexpr const char* kSweepCsvHeader = "alpha,W,discord,mutual_info,negativity,chsh_max";

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_sweep_json(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace qcw
