#pragma once

// Command-line front end. The subcommands live in the library so that tests
// and the acceptance suite can drive them in-process; tools/qwhorl.cpp only
// forwards argv to run_cli.
//
// Exit codes: 0 success, 2 configuration error, 3 verification failure,
// 4 I/O failure.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwhorl/core.hpp"
#include "qwhorl/grid.hpp"
#include "qwhorl/liouville.hpp"
#include "qwhorl/verify.hpp"

namespace qwhorl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitIo = 4;

enum class OutputFormat { Csv, Json, Svg };

struct RunConfig {
    std::string command;
    std::string figure;  // reproduce only
    OscillatorParams params{0.5};
    DeformationKind kind = DeformationKind::QType1;
    FrequencyProfile profile = FrequencyProfile::mu1();
    PhasePoint alpha0{0.5, 0.0};
    std::vector<double> taus;
    GridSpec grid = GridSpec::square(256);
    double radius = 0.5;
    std::size_t points = 1024;
    std::size_t steps = 10000;
    std::optional<OutputFormat> format;
    std::filesystem::path out_dir = "out";
    std::uint64_t seed = kDefaultSeed;
    Sign sign = Sign::Plus;
    double s_min = 0.0;
    double s_max = 1.0;
    std::size_t s_samples = 101;
    bool from_grid = false;

    RunConfig();

    Representation representation() const { return profile.representation(); }

    // The distribution the run evolves: alpha0 is mapped into the alpha_q plane
    // when the profile is an alpha_q law.
    GaussianState state() const;
};

// Thrown by parse_args when --help was requested; what() holds the help text.
struct HelpRequested {
    std::string text;
};

// Throws ConfigError (message names the offending flag) or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

nlohmann::json to_json(const RunConfig& config);

// Overlays the keys present in `j` onto `config`. Throws ConfigError.
void apply_json(RunConfig& config, const nlohmann::json& j);

// Each command returns the files it wrote.
std::vector<std::filesystem::path> cmd_freq(const RunConfig& config);
std::vector<std::filesystem::path> cmd_trajectory(const RunConfig& config);
std::vector<std::filesystem::path> cmd_evolve(const RunConfig& config);
std::vector<std::filesystem::path> cmd_contour(const RunConfig& config);
std::vector<std::filesystem::path> cmd_reproduce(const RunConfig& config);

struct VerifyOutcome {
    std::vector<VerificationReport> reports;
    std::filesystem::path report_file;
    bool passed = false;
};
VerifyOutcome cmd_verify(const RunConfig& config, std::ostream& out);

// Formats reports as a fixed-width table.
std::string format_report_table(const std::vector<VerificationReport>& reports);

// "%.6f" rendering used in every tau-dependent file name.
std::string tau_tag(double tau);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwhorl::cli
