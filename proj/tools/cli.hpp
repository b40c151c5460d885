#pragma once

#include "sqw/community.hpp"
#include "sqw/hodge.hpp"
#include "sqw/qwalk.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sqw::cli {

enum class Command { build, spectrum, walk, detect, modularity, verify };
enum class Format { json, csv, dot };

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
    Command command = Command::build;
    std::filesystem::path input;
    std::optional<int> dim;
    int max_dim = 4;
    std::size_t time_steps = 100;
    Estimator method = Estimator::finite;
    Threshold threshold = Threshold::at_least;
    CoinOrdering ordering = CoinOrdering::face_grouped;
    Format format = Format::json;
    std::optional<std::filesystem::path> output;
    std::optional<std::string> source;               // walk: "1,2,3"
    std::optional<std::filesystem::path> partition;  // modularity
    double tolerance = kDefaultKernelTolerance;
    unsigned threads = 1;
};

struct RunResult {
    int exit_code = kExitOk;
    std::string output;  // serialized result (empty on error)
    std::string error;   // message for stderr
};

/// Validates the configuration, runs the subcommand and serializes the
/// result. Never throws; failures are reported through exit_code.
RunResult run(const RunConfig& config);

/// Parses argv into a RunConfig, runs it and writes the output.
int main_entry(int argc, char** argv);

/// Parses a comma-joined vertex list such as "1,2,3".
Simplex parse_simplex(const std::string& text);

}  // namespace sqw::cli
