#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace trace_sharp::cli {

enum class Command { constants, sweep_mv, lemma_check, solve_med, verify_bv, oracle, plot };
enum class OutFormat { csv, json, svg };

struct RunConfig {
    Command command = Command::constants;
    int n = 2;
    std::optional<double> sigma;
    int resolution = 512;  // grid size; sample count for oracle / verify-bv
    std::uint64_t seed = 0;
    OutFormat format = OutFormat::csv;
    std::string out_path;  // empty = stdout
};

// Exit status: 0 ok, 1 invalid config / io failure, 2 a verification
// suite reported a violation.  Diagnostics go to stderr.
int run(const RunConfig& config);

}  // namespace trace_sharp::cli
