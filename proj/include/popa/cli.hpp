#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "popa/gen.hpp"

namespace popa::cli {

// All commands return process exit codes: 0 success, 1 validation error,
// 2 I/O error. Structured messages go to stderr. An empty or "-" output path
// means stdout.

struct SolveArgs {
    std::string input;
    std::string output;                  // report JSON
    std::optional<double> rho_override;
    std::string transpose_policy = "auto";  // auto | reject
};
int cmd_solve(const SolveArgs& args);

struct OracleArgs {
    int instances = 500;
    std::uint64_t seed = 1;
    int max_m = 4;
    int max_n = 5;
};
int cmd_oracle(const OracleArgs& args);

struct GenArgs {
    PlantSpec spec;
    std::string output;                  // instance JSON
};
int cmd_gen(const GenArgs& args);

struct SweepArgs {
    std::string input;
    std::string output;                  // CSV
    std::string param = "rho";           // rho | lambda
    std::vector<double> values;
};
int cmd_sweep(const SweepArgs& args);

struct BenchArgs {
    std::vector<int> sizes;
    std::uint64_t seed = 1;
    int repeats = 3;
    std::string output;                  // CSV
    double rho = 0.4;
};
int cmd_bench(const BenchArgs& args);

struct LossArgs {
    std::string input;
    std::string output;                  // loss report JSON
    double lambda = 0.5;
    double fd_step = 1e-5;
    bool skip_fd = false;
};
int cmd_loss(const LossArgs& args);

}  // namespace popa::cli
