#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "popa/affinity.hpp"
#include "popa/metrics.hpp"
#include "popa/types.hpp"

namespace popa {

// Raised on unreadable/unwritable files or unparseable JSON. The CLI maps
// this to exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An instance file is either cost mode (m, n, cost, alpha, beta, rho,
// optional ground_truth as 1-based [i, j] pairs) or affinity mode (affinity,
// w_rs, rho, optional sinkhorn {tau, max_iters, tol}), never both. In affinity
// mode the cost matrix and biases are derived here.
struct LoadedInstance {
    Instance instance;
    bool affinity_mode = false;
    SinkhornConfig sinkhorn;   // config used for the derivation
    double w_rs = 1.0;
};

LoadedInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

LoadedInstance read_instance(const std::string& path);
void write_instance(const std::string& path, const Instance& inst);

// Report JSON mirrors SolveReport; metrics fields appear when ground truth
// was present, and derived alpha/beta are echoed for affinity-mode inputs.
nlohmann::json report_to_json(const SolveReport& report, const std::optional<MatchMetrics>& metrics);

// Canonical serialization: keys sorted, LF line endings, doubles printed with
// 17 significant digits so write(read(file)) is byte-identical for files this
// library wrote.
std::string canonical_dump(const nlohmann::json& j);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace popa
