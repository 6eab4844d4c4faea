#include "popa/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "popa/core.hpp"

namespace popa {

namespace {

using nlohmann::json;

Matrix matrix_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string("expected array: ") + what);
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw ValidationError(std::string("expected array of rows: ") + what);
        cols = j[0].size();
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ValidationError(std::string("ragged array: ") + what);
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_number()) throw ValidationError(std::string("non-numeric entry: ") + what);
            m(i, c) = j[i][c].get<double>();
        }
    }
    return m;
}

std::vector<double> vector_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string("expected array: ") + what);
    std::vector<double> v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw ValidationError(std::string("non-numeric entry: ") + what);
        v[i] = j[i].get<double>();
    }
    return v;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// 1-based pairs in files, 0-based in memory.
PartialAssignment pairs_from_json(const json& j, int m, int n) {
    if (!j.is_array()) throw ValidationError("expected array: ground_truth");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            throw ValidationError("ground_truth entries must be [i, j] pairs");
        pairs.emplace_back(item[0].get<int>() - 1, item[1].get<int>() - 1);
    }
    return PartialAssignment::from_pairs(m, n, pairs);
}

json pairs_to_json(const PartialAssignment& pa) {
    json out = json::array();
    for (const auto& [i, j] : pa.pairs()) out.push_back(json::array({i + 1, j + 1}));
    return out;
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) throw ValidationError(std::string("missing or non-numeric field: ") + key);
    return j[key].get<double>();
}

void format_value(const json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                out += json(it.key()).dump();
                out += ": ";
                format_value(it.value(), out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                format_value(item, out, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string canonical_dump(const json& j) {
    std::string out;
    format_value(j, out, 0);
    out += "\n";
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << canonical_dump(j);
    if (!out) throw IoError("write failed: " + path);
}

LoadedInstance instance_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("instance file must be a JSON object");
    const bool has_cost = j.contains("cost");
    const bool has_affinity = j.contains("affinity");
    if (has_cost == has_affinity) throw ValidationError("exactly one of cost / affinity must be present");

    LoadedInstance loaded;
    Instance& inst = loaded.instance;
    inst.rho = number_field(j, "rho");

    if (has_cost) {
        inst.cost = matrix_from_json(j["cost"], "cost");
        // an empty cost array cannot carry the column count; recover it from n
        if (inst.cost.rows() == 0 && j.contains("n")) {
            const long long n = j["n"].get<long long>();
            if (n < 0) throw ValidationError("negative dimension");
            inst.cost = Matrix(0, static_cast<std::size_t>(n));
        }
        if (j.contains("m") && j["m"].get<long long>() != inst.m()) throw ValidationError("dimension mismatch: m");
        if (j.contains("n") && j["n"].get<long long>() != inst.n()) throw ValidationError("dimension mismatch: n");
        if (!j.contains("alpha")) throw ValidationError("missing field: alpha");
        if (!j.contains("beta")) throw ValidationError("missing field: beta");
        inst.alpha = vector_from_json(j["alpha"], "alpha");
        inst.beta = vector_from_json(j["beta"], "beta");
    } else {
        loaded.affinity_mode = true;
        const Matrix affinity = matrix_from_json(j["affinity"], "affinity");
        loaded.w_rs = number_field(j, "w_rs");
        if (j.contains("sinkhorn")) {
            const json& cfg = j["sinkhorn"];
            if (cfg.contains("tau")) loaded.sinkhorn.tau = cfg["tau"].get<double>();
            if (cfg.contains("max_iters")) loaded.sinkhorn.max_iters = cfg["max_iters"].get<int>();
            if (cfg.contains("tol")) loaded.sinkhorn.tol = cfg["tol"].get<double>();
        }
        // Sinkhorn wants m <= n; wide-side inputs are normalized transposed.
        const bool flipped = affinity.rows() > affinity.cols();
        const Matrix work = flipped ? affinity.transposed() : affinity;
        const SinkhornResult sk = sinkhorn_normalize(work, loaded.sinkhorn);
        const Matrix cost = cost_from_affinity(sk.s);
        inst.cost = flipped ? cost.transposed() : cost;
        auto [alpha, beta] = matching_biases(affinity, loaded.w_rs);
        inst.alpha = std::move(alpha);
        inst.beta = std::move(beta);
    }

    if (j.contains("ground_truth")) inst.ground_truth = pairs_from_json(j["ground_truth"], inst.m(), inst.n());
    validate_instance(inst);
    return loaded;
}

json instance_to_json(const Instance& inst) {
    json j;
    j["m"] = inst.m();
    j["n"] = inst.n();
    j["cost"] = matrix_to_json(inst.cost);
    j["alpha"] = inst.alpha;
    j["beta"] = inst.beta;
    j["rho"] = inst.rho;
    if (inst.ground_truth) j["ground_truth"] = pairs_to_json(*inst.ground_truth);
    return j;
}

LoadedInstance read_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

void write_instance(const std::string& path, const Instance& inst) { write_json_file(path, instance_to_json(inst)); }

json report_to_json(const SolveReport& report, const std::optional<MatchMetrics>& metrics) {
    json j;
    j["pairs"] = pairs_to_json(report.assignment);
    j["total_cost"] = report.total_cost;
    j["transported_cost"] = report.transported_cost;
    j["unmatch_penalty"] = report.unmatch_penalty;
    j["alpha_star"] = report.alpha_star;
    j["feasible_pairs"] = report.feasible_pairs;
    j["lap_value"] = report.lap_value;
    j["transposed"] = report.transposed;
    if (metrics) {
        j["precision"] = metrics->precision;
        j["recall"] = metrics->recall;
        j["f1"] = metrics->f1;
        j["node_correctness"] = metrics->node_correctness;
        j["partiality_error"] = metrics->partiality_error;
        j["mismatching_error"] = metrics->mismatching_error;
        j["total_error"] = metrics->total_error;
    }
    return j;
}

}  // namespace popa
