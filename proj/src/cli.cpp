#include "popa/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "popa/core.hpp"
#include "popa/io.hpp"
#include "popa/loss.hpp"
#include "popa/oracle.hpp"
#include "popa/pgm.hpp"

namespace popa::cli {

namespace {

template <typename Fn>
int run_guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

void emit_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty() || path == "-") {
        std::cout << canonical_dump(j);
        return;
    }
    write_json_file(path, j);
}

void emit_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Random instance of the shape used by the solver/oracle equivalence runs:
// C ~ U[0,1], biases ~ U[0,1], rho on the 0.1..1.0 grid.
Instance random_small_instance(std::mt19937_64& rng, int max_m, int max_n) {
    std::uniform_int_distribution<int> pick_m(1, max_m);
    const int m = pick_m(rng);
    std::uniform_int_distribution<int> pick_n(m, max_n);
    const int n = pick_n(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_rho(1, 10);

    Instance inst;
    inst.cost = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (double& c : inst.cost.data()) c = unit(rng);
    inst.alpha.resize(static_cast<std::size_t>(m));
    inst.beta.resize(static_cast<std::size_t>(n));
    for (double& a : inst.alpha) a = unit(rng);
    for (double& b : inst.beta) b = unit(rng);
    inst.rho = pick_rho(rng) / 10.0;
    return inst;
}

}  // namespace

int cmd_solve(const SolveArgs& args) {
    return run_guarded([&] {
        if (args.transpose_policy != "auto" && args.transpose_policy != "reject")
            throw ValidationError("transpose policy must be auto or reject");
        LoadedInstance loaded = read_instance(args.input);
        if (args.rho_override) {
            loaded.instance.rho = *args.rho_override;
            validate_instance(loaded.instance);
        }
        if (args.transpose_policy == "reject" && loaded.instance.m() > loaded.instance.n())
            throw ValidationError("instance has m > n and transposition is disabled");

        const SolveReport report = solve(loaded.instance);
        std::optional<MatchMetrics> metrics;
        if (loaded.instance.ground_truth && loaded.instance.ground_truth->matched_count() > 0)
            metrics = evaluate_against_truth(report.assignment, loaded.instance);

        nlohmann::json j = report_to_json(report, metrics);
        if (loaded.affinity_mode) {  // echo the derived biases
            j["alpha"] = loaded.instance.alpha;
            j["beta"] = loaded.instance.beta;
        }
        emit_json(args.output, j);
        return 0;
    });
}

int cmd_oracle(const OracleArgs& args) {
    return run_guarded([&] {
        if (args.instances <= 0) throw ValidationError("instance count must be positive");
        if (args.max_m < 1 || args.max_n < args.max_m) throw ValidationError("need 1 <= max_m <= max_n");

        std::mt19937_64 rng(args.seed);
        std::vector<Instance> instances;
        instances.reserve(static_cast<std::size_t>(args.instances));
        for (int i = 0; i < args.instances; ++i) instances.push_back(random_small_instance(rng, args.max_m, args.max_n));

        const std::vector<SolveReport> reports = solve_batch(instances);
        int mismatches = 0;
        double worst = 0.0;
        for (int i = 0; i < args.instances; ++i) {
            const auto [oracle_pa, oracle_value] = brute_force_pgm(instances[static_cast<std::size_t>(i)]);
            const double dev = std::fabs(reports[static_cast<std::size_t>(i)].total_cost - oracle_value);
            worst = std::max(worst, dev);
            if (dev > 1e-9) {
                ++mismatches;
                std::cerr << "mismatch on instance " << i << ": solver " << format_double(reports[static_cast<std::size_t>(i)].total_cost)
                          << " vs oracle " << format_double(oracle_value) << "\n";
            }
        }
        std::cout << "instances: " << args.instances << "\nmismatches: " << mismatches
                  << "\nmax deviation: " << format_double(worst) << "\n";
        return mismatches == 0 ? 0 : 1;
    });
}

int cmd_gen(const GenArgs& args) {
    return run_guarded([&] {
        const Instance inst = planted_instance(args.spec);
        if (args.output.empty() || args.output == "-") {
            std::cout << canonical_dump(instance_to_json(inst));
        } else {
            write_instance(args.output, inst);
        }
        return 0;
    });
}

int cmd_sweep(const SweepArgs& args) {
    return run_guarded([&] {
        if (args.values.empty()) throw ValidationError("empty sweep value list");
        const LoadedInstance loaded = read_instance(args.input);
        std::ostringstream csv;

        if (args.param == "rho") {
            const std::vector<SweepRow> rows = rho_sweep(loaded.instance, args.values);
            csv << "rho,matched_count,total_cost,unmatched_mass,f1\n";
            for (const SweepRow& r : rows) {
                csv << format_double(r.rho) << "," << r.matched_count << "," << format_double(r.total_cost) << ","
                    << format_double(r.unmatched_mass) << ",";
                if (r.f1) csv << format_double(*r.f1);
                csv << "\n";
            }
        } else if (args.param == "lambda") {
            if (!loaded.instance.ground_truth || loaded.instance.ground_truth->matched_count() == 0)
                throw ValidationError("lambda sweep requires a nonempty ground truth");
            LossInputs in;
            in.cost = loaded.instance.cost;
            in.alpha = loaded.instance.alpha;
            in.beta = loaded.instance.beta;
            in.rho = loaded.instance.rho;
            in.truth = *loaded.instance.ground_truth;
            csv << "lambda,l_cost,l_bias,l_total\n";
            for (double lambda : args.values) {
                in.lambda = lambda;
                const LossReport r = partial_matching_loss(in);
                csv << format_double(lambda) << "," << format_double(r.l_cost) << "," << format_double(r.l_bias) << ","
                    << format_double(r.l_total) << "\n";
            }
        } else {
            throw ValidationError("sweep param must be rho or lambda");
        }
        emit_text(args.output, csv.str());
        return 0;
    });
}

int cmd_bench(const BenchArgs& args) {
    return run_guarded([&] {
        if (args.sizes.empty()) throw ValidationError("no sizes given");
        for (int n : args.sizes)
            if (n <= 0) throw ValidationError("sizes must be positive");
        if (args.repeats <= 0) throw ValidationError("repeats must be positive");

        std::mt19937_64 rng(args.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::ostringstream csv;
        csv << "n,mean_ms,p95_ms,ratio\n";

        bool ratio_ok = true;
        double prev_mean = 0.0;
        int prev_n = 0;
        for (int n : args.sizes) {
            std::vector<double> times_ms;
            times_ms.reserve(static_cast<std::size_t>(args.repeats));
            for (int rep = 0; rep < args.repeats; ++rep) {
                Instance inst;
                inst.cost = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
                for (double& c : inst.cost.data()) c = unit(rng);
                inst.alpha.assign(static_cast<std::size_t>(n), 1.0);
                inst.beta.assign(static_cast<std::size_t>(n), 1.0);
                inst.rho = args.rho;

                const auto start = std::chrono::steady_clock::now();
                const SolveReport report = solve(inst);
                const auto stop = std::chrono::steady_clock::now();
                (void)report;
                times_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
            }
            std::sort(times_ms.begin(), times_ms.end());
            double mean = 0.0;
            for (double t : times_ms) mean += t;
            mean /= static_cast<double>(times_ms.size());
            const std::size_t p95_idx = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(times_ms.size()))) - 1;
            const double p95 = times_ms[std::min(p95_idx, times_ms.size() - 1)];

            csv << n << "," << format_double(mean) << "," << format_double(p95) << ",";
            if (prev_n > 0 && n == 2 * prev_n && prev_mean > 0.0) {
                const double ratio = mean / prev_mean;
                csv << format_double(ratio);
                std::cout << "doubling " << prev_n << " -> " << n << ": ratio " << format_double(ratio)
                          << (ratio <= 10.0 ? " (<= 10)" : " (VIOLATES <= 10)") << "\n";
                if (ratio > 10.0) ratio_ok = false;
            }
            csv << "\n";
            prev_mean = mean;
            prev_n = n;
        }
        emit_text(args.output, csv.str());
        if (!ratio_ok) {
            std::cerr << "error: cubic scaling ratio exceeded 10\n";
            return 1;
        }
        return 0;
    });
}

int cmd_loss(const LossArgs& args) {
    return run_guarded([&] {
        const LoadedInstance loaded = read_instance(args.input);
        if (!loaded.instance.ground_truth || loaded.instance.ground_truth->matched_count() == 0)
            throw ValidationError("loss evaluation requires a nonempty ground truth");

        LossInputs in;
        in.cost = loaded.instance.cost;
        in.alpha = loaded.instance.alpha;
        in.beta = loaded.instance.beta;
        in.rho = loaded.instance.rho;
        in.truth = *loaded.instance.ground_truth;
        in.lambda = args.lambda;

        const LossReport report = loss_gradients(in);
        nlohmann::json j;
        j["l_cost"] = report.l_cost;
        j["l_bias"] = report.l_bias;
        j["l_total"] = report.l_total;
        j["active_pairs"] = report.active_pairs;
        j["grad_alpha"] = report.grad_alpha;
        j["grad_beta"] = report.grad_beta;
        nlohmann::json grad_rows = nlohmann::json::array();
        for (std::size_t i = 0; i < report.grad_cost.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < report.grad_cost.cols(); ++c) row.push_back(report.grad_cost(i, c));
            grad_rows.push_back(std::move(row));
        }
        j["grad_cost"] = std::move(grad_rows);
        if (!args.skip_fd) j["fd_max_rel_error"] = finite_difference_check(in, args.fd_step);
        emit_json(args.output, j);
        return 0;
    });
}

}  // namespace popa::cli
