// popa - exact partial matching solver CLI.
#include <CLI11.hpp>

#include "popa/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact partial graph matching via an assignment-problem embedding"};
    app.require_subcommand(1);

    popa::cli::SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance file and write a report");
    solve->add_option("input", solve_args.input, "Instance JSON (cost or affinity mode)")->required();
    solve->add_option("-o,--output", solve_args.output, "Report JSON path (default stdout)");
    double rho_override = 0.0;
    CLI::Option* rho_opt = solve->add_option("--rho", rho_override, "Override the instance's rho");
    solve->add_option("--transpose-policy", solve_args.transpose_policy, "auto | reject")->capture_default_str();

    popa::cli::OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "Check the solver against brute force on random instances");
    oracle->add_option("-n,--instances", oracle_args.instances, "Number of random instances")->capture_default_str();
    oracle->add_option("--seed", oracle_args.seed, "RNG seed")->capture_default_str();
    oracle->add_option("--max-m", oracle_args.max_m, "Largest source count")->capture_default_str();
    oracle->add_option("--max-n", oracle_args.max_n, "Largest target count")->capture_default_str();

    popa::cli::GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Write a planted synthetic instance");
    gen->add_option("-o,--output", gen_args.output, "Instance JSON path (default stdout)");
    gen->add_option("--m", gen_args.spec.m, "Source count")->capture_default_str();
    gen->add_option("--n", gen_args.spec.n, "Target count")->capture_default_str();
    gen->add_option("--k", gen_args.spec.k, "Planted match count")->capture_default_str();
    gen->add_option("--matched-cost", gen_args.spec.matched_cost, "Cost of planted pairs")->capture_default_str();
    gen->add_option("--base-low", gen_args.spec.base_low, "Low end of the non-match band")->capture_default_str();
    gen->add_option("--base-high", gen_args.spec.base_high, "High end of the non-match band")->capture_default_str();
    gen->add_option("--noise-sigma", gen_args.spec.noise_sigma, "Gaussian cost noise")->capture_default_str();
    gen->add_option("--rho", gen_args.spec.rho, "Unbalancedness parameter")->capture_default_str();
    gen->add_option("--seed", gen_args.spec.seed, "RNG seed")->capture_default_str();

    popa::cli::SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep rho or lambda over an instance, CSV out");
    sweep->add_option("input", sweep_args.input, "Instance JSON")->required();
    sweep->add_option("-o,--output", sweep_args.output, "CSV path (default stdout)");
    sweep->add_option("--param", sweep_args.param, "rho | lambda")->capture_default_str();
    sweep->add_option("--values", sweep_args.values, "Sweep values (ascending for rho)")->required()->delimiter(',');

    popa::cli::BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Time solve() on random square instances, CSV out");
    bench->add_option("--sizes", bench_args.sizes, "Instance sizes")->required()->delimiter(',');
    bench->add_option("--seed", bench_args.seed, "RNG seed")->capture_default_str();
    bench->add_option("--repeats", bench_args.repeats, "Repeats per size")->capture_default_str();
    bench->add_option("-o,--output", bench_args.output, "CSV path (default stdout)");
    bench->add_option("--rho", bench_args.rho, "Unbalancedness parameter")->capture_default_str();

    popa::cli::LossArgs loss_args;
    CLI::App* loss = app.add_subcommand("loss", "Evaluate the partial matching loss and gradient check");
    loss->add_option("input", loss_args.input, "Instance JSON with ground truth")->required();
    loss->add_option("-o,--output", loss_args.output, "Loss report JSON path (default stdout)");
    loss->add_option("--lambda", loss_args.lambda, "Bias loss weight")->capture_default_str();
    loss->add_option("--fd-step", loss_args.fd_step, "Central difference step")->capture_default_str();
    loss->add_flag("--skip-fd", loss_args.skip_fd, "Skip the finite difference check");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        if (*rho_opt) solve_args.rho_override = rho_override;
        return popa::cli::cmd_solve(solve_args);
    }
    if (oracle->parsed()) return popa::cli::cmd_oracle(oracle_args);
    if (gen->parsed()) return popa::cli::cmd_gen(gen_args);
    if (sweep->parsed()) return popa::cli::cmd_sweep(sweep_args);
    if (bench->parsed()) return popa::cli::cmd_bench(bench_args);
    if (loss->parsed()) return popa::cli::cmd_loss(loss_args);
    return 1;
}
