#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "srcirc/cli.hpp"

namespace {

void add_common(CLI::App* sub, srcirc::cli::JobSpec& job) {
    sub->add_option("--coeffs", job.coeffs, "c_0,...,c_g as integers, decimals or p/q");
    sub->add_option("--file", job.file, "JSON {\"g\":..,\"c\":[..]} (or an array of them) or CSV, one polynomial per line");
    sub->add_option("--log-q", job.log_q, "positive rational standing for log q")->capture_default_str();
    sub->add_option("--json", job.json_path, "also write the JSON result to this path");
    sub->add_option("--workers", job.workers, "batch worker threads (default: SRCIRC_WORKERS or hardware)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-circle root criteria for self-reciprocal polynomials"};
    app.require_subcommand(1);
    srcirc::cli::JobSpec job;

    auto* check = app.add_subcommand("check", "decide whether all roots lie on the unit circle");
    add_common(check, job);
    check->add_flag("--certify", job.certify, "certify the on-circle condition for every t > 1");
    check->add_option("--grid", job.grid, "comma-separated sample points t > 1");

    auto* delta = app.add_subcommand("delta", "determinant ratios delta_n");
    add_common(delta, job);
    delta->add_option("--t", job.t, "evaluate the shifted criterion at this t > 1");

    auto* ham = app.add_subcommand("hamiltonian", "step Hamiltonian gamma_n");
    add_common(ham, job);

    auto* eval = app.add_subcommand("eval", "evaluate A, B and the kernel along the canonical system");
    add_common(eval, job);
    eval->add_option("--z", job.z, "comma-separated complex points such as 1+2i")->required();
    eval->add_option("--n", job.n, "interval index 1..2g")->capture_default_str();
    eval->add_option("--s", job.s, "fraction within the interval, 0 <= s <= 1")->capture_default_str();

    auto* rec = app.add_subcommand("reconstruct", "rebuild the polynomial from step values");
    rec->add_option("--gamma", job.gamma, "gamma_1,...,gamma_2g")->required();
    rec->add_option("--p1", job.p1, "value P(1)")->required();
    rec->add_option("--json", job.json_path, "also write the JSON result to this path");

    auto* orc = app.add_subcommand("oracle", "numeric root classification and Takagi chain");
    add_common(orc, job);

    auto* cert = app.add_subcommand("certify", "symbolic sign certificate over t > 1");
    add_common(cert, job);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : srcirc::cli::kInputError;
    }
    job.command = app.get_subcommands().front()->get_name();

    const auto result = srcirc::cli::run(job);
    const std::string text = result.json.dump(2);
    std::cout << text << '\n';
    if (job.json_path) {
        std::ofstream out(*job.json_path);
        if (!out) {
            std::cerr << "cannot write " << *job.json_path << '\n';
            return srcirc::cli::kInputError;
        }
        out << text << '\n';
    }
    return result.exit_code;
}
