#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/run_config.hpp"
#include "trace_sharp/parallel.hpp"

namespace {

using trace_sharp::cli::Command;
using trace_sharp::cli::OutFormat;
using trace_sharp::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, double& sigma_storage, bool& sigma_set) {
    sub->add_option("--n", cfg.n, "dimension of the ball (>= 2)")->capture_default_str();
    sub->add_option("--sigma", sigma_storage, "volume fraction in (0, 1)")
        ->each([&sigma_set](const std::string&) { sigma_set = true; });
    sub->add_option("--resolution", cfg.resolution,
                    "grid points per axis; sample count for oracle / verify-bv "
                    "(default 512, or 10000 for the sampling commands)");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    std::map<std::string, OutFormat> formats{
        {"csv", OutFormat::csv}, {"json", OutFormat::json}, {"svg", OutFormat::svg}};
    sub->add_option("--format", cfg.format, "output format: csv (default), json, svg")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "trace-sharp: sharp constants and extremal sets of the Poincare trace\n"
        "inequalities for BV functions on the unit ball"};
    app.require_subcommand(1);

    RunConfig cfg;
    double sigma_storage = 0.5;
    bool sigma_set = false;

    struct Sub {
        CLI::App* app;
        Command command;
    };
    std::vector<Sub> subs;
    subs.push_back({app.add_subcommand(
                        "constants",
                        "dimensional constants and K_mv; with --sigma also the median\n"
                        "trace constant C_med = K_med(rho), rho = max(sigma, 1-sigma).\n"
                        "csv: n,omega_n,omega_nm1,a_n,b_n,c_n,k_mv,sigma,rho,c_med"),
                    Command::constants});
    subs.push_back({app.add_subcommand(
                        "sweep-mv",
                        "grid maximization of the mean-value quotient over the half-moon\n"
                        "family; exit 2 if the sweep contradicts the closed form.\n"
                        "csv: n,resolution,max_value,argmax_theta,argmax_varphi,"
                        "closed_form,gap,pass"),
                    Command::sweep_mv});
    subs.push_back({app.add_subcommand(
                        "lemma-check",
                        "grid certificate for the inequality chain behind the sharp\n"
                        "mean-value constant; exit 2 on any violation.\n"
                        "csv: n,resolution,check,worst_violation,tolerance,where_t,where_s,pass"),
                    Command::lemma_check});
    subs.push_back({app.add_subcommand(
                        "solve-med",
                        "solve the extremal-median system for (theta_sigma, varphi_sigma)\n"
                        "and K_med(B^n, sigma); requires --sigma.\n"
                        "csv: sigma,rho,n,theta_sigma,varphi_sigma,k_med,residual_sys,"
                        "residual_nec,pass"),
                    Command::solve_med});
    subs.push_back({app.add_subcommand(
                        "verify-bv",
                        "seeded layer-cake function suite for both trace inequalities and\n"
                        "their equality cases; --resolution = number of functions.\n"
                        "csv: seed,count,worst_mv_excess,worst_med_excess,"
                        "worst_zero_set_excess,halfball_equality_error,"
                        "halfmoon_equality_error,pass"),
                    Command::verify_bv});
    subs.push_back({app.add_subcommand(
                        "oracle",
                        "seeded candidate sets in the 2-disk (half-moons, caps, polygon\n"
                        "clips); --resolution = number of samples; exit 2 if any quotient\n"
                        "exceeds the certified constants.\n"
                        "csv: kind,params,volume,boundary_share,relative_perimeter,"
                        "quotient_mv,quotient_med,margin"),
                    Command::oracle});
    subs.push_back({app.add_subcommand(
                        "plot",
                        "svg figure of the extremal set: half-ball (no --sigma) or the\n"
                        "solved half-moon (with --sigma)"),
                    Command::plot});

    for (auto& s : subs) add_common(s.app, cfg, sigma_storage, sigma_set);

    CLI11_PARSE(app, argc, argv);

    for (auto& s : subs) {
        if (!s.app->parsed()) continue;
        cfg.command = s.command;
        const bool sampling = s.command == Command::verify_bv || s.command == Command::oracle;
        if (sampling && !s.app->get_option("--resolution")->count()) cfg.resolution = 10000;
        if (s.command == Command::plot && !s.app->get_option("--format")->count())
            cfg.format = OutFormat::svg;
    }
    if (sigma_set) cfg.sigma = sigma_storage;

    if (const char* env = std::getenv("TRACE_SHARP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0)
            trace_sharp::parallel::set_max_threads(unsigned(v));
    }

    return trace_sharp::cli::run(cfg);
}
