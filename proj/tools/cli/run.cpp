#include "cli/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cli/svg.hpp"
#include "trace_sharp/geometry.hpp"
#include "trace_sharp/layer_cake.hpp"
#include "trace_sharp/med.hpp"
#include "trace_sharp/mv.hpp"
#include "trace_sharp/oracle.hpp"
#include "trace_sharp/quotients.hpp"
#include "trace_sharp/special.hpp"

namespace trace_sharp::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::constants: return "constants";
        case Command::sweep_mv: return "sweep-mv";
        case Command::lemma_check: return "lemma-check";
        case Command::solve_med: return "solve-med";
        case Command::verify_bv: return "verify-bv";
        case Command::oracle: return "oracle";
        case Command::plot: return "plot";
    }
    return "?";
}

const char* kind_name(bvcheck::CandidateKind k) {
    switch (k) {
        case bvcheck::CandidateKind::half_moon: return "half-moon";
        case bvcheck::CandidateKind::cap: return "cap";
        case bvcheck::CandidateKind::polygon_clip: return "polygon-clip";
    }
    return "?";
}

std::string csv_header(const RunConfig& c, const std::string& columns) {
    std::ostringstream out;
    out << "# trace-sharp csv v1 command=" << command_name(c.command) << "\n"
        << columns << "\n";
    return out.str();
}

struct CommandOutput {
    std::string text;
    int status = 0;
};

// ---- constants ----

CommandOutput run_constants(const RunConfig& c) {
    const auto d = special::constants(c.n);
    const double kmv = special::kmv_constant(c.n);
    double rho = 0.0, cmed = 0.0;
    if (c.sigma) {
        rho = std::max(*c.sigma, 1.0 - *c.sigma);
        cmed = med::solve(rho, c.n).k_med;  // C_med(B^n, sigma) = K_med(B^n, rho)
    }
    CommandOutput out;
    if (c.format == OutFormat::json) {
        json j;
        j["n"] = d.n;
        j["omega_n"] = d.omega_n;
        j["omega_nm1"] = d.omega_nm1;
        j["a_n"] = d.a_n;
        j["b_n"] = d.b_n;
        j["c_n"] = d.c_n;
        j["k_mv"] = kmv;
        if (c.sigma) {
            j["sigma"] = *c.sigma;
            j["rho"] = rho;
            j["c_med"] = cmed;
        }
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << csv_header(c, "n,omega_n,omega_nm1,a_n,b_n,c_n,k_mv,sigma,rho,c_med");
        s << d.n << ',' << fmt(d.omega_n) << ',' << fmt(d.omega_nm1) << ','
          << fmt(d.a_n) << ',' << fmt(d.b_n) << ',' << fmt(d.c_n) << ',' << fmt(kmv);
        if (c.sigma)
            s << ',' << fmt(*c.sigma) << ',' << fmt(rho) << ',' << fmt(cmed);
        else
            s << ",,,";
        s << "\n";
        out.text = s.str();
    }
    return out;
}

// ---- sweep-mv ----

CommandOutput run_sweep_mv(const RunConfig& c) {
    const auto rep = mv::kmv_sweep(c.n, c.resolution);
    const double cell_theta = (kPi / 2) / rep.grid_resolution;
    const double cell_varphi = rep.argmax_theta / rep.grid_resolution;
    const bool ok = rep.gap >= -1e-9 &&
                    std::abs(rep.argmax_theta - kPi / 2) <= cell_theta + 1e-12 &&
                    rep.argmax_varphi <= cell_varphi + 1e-12;
    CommandOutput out;
    out.status = ok ? 0 : 2;
    if (c.format == OutFormat::json) {
        json j;
        j["n"] = rep.n;
        j["grid_resolution"] = rep.grid_resolution;
        j["max_value"] = rep.max_value;
        j["argmax"] = {{"theta", rep.argmax_theta}, {"varphi", rep.argmax_varphi}};
        j["closed_form"] = rep.closed_form;
        j["gap"] = rep.gap;
        j["pass"] = ok;
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << csv_header(
            c, "n,resolution,max_value,argmax_theta,argmax_varphi,closed_form,gap,pass");
        s << rep.n << ',' << rep.grid_resolution << ',' << fmt(rep.max_value) << ','
          << fmt(rep.argmax_theta) << ',' << fmt(rep.argmax_varphi) << ','
          << fmt(rep.closed_form) << ',' << fmt(rep.gap) << ',' << (ok ? 1 : 0) << "\n";
        out.text = s.str();
    }
    return out;
}

// ---- lemma-check ----

CommandOutput run_lemma_check(const RunConfig& c) {
    const auto rep = mv::lemma_suite(c.n, c.resolution);
    CommandOutput out;
    out.status = rep.all_pass() ? 0 : 2;
    if (c.format == OutFormat::json) {
        json j;
        j["n"] = rep.n;
        j["resolution"] = rep.resolution;
        j["pass"] = rep.all_pass();
        j["checks"] = json::array();
        for (const auto& ch : rep.checks) {
            j["checks"].push_back({{"name", ch.name},
                                   {"worst_violation", ch.worst_violation},
                                   {"tolerance", ch.tolerance},
                                   {"where_t", ch.where_t},
                                   {"where_s", ch.where_s},
                                   {"pass", ch.pass}});
        }
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << csv_header(c, "n,resolution,check,worst_violation,tolerance,where_t,where_s,pass");
        for (const auto& ch : rep.checks) {
            s << rep.n << ',' << rep.resolution << ',' << ch.name << ','
              << fmt(ch.worst_violation) << ',' << fmt(ch.tolerance) << ','
              << fmt(ch.where_t) << ',' << fmt(ch.where_s) << ',' << (ch.pass ? 1 : 0)
              << "\n";
        }
        out.text = s.str();
    }
    return out;
}

// ---- solve-med ----

CommandOutput run_solve_med(const RunConfig& c) {
    const auto sol = med::solve(*c.sigma, c.n);
    const bool ok = sol.residual_sys <= 1e-10 && sol.residual_nec <= 1e-8;
    CommandOutput out;
    out.status = ok ? 0 : 2;
    if (c.format == OutFormat::json) {
        json j;
        j["sigma"] = sol.sigma;
        j["rho"] = sol.rho;
        j["n"] = sol.n;
        j["theta_sigma"] = sol.theta_sigma;
        j["varphi_sigma"] = sol.varphi_sigma;
        j["k_med"] = sol.k_med;
        j["residual_sys"] = sol.residual_sys;
        j["residual_nec"] = sol.residual_nec;
        j["pass"] = ok;
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << csv_header(
            c, "sigma,rho,n,theta_sigma,varphi_sigma,k_med,residual_sys,residual_nec,pass");
        s << fmt(sol.sigma) << ',' << fmt(sol.rho) << ',' << sol.n << ','
          << fmt(sol.theta_sigma) << ',' << fmt(sol.varphi_sigma) << ','
          << fmt(sol.k_med) << ',' << fmt(sol.residual_sys) << ','
          << fmt(sol.residual_nec) << ',' << (ok ? 1 : 0) << "\n";
        out.text = s.str();
    }
    return out;
}

// ---- verify-bv ----

CommandOutput run_verify_bv(const RunConfig& c) {
    const auto rep = bvcheck::run_function_suite(c.seed, c.resolution);
    CommandOutput out;
    out.status = rep.pass() ? 0 : 2;
    if (c.format == OutFormat::json) {
        json j;
        j["seed"] = rep.seed;
        j["count"] = rep.count;
        j["worst_mv_excess"] = rep.worst_mv_excess;
        j["worst_med_excess"] = rep.worst_med_excess;
        j["worst_zero_set_excess"] = rep.worst_zero_set_excess;
        j["halfball_equality_error"] = rep.halfball_equality_error;
        j["halfmoon_equality_error"] = rep.halfmoon_equality_error;
        j["pass"] = rep.pass();
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << csv_header(c,
                        "seed,count,worst_mv_excess,worst_med_excess,worst_zero_set_excess,"
                        "halfball_equality_error,halfmoon_equality_error,pass");
        s << rep.seed << ',' << rep.count << ',' << fmt(rep.worst_mv_excess) << ','
          << fmt(rep.worst_med_excess) << ',' << fmt(rep.worst_zero_set_excess) << ','
          << fmt(rep.halfball_equality_error) << ',' << fmt(rep.halfmoon_equality_error)
          << ',' << (rep.pass() ? 1 : 0) << "\n";
        out.text = s.str();
    }
    return out;
}

// ---- oracle ----

CommandOutput run_oracle(const RunConfig& c) {
    const auto rep = bvcheck::oracle_sample(c.seed, c.resolution, c.sigma);
    const bool ok = rep.margin_mv >= -1e-6 && rep.injected_mv_error <= 1e-8 &&
                    (!c.sigma || (rep.margin_med >= -1e-6 && rep.injected_med_error <= 1e-8));
    CommandOutput out;
    out.status = ok ? 0 : 2;
    if (c.format == OutFormat::json) {
        json j;
        j["seed"] = rep.seed;
        j["count"] = rep.count;
        if (rep.sigma) j["sigma"] = *rep.sigma;
        j["k_mv"] = rep.k_mv;
        if (rep.sigma) j["k_med"] = rep.k_med;
        j["degenerate_count"] = rep.degenerate_count;
        j["max_quotient_mv"] = rep.max_quotient_mv;
        j["margin_mv"] = rep.margin_mv;
        if (rep.sigma) {
            j["max_quotient_med"] = rep.max_quotient_med;
            j["margin_med"] = rep.margin_med;
        }
        j["injected_mv_error"] = rep.injected_mv_error;
        if (rep.sigma) j["injected_med_error"] = rep.injected_med_error;
        j["pass"] = ok;
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << csv_header(c,
                        "kind,params,volume,boundary_share,relative_perimeter,"
                        "quotient_mv,quotient_med,margin");
        for (const auto& row : rep.rows) {
            s << kind_name(row.kind) << ',' << row.params << ','
              << fmt(row.measures.volume) << ',' << fmt(row.measures.boundary_share)
              << ',' << fmt(row.measures.relative_perimeter) << ',';
            if (!row.degenerate) s << fmt(row.quotient_mv);
            s << ',';
            if (row.quotient_med) s << fmt(*row.quotient_med);
            s << ',';
            if (!row.degenerate) s << fmt(row.margin);
            s << "\n";
        }
        out.text = s.str();
    }
    return out;
}

// ---- plot ----

CommandOutput run_plot(const RunConfig& c) {
    char line[256];
    CommandOutput out;
    if (c.sigma) {
        const auto sol = med::solve(*c.sigma, c.n);
        const geometry::HalfMoonParams p{sol.theta_sigma, sol.varphi_sigma, c.n};
        const auto ball = geometry::removed_ball(p);
        std::snprintf(line, sizeof line, "n=%d sigma=%.9g K_med=%.9f extremal: half-moon",
                      c.n, *c.sigma, sol.k_med);
        std::string title = line;
        std::snprintf(line, sizeof line,
                      "theta=%.9f varphi=%.9f removed ball center_x1=%.9f radius=%.9f",
                      sol.theta_sigma, sol.varphi_sigma, ball.center_x1, ball.radius);
        out.text = render_extremal_svg(p, title, line);
    } else {
        const geometry::HalfMoonParams p{kPi / 2, 0.0, c.n};
        std::snprintf(line, sizeof line, "n=%d K_mv=%.9f extremal: half-ball", c.n,
                      special::kmv_constant(c.n));
        std::string title = line;
        std::snprintf(line, sizeof line, "theta=%.9f varphi=0 (spherical cap limit)",
                      kPi / 2);
        out.text = render_extremal_svg(p, title, line);
    }
    return out;
}

bool validate_config(const RunConfig& c, std::string& error) {
    if (c.n < 2) error = "--n must be >= 2";
    else if (c.resolution < 16) error = "--resolution must be >= 16";
    else if (c.sigma && !(*c.sigma > 0.0 && *c.sigma < 1.0)) error = "--sigma must be in (0, 1)";
    else if (c.command == Command::solve_med && !c.sigma) error = "solve-med requires --sigma";
    else if (c.command == Command::plot && c.format != OutFormat::svg)
        error = "plot emits svg only";
    else if (c.command != Command::plot && c.format == OutFormat::svg)
        error = "--format svg is only valid for plot";
    else return true;
    return false;
}

}  // namespace

int run(const RunConfig& config) {
    std::string error;
    if (!validate_config(config, error)) {
        std::cerr << "trace-sharp: invalid configuration: " << error << "\n";
        return 1;
    }
    CommandOutput out;
    try {
        switch (config.command) {
            case Command::constants: out = run_constants(config); break;
            case Command::sweep_mv: out = run_sweep_mv(config); break;
            case Command::lemma_check: out = run_lemma_check(config); break;
            case Command::solve_med: out = run_solve_med(config); break;
            case Command::verify_bv: out = run_verify_bv(config); break;
            case Command::oracle: out = run_oracle(config); break;
            case Command::plot: out = run_plot(config); break;
        }
    } catch (const std::exception& e) {
        std::cerr << "trace-sharp: " << e.what() << "\n";
        return 1;
    }
    if (config.out_path.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(config.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "trace-sharp: cannot open output path " << config.out_path << "\n";
            return 1;
        }
        f << out.text;
        if (!f) {
            std::cerr << "trace-sharp: write failed for " << config.out_path << "\n";
            return 1;
        }
    }
    return out.status;
}

}  // namespace trace_sharp::cli
