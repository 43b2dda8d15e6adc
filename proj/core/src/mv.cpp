#include "trace_sharp/mv.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trace_sharp/geometry.hpp"
#include "trace_sharp/parallel.hpp"
#include "trace_sharp/quotients.hpp"
#include "trace_sharp/special.hpp"

namespace trace_sharp::mv {

namespace {
constexpr double kPi = std::numbers::pi;

void check_sweep_args(int n, int resolution, const char* fn) {
    if (n < 2) throw std::domain_error(std::string(fn) + ": dimension must be >= 2");
    if (resolution < 16) throw std::domain_error(std::string(fn) + ": resolution must be >= 16");
}
}  // namespace

SweepReport kmv_sweep(int n, int resolution) {
    check_sweep_args(n, resolution, "kmv_sweep");
    const int R = resolution;
    std::vector<double> row_max(R);
    std::vector<int> row_arg(R);
    parallel::parallel_for(R, [&](std::size_t i) {
        const double theta = kPi / 2 + double(i) * (kPi / 2) / R;
        double best = -1.0;
        int arg = 0;
        for (int j = 0; j < R; ++j) {
            const double varphi = double(j) * theta / R;
            const double q =
                quotients::q_mv_closed_form({theta, varphi, n}).value;
            if (q > best) {
                best = q;
                arg = j;
            }
        }
        row_max[i] = best;
        row_arg[i] = arg;
    });
    SweepReport rep;
    rep.n = n;
    rep.grid_resolution = R;
    rep.max_value = -1.0;
    for (int i = 0; i < R; ++i) {
        if (row_max[i] > rep.max_value) {
            rep.max_value = row_max[i];
            rep.argmax_theta = kPi / 2 + double(i) * (kPi / 2) / R;
            rep.argmax_varphi = double(row_arg[i]) * rep.argmax_theta / R;
        }
    }
    rep.closed_form = special::kmv_constant(n);
    rep.gap = rep.closed_form - rep.max_value;
    return rep;
}

double lemma_F(double t, double s, int n) {
    if (n < 2) throw std::domain_error("lemma_F: dimension must be >= 2");
    if (!(t >= 0.0 && t < kPi / 2 && s >= 0.0 && s < t + kPi / 2))
        throw std::domain_error("lemma_F: (t, s) outside Lambda");
    const auto d = special::constants(n);
    const double ct = std::cos(t);
    const double ctn1 = std::pow(ct, n - 1);
    return 1.0 -
           (n - 1) * d.c_n * special::phi(n - 2, t) *
               (special::phi(n, t) - geometry::volume_kernel(s, n) * ctn1 * ct) -
           (n - 1) * geometry::perimeter_kernel(s, n) * ctn1;
}

double lemma_F_boundary(double t, int n) {
    const auto d = special::constants(n);
    return 1.0 -
           (n - 1) * d.c_n * special::phi(n - 2, t) *
               (special::phi(n, t) - special::psi(n, t + kPi / 2)) -
           (n - 1) * special::psi(n - 2, t + kPi / 2);
}

double lemma_F_boundary_factored(double t, int n) {
    const auto d = special::constants(n);
    return (1.0 + 2.0 * (n - 1) * d.omega_nm1 * special::phi(n - 2, t) / (n * d.omega_n)) *
           (1.0 - 0.5 * d.a_n);
}

double aux_f(double t, int n) {
    const auto d = special::constants(n);
    return d.c_n * special::phi(n - 2, t) * std::cos(t);
}

double aux_k(double t, int n) {
    if (n < 3) throw std::domain_error("aux_k: defined for n >= 3");
    const auto d = special::constants(n);
    const double p = special::phi(n - 2, t);
    return (double(n - 1) / n) * d.c_n * p * p -
           (1.0 - std::pow(std::cos(t), n - 1)) / (n - 1);
}

double aux_kappa(double t, int n) {
    const auto d = special::constants(n);
    const double c = std::cos(t);
    return std::sin(t) / n - d.c_n / (n + 2) * special::phi(n - 2, t) * c * c;
}

double aux_k_tilde(double t) {
    const double c = std::cos(t);
    const double pi2 = kPi * kPi;
    return 4.0 / (pi2 * pi2) * t * t * (pi2 + 4.0 * c) - 1.0 + c;
}

double aux_kappa_tilde(double t) {
    const double c = std::cos(t);
    return 0.5 * std::sin(t) - 2.0 / (kPi * kPi) * t * (1.0 + c * c);
}

double aux_m1(double t) {
    const double c = std::cos(t);
    return t - 0.5 * kPi * kPi * std::sqrt((1.0 - c) / (kPi * kPi + 4.0 * c));
}

double aux_m2(double t) {
    const double c = std::cos(t);
    return std::sin(t) / (1.0 + c * c) - 4.0 / (kPi * kPi) * t;
}

bool LemmaReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

// Lower-bound check "value > bound" on the interior grid nodes of (0, pi/2);
// worst_violation = max(bound - value), negative when the check passes with
// margin.
template <typename F>
LemmaCheck positive_check(const std::string& name, int R, F&& value) {
    LemmaCheck c;
    c.name = name;
    c.tolerance = 0.0;
    c.worst_violation = -1e300;
    for (int i = 0; i < R; ++i) {
        const double t = (i + 1) * (kPi / 2) / (R + 1);
        const double defect = -value(t);
        if (defect > c.worst_violation) {
            c.worst_violation = defect;
            c.where_t = t;
        }
    }
    c.pass = c.worst_violation <= c.tolerance;
    return c;
}

template <typename F>
LemmaCheck absolute_check(const std::string& name, int R, double tol, F&& value) {
    LemmaCheck c;
    c.name = name;
    c.tolerance = tol;
    c.worst_violation = 0.0;
    for (int i = 0; i < R; ++i) {
        const double t = (i + 1) * (kPi / 2) / (R + 1);
        const double defect = std::abs(value(t));
        if (defect > c.worst_violation) {
            c.worst_violation = defect;
            c.where_t = t;
        }
    }
    c.pass = c.worst_violation <= c.tolerance;
    return c;
}

}  // namespace

LemmaReport lemma_suite(int n, int resolution) {
    check_sweep_args(n, resolution, "lemma_suite");
    const int R = resolution;
    LemmaReport rep;
    rep.n = n;
    rep.resolution = R;

    rep.checks.push_back(positive_check("f_lower", R, [n](double t) { return aux_f(t, n); }));
    rep.checks.push_back(
        positive_check("f_upper", R, [n](double t) { return 1.0 - aux_f(t, n); }));

    // F at the interior critical point s_t = arcsin(f_n(t)) must be negative.
    rep.checks.push_back(positive_check("F_at_critical_s", R, [n](double t) {
        return -lemma_F(t, std::asin(aux_f(t, n)), n);
    }));

    // Full Lambda grid: F <= 1e-12 everywhere, and every node with
    // F > -1e-6 lies in the corner cell [0,h_t] x [0,h_s].
    {
        LemmaCheck grid;
        grid.name = "F_nonpositive_grid";
        grid.tolerance = 1e-12;
        LemmaCheck corner;
        corner.name = "F_near_zero_confined";
        corner.tolerance = 0.0;
        std::vector<double> worst(R, -1e300), wt(R, 0.0), ws(R, 0.0);
        std::vector<double> stray(R, 0.0);
        parallel::parallel_for(R, [&](std::size_t i) {
            const double t = double(i) * (kPi / 2) / R;
            const double h_s = (t + kPi / 2) / R;
            for (int j = 0; j < R; ++j) {
                const double s = j * h_s;
                const double v = lemma_F(t, s, n);
                if (v > worst[i]) {
                    worst[i] = v;
                    wt[i] = t;
                    ws[i] = s;
                }
                if (v > -1e-6 && (i > 1 || j > 1)) stray[i] += 1.0;
            }
        });
        for (int i = 0; i < R; ++i) {
            if (worst[i] > grid.worst_violation || i == 0) {
                grid.worst_violation = worst[i];
                grid.where_t = wt[i];
                grid.where_s = ws[i];
            }
            corner.worst_violation += stray[i];
        }
        grid.pass = grid.worst_violation <= grid.tolerance;
        corner.pass = corner.worst_violation <= corner.tolerance;
        rep.checks.push_back(grid);
        rep.checks.push_back(corner);
    }

    rep.checks.push_back(absolute_check("F_boundary_factorization", R, 1e-11, [n](double t) {
        return lemma_F_boundary(t, n) - lemma_F_boundary_factored(t, n);
    }));

    if (n == 3) {
        rep.checks.push_back(
            absolute_check("k3_zero", R, 1e-12, [](double t) { return aux_k(t, 3); }));
    } else if (n >= 4) {
        rep.checks.push_back(
            positive_check("k_positive", R, [n](double t) { return aux_k(t, n); }));
    }
    rep.checks.push_back(
        positive_check("kappa_positive", R, [n](double t) { return aux_kappa(t, n); }));

    if (n == 2) {
        rep.checks.push_back(positive_check("k_tilde_positive", R, aux_k_tilde));
        rep.checks.push_back(positive_check("kappa_tilde_positive", R, aux_kappa_tilde));
        rep.checks.push_back(positive_check("m1_positive", R, aux_m1));
        rep.checks.push_back(positive_check("m2_positive", R, aux_m2));
    }
    return rep;
}

}  // namespace trace_sharp::mv
