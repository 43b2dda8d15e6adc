#pragma once

// Certification of the sharp mean-value constant K_mv(B^n) = n omega_n /
// (2 omega_{n-1}): a grid maximization of the closed-form quotient over the
// reduced parameter set Theta, plus a grid certificate for the inequality
// F <= 0 on Lambda and its chain of auxiliary one-variable inequalities.

#include <string>
#include <vector>

namespace trace_sharp::mv {

struct SweepReport {
    int n = 0;
    int grid_resolution = 0;
    double max_value = 0.0;
    double argmax_theta = 0.0;
    double argmax_varphi = 0.0;
    double closed_form = 0.0;  // n omega_n / (2 omega_{n-1})
    double gap = 0.0;          // closed_form - max_value
};

// Maximizes q_mv_closed_form over a resolution x resolution grid of Theta
// (theta row-uniform on [pi/2, pi), varphi column-uniform on [0, theta)).
// Grids at resolution R are nested inside grids at 2R, so max_value is
// monotone under refinement.  Requires n >= 2, resolution >= 16.
SweepReport kmv_sweep(int n, int resolution);

// F(t, s) on Lambda = { 0 <= t < pi/2, 0 <= s < t + pi/2 }, continuity-
// extended at s = 0; F <= 0 with equality exactly at (0, 0).
double lemma_F(double t, double s, int n);

// Limit of F(t, s) as s -> (t + pi/2)^-, two algebraically equal routes.
double lemma_F_boundary(double t, int n);
double lemma_F_boundary_factored(double t, int n);

// One-variable auxiliaries of the certificate, all on t in (0, pi/2):
// f_n in (0,1); k_n > 0 for n >= 4 and k_3 == 0; kappa_n > 0; and for n = 2
// the sharpened pair k_tilde, kappa_tilde plus the bounds m1, m2.
double aux_f(double t, int n);
double aux_k(double t, int n);      // n >= 3
double aux_kappa(double t, int n);
double aux_k_tilde(double t);       // n = 2
double aux_kappa_tilde(double t);   // n = 2
double aux_m1(double t);            // n = 2
double aux_m2(double t);            // n = 2

struct LemmaCheck {
    std::string name;
    double worst_violation = 0.0;  // how far the worst grid node breaks the bound
    double tolerance = 0.0;        // allowed violation
    double where_t = 0.0;
    double where_s = 0.0;          // 0 for one-variable checks
    bool pass = false;
};

struct LemmaReport {
    int n = 0;
    int resolution = 0;
    std::vector<LemmaCheck> checks;
    bool all_pass() const;
};

// Runs the full grid certificate at the given resolution.  Violations are
// reported in the checks, never thrown.  Requires n >= 2, resolution >= 16.
LemmaReport lemma_suite(int n, int resolution);

}  // namespace trace_sharp::mv
