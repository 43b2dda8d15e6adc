#pragma once

// Solver for the extremal-median problem on B^n: along the volume
// constraint |E_{theta,varphi}| = sigma |B^n| (theta = f(varphi)), the
// median quotient G(f(varphi), varphi) has a unique interior maximum
// (theta_sigma, varphi_sigma), characterized by a two-equation system and
// the necessary condition G = 1/cos(theta - varphi).

namespace trace_sharp::med {

struct MedSolution {
    double sigma = 0.0;
    double rho = 0.0;           // max(sigma, 1 - sigma)
    int n = 0;
    double theta_sigma = 0.0;
    double varphi_sigma = 0.0;
    double k_med = 0.0;         // G(theta_sigma, varphi_sigma) = K_med(B^n, sigma)
    double residual_sys = 0.0;  // max |residual| of the two system equations
    double residual_nec = 0.0;  // |G - 1/cos(theta - varphi)|
};

// eta(varphi) = psi_n(varphi) / sin^n(varphi) on [0, pi); strictly
// increasing, 0 at varphi = 0, diverges at pi.
double eta(double varphi, int n);

// xi_sigma(theta) = (psi_n(theta) - sigma psi_n(pi)) / sin^n(theta) on
// [theta(sigma), pi); strictly increasing from 0.
double xi_sigma(double theta, double sigma, int n);

// The constraint map theta = f(varphi): the unique theta in
// [theta(sigma), pi) with xi_sigma(theta) = eta(varphi), i.e.
// |E_{theta,varphi}| = sigma |B^n|.  Bracketed bisection to machine
// resolution in theta.
double f_of_varphi(double varphi, double sigma, int n);

// Closed form for f'(varphi); used to cross-check finite differences and to
// certify f' < 1.
double f_derivative(double varphi, double sigma, int n);

// g(theta) = sigma (n-1) psi_{n-2}(pi) /
//            ((n-1) cos(theta) psi_{n-2}(theta) - sin^{n-1}(theta));
// negative on (0, pi).  Throws if the denominator vanishes within 1e-14.
double g_aux(double theta, double sigma, int n);

// F(varphi) = G(f(varphi), varphi) - 1/cos(f(varphi) - varphi); its unique
// zero is varphi_sigma.  Throws within 1e-10 of the pole f(varphi) - varphi
// = pi/2 (present only for sigma > 1/2).
double root_function(double varphi, double sigma, int n);

// Locates varphi_sigma by bracketed bisection (for sigma > 1/2 the search
// starts right of the pole), evaluates the system residuals and the
// necessary condition.  Requires sigma in (0, 1), n >= 2.
MedSolution solve(double sigma, int n);

// Brute-force maximum of G(f(varphi), varphi) over a varphi grid of the
// given resolution; dominates the varphi = 0 endpoint value and matches
// solve().k_med to grid accuracy.
double kmed_sweep(double sigma, int n, int resolution);

// G at the cap endpoint of the constraint curve:
// (n-1) psi_{n-2}(theta(sigma)) / sin^{n-1}(theta(sigma)).
double endpoint_value(double sigma, int n);

}  // namespace trace_sharp::med
