#pragma once

// Sine/cosine power integrals and the dimensional constants of the unit
// n-ball.  Everything here is a pure function of its arguments.

namespace trace_sharp::special {

// psi(k, t) = integral of sin^k over [0, t], for t in [0, pi].
// Evaluated by the closed upward recurrence from psi_0 = t, psi_1 = 1 - cos t.
// Absolute accuracy is a few ulp of t; relative accuracy degrades as t -> 0
// (the recurrence subtracts nearly equal terms), which is why callers that
// need small-angle ratios go through geometry's series kernels instead.
double psi(int k, double t);

// phi(k, t) = integral of cos^k over [0, t], for t in [0, pi].
double phi(int k, double t);

// Volume of the unit n-ball, computed through log-gamma (n up to a few
// hundred without overflow; the library is exercised for n <= 50).
double unit_ball_volume(int n);

struct DimensionalConstants {
    int n = 0;
    double omega_n = 0.0;    // |B^n|
    double omega_nm1 = 0.0;  // |B^{n-1}|
    double a_n = 0.0;        // n omega_n / omega_{n-1}, > 2
    double b_n = 0.0;        // (n+2) omega_n / omega_{n-1}, > 6
    double c_n = 0.0;        // 4 omega_{n-1}^2 / (n omega_n^2)
};

// Requires n >= 2.
DimensionalConstants constants(int n);

// K_mv(B^n) = n omega_n / (2 omega_{n-1}); the sharp mean-value constant.
double kmv_constant(int n);

// Independent verification oracles: adaptive Simpson quadrature of sin^k
// (resp. cos^k) over [0, t], absolute tolerance 1e-13.  Deliberately shares
// no code with the recurrence path above.
double psi_quadrature_oracle(int k, double t);
double phi_quadrature_oracle(int k, double t);

}  // namespace trace_sharp::special
