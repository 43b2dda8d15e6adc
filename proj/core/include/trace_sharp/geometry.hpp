#pragma once

// The two-parameter family E_{theta,varphi} = B^n \ B (the unit ball minus
// another ball, meeting it at polar angle theta; varphi is the angle of the
// removed ball's radius through the same point).  varphi = 0 is the
// spherical-cap limit where the removed ball degenerates to a half-space.

namespace trace_sharp::geometry {

struct HalfMoonParams {
    double theta = 0.0;   // in (0, pi)
    double varphi = 0.0;  // in [0, theta)
    int n = 2;
};

// The four geometric quantities of a subset of B^n (natural units).
struct SetMeasures {
    double boundary_share = 0.0;      // H^{n-1}(essential boundary on the sphere)
    double relative_perimeter = 0.0;  // H^{n-1}(essential boundary inside the ball)
    double volume = 0.0;
    double complement_volume = 0.0;
};

// Small-angle-safe ratio kernels shared by the closed-form expressions:
//   perimeter_kernel(p, n) = psi_{n-2}(p) / sin^{n-1}(p),  -> 1/(n-1) at p = 0
//   volume_kernel(p, n)    = psi_n(p) / sin^n(p),          -> 0 at p = 0
// Below p = 1/4 they are evaluated from the Taylor series of (sin t / t)^m
// through t^20; the raw recurrence ratio loses all relative accuracy there.
double perimeter_kernel(double p, int n);
double volume_kernel(double p, int n);

bool in_upsilon(const HalfMoonParams& p);  // 0 < theta < pi, 0 <= varphi < theta

// Closed-form measures of E_{theta,varphi}; the varphi = 0 column is the
// continuity extension (relative_perimeter -> omega_{n-1} sin^{n-1} theta).
SetMeasures measures(const HalfMoonParams& p);

// The unique cap angle theta(beta) in (0, pi) with psi_n(theta) = beta psi_n(pi),
// i.e. |E_{theta,0}| = beta |B^n|.  Bracketed bisection; strictly increasing
// in beta.
double cap_angle(double beta, int n);

// Membership in Theta = { pi/2 <= theta < pi, 0 <= varphi < theta }.
bool in_theta(const HalfMoonParams& p);

// Volume constraint |E_{theta,varphi}| <= sigma |B^n| (with 1e-9 relative
// slack so exact-threshold sets, e.g. the half-ball at sigma = 1/2, test true).
bool in_xi(const HalfMoonParams& p, double sigma);

// Center (on the x1-axis) and radius of the removed ball; requires varphi > 0.
struct RemovedBall {
    double center_x1 = 0.0;
    double radius = 0.0;
};
RemovedBall removed_ball(const HalfMoonParams& p);

}  // namespace trace_sharp::geometry
