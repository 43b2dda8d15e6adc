#pragma once

// The two isoperimetric quotients whose suprema over subsets of B^n are the
// sharp trace-inequality constants: the mean-value quotient Q_mv and the
// median quotient (boundary share over relative perimeter).

#include "trace_sharp/geometry.hpp"

namespace trace_sharp::quotients {

enum class Kind { mean_value, median };

struct QuotientValue {
    double value = 0.0;
    Kind kind = Kind::mean_value;
};

// Q_mv from raw measures:
//   [ |E| (n omega_n - bs) + |B^n \ E| bs ] / (omega_n * relative_perimeter).
// Evaluated in a complement-canonical order so that swapping
// (volume <-> complement_volume, bs <-> n omega_n - bs) reproduces the exact
// same float operations: the complement symmetry holds bit-for-bit.
QuotientValue q_mv(const geometry::SetMeasures& m, int n);

// Q_mv of a family set through the closed form in Phi_{n-2}, Phi_n, and the
// varphi ratio kernels; requires (theta, varphi) in Theta.
QuotientValue q_mv_closed_form(const geometry::HalfMoonParams& p);

// G(theta, varphi) = psi_{n-2}(theta) sin^{n-1}(varphi) /
//                    (psi_{n-2}(varphi) sin^{n-1}(theta)),
// the median quotient of E_{theta,varphi}; varphi = 0 extends to
// (n-1) psi_{n-2}(theta) / sin^{n-1}(theta).
QuotientValue g_med(const geometry::HalfMoonParams& p);

}  // namespace trace_sharp::quotients
