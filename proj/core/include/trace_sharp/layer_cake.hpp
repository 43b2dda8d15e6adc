#pragma once

// Piecewise-constant BV functions on B^n built from nested spherical caps:
// u = offset + sum_i jumps[i] * chi(cap(cap_angles[i])).  Superlevel sets are
// exactly the caps, so total variation (coarea), boundary trace, mean and
// sigma-median are all closed-form exact.  This is the function-level test
// bed for the two trace inequalities and their equality cases.

#include <cstdint>
#include <vector>

#include "trace_sharp/geometry.hpp"
#include "trace_sharp/rng.hpp"

namespace trace_sharp::bvcheck {

struct LayerCakeFunction {
    int n = 2;
    std::vector<double> cap_angles;  // strictly increasing, in (0, pi)
    std::vector<double> jumps;       // positive, same length
    double offset = 0.0;
};

// Throws std::invalid_argument if the representation invariants fail.
void validate(const LayerCakeFunction& u);

// ||Du||(B^n) = sum_i jumps[i] * P(cap_i; B^n); exact by coarea.
double total_variation(const LayerCakeFunction& u);

// Mean value over B^n.
double mv_value(const LayerCakeFunction& u);

// sigma-median: inf { t : |{u > t}| <= sigma |B^n| } (volume comparisons
// carry 1e-9 relative slack; see geometry::in_xi).
double med_sigma_value(const LayerCakeFunction& u, double sigma);

// L1(boundary sphere) distance of the trace from a constant level.
double trace_distance(const LayerCakeFunction& u, double level);

double trace_gap_mv(const LayerCakeFunction& u);
double trace_gap_med(const LayerCakeFunction& u, double sigma);

// Equality-case machinery for u = chi(E_{theta,varphi}) (a single half-moon,
// not itself a layer cake of caps): trace gap about the sigma-median over TV.
double halfmoon_med_ratio(const geometry::HalfMoonParams& p, double sigma);

// Seeded random layer cake with up to max_caps caps and offsets in [-2, 2]
// (negative offsets exercise the positive/negative part decomposition).
LayerCakeFunction random_layer_cake(rng::Stream& stream, int n, int max_caps = 6);

// The seeded function-level verification suite: `count` random layer cakes
// spread over n = 2..5 are checked against both trace inequalities, the
// zero-set inequality, and the two equality cases.
struct FunctionSuiteReport {
    std::uint64_t seed = 0;
    int count = 0;
    // max over functions of gap/(constant * TV) - 1; <= 1e-9 required
    double worst_mv_excess = 0.0;
    double worst_med_excess = 0.0;
    double worst_zero_set_excess = 0.0;
    // equality attainment, relative errors
    double halfball_equality_error = 0.0;   // <= 1e-12
    double halfmoon_equality_error = 0.0;   // <= 1e-10
    bool pass() const;
};

FunctionSuiteReport run_function_suite(std::uint64_t seed, int count);

}  // namespace trace_sharp::bvcheck
