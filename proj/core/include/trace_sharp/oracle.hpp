#pragma once

// Randomized set-sampling oracle in the 2-disk: half-moons, caps, and random
// convex polygons clipped to the disk.  Every sample's quotients must stay
// below the certified constants; the injected extremal parameters must attain
// them.  This is the empirical stand-in for the reduction arguments that the
// closed-form sweeps do not exercise.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trace_sharp/geometry.hpp"
#include "trace_sharp/rng.hpp"

namespace trace_sharp::bvcheck {

enum class CandidateKind { half_moon, cap, polygon_clip };

struct CandidateSet2D {
    CandidateKind kind = CandidateKind::cap;
    double theta = 0.0;   // family kinds
    double varphi = 0.0;  // half-moon only
    std::vector<std::array<double, 2>> vertices;  // polygon_clip, convex ccw
    geometry::SetMeasures measures;
    bool degenerate = false;  // zero relative perimeter or empty intersection
};

// Measures of (convex polygon) intersected with the unit disk: arcs are
// integrated by 32-node Gauss-Legendre, the area by the shoelace formula
// over the clipped vertices plus circular-segment corrections.
CandidateSet2D clip_polygon_to_disk(std::vector<std::array<double, 2>> vertices);

// Deterministic candidate from a seeded substream: an even mix of the three
// kinds (half-moons over Theta, caps over (0, pi), convex hulls of 3..10
// points in the bounding square).
CandidateSet2D sample_candidate(rng::Stream& stream);

struct OracleRow {
    CandidateKind kind = CandidateKind::cap;
    std::string params;  // human-readable parameter summary for the CSV
    geometry::SetMeasures measures;
    double quotient_mv = 0.0;
    std::optional<double> quotient_med;  // present when eligible for sigma
    double margin = 0.0;  // smallest distance below the applicable constants
    bool degenerate = false;
    bool injected = false;
};

struct OracleReport {
    std::uint64_t seed = 0;
    int count = 0;
    std::optional<double> sigma;
    double k_mv = 0.0;            // pi/2
    double k_med = 0.0;           // solve(sigma, 2).k_med when sigma given
    int degenerate_count = 0;
    double max_quotient_mv = 0.0;
    double max_quotient_med = 0.0;  // over the sigma-eligible pool
    double margin_mv = 0.0;         // k_mv - max_quotient_mv
    double margin_med = 0.0;        // k_med - max_quotient_med
    double injected_mv_error = 0.0;   // |q(half-ball) - k_mv|
    double injected_med_error = 0.0;  // |q(solved half-moon) - k_med|
    std::vector<OracleRow> rows;
};

// Samples `count` candidates from seed-derived substreams, then appends the
// injected extremals (the half-ball; with sigma, the solved half-moon).
OracleReport oracle_sample(std::uint64_t seed, int count, std::optional<double> sigma);

}  // namespace trace_sharp::bvcheck
