#include "trace_sharp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "trace_sharp/med.hpp"
#include "trace_sharp/parallel.hpp"
#include "trace_sharp/quotients.hpp"
#include "trace_sharp/special.hpp"

namespace trace_sharp::bvcheck {

namespace {

constexpr double kPi = std::numbers::pi;
using Point = std::array<double, 2>;

// --- 32-node Gauss-Legendre on [-1, 1], nodes by Newton on P_32 ---

struct GaussLegendre32 {
    std::array<double, 32> node{}, weight{};
    GaussLegendre32() {
        constexpr int n = 32;
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            node[i] = -x;
            node[n - 1 - i] = x;
            weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre32& gl32() {
    static const GaussLegendre32 g;
    return g;
}

// Line integrals over the unit-circle arc gamma(th) = (cos th, sin th) from
// angle a to b (ccw, b >= a): arc length of |gamma'| and the Green area term
// (x y' - y x')/2.
double arc_length_gl(double a, double b) {
    const auto& g = gl32();
    double acc = 0.0;
    for (int i = 0; i < 32; ++i) acc += g.weight[i];  // |gamma'| == 1
    return 0.5 * (b - a) * acc;
}

double arc_area_gl(double a, double b) {
    const auto& g = gl32();
    double acc = 0.0;
    for (int i = 0; i < 32; ++i) {
        const double th = a + 0.5 * (b - a) * (g.node[i] + 1.0);
        const double x = std::cos(th), y = std::sin(th);
        acc += g.weight[i] * 0.5 * (x * x + y * y);
    }
    return 0.5 * (b - a) * acc;
}

double cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; returns ccw hull without collinear points.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool point_in_convex(const std::vector<Point>& poly, const Point& p) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        if (cross(a, b, p) < 0.0) return false;
    }
    return true;
}

std::string fmt_params(const char* pattern, double a, double b = 0.0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

}  // namespace

CandidateSet2D clip_polygon_to_disk(std::vector<Point> vertices) {
    CandidateSet2D c;
    c.kind = CandidateKind::polygon_clip;
    c.vertices = vertices;
    const std::size_t n = vertices.size();
    if (n < 3) {
        c.degenerate = true;
        return c;
    }

    struct Piece {
        Point a, b;
        bool enters_by_crossing, exits_by_crossing;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = vertices[i];
        const Point q = vertices[(i + 1) % n];
        const double dx = q[0] - p[0], dy = q[1] - p[1];
        const double aa = dx * dx + dy * dy;
        if (aa == 0.0) continue;
        const double bb = p[0] * dx + p[1] * dy;
        const double cc = p[0] * p[0] + p[1] * p[1] - 1.0;
        const double disc = bb * bb - aa * cc;
        if (disc <= 0.0) {
            if (cc <= 0.0)  // fully inside
                pieces.push_back({p, q, false, false});
            continue;
        }
        const double sq = std::sqrt(disc);
        double t0 = (-bb - sq) / aa, t1 = (-bb + sq) / aa;
        const bool cross_in = t0 > 0.0 && t0 < 1.0;
        const bool cross_out = t1 > 0.0 && t1 < 1.0;
        t0 = std::max(t0, 0.0);
        t1 = std::min(t1, 1.0);
        if (t0 >= t1) continue;  // the inside interval misses [0, 1]
        const Point a{p[0] + t0 * dx, p[1] + t0 * dy};
        const Point b{p[0] + t1 * dx, p[1] + t1 * dy};
        pieces.push_back({a, b, cross_in, cross_out});
    }

    auto& m = c.measures;
    if (pieces.empty()) {
        if (point_in_convex(vertices, {0.0, 0.0})) {
            // disk entirely inside the polygon: E = B^2, zero relative perimeter
            m.boundary_share = 2.0 * kPi;
            m.volume = kPi;
            m.complement_volume = 0.0;
        }
        c.degenerate = true;
        return c;
    }

    double area = 0.0, seg_len = 0.0, arc_len = 0.0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const Piece& cur = pieces[k];
        const Piece& nxt = pieces[(k + 1) % pieces.size()];
        area += 0.5 * (cur.a[0] * cur.b[1] - cur.b[0] * cur.a[1]);
        seg_len += std::hypot(cur.b[0] - cur.a[0], cur.b[1] - cur.a[1]);
        if (cur.exits_by_crossing) {
            // boundary leaves the disk here and re-enters at the next piece;
            // the clipped region follows the circle ccw in between
            double a0 = std::atan2(cur.b[1], cur.b[0]);
            double a1 = std::atan2(nxt.a[1], nxt.a[0]);
            if (a1 < a0) a1 += 2.0 * kPi;
            arc_len += arc_length_gl(a0, a1);
            area += arc_area_gl(a0, a1);
        }
    }
    m.boundary_share = arc_len;
    m.relative_perimeter = seg_len;
    m.volume = area;
    m.complement_volume = kPi - area;
    if (!(m.relative_perimeter > 1e-12) || !(m.volume > 1e-12)) c.degenerate = true;
    return c;
}

CandidateSet2D sample_candidate(rng::Stream& stream) {
    CandidateSet2D c;
    switch (stream.uniform_int(0, 2)) {
        case 0: {
            c.kind = CandidateKind::half_moon;
            c.theta = stream.uniform(kPi / 2, kPi - 1e-3);
            c.varphi = stream.uniform(0.0, c.theta - 1e-6);
            c.measures = geometry::measures({c.theta, c.varphi, 2});
            break;
        }
        case 1: {
            c.kind = CandidateKind::cap;
            c.theta = stream.uniform(1e-3, kPi - 1e-3);
            c.measures = geometry::measures({c.theta, 0.0, 2});
            break;
        }
        default: {
            const int k = stream.uniform_int(3, 10);
            std::vector<Point> pts(k);
            for (auto& p : pts) p = {stream.uniform(-1.0, 1.0), stream.uniform(-1.0, 1.0)};
            return clip_polygon_to_disk(convex_hull(std::move(pts)));
        }
    }
    return c;
}

namespace {

OracleRow evaluate_row(const CandidateSet2D& c, double k_mv,
                       const std::optional<double>& sigma, double k_med) {
    OracleRow row;
    row.kind = c.kind;
    row.measures = c.measures;
    row.degenerate = c.degenerate;
    switch (c.kind) {
        case CandidateKind::half_moon:
            row.params = fmt_params("theta=%.9g;varphi=%.9g", c.theta, c.varphi);
            break;
        case CandidateKind::cap:
            row.params = fmt_params("theta=%.9g", c.theta);
            break;
        case CandidateKind::polygon_clip:
            row.params = fmt_params("vertices=%.17g", double(c.vertices.size()));
            break;
    }
    if (row.degenerate) return row;
    row.quotient_mv = quotients::q_mv(c.measures, 2).value;
    row.margin = k_mv - row.quotient_mv;
    if (sigma &&
        c.measures.volume <= *sigma * kPi * (1.0 + 1e-9)) {
        row.quotient_med = c.measures.boundary_share / c.measures.relative_perimeter;
        row.margin = std::min(row.margin, k_med - *row.quotient_med);
    }
    return row;
}

}  // namespace

OracleReport oracle_sample(std::uint64_t seed, int count, std::optional<double> sigma) {
    if (count < 1) throw std::domain_error("oracle_sample: count must be >= 1");
    OracleReport rep;
    rep.seed = seed;
    rep.count = count;
    rep.sigma = sigma;
    rep.k_mv = special::kmv_constant(2);
    med::MedSolution sol;
    if (sigma) {
        sol = med::solve(*sigma, 2);
        rep.k_med = sol.k_med;
    }

    rep.rows.resize(count);
    parallel::parallel_for(count, [&](std::size_t i) {
        auto stream = rng::substream(seed, i);
        rep.rows[i] = evaluate_row(sample_candidate(stream), rep.k_mv, sigma, rep.k_med);
    });

    // Injected extremals: the half-ball, and the solved half-moon for sigma.
    {
        CandidateSet2D hb;
        hb.kind = CandidateKind::half_moon;
        hb.theta = kPi / 2;
        hb.varphi = 0.0;
        hb.measures = geometry::measures({hb.theta, 0.0, 2});
        auto row = evaluate_row(hb, rep.k_mv, sigma, rep.k_med);
        row.injected = true;
        rep.injected_mv_error = std::abs(row.quotient_mv - rep.k_mv);
        rep.rows.push_back(row);
    }
    if (sigma) {
        CandidateSet2D hm;
        hm.kind = CandidateKind::half_moon;
        hm.theta = sol.theta_sigma;
        hm.varphi = sol.varphi_sigma;
        hm.measures = geometry::measures({hm.theta, hm.varphi, 2});
        auto row = evaluate_row(hm, rep.k_mv, sigma, rep.k_med);
        row.injected = true;
        rep.injected_med_error =
            row.quotient_med ? std::abs(*row.quotient_med - rep.k_med) : 1.0;
        rep.rows.push_back(row);
    }

    rep.max_quotient_mv = rep.max_quotient_med = -1.0;
    rep.margin_mv = rep.margin_med = 0.0;
    for (const auto& row : rep.rows) {
        if (row.degenerate) {
            ++rep.degenerate_count;
            continue;
        }
        rep.max_quotient_mv = std::max(rep.max_quotient_mv, row.quotient_mv);
        if (row.quotient_med)
            rep.max_quotient_med = std::max(rep.max_quotient_med, *row.quotient_med);
    }
    rep.margin_mv = rep.k_mv - rep.max_quotient_mv;
    if (sigma) rep.margin_med = rep.k_med - rep.max_quotient_med;
    return rep;
}

}  // namespace trace_sharp::bvcheck
