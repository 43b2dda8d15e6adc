#include "trace_sharp/layer_cake.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trace_sharp/med.hpp"
#include "trace_sharp/special.hpp"

namespace trace_sharp::bvcheck {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kVolumeSlack = 1e-9;  // relative, for threshold comparisons

double cap_volume(double theta, int n) {
    return special::unit_ball_volume(n - 1) * special::psi(n, theta);
}

double cap_perimeter(double theta, int n) {
    return special::unit_ball_volume(n - 1) * std::pow(std::sin(theta), n - 1);
}

// H^{n-1} measure of the boundary band with polar angle in (a, b).
double sphere_band(double a, double b, int n) {
    return (n - 1) * special::unit_ball_volume(n - 1) *
           (special::psi(n - 2, b) - special::psi(n - 2, a));
}

// Values of u on the boundary bands between consecutive cap angles,
// outermost band last (value = offset).
std::vector<double> band_values(const LayerCakeFunction& u) {
    const std::size_t m = u.jumps.size();
    std::vector<double> v(m + 1);
    v[m] = u.offset;
    for (std::size_t i = m; i-- > 0;) v[i] = v[i + 1] + u.jumps[i];
    return v;
}

}  // namespace

void validate(const LayerCakeFunction& u) {
    if (u.n < 2) throw std::invalid_argument("layer cake: dimension must be >= 2");
    if (u.cap_angles.size() != u.jumps.size())
        throw std::invalid_argument("layer cake: angles/jumps size mismatch");
    double prev = 0.0;
    for (double a : u.cap_angles) {
        if (!(a > prev && a < kPi))
            throw std::invalid_argument("layer cake: cap angles must increase within (0, pi)");
        prev = a;
    }
    for (double j : u.jumps)
        if (!(j > 0.0)) throw std::invalid_argument("layer cake: jumps must be positive");
}

double total_variation(const LayerCakeFunction& u) {
    validate(u);
    double tv = 0.0;
    for (std::size_t i = 0; i < u.jumps.size(); ++i)
        tv += u.jumps[i] * cap_perimeter(u.cap_angles[i], u.n);
    return tv;
}

double mv_value(const LayerCakeFunction& u) {
    validate(u);
    const double omega = special::unit_ball_volume(u.n);
    double acc = 0.0;
    for (std::size_t i = 0; i < u.jumps.size(); ++i)
        acc += u.jumps[i] * cap_volume(u.cap_angles[i], u.n);
    return u.offset + acc / omega;
}

double med_sigma_value(const LayerCakeFunction& u, double sigma) {
    validate(u);
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::domain_error("med_sigma_value: sigma outside (0, 1)");
    const double threshold =
        sigma * special::unit_ball_volume(u.n) * (1.0 + kVolumeSlack);
    // For t in [v_j, v_{j-1}) the superlevel set {u > t} is cap_j (j = 1..m).
    // Cap volumes increase with j, so the qualifying intervals are a prefix;
    // the median is the left endpoint of the last qualifying one, i.e. v at
    // the first cap that no longer fits under the threshold.
    const auto v = band_values(u);
    const std::size_t m = u.jumps.size();
    for (std::size_t j = 0; j < m; ++j) {
        if (cap_volume(u.cap_angles[j], u.n) > threshold) return v[j];
    }
    return u.offset;
}

double trace_distance(const LayerCakeFunction& u, double level) {
    validate(u);
    const auto v = band_values(u);
    const std::size_t m = u.jumps.size();
    double acc = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
        const double a = (i == 0) ? 0.0 : u.cap_angles[i - 1];
        const double b = (i == m) ? kPi : u.cap_angles[i];
        acc += std::abs(v[i] - level) * sphere_band(a, b, u.n);
    }
    return acc;
}

double trace_gap_mv(const LayerCakeFunction& u) { return trace_distance(u, mv_value(u)); }

double trace_gap_med(const LayerCakeFunction& u, double sigma) {
    return trace_distance(u, med_sigma_value(u, sigma));
}

double halfmoon_med_ratio(const geometry::HalfMoonParams& p, double sigma) {
    const auto m = geometry::measures(p);
    const double omega = special::unit_ball_volume(p.n);
    const double total = p.n * omega;
    // chi_E has median 0 when |E| fits under sigma|B^n|, else 1.
    const double med =
        m.volume <= sigma * omega * (1.0 + kVolumeSlack) ? 0.0 : 1.0;
    const double gap = med == 0.0 ? m.boundary_share : total - m.boundary_share;
    return gap / m.relative_perimeter;
}

LayerCakeFunction random_layer_cake(rng::Stream& stream, int n, int max_caps) {
    LayerCakeFunction u;
    u.n = n;
    const int m = stream.uniform_int(1, max_caps);
    u.cap_angles.resize(m);
    for (auto& a : u.cap_angles) a = stream.uniform(0.02, kPi - 0.02);
    std::sort(u.cap_angles.begin(), u.cap_angles.end());
    for (int i = 1; i < m; ++i)  // keep angles strictly separated
        u.cap_angles[i] = std::max(u.cap_angles[i], u.cap_angles[i - 1] + 1e-9);
    u.jumps.resize(m);
    for (auto& j : u.jumps) j = stream.uniform(0.01, 2.0);
    u.offset = stream.uniform(-2.0, 2.0);
    return u;
}

bool FunctionSuiteReport::pass() const {
    return worst_mv_excess <= 1e-9 && worst_med_excess <= 1e-9 &&
           worst_zero_set_excess <= 1e-9 && halfball_equality_error <= 1e-12 &&
           halfmoon_equality_error <= 1e-10;
}

FunctionSuiteReport run_function_suite(std::uint64_t seed, int count) {
    FunctionSuiteReport rep;
    rep.seed = seed;
    rep.count = count;

    constexpr int kDims[] = {2, 3, 4, 5};
    constexpr double kSigmas[] = {0.3, 0.5, 0.7};

    double kmv[6] = {};
    double kmed_rho[6][3] = {};    // K_med(B^n, max(sigma, 1-sigma))
    double kmed_sigma[6][3] = {};  // K_med(B^n, sigma), for the zero-set variant
    double zero_scale[6][3] = {};  // theta(1-sigma)/pi
    for (int n = 2; n <= 5; ++n) {
        kmv[n] = special::kmv_constant(n);
        for (int s = 0; s < 3; ++s) {
            kmed_rho[n][s] = med::solve(std::max(kSigmas[s], 1.0 - kSigmas[s]), n).k_med;
            kmed_sigma[n][s] = med::solve(kSigmas[s], n).k_med;
            zero_scale[n][s] = geometry::cap_angle(kSigmas[s], n) / kPi;
        }
    }

    rep.worst_mv_excess = rep.worst_med_excess = rep.worst_zero_set_excess = -1.0;
    for (int i = 0; i < count; ++i) {
        auto stream = rng::substream(seed, std::uint64_t(i));
        const int n = kDims[i % 4];
        const auto u = random_layer_cake(stream, n);
        const double tv = total_variation(u);
        rep.worst_mv_excess =
            std::max(rep.worst_mv_excess, trace_gap_mv(u) / (kmv[n] * tv) - 1.0);
        for (int s = 0; s < 3; ++s) {
            const double gap = trace_gap_med(u, kSigmas[s]);
            rep.worst_med_excess =
                std::max(rep.worst_med_excess, gap / (kmed_rho[n][s] * tv) - 1.0);
        }
        // Zero-set variant: offset 0 and angles compressed below
        // theta(sigma), so u vanishes on measure > (1 - sigma)|B^n|; then
        // ||trace||_1 <= K_med(sigma) * TV (the superlevel sets stay under
        // sigma |B^n|, which is what the set-level bound needs).
        for (int s = 0; s < 3; ++s) {
            LayerCakeFunction z = u;
            z.offset = 0.0;
            for (auto& a : z.cap_angles) a *= zero_scale[n][s];
            rep.worst_zero_set_excess = std::max(
                rep.worst_zero_set_excess,
                trace_distance(z, 0.0) / (kmed_sigma[n][s] * total_variation(z)) - 1.0);
        }
    }

    // Equality cases: the half-ball for the mean-value inequality ...
    {
        double worst = 0.0;
        for (int n = 2; n <= 5; ++n) {
            LayerCakeFunction hb{n, {kPi / 2}, {1.0}, 0.0};
            const double ratio = trace_gap_mv(hb) / total_variation(hb);
            worst = std::max(worst, std::abs(ratio / kmv[n] - 1.0));
        }
        rep.halfball_equality_error = worst;
    }
    // ... and the solved half-moon for the median inequality.
    {
        double worst = 0.0;
        for (int n = 2; n <= 5; ++n) {
            for (double sigma : kSigmas) {
                const auto sol = med::solve(sigma, n);
                const double ratio = halfmoon_med_ratio(
                    {sol.theta_sigma, sol.varphi_sigma, n}, sigma);
                worst = std::max(worst, std::abs(ratio / sol.k_med - 1.0));
            }
        }
        rep.halfmoon_equality_error = worst;
    }
    return rep;
}

}  // namespace trace_sharp::bvcheck
