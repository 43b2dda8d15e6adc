#include "trace_sharp/geometry.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "trace_sharp/special.hpp"

namespace trace_sharp::geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesCutoff = 0.25;
constexpr int kSeriesTerms = 10;    // powers of t^2 through t^20
constexpr int kMaxSincPower = 64;

// Coefficients of (sin t / t)^m as a polynomial in x = t^2, truncated at x^J.
struct SincPowerTable {
    std::array<std::array<double, kSeriesTerms + 1>, kMaxSincPower + 1> c{};
    SincPowerTable() {
        std::array<double, kSeriesTerms + 1> base{};
        double fact = 1.0;  // (2j+1)!
        for (int j = 0; j <= kSeriesTerms; ++j) {
            if (j > 0) fact *= (2 * j) * (2 * j + 1);
            base[j] = (j % 2 == 0 ? 1.0 : -1.0) / fact;
        }
        c[0][0] = 1.0;
        for (int m = 1; m <= kMaxSincPower; ++m) {
            for (int a = 0; a <= kSeriesTerms; ++a) {
                double acc = 0.0;
                for (int b = 0; b <= a; ++b) acc += c[m - 1][b] * base[a - b];
                c[m][a] = acc;
            }
        }
    }
};

const SincPowerTable& sinc_table() {
    static const SincPowerTable table;
    return table;
}

double sinc_pow(int m, double x) {  // (sin t / t)^m at x = t^2
    const auto& c = sinc_table().c[m];
    double s = 0.0;
    for (int j = kSeriesTerms; j >= 0; --j) s = s * x + c[j];
    return s;
}

// psi_k(t) / t^{k+1} = sum_j c_j^{(k)} x^j / (k + 1 + 2j),  x = t^2.
double psi_ratio_series(int k, double x) {
    const auto& c = sinc_table().c[k];
    double s = 0.0;
    for (int j = kSeriesTerms; j >= 0; --j) s = s * x + c[j] / (k + 1 + 2 * j);
    return s;
}

int checked_kernel_dim(double p, int n, const char* fn) {
    if (n < 2) throw std::domain_error(std::string(fn) + ": dimension must be >= 2");
    if (n > kMaxSincPower) throw std::domain_error(std::string(fn) + ": dimension too large");
    if (!(p >= 0.0 && p < kPi)) throw std::domain_error(std::string(fn) + ": angle outside [0, pi)");
    return n;
}

}  // namespace

double perimeter_kernel(double p, int n) {
    checked_kernel_dim(p, n, "perimeter_kernel");
    if (p < kSeriesCutoff) {
        const double x = p * p;
        return psi_ratio_series(n - 2, x) / sinc_pow(n - 1, x);
    }
    return special::psi(n - 2, p) / std::pow(std::sin(p), n - 1);
}

double volume_kernel(double p, int n) {
    checked_kernel_dim(p, n, "volume_kernel");
    if (p < kSeriesCutoff) {
        const double x = p * p;
        return p * psi_ratio_series(n, x) / sinc_pow(n, x);
    }
    return special::psi(n, p) / std::pow(std::sin(p), n);
}

bool in_upsilon(const HalfMoonParams& p) {
    return p.theta > 0.0 && p.theta < kPi && p.varphi >= 0.0 && p.varphi < p.theta;
}

SetMeasures measures(const HalfMoonParams& p) {
    if (!in_upsilon(p))
        throw std::domain_error("measures: (theta, varphi) outside the parameter domain");
    const int n = p.n;
    const double om1 = special::unit_ball_volume(n - 1);
    const double sn1 = std::pow(std::sin(p.theta), n - 1);
    const double sn = sn1 * std::sin(p.theta);
    const double vk = volume_kernel(p.varphi, n);
    SetMeasures m;
    m.boundary_share = (n - 1) * om1 * special::psi(n - 2, p.theta);
    m.relative_perimeter = (n - 1) * om1 * perimeter_kernel(p.varphi, n) * sn1;
    m.volume = om1 * (special::psi(n, p.theta) - vk * sn);
    m.complement_volume = om1 * (special::psi(n, kPi - p.theta) + vk * sn);
    return m;
}

double cap_angle(double beta, int n) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("cap_angle: beta outside (0, 1)");
    if (n < 2) throw std::domain_error("cap_angle: dimension must be >= 2");
    const double target = beta * special::psi(n, kPi);
    double lo = 0.0, hi = kPi;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (special::psi(n, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

bool in_theta(const HalfMoonParams& p) {
    return p.theta >= kPi / 2 && p.theta < kPi && p.varphi >= 0.0 && p.varphi < p.theta;
}

bool in_xi(const HalfMoonParams& p, double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw std::domain_error("in_xi: sigma outside (0, 1)");
    const double om = special::unit_ball_volume(p.n);
    return measures(p).volume <= sigma * om * (1.0 + 1e-9);
}

RemovedBall removed_ball(const HalfMoonParams& p) {
    if (!in_upsilon(p) || p.varphi <= 0.0)
        throw std::domain_error("removed_ball: requires varphi > 0 inside the parameter domain");
    RemovedBall b;
    b.radius = std::sin(p.theta) / std::sin(p.varphi);
    b.center_x1 = std::cos(p.theta) - b.radius * std::cos(p.varphi);
    return b;
}

}  // namespace trace_sharp::geometry
