#include "trace_sharp/med.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trace_sharp/geometry.hpp"
#include "trace_sharp/parallel.hpp"
#include "trace_sharp/quotients.hpp"
#include "trace_sharp/special.hpp"

namespace trace_sharp::med {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaPad = 1e-9;  // keep the xi bracket away from theta = pi

void check_sigma(double sigma, const char* fn) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::domain_error(std::string(fn) + ": sigma outside (0, 1)");
}

void check_dim(int n, const char* fn) {
    if (n < 2) throw std::domain_error(std::string(fn) + ": dimension must be >= 2");
}

double g_of(const geometry::HalfMoonParams& p) {
    return quotients::g_med(p).value;
}

}  // namespace

double eta(double varphi, int n) {
    check_dim(n, "eta");
    if (!(varphi >= 0.0 && varphi < kPi))
        throw std::domain_error("eta: varphi outside [0, pi)");
    return geometry::volume_kernel(varphi, n);
}

double xi_sigma(double theta, double sigma, int n) {
    check_sigma(sigma, "xi_sigma");
    check_dim(n, "xi_sigma");
    if (!(theta > 0.0 && theta < kPi))
        throw std::domain_error("xi_sigma: theta outside (0, pi)");
    return (special::psi(n, theta) - sigma * special::psi(n, kPi)) /
           std::pow(std::sin(theta), n);
}

double f_of_varphi(double varphi, double sigma, int n) {
    check_sigma(sigma, "f_of_varphi");
    check_dim(n, "f_of_varphi");
    if (!(varphi >= 0.0 && varphi < kPi))
        throw std::domain_error("f_of_varphi: varphi outside [0, pi)");
    const double theta_sigma = geometry::cap_angle(sigma, n);
    if (varphi == 0.0) return theta_sigma;
    const double target = eta(varphi, n);
    double lo = theta_sigma, hi = kPi - kThetaPad;
    if (xi_sigma(hi, sigma, n) < target)
        throw std::runtime_error("f_of_varphi: bracketing failed (varphi too close to pi)");
    for (int i = 0; i < 200 && hi - lo > 4e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (xi_sigma(mid, sigma, n) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double f_derivative(double varphi, double sigma, int n) {
    const double theta = f_of_varphi(varphi, sigma, n);
    const double st = std::sin(theta), sp = std::sin(varphi);
    const double num = n * std::pow(st, n + 1) * special::psi(n, varphi);
    const double den =
        std::pow(sp, n) *
        (std::pow(st, n + 1) -
         n * std::cos(theta) * (special::psi(n, theta) - sigma * special::psi(n, kPi)));
    return 1.0 + num / den *
                     (std::cos(theta) / st - std::cos(varphi) / sp);
}

double g_aux(double theta, double sigma, int n) {
    check_sigma(sigma, "g_aux");
    check_dim(n, "g_aux");
    if (!(theta > 0.0 && theta < kPi))
        throw std::domain_error("g_aux: theta outside (0, pi)");
    const double den = (n - 1) * std::cos(theta) * special::psi(n - 2, theta) -
                       std::pow(std::sin(theta), n - 1);
    if (std::abs(den) < 1e-14)
        throw std::runtime_error("g_aux: denominator vanishes");
    return sigma * (n - 1) * special::psi(n - 2, kPi) / den;
}

double root_function(double varphi, double sigma, int n) {
    check_sigma(sigma, "root_function");
    check_dim(n, "root_function");
    if (!(varphi > 0.0 && varphi < kPi))
        throw std::domain_error("root_function: varphi outside (0, pi)");
    const double theta = f_of_varphi(varphi, sigma, n);
    const double gap = theta - varphi;
    if (std::abs(gap - kPi / 2) < 1e-10)
        throw std::runtime_error("root_function: at the pole f(varphi) - varphi = pi/2");
    return g_of({theta, varphi, n}) - 1.0 / std::cos(gap);
}

namespace {

// Bisection of root_function on [lo, hi], assuming F(lo) < 0 < F(hi).
double bisect_root(double lo, double hi, double sigma, int n) {
    for (int i = 0; i < 200 && hi - lo > 4e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (root_function(mid, sigma, n) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

MedSolution solve(double sigma, int n) {
    check_sigma(sigma, "solve");
    check_dim(n, "solve");
    double lo = 1e-8, hi = kPi - 1e-6;
    if (sigma > 0.5) {
        // f - varphi decreases from theta(sigma) > pi/2 to 0; locate the pole
        // and search right of it, where F rises from -inf to a positive limit.
        double a = lo, b = hi;
        for (int i = 0; i < 200 && b - a > 4e-16; ++i) {
            const double mid = 0.5 * (a + b);
            (f_of_varphi(mid, sigma, n) - mid > kPi / 2 ? a : b) = mid;
        }
        // Step far enough past the pole that the gap clears the pole guard.
        double step = 1e-9;
        lo = b + step;
        while (f_of_varphi(lo, sigma, n) - lo > kPi / 2 - 1e-9 && lo < hi) {
            step *= 2.0;
            lo = b + step;
        }
    }
    if (!(root_function(lo, sigma, n) < 0.0 && root_function(hi, sigma, n) > 0.0)) {
        // The analytic endpoint signs failed; scan ever finer before giving up.
        bool found = false;
        for (double step = 1e-2; step >= 1e-6 && !found; step /= 10.0) {
            double prev = root_function(lo, sigma, n);
            for (double x = lo + step; x < hi; x += step) {
                const double cur = root_function(x, sigma, n);
                if (prev < 0.0 && cur >= 0.0) {
                    hi = x;
                    lo = x - step;
                    found = true;
                    break;
                }
                prev = cur;
            }
        }
        if (!found)
            throw std::runtime_error("solve: no sign change of the root function found");
    }
    MedSolution s;
    s.sigma = sigma;
    s.rho = std::max(sigma, 1.0 - sigma);
    s.n = n;
    s.varphi_sigma = bisect_root(lo, hi, sigma, n);
    s.theta_sigma = f_of_varphi(s.varphi_sigma, sigma, n);

    const double theta = s.theta_sigma, varphi = s.varphi_sigma;
    s.k_med = g_of({theta, varphi, n});
    const double g = g_aux(theta, sigma, n);
    const double e1 = special::psi(n - 2, varphi) / special::psi(n - 2, theta) *
                          std::pow(std::sin(theta) / std::sin(varphi), n) -
                      (1.0 - g * std::cos(theta));
    const double e2 = std::cos(varphi) / std::sin(varphi) -
                      (std::cos(theta) - g) / std::sin(theta);
    s.residual_sys = std::max(std::abs(e1), std::abs(e2));
    s.residual_nec = std::abs(s.k_med - 1.0 / std::cos(theta - varphi));
    return s;
}

double kmed_sweep(double sigma, int n, int resolution) {
    check_sigma(sigma, "kmed_sweep");
    check_dim(n, "kmed_sweep");
    if (resolution < 16) throw std::domain_error("kmed_sweep: resolution must be >= 16");
    const int R = resolution;
    std::vector<double> chunk_max(R, -1.0);
    parallel::parallel_for(R, [&](std::size_t j) {
        const double varphi = (j + 0.5) * kPi / R;
        const double theta = f_of_varphi(varphi, sigma, n);
        chunk_max[j] = g_of({theta, varphi, n});
    });
    double best = -1.0;
    for (double v : chunk_max) best = std::max(best, v);
    return best;
}

double endpoint_value(double sigma, int n) {
    check_sigma(sigma, "endpoint_value");
    check_dim(n, "endpoint_value");
    const double theta = geometry::cap_angle(sigma, n);
    return g_of({theta, 0.0, n});
}

}  // namespace trace_sharp::med
