#include "trace_sharp/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trace_sharp::special {

namespace {

constexpr double kPi = std::numbers::pi;

double checked_angle(double t, const char* fn) {
    // Tiny slack absorbs representation error in arguments like pi - theta;
    // anything beyond it is a caller bug.
    constexpr double slack = 1e-12;
    if (!(t >= -slack && t <= kPi + slack)) {
        throw std::domain_error(std::string(fn) + ": angle " + std::to_string(t) +
                                " outside [0, pi]");
    }
    if (t < 0.0) return 0.0;
    if (t > kPi) return kPi;
    return t;
}

void check_order(int k, const char* fn) {
    if (k < 0) throw std::domain_error(std::string(fn) + ": negative power");
}

}  // namespace

double psi(int k, double t) {
    check_order(k, "psi");
    t = checked_angle(t, "psi");
    if (k == 0) return t;
    const double s = std::sin(t);
    const double p1 = 2.0 * std::sin(0.5 * t) * std::sin(0.5 * t);  // 1 - cos t
    if (k == 1) return p1;
    const double c = std::cos(t);
    // Walk only the parity chain that is needed.
    int j = 2 + (k & 1);
    double prev = (k & 1) ? p1 : t;
    double spow = (k & 1) ? s * s : s;  // s^{j-1}
    const double s2 = s * s;
    double cur = prev;
    for (; j <= k; j += 2) {
        cur = (double(j - 1) / j) * prev - c * spow / j;
        prev = cur;
        spow *= s2;
    }
    return cur;
}

double phi(int k, double t) {
    check_order(k, "phi");
    t = checked_angle(t, "phi");
    if (k == 0) return t;
    const double s = std::sin(t);
    if (k == 1) return s;
    const double c = std::cos(t);
    int j = 2 + (k & 1);
    double prev = (k & 1) ? s : t;
    double cpow = (k & 1) ? c * c : c;  // c^{j-1}
    const double c2 = c * c;
    double cur = prev;
    for (; j <= k; j += 2) {
        cur = (double(j - 1) / j) * prev + cpow * s / j;
        prev = cur;
        cpow *= c2;
    }
    return cur;
}

double unit_ball_volume(int n) {
    if (n < 0) throw std::domain_error("unit_ball_volume: negative dimension");
    return std::exp(0.5 * n * std::log(kPi) - std::lgamma(1.0 + 0.5 * n));
}

DimensionalConstants constants(int n) {
    if (n < 2) throw std::domain_error("constants: dimension must be >= 2");
    DimensionalConstants d;
    d.n = n;
    d.omega_n = unit_ball_volume(n);
    d.omega_nm1 = unit_ball_volume(n - 1);
    d.a_n = n * d.omega_n / d.omega_nm1;
    d.b_n = (n + 2) * d.omega_n / d.omega_nm1;
    d.c_n = 4.0 * d.omega_nm1 * d.omega_nm1 / (n * d.omega_n * d.omega_n);
    return d;
}

double kmv_constant(int n) {
    if (n < 2) throw std::domain_error("kmv_constant: dimension must be >= 2");
    return n * unit_ball_volume(n) / (2.0 * unit_ball_volume(n - 1));
}

namespace {

template <typename F>
double simpson(F&& f, double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    const double err = (left + right - whole) / 15.0;
    if (depth <= 0 || std::abs(err) <= tol) return left + right + err;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol) {
    if (b <= a) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(f, a, b, fa, fm, fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double psi_quadrature_oracle(int k, double t) {
    check_order(k, "psi_quadrature_oracle");
    t = checked_angle(t, "psi_quadrature_oracle");
    return integrate([k](double x) { return std::pow(std::sin(x), k); }, 0.0, t, 1e-13);
}

double phi_quadrature_oracle(int k, double t) {
    check_order(k, "phi_quadrature_oracle");
    t = checked_angle(t, "phi_quadrature_oracle");
    return integrate([k](double x) { return std::pow(std::cos(x), k); }, 0.0, t, 1e-13);
}

}  // namespace trace_sharp::special
