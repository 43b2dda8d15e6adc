#include "trace_sharp/quotients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "trace_sharp/special.hpp"

namespace trace_sharp::quotients {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuotientValue q_mv(const geometry::SetMeasures& m, int n) {
    if (!(m.relative_perimeter > 0.0))
        throw std::domain_error("q_mv: relative perimeter is zero (degenerate set)");
    const double omega = special::unit_ball_volume(n);
    const double total = n * omega;  // H^{n-1} of the whole sphere
    double vol = m.volume, cvol = m.complement_volume, bs = m.boundary_share;
    double far = total - bs;
    if (bs < far) {  // canonical orientation: larger share in the bs slot
        std::swap(vol, cvol);
        bs = far;
        far = total - bs;
    }
    const double num = vol * far + cvol * bs;
    return {num / (omega * m.relative_perimeter), Kind::mean_value};
}

QuotientValue q_mv_closed_form(const geometry::HalfMoonParams& p) {
    if (!geometry::in_theta(p))
        throw std::domain_error("q_mv_closed_form: (theta, varphi) outside Theta");
    const int n = p.n;
    const double om = special::unit_ball_volume(n);
    const double om1 = special::unit_ball_volume(n - 1);
    const double t = p.theta - kPi / 2;
    const double sn1 = std::pow(std::sin(p.theta), n - 1);
    const double sn = sn1 * std::sin(p.theta);
    const double num =
        n * om * om -
        4.0 * (n - 1) * om1 * om1 * special::phi(n - 2, t) *
            (special::phi(n, t) - geometry::volume_kernel(p.varphi, n) * sn);
    const double den =
        2.0 * (n - 1) * om1 * om * geometry::perimeter_kernel(p.varphi, n) * sn1;
    return {num / den, Kind::mean_value};
}

QuotientValue g_med(const geometry::HalfMoonParams& p) {
    if (!geometry::in_upsilon(p))
        throw std::domain_error("g_med: (theta, varphi) outside the parameter domain");
    const int n = p.n;
    const double sn1 = std::pow(std::sin(p.theta), n - 1);
    return {special::psi(n - 2, p.theta) /
                (geometry::perimeter_kernel(p.varphi, n) * sn1),
            Kind::median};
}

}  // namespace trace_sharp::quotients
