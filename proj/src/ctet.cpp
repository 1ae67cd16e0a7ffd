#include "clausen/ctet.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

#include "clausen/quad.hpp"
#include "clausen/specfun.hpp"

namespace clausen::ctet {

using numkit::kEps;
using specfun::cl2;

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kLn2 = 0.6931471805599453;
const DD kLn2DD(0.6931471805599453, 2.3190468138462996e-17);
constexpr double kSqrt2 = 1.4142135623730951;

// ln|v|, with the measure-zero point v == 0 dropped
double logabs(double v) { return v == 0.0 ? 0.0 : std::log(std::fabs(v)); }

double cl2b(double t) { return cl2(t, 1e-15).bound; }

Sides quad_sides(const quad::QuadResult& q, double rhs) {
    if (!q.converged) throw DomainError("quadrature did not converge");
    return {q.value, rhs, q.err_estimate, 0.0};
}

// GK over pieces split at the given interior points, tanh-sinh when the split is a log singularity
quad::QuadResult split_quad(const quad::Integrand& f, double a, double b, std::vector<double> cuts,
                            double tol, bool singular) {
    std::vector<double> pts{a};
    for (double c : cuts)
        if (c > a && c < b) pts.push_back(c);
    pts.push_back(b);
    std::sort(pts.begin() + 1, pts.end() - 1);
    quad::QuadResult total;
    total.converged = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        auto r = singular ? quad::tanh_sinh(f, pts[i], pts[i + 1], tol)
                          : quad::gauss_kronrod(f, pts[i], pts[i + 1], tol);
        total.value += r.value;
        total.err_estimate += r.err_estimate;
        total.evals += r.evals;
        total.converged = total.converged && r.converged;
    }
    return total;
}

}  // namespace

// ---------------------------------------------------------------- routes

std::string_view route_name(Route r) {
    switch (r) {
        case Route::series: return "series";
        case Route::clausen: return "clausen";
        case Route::rajantie: return "rajantie";
        case Route::srp: return "srp";
    }
    return "?";
}

bool parse_route(std::string_view s, Route& out) {
    for (Route r : {Route::series, Route::clausen, Route::rajantie, Route::srp})
        if (route_name(r) == s) {
            out = r;
            return true;
        }
    return false;
}

double route_tolerance(Route r) {
    switch (r) {
        case Route::rajantie: return 1e-9;
        case Route::srp: return 1e-11;
        default: return 1e-12;
    }
}

DD ctet_series_dd() {
    DD sum(0.0), h(0.0), three_ln2 = DD(3.0) * kLn2DD;
    double w = 1.0;
    for (int n = 0; n < 48; ++n) {
        if (n > 0) h += DD(1.0) / DD(n);
        DD inv = DD(2.0) / DD(2.0 * n + 1.0);
        sum += DD(w) * inv * (inv - three_ln2 - DD(3.0) * h);
        w *= -0.125;
    }
    return sum;
}

ExtReal ctet_series(double tol) {
    if (!(tol >= 1e-16)) throw DomainError("ctet_series: tol must be at least 1e-16");
    DD sum(0.0), h(0.0), three_ln2 = DD(3.0) * kLn2DD;
    double w = 1.0, tail = 0.0;
    for (int n = 0; n < 64; ++n) {
        if (n > 0) h += DD(1.0) / DD(n);
        DD inv = DD(2.0) / DD(2.0 * n + 1.0);
        DD term = DD(w) * inv * (inv - three_ln2 - DD(3.0) * h);
        sum += term;
        tail = std::fabs(static_cast<double>(term)) * 0.125 / (1.0 - 0.125) * (1.0 + std::log(n + 2.0));
        if (tail < 1e-3 * tol) break;
        w *= -0.125;
    }
    double v = static_cast<double>(sum);
    return {v, tail + 0.5 * kEps * std::fabs(v)};
}

ExtReal ctet_clausen() {
    const double a = numkit::constants().alpha;
    const double k = 4.0 * kSqrt2;
    double v = k * (cl2(4.0 * a) - cl2(2.0 * a));
    return {v, k * (cl2b(4.0 * a) + cl2b(2.0 * a)) + 4.0 * kEps * std::fabs(v)};
}

double ctet_clausen_duplicated() {
    const double w = numkit::constants().omega;
    return 4.0 * kSqrt2 * (cl2(2.0 * w) + 2.0 * cl2(2.0 * w + kPi));
}

namespace {

double rajantie_integrand(double x) {
    double v = std::log(0.75) + std::log((x + 3.0) / (x + 2.0)) +
               x * x / (x * x - 4.0) * std::log(4.0 / (x + 2.0)) +
               x / (x + 2.0) * std::log((x + 3.0) / 3.0);
    return v / std::sqrt(3.0 - x * x);
}

}  // namespace

ExtReal ctet_rajantie(double tol) {
    if (!(tol >= 1e-13)) throw DomainError("ctet_rajantie: tol must be at least 1e-13");
    auto r = quad::gauss_kronrod(rajantie_integrand, 0.0, 1.0, tol);
    if (!r.converged) throw DomainError("ctet_rajantie: quadrature did not converge");
    const double k = 4.0 * kSqrt2;
    return {k * r.value, k * r.err_estimate + 4.0 * kEps * std::fabs(k * r.value)};
}

RajantieSplit rajantie_split(double tol) {
    const double ln4 = 2.0 * kLn2, ln3 = std::log(3.0);
    auto elem = [ln4](double x) {
        return (1.0 / (x - 2.0) - 1.0 / (x + 2.0)) * ln4 / std::sqrt(3.0 - x * x);
    };
    auto whole = [=](double x) {
        double v = (1.0 / (x - 2.0) - 1.0 / (x + 2.0)) * ln4 +
                   2.0 * (1.0 - 1.0 / (x + 2.0)) * std::log(x + 3.0) -
                   (2.0 + 1.0 / (x - 2.0) - 1.0 / (x + 2.0)) * std::log(x + 2.0) +
                   2.0 * ln3 / (x + 2.0);
        return v / std::sqrt(3.0 - x * x);
    };
    RajantieSplit s;
    s.elementary = quad::qgk(elem, 0.0, 1.0, tol);
    s.elementary_closed = numkit::constants().theta_plus * ln4;
    s.total = 4.0 * kSqrt2 * quad::qgk(whole, 0.0, 1.0, tol);
    return s;
}

double srp_integral(const SrpParameters& p) {
    const double s = p.sigma_abs;
    auto term = [s](double g) { return cl2(kPi - 2.0 * std::atan(g / s)); };
    double a = 0.0, b = 0.0;
    for (double g : p.Gamma) a += term(g);
    for (const auto& row : p.gamma)
        for (double g : row) b += term(g);
    const double pi3 = kPi * kPi * kPi;
    return 16.0 * pi3 / s * (-2.0 * a + b);
}

ExtReal ctet_srp() {
    const double pi3 = kPi * kPi * kPi;
    double v = srp_integral() / (8.0 * pi3);
    // 22 Clausen values with weight up to 2 sqrt2
    double b = 2.0 * kSqrt2 * 22.0 * cl2b(1.0) + 64.0 * kEps * std::fabs(v);
    return {v, b};
}

double ctet_srp_collected() {
    const double tp = numkit::constants().theta_plus;
    return 2.0 * kSqrt2 *
           (-3.0 * cl2(2.0 * tp) + 6.0 * cl2(kPi + 2.0 * std::atan(1.0 / kSqrt2)) +
            2.0 * cl2(kPi - 2.0 * std::atan(5.0 / kSqrt2)));
}

RouteValue evaluate(Route r) {
    switch (r) {
        case Route::series: return {r, ctet_series(1e-16)};
        case Route::clausen: return {r, ctet_clausen()};
        case Route::rajantie: return {r, ctet_rajantie(1e-12)};
        case Route::srp: return {r, ctet_srp()};
    }
    throw std::logic_error("unknown route");
}

std::vector<RouteValue> evaluate_all() {
    std::vector<RouteValue> out;
    for (Route r : {Route::series, Route::clausen, Route::rajantie, Route::srp})
        out.push_back(evaluate(r));
    return out;
}

// ---------------------------------------------------------------- log-trig integrals

Sides sin_shift_log(double kappa, double alpha, double u, double tol) {
    if (!(kappa > 0.0) || !(std::fabs(u) <= std::fabs(alpha)))
        throw DomainError("sin_shift_log: need kappa > 0, |u| <= |alpha|");
    auto f = [=](double x) { return std::log(std::sin(kappa * x) + std::sin(alpha)); };
    auto q = quad::tanh_sinh(f, std::min(0.0, u), std::max(0.0, u), tol);
    q.value *= (u < 0 ? -kappa : kappa);
    q.err_estimate *= kappa;
    double ku = kappa * u;
    double rhs = cl2(alpha) - cl2(ku + alpha) + cl2(alpha - ku + kPi) - cl2(alpha + kPi) - ku * kLn2;
    return quad_sides(q, rhs);
}

Sides cos_diff_log(double A, double k, double x, double tol) {
    if (!(k > 0.0) || !(x > 0.0)) throw DomainError("cos_diff_log: need k > 0, x > 0");
    auto f = [=](double t) { return logabs(std::cos(A) - std::cos(k * t)); };
    std::vector<double> cuts;
    for (int m = 0; 2.0 * kPi * m - std::fabs(A) <= k * x; ++m) {
        cuts.push_back((2.0 * kPi * m + A) / k);
        cuts.push_back((2.0 * kPi * m - A) / k);
    }
    auto q = split_quad(f, 0.0, x, cuts, tol, true);
    double rhs = -(cl2(k * x - A) + cl2(k * x + A) + k * x * kLn2) / k;
    return quad_sides(q, rhs);
}

double sin_cosh_log_closed(double A, double k, double x) {
    if (!(A > 0.0) || k == 0.0) throw DomainError("sin_cosh_log: need A > 0, k != 0");
    const double r1 = std::exp(-A);
    const double kx = k * x;
    const double th1 = kx - 0.5 * kPi;
    const double w1 = -std::atan(r1 * std::cos(kx) / (1.0 - r1 * std::sin(kx)));
    const double ar = std::atan(r1);
    double brace = -2.0 * A * (w1 + ar) + cl2(2.0 * ar) - cl2(kPi + 2.0 * ar) + cl2(2.0 * w1) -
                   cl2(2.0 * w1 + 2.0 * th1) + cl2(2.0 * th1);
    return (A - kLn2) * x - brace / k;
}

Sides sin_cosh_log(double A, double k, double x, double tol) {
    double rhs = sin_cosh_log_closed(A, k, x);
    const double ch = std::cosh(A);
    auto f = [=](double t) { return std::log(std::fabs(std::sin(k * t) - ch)); };
    auto q = quad::gauss_kronrod(f, std::min(0.0, x), std::max(0.0, x), tol);
    if (x < 0) q.value = -q.value;
    return quad_sides(q, rhs);
}

cplx trig_kernel_closed(TrigKernel kind, double b) {
    const cplx I(0.0, 1.0);
    const cplx e = std::exp(I * b), e2 = std::exp(2.0 * I * b);
    const double pi2 = kPi * kPi;
    switch (kind) {
        case TrigKernel::a_over_sin:
            return cl2(b) - cl2(b + kPi) + I * (kPi / 4.0) * (2.0 * b - kPi) +
                   b * std::log((1.0 - e) / (1.0 + e)) + I * pi2 / 4.0;
        case TrigKernel::a_over_tan:
            return cl2(b) + cl2(b + kPi) - I * pi2 / 4.0 + b * (std::log(1.0 - e2) - I * b / 2.0) +
                   0.5 * I * (kPi * b - b * b + pi2 / 2.0);
        case TrigKernel::a2_over_sin2:
            return cl2(2.0 * b) + I * b * (kPi - 2.0 * b) +
                   b * (2.0 * std::log(1.0 - e2) - b / std::tan(b));
        case TrigKernel::a2_over_tan2:
            return trig_kernel_closed(TrigKernel::a2_over_sin2, b) - b * b * b / 3.0;
    }
    return {};
}

Sides trig_kernel(TrigKernel kind, double b, double tol) {
    if (!(b > 0.0 && b < 2.0 * kPi)) throw DomainError("trig_kernel: need 0 < b < 2pi");
    auto f = [kind](double a) {
        if (std::fabs(a) < 1e-9) return 1.0;
        switch (kind) {
            case TrigKernel::a_over_sin: return a / std::sin(a);
            case TrigKernel::a_over_tan: return a / std::tan(a);
            case TrigKernel::a2_over_sin2: {
                double s = a / std::sin(a);
                return s * s;
            }
            case TrigKernel::a2_over_tan2: {
                double s = a / std::tan(a);
                return s * s;
            }
        }
        return 0.0;
    };
    auto q = quad::gauss_kronrod(f, 0.0, b, tol);
    cplx c = trig_kernel_closed(kind, b);
    auto s = quad_sides(q, c.real());
    s.imag_residue = c.imag();
    return s;
}

// distance from (0, b] to the nearest zero of sin x + a, or +inf if there is none
double sin_plus_pole_gap(double a, double b) {
    const double x1 = std::asin(-a);
    double gap = std::numeric_limits<double>::infinity();
    for (double z : {x1, kPi - x1, x1 + 2.0 * kPi, 3.0 * kPi - x1}) {
        if (z > 0.0 && z <= b) return 0.0;
        if (z > b) gap = std::min(gap, z - b);
        if (z <= 0.0) gap = std::min(gap, -z);
    }
    return gap;
}

Sides x_over_sin_plus(double a, double b, double tol) {
    if (!(std::fabs(a) < 1.0)) throw DomainError("x_over_sin_plus: need |a| < 1");
    if (sin_plus_pole_gap(a, b) == 0.0) throw DomainError("x_over_sin_plus: sin x + a vanishes in (0, b]");
    const double s = std::sqrt(1.0 - a * a), phi = std::atan(a / s);
    double rhs = (cl2(b + phi) + cl2(kPi + phi - b) - 0.5 * cl2(2.0 * phi) +
                  b * std::log(std::fabs(std::sin(0.5 * (b + phi)) / std::cos(0.5 * (b - phi))))) /
                 s;
    auto q = quad::gauss_kronrod([a](double x) { return x / (std::sin(x) + a); }, 0.0, b, tol);
    return quad_sides(q, rhs);
}

Sides x_over_sin_plus_dilog(double a, double b, double tol) {
    if (!(std::fabs(a) < 1.0)) throw DomainError("x_over_sin_plus_dilog: need |a| < 1");
    if (sin_plus_pole_gap(a, b) == 0.0) throw DomainError("x_over_sin_plus_dilog: sin x + a vanishes in (0, b]");
    using specfun::li2;
    const cplx I(0.0, 1.0);
    const double s = std::sqrt(1.0 - a * a);
    const cplx up = I * a + s, um = I * a - s, e = std::exp(-I * b);
    cplx v = 2.0 * I / (um - up) *
             (li2(1.0 / up) - li2(1.0 / um) + li2(e / um) - li2(e / up) +
              I * b * std::log((1.0 - e / up) / (1.0 - e / um)));
    auto q = quad::gauss_kronrod([a](double x) { return x / (std::sin(x) + a); }, 0.0, b, tol);
    auto out = quad_sides(q, v.real());
    out.imag_residue = v.imag();
    return out;
}

Sides x_over_tan_plus(double a, double b, double tol) {
    const double d = std::atan(a);
    if (!(a > 0.0) || !(b > 0.0 && b + d < kPi))
        throw DomainError("x_over_tan_plus: need a > 0, 0 < b < pi - atan a");
    auto F = [](double c) { return c * std::log(std::fabs(2.0 * std::sin(c))) + 0.5 * cl2(2.0 * c); };
    const double cd = std::cos(d), sd = std::sin(d);
    double rhs = cd * cd * (F(b + d) - F(d) - d * std::log(std::fabs(std::sin(b + d) / sd))) +
                 sd * cd * b * b / 2.0;
    auto f = [a](double x) { return x * std::cos(x) / (std::sin(x) + a * std::cos(x)); };
    auto q = quad::gauss_kronrod(f, 0.0, b, tol);
    return quad_sides(q, rhs);
}

TanPlusReadings x_over_tan_plus_stated(double a, double b, double tol) {
    const cplx I(0.0, 1.0);
    auto f = [a](double x) { return x * std::cos(x) / (std::sin(x) + a * std::cos(x)); };
    TanPlusReadings out{};
    out.quadrature = quad::qgk(f, 0.0, b, tol);
    const cplx vp = std::sqrt((1.0 + I * a) / (1.0 - I * a));
    for (int range = 0; range < 2; ++range) {
        double pa = -std::atan(2.0 * a / (1.0 - a * a));
        if (range == 1) pa = specfun::normalize_angle(pa);
        cplx g1 = 2.0 / (1.0 + a * a) *
                  (cl2(pa) - cl2(pa - 2.0 * b) + 2.0 * b * std::log(1.0 - std::exp(I * (pa - 2.0 * b))));
        cplx g2 = 2.0 * I * b / (1.0 + I * a) * (b + (b - pa + kPi) / (1.0 - I * a));
        out.sum[range] = (g1 + g2) / (8.0 * vp);
        out.product[range] = g1 * g2 / (8.0 * vp);
    }
    return out;
}

Sides sin_sq_diff_log(double alpha, double u, double tol) {
    if (!(std::fabs(u) <= std::fabs(alpha)) || !(u >= 0.0))
        throw DomainError("sin_sq_diff_log: need 0 <= u <= |alpha|");
    const double sa = std::sin(alpha);
    auto f = [sa](double x) {
        double s = std::sin(x);
        return logabs(s * s - sa * sa);
    };
    auto q = split_quad(f, 0.0, u, {std::fabs(alpha)}, tol, true);
    double rhs = 0.5 * (cl2(2.0 * (alpha - u)) - cl2(2.0 * (alpha + u))) - 2.0 * u * kLn2;
    return quad_sides(q, rhs);
}

Sides x_over_sin_shift(double a, double b, double tol) {
    if (!(a > 0.0 && b > 0.0 && a + b < kPi)) throw DomainError("x_over_sin_shift: need a, b > 0, a + b < pi");
    cplx d = trig_kernel_closed(TrigKernel::a_over_sin, a + b) -
             trig_kernel_closed(TrigKernel::a_over_sin, a);
    double rhs = d.real() - a * (std::log(std::tan(0.5 * (a + b))) - std::log(std::tan(0.5 * a)));
    auto q = quad::gauss_kronrod([a](double x) { return x / std::sin(x + a); }, 0.0, b, tol);
    auto out = quad_sides(q, rhs);
    out.imag_residue = d.imag();
    return out;
}

Sides j_integral(double c, double d, double tol) {
    if (!(d > 1.0 && c > d)) throw DomainError("j_integral: need d > 1, c/d > 1");
    const double x = std::asin(1.0 / d);
    double rhs = std::log(d) * x + sin_cosh_log_closed(std::acosh(c / d), -1.0, x);
    auto q = quad::gauss_kronrod(
        [c, d](double t) { return std::log(t + c) / std::sqrt(d * d - t * t); }, 0.0, 1.0, tol);
    return quad_sides(q, rhs);
}

namespace {

double log_ratio_closed(double a, double b) {
    const double th = std::acos((1.0 - a * a) / (1.0 + a * a));
    const double r = (b + a) / (b - a);
    const double w = std::atan2(r * std::sin(th), 1.0 - r * std::cos(th));
    const double chi = kPi - th - w;
    return cl2(kPi - th) - 0.5 * (cl2(2.0 * w) + cl2(2.0 * chi));
}

}  // namespace

Sides log_ratio_tail(double a, double b, double tol) {
    if (!(a > 0.0 && b > a)) throw DomainError("log_ratio_tail: need b > a > 0");
    auto f = [a](double u) { return std::log1p(2.0 * a / (u - a)) / (1.0 + u * u); };
    auto q = quad::integrate_semi_infinite(f, b, tol);
    return quad_sides(q, log_ratio_closed(a, b));
}

Sides log_ratio_angle(double a, double b, double tol) {
    if (!(a > 0.0 && b >= 0.0 && b != a)) throw DomainError("log_ratio_angle: need a > 0, b >= 0, b != a");
    auto f = [a](double p) {
        double s = std::sin(p), c = std::cos(p);
        return logabs(s + a * c) - logabs(s - a * c);
    };
    auto q = split_quad(f, std::atan(b), 0.5 * kPi, {std::atan(a)}, tol, true);
    return quad_sides(q, log_ratio_closed(a, b));
}

Sides log_kernel_clausen(double theta, double r, double tol) {
    if (!(theta > 0.0 && theta < kPi && r > 0.0)) throw DomainError("log_kernel_clausen: need 0 < theta < pi, r > 0");
    const double w = std::atan2(r * std::sin(theta), 1.0 - r * std::cos(theta));
    const double chi = kPi - theta - w;
    double rhs = 0.5 * (cl2(2.0 * theta) + cl2(2.0 * w) + cl2(2.0 * chi));
    const double ct = std::cos(theta);
    auto f = [ct](double y) { return logabs(y) / (1.0 - 2.0 * y * ct + y * y); };
    auto q = quad::tanh_sinh(f, 0.0, r, tol);
    q.value *= -std::sin(theta);
    q.err_estimate *= std::sin(theta);
    return quad_sides(q, rhs);
}

namespace {

struct CoshClosed {
    double full, plus, minus;
};

CoshClosed cosh_closed(double y, double t) {
    const double ey = std::exp(y), st = std::sin(t), ct = std::cos(t), csc = 1.0 / st;
    const double w1 = std::atan(ey * st / (1.0 + ey * ct));
    const double w3 = std::atan(ey * st / (1.0 - ey * ct));
    CoshClosed c;
    c.full = csc / 4.0 *
             (-4.0 * cl2(kPi + t) - cl2(2.0 * w1) + cl2(2.0 * (w1 - t)) + cl2(2.0 * t) -
              cl2(2.0 * w3) + cl2(2.0 * (w3 + t)));
    c.plus = csc * (2.0 * cl2(t) - cl2(2.0 * w1) + cl2(2.0 * (w1 - t)));
    c.minus = csc * (2.0 * cl2(kPi - t) - cl2(2.0 * w3) + cl2(2.0 * (w3 + t)));
    return c;
}

// x cosh x/(cosh 2x - cos 2t) scaled by e^{-2x} so large x cannot overflow
double cosh_kernel(double x, double c2t) {
    double e1 = std::exp(-x), e2 = e1 * e1;
    return x * 0.5 * (e1 + e2 * e1) / (0.5 * (1.0 + e2 * e2) - c2t * e2);
}

}  // namespace

CoshTriple cosh_integrals(double y, double t, double tol) {
    if (!(t > 0.0 && t < kPi && y > 0.0)) throw DomainError("cosh_integrals: need 0 < t < pi, y > 0");
    auto c = cosh_closed(y, t);
    const double c2t = std::cos(2.0 * t), ct = std::cos(t);
    auto qf = quad::gauss_kronrod([c2t](double x) { return cosh_kernel(x, c2t); }, 0.0, y, tol);
    auto qp = quad::gauss_kronrod([ct](double x) { return x / (std::cosh(x) + ct); }, 0.0, y, tol);
    auto qm = quad::gauss_kronrod([ct](double x) { return x / (std::cosh(x) - ct); }, 0.0, y, tol);
    return {quad_sides(qf, c.full), quad_sides(qp, c.plus), quad_sides(qm, c.minus)};
}

Sides cosh_limit(double t) {
    if (!(t > 0.0 && t < kPi)) throw DomainError("cosh_limit: need 0 < t < pi");
    double lim = (cl2(t) - 0.25 * cl2(2.0 * t)) / std::sin(t);
    return {cosh_closed(40.0, t).full, lim, 0.0, 0.0};
}

Sides cosh_infinite(double t, double tol) {
    if (!(t > 0.0 && t < kPi)) throw DomainError("cosh_infinite: need 0 < t < pi");
    const double c2t = std::cos(2.0 * t);
    auto q = quad::integrate_semi_infinite([c2t](double x) { return cosh_kernel(x, c2t); }, 0.0, tol);
    return quad_sides(q, (cl2(t) - 0.25 * cl2(2.0 * t)) / std::sin(t));
}

Sides asin_over_t(double x, double tol) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("asin_over_t: need 0 < x <= 1");
    auto p = specfun::pfq_series({0.5, 0.5, 0.5}, {1.5, 1.5}, x * x, tol);
    const double as = std::asin(x);
    double rhs = 0.5 * (cl2(2.0 * as) + 2.0 * as * kLn2 +
                        (kPi - 2.0 * std::asin(std::sqrt(1.0 - x * x))) * std::log(x));
    return {x * p.value, rhs, x * p.bound, 0.0};
}

Sides half_pfq_logsine(int k, double z, double tol) {
    if (k < 1 || k > 6 || !(z > 0.0 && z <= 1.0)) throw DomainError("half_pfq_logsine: need 1 <= k <= 6, 0 < z <= 1");
    std::vector<double> num(k + 1, 0.5), den(k, 1.5);
    auto p = specfun::pfq_series(num, den, z);
    const double top = std::asin(std::sqrt(z));
    const double hl = 0.5 * std::log(z);
    double s = 0.0, err = 0.0;
    double binom = 1.0;
    for (int l = 0; l <= k - 1; ++l) {
        double integral = top;
        if (l > 0) {
            auto q = quad::tanh_sinh([l](double p) { return std::pow(std::log(std::sin(p)), l); }, 0.0, top, tol);
            if (!q.converged) throw DomainError("half_pfq_logsine: quadrature did not converge");
            integral = q.value;
            err += binom * q.err_estimate;
        }
        s += ((l % 2) ? -1.0 : 1.0) * binom * std::pow(hl, k - l - 1) * integral;
        binom = binom * (k - 1 - l) / (l + 1.0);
    }
    const double pre = 1.0 / (std::tgamma(k) * std::sqrt(z));
    return {p.value, pre * s, p.bound, 0.0};
}

}  // namespace clausen::ctet
