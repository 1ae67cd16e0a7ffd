#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "clausen/numkit.hpp"

namespace clausen::ctet {

using numkit::DD;
using numkit::ExtReal;
using cplx = std::complex<double>;

// C(1,1) to 38 digits, for display and for the double-double self check
inline constexpr const char* kReference = "0.17390061066200274272650601711566596761";

enum class Route { series, clausen, rajantie, srp };

std::string_view route_name(Route r);
bool parse_route(std::string_view s, Route& out);
// agreement expected of a route against the others
double route_tolerance(Route r);

struct RouteValue {
    Route route;
    ExtReal value;
};

// sum (-1/8)^n/(n+1/2) [1/(n+1/2) - 3(ln 2 + H_n)], carried in double-double
DD ctet_series_dd();
ExtReal ctet_series(double tol = 1e-16);
// 2^{5/2}[Cl2(4 alpha) - Cl2(2 alpha)], alpha = asin(1/3)
ExtReal ctet_clausen();
// 4 sqrt2 [Cl2(2w) + 2 Cl2(2w + pi)] after duplication, w = atan(1/(2 sqrt 2))
double ctet_clausen_duplicated();
// 2^{5/2} times a one-dimensional log integral over [0,1]
ExtReal ctet_rajantie(double tol = 1e-12);
// three-electron integral at the symmetric point, divided by 8 pi^3
ExtReal ctet_srp();
// the same, collected into three Clausen values
double ctet_srp_collected();

RouteValue evaluate(Route r);
std::vector<RouteValue> evaluate_all();

struct SrpParameters {
    double sigma_abs = 1.4142135623730951;
    std::array<double, 3> Gamma{-1.75, -1.75, -1.75};
    std::array<std::array<double, 4>, 4> gamma{{{5, -1, -1, -1},
                                                {-1, 5, -1, -1},
                                                {-1, -1, 5, -1},
                                                {-1, -1, -1, 5}}};
};
double srp_integral(const SrpParameters& p = {});

// partial-fraction form of the Rajantie integrand
struct RajantieSplit {
    double elementary;         // ln4 int (1/(x-2) - 1/(x+2)) dx/sqrt(3-x^2)
    double elementary_closed;  // theta_plus ln 4
    double total;              // whole decomposed integral, times 2^{5/2}
};
RajantieSplit rajantie_split(double tol = 1e-13);

// ---------------------------------------------------------------- log-trig integrals

// quadrature side, closed-form side, quadrature error, imaginary part dropped from the closed form
struct Sides {
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_err = 0.0;
    double imag_residue = 0.0;
};

// kappa int_0^u ln(sin kappa x + sin alpha) dx
Sides sin_shift_log(double kappa, double alpha, double u, double tol = 1e-12);
// int_0^x ln|cos A - cos kt| dt
Sides cos_diff_log(double A, double k, double x, double tol = 1e-12);
// int_0^x ln|sin kt - cosh A| dt, A > 0
Sides sin_cosh_log(double A, double k, double x, double tol = 1e-12);
double sin_cosh_log_closed(double A, double k, double x);

enum class TrigKernel { a_over_sin, a_over_tan, a2_over_sin2, a2_over_tan2 };
// int_0^b of the kernel; closed form in complex arithmetic
Sides trig_kernel(TrigKernel kind, double b, double tol = 1e-12);
cplx trig_kernel_closed(TrigKernel kind, double b);

// int_0^b x/(sin x + a) dx, |a| < 1, Clausen form and dilogarithm form
double sin_plus_pole_gap(double a, double b);
Sides x_over_sin_plus(double a, double b, double tol = 1e-12);
Sides x_over_sin_plus_dilog(double a, double b, double tol = 1e-12);
// int_0^b x/(tan x + a) dx, a > 0, b + atan a < pi
Sides x_over_tan_plus(double a, double b, double tol = 1e-12);

// the stated right side for x/(tan x + a) under its two readings and two atan ranges
struct TanPlusReadings {
    double quadrature;
    std::array<cplx, 2> sum;      // [principal atan, atan in [0, 2pi)]
    std::array<cplx, 2> product;
};
TanPlusReadings x_over_tan_plus_stated(double a, double b, double tol = 1e-12);

// int_0^u ln|sin^2 x - sin^2 alpha| dx
Sides sin_sq_diff_log(double alpha, double u, double tol = 1e-12);
// int_0^b x/sin(x + a) dx by a shift into the x/sin x integral
Sides x_over_sin_shift(double a, double b, double tol = 1e-12);

// J(c,d) = int_0^1 ln(x + c)/sqrt(d^2 - x^2) dx, d > 1, c > d
Sides j_integral(double c, double d, double tol = 1e-12);

// int_b^inf ln((u+a)/(u-a)) du/(1+u^2), b > a > 0
Sides log_ratio_tail(double a, double b, double tol = 1e-12);
// the same integral after u = tan(phi); b >= 0 allowed
Sides log_ratio_angle(double a, double b, double tol = 1e-12);
// -sin(theta) int_0^r ln y dy/(1 - 2y cos theta + y^2)
Sides log_kernel_clausen(double theta, double r, double tol = 1e-12);

// int_0^y x cosh x/(cosh 2x - cos 2t) and the two halves x/(cosh x +- cos t)
struct CoshTriple {
    Sides full;
    Sides plus;
    Sides minus;
};
CoshTriple cosh_integrals(double y, double t, double tol = 1e-12);
// y -> infinity: closed form at y = 40 against csc t [Cl2(t) - Cl2(2t)/4]
Sides cosh_limit(double t);
// int_0^inf x cosh x/(cosh 2x - cos 2t) dx
Sides cosh_infinite(double t, double tol = 1e-12);

// Psi(x) = int_0^x asin(t)/t dt as x 3F2(1/2,1/2,1/2;3/2,3/2;x^2) against its Clausen form
Sides asin_over_t(double x, double tol = 1e-14);
// (k+1)F(k)(1/2,...;3/2,...;z) against the binomial sum of log-sine integrals
Sides half_pfq_logsine(int k, double z, double tol = 1e-12);

}  // namespace clausen::ctet
