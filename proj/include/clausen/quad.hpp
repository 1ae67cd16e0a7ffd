#pragma once

#include <functional>
#include <limits>

namespace clausen::quad {

using Integrand = std::function<double(double)>;
// f(x, x - a, b - x) with both distances computed exactly
using EndpointIntegrand = std::function<double(double, double, double)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadProblem {
    Integrand integrand;
    double lower = 0.0;  // may be -kInf
    double upper = 1.0;  // may be kInf
    bool singular_lower = false;
    bool singular_upper = false;
    double target_tol = 1e-12;
};

// converged implies err_estimate <= target_tol * max(1, |value|)
struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evals = 0;
    bool converged = false;
};

QuadResult integrate(const QuadProblem& p);

// u = a + t/(1-t) on [0,1)
QuadResult integrate_semi_infinite(const Integrand& f, double a, double tol = 1e-12);

QuadResult tanh_sinh(const Integrand& f, double a, double b, double tol = 1e-12);
QuadResult tanh_sinh_ends(const EndpointIntegrand& f, double a, double b, double tol = 1e-12);
QuadResult gauss_kronrod(const Integrand& f, double a, double b, double tol = 1e-12);

// Shorthand: tanh-sinh over [a,b]; throws DomainError if not converged.
double qts(const Integrand& f, double a, double b, double tol = 1e-13);
// Shorthand: Gauss-Kronrod over [a,b]; throws DomainError if not converged.
double qgk(const Integrand& f, double a, double b, double tol = 1e-13);

}  // namespace clausen::quad
