#include <doctest.h>

#include <cmath>

#include "clausen/numkit.hpp"
#include "clausen/quad.hpp"

using namespace clausen;
using namespace clausen::quad;

TEST_CASE("smooth integrand by Gauss-Kronrod") {
    QuadResult r = gauss_kronrod([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r.converged);
    CHECK(std::fabs(r.value - 2.0) < 1e-14);
    CHECK(r.evals > 0);
}

TEST_CASE("endpoint singularities by tanh-sinh") {
    QuadResult r = tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::fabs(r.value + 1.0) < 1e-13);
    // distance to the right endpoint is passed exactly
    QuadResult e = tanh_sinh_ends([](double, double, double bx) { return 1.0 / std::sqrt(bx); }, 0.0, 1.0);
    CHECK(std::fabs(e.value - 2.0) < 1e-12);
}

TEST_CASE("infinite ranges") {
    QuadResult r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
    CHECK(std::fabs(r.value - 1.0) < 1e-13);
    QuadProblem p;
    p.integrand = [](double x) { return std::exp(-x * x); };
    p.lower = -kInf;
    p.upper = kInf;
    CHECK(std::fabs(integrate(p).value - std::sqrt(M_PI)) < 1e-13);
}

TEST_CASE("problem validation") {
    QuadProblem p;
    CHECK_THROWS_AS(integrate(p), DomainError);
    p.integrand = [](double) { return 1.0; };
    p.lower = 1.0;
    p.upper = 0.0;
    CHECK_THROWS_AS(integrate(p), DomainError);
    p.lower = 0.0;
    p.upper = 1.0;
    p.target_tol = 0.0;
    CHECK_THROWS_AS(integrate(p), DomainError);
}

TEST_CASE("non-convergence throws from the shorthands") {
    // a jump defeats tanh-sinh; the best estimate is still returned
    auto f = [](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; };
    QuadResult r = tanh_sinh(f, 0.0, 1.0);
    CHECK_FALSE(r.converged);
    CHECK(std::fabs(r.value - 2.0 / 3.0) < 1e-3);
    CHECK_THROWS_AS(qts(f, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(qgk([](double) { return NAN; }, 0.0, 1.0), DomainError);
}
