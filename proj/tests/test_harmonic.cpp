#include <doctest.h>

#include <cmath>

#include "clausen/harmonic.hpp"
#include "clausen/quad.hpp"
#include "clausen/specfun.hpp"

using namespace clausen;
using namespace clausen::harmonic;
using numkit::make_rational;

TEST_CASE("harmonic numbers") {
    CHECK(harm_exact(4) == make_rational(25, 12));
    CHECK(harm_exact(3, 2) == make_rational(49, 36));
    CHECK(harm(0) == 0.0);
    for (long n : {1L, 10L, 64L, 65L, 1000L, 100000L})
        for (int r : {1, 2, 3}) CHECK(harm(n, r) == doctest::Approx(harm_polygamma(n, r)).epsilon(1e-14));
}

TEST_CASE("sum family against a direct sum") {
    SumSpec s{3.0, 1.7, 2, 1, 2, 1};
    double w = -1.0 / (s.beta * s.beta * s.beta);
    double direct = 0.0, wn = 1.0;
    for (int n = 0; n < 200; ++n, wn *= w) direct += wn * harm(2 * n + 1) / std::pow(n + 1.0 / 3.0, 2);
    ExtReal v = s_family(s);
    CHECK(std::fabs(v.value - direct) < 1e-13);
    CHECK(v.bound < 1e-13);
}

TEST_CASE("sum family validation") {
    CHECK_THROWS_AS(validate(SumSpec{2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate(SumSpec{0.0, 2.0}), DomainError);
    CHECK_THROWS_AS(validate(SumSpec{2.0, 2.0, 0}), DomainError);
    CHECK_NOTHROW(validate(SumSpec{2.0, -1.5}));
}

TEST_CASE("closed forms at the default point agree") {
    double s = s_family({}).value;
    for (double c : s22_closed_forms()) CHECK(std::fabs(c - s) < 1e-13);
    CHECK(std::fabs(s2beta_closed(2.0) - s) < 1e-13);
}

TEST_CASE("integral representations converge to the sum") {
    SumSpec s;
    auto routes = s_integral_reps(s);
    REQUIRE(!routes.empty());
    double ref = s_family(s).value;
    for (const auto& r : routes) {
        INFO(r.name);
        CHECK(r.converged);
        CHECK(std::fabs(r.value.value - ref) < 1e-11);
    }
}

TEST_CASE("exact Legendre integrals") {
    auto ic = ik_exact(0, 0);
    CHECK(ic.basis == RationalPair::Basis::pi);
    CHECK(ic.a == 0);
    CHECK(ic.b == make_rational(1, 4));
    auto ic1 = ik_exact(1, 0);
    CHECK(ic1.basis == RationalPair::Basis::ln2);
    CHECK(ic1.b == make_rational(1, 2));
    for (int k = 0; k <= 12; ++k) CHECK(legendre_moment(k + 1, k) == make_rational(1, 1L << (k + 1)));
    CHECK(legendre_moment(0, 2) == 0);
    CHECK_THROWS_AS(ik_exact(2, 0), DomainError);
}

TEST_CASE("Legendre-series Clausen values") {
    for (double t : {0.7, 1.5, 2.6}) {
        CHECK(std::fabs(cl2_legendre_series(t, 100).value - specfun::cl2(t)) < 1e-6);
        CHECK(std::fabs(cl2_logsine_series(t, 400).value - specfun::cl2(t)) < 1e-12);
        CHECK(std::fabs(cl2_elliptic_integral(t).value - specfun::cl2(t)) < 1e-12);
    }
    CHECK_THROWS_AS(cl2_elliptic_integral(0.0), DomainError);
}

TEST_CASE("Ramanujan and Harris series") {
    for (double x : {0.2, 0.5, 0.8}) {
        CHECK(ramanujan_h_series(x, 600) == doctest::Approx(ramanujan_h(x)).epsilon(1e-13));
        CHECK(harris_vbar(x * 0.9, 60).value ==
              doctest::Approx(harris_v(x * 0.9) + 2 * x * 0.9 * std::log(2.0)).epsilon(1e-12));
    }
    CHECK(harris_coefficients(5).size() == 6);
    CHECK_THROWS_AS(harris_coefficients(-1), DomainError);
}
