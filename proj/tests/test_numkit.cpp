#include <doctest.h>

#include <cmath>
#include <vector>

#include "clausen/numkit.hpp"

using namespace clausen;
using namespace clausen::numkit;

TEST_CASE("accumulator recovers cancelled low bits") {
    Accumulator acc;
    acc += 1.0;
    acc += 1e-16;
    acc += -1.0;
    CHECK(acc.value() == doctest::Approx(1e-16).epsilon(1e-12));
    CHECK(acc.rounding_bound() > 0.0);
    CHECK_THROWS_AS(acc.add(NAN), DomainError);
}

TEST_CASE("comp_sum carries truncation into the bound") {
    std::vector<double> t{0.5, 0.25, 0.125};
    ExtReal r = comp_sum(t, 1e-3);
    CHECK(r.value == 0.875);
    CHECK(r.bound >= 1e-3);
}

TEST_CASE("double-double keeps about 32 digits") {
    DD third = DD(1.0) / DD(3.0);
    DD back = third * DD(3.0) - DD(1.0);
    CHECK(std::fabs(static_cast<double>(back)) < 1e-30);
    DD s = DD(1.0) + DD(1e-20);
    CHECK(s.lo == doctest::Approx(1e-20));
}

TEST_CASE("exact rationals and Bernoulli numbers") {
    BigRational h = make_rational(1, 2) + make_rational(1, 3);
    CHECK(to_string(h) == "5/6");
    CHECK(bernoulli_abs_exact(2) == make_rational(1, 6));
    CHECK(bernoulli_abs_exact(4) == make_rational(1, 30));
    CHECK(bernoulli_abs_exact(12) == make_rational(691, 2730));
    CHECK_THROWS_AS(bernoulli_abs_exact(3), DomainError);
    CHECK_THROWS_AS(bernoulli_abs_exact(62), DomainError);
}

TEST_CASE("zeta at even integers") {
    const double pi = constants().pi;
    CHECK(zeta_even(2) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
    CHECK(zeta_even(4) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-15));
    CHECK(zeta_even(60) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("constant table") {
    const auto& c = constants();
    CHECK(c.pi == M_PI);
    CHECK(c.ln2 == doctest::Approx(std::log(2.0)).epsilon(1e-16));
    CHECK(c.omega == doctest::Approx(std::atan(1.0 / (2.0 * std::sqrt(2.0)))).epsilon(1e-15));
    CHECK(c.alpha == doctest::Approx(std::asin(1.0 / 3.0)).epsilon(1e-15));
    CHECK(std::fabs(catalan_alternating() - c.catalan) < 1e-15);
}

TEST_CASE("series acceleration") {
    // sum 1/(k+1)^2, tail ~ 1/n
    auto r = algebraic_series_limit([](long k) { return 1.0L / ((k + 1.0L) * (k + 1.0L)); }, 1.0);
    CHECK(std::fabs(r.value - constants().zeta2) < 1e-13);
    // alternating harmonic
    auto l = levin_u_limit([](long k) { return (k % 2 ? -1.0L : 1.0L) / (k + 1.0L); });
    CHECK(std::fabs(l.value - constants().ln2) < 1e-14);
}
