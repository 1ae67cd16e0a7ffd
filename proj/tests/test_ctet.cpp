#include <doctest.h>

#include <cmath>
#include <string>

#include <gmpxx.h>

#include "clausen/ctet.hpp"
#include "clausen/specfun.hpp"

using namespace clausen;
using namespace clausen::ctet;

namespace {
const double ref = std::stod(kReference);
}

TEST_CASE("route names round-trip") {
    for (Route r : {Route::series, Route::clausen, Route::rajantie, Route::srp}) {
        Route back;
        REQUIRE(parse_route(route_name(r), back));
        CHECK(back == r);
    }
    Route x;
    CHECK_FALSE(parse_route("bogus", x));
    CHECK(route_tolerance(Route::rajantie) == 1e-9);
}

TEST_CASE("every route reproduces the reference value") {
    auto all = evaluate_all();
    REQUIRE(all.size() == 4);
    for (const auto& v : all) {
        INFO(route_name(v.route));
        CHECK(std::fabs(v.value.value - ref) <= route_tolerance(v.route));
    }
    CHECK(std::fabs(ctet_clausen_duplicated() - ref) < 1e-13);
    CHECK(std::fabs(ctet_srp_collected() - ref) < 1e-12);
}

TEST_CASE("double-double series matches the 38-digit reference") {
    DD s = ctet_series_dd();
    mpf_class hi(s.hi, 256), lo(s.lo, 256), want(kReference, 256);
    mpf_class diff = hi + lo - want;
    CHECK(std::fabs(diff.get_d()) < 1e-28);
}

TEST_CASE("Rajantie split pieces") {
    auto sp = rajantie_split();
    CHECK(std::fabs(sp.elementary - sp.elementary_closed) < 1e-12);
    CHECK(std::fabs(sp.total - ref) < 1e-9);
    CHECK_THROWS_AS(ctet_rajantie(1e-15), DomainError);
}

TEST_CASE("log-trig integral families") {
    auto check = [](const Sides& s, double tol) {
        CHECK(std::fabs(s.lhs - s.rhs) <= tol * std::max(1.0, std::fabs(s.rhs)));
        CHECK(std::fabs(s.imag_residue) < 1e-10);
    };
    check(trig_kernel(TrigKernel::a_over_sin, 1.2), 1e-12);
    check(trig_kernel(TrigKernel::a2_over_tan2, 0.9), 1e-12);
    check(x_over_sin_plus(0.3, 1.0), 1e-12);
    check(x_over_tan_plus(0.5, 1.5), 1e-12);
    check(j_integral(2.0, 1.5), 1e-12);
    check(log_ratio_tail(1.0, 2.0), 1e-12);
    check(log_kernel_clausen(1.1, 0.7), 1e-12);
    check(cosh_infinite(0.8), 1e-12);
    check(cosh_limit(0.8), 1e-9);
    check(asin_over_t(0.6), 1e-12);
}
