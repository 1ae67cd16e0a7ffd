// One line per acceptance criterion; exits non-zero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "clausen/ctet.hpp"
#include "clausen/harmonic.hpp"
#include "clausen/identities.hpp"
#include "clausen/numkit.hpp"
#include "clausen/quad.hpp"
#include "clausen/specfun.hpp"

using namespace clausen;
namespace q = clausen::quad;
namespace sf = clausen::specfun;
namespace hm = clausen::harmonic;
namespace ct = clausen::ctet;
namespace ids = clausen::identities;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kG = 0.91596559417721901505;

// tolerances pinned here
constexpr double kSeriesClausenTol = 1e-12;
constexpr double kSrpTol = 1e-11;
constexpr double kRajantieTol = 1e-9;
constexpr double kRoutesSeconds = 5.0;
constexpr double kGoldenTol = 1e-12;
constexpr double kGoldenQuadTol = 1e-10;
constexpr double kCatalogSeconds = 60.0;
constexpr double kDerivTol = 1e-6;
constexpr double kLimitTol = 1e-9;
constexpr double kExactTol = 1e-12;
constexpr double kHonestyFactor = 10.0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
    std::string what;
    double err;
    double tol;
};

// every check prints; the criterion passes if all do
bool all_within(const std::vector<Check>& cs) {
    bool ok = true;
    for (const auto& c : cs) {
        bool good = std::isfinite(c.err) && c.err <= c.tol;
        if (!good) std::printf("    %-58s err %.3g > %.1g\n", c.what.c_str(), c.err, c.tol);
        ok = ok && good;
    }
    return ok;
}

bool report(int n, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
    std::fflush(stdout);
    return ok;
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double psi1_third() { return sf::polygamma(1, 1.0 / 3.0); }

bool criterion_routes() {
    auto t0 = std::chrono::steady_clock::now();
    double series = ct::ctet_series().value;
    double clausen = ct::ctet_clausen().value;
    double srp = ct::ctet_srp().value;
    double rajantie = ct::ctet_rajantie().value;
    double dt = seconds_since(t0);
    bool ok = all_within({{"series - clausen", std::fabs(series - clausen), kSeriesClausenTol},
                          {"srp - series", std::fabs(srp - series), kSrpTol},
                          {"srp - clausen", std::fabs(srp - clausen), kSrpTol},
                          {"rajantie - series", std::fabs(rajantie - series), kRajantieTol},
                          {"rajantie - clausen", std::fabs(rajantie - clausen), kRajantieTol},
                          {"rajantie - srp", std::fabs(rajantie - srp), kRajantieTol},
                          {"four routes wall seconds", dt, kRoutesSeconds}});
    return report(1, "ctet routes agree", ok,
                  fmt("value %.16f, %.2f s", series, dt));
}

bool criterion_golden() {
    const double G = numkit::catalan_alternating();
    const double pi2 = kPi * kPi;
    // both sums start at m = 1; [(1/2)_m/m!]^2 term by term
    auto central = [](long m) {
        long double c = 1.0L;
        for (long i = 1; i <= m; ++i) c *= (i - 0.5L) / i;
        return c * c;
    };
    auto sum53a = numkit::algebraic_series_limit([&](long k) { return central(k + 1) / (2.0L * (k + 1)); }, 1.0);
    auto sum53b = numkit::algebraic_series_limit([&](long k) { return central(k + 1) / (2.0L * (k + 1) + 1); }, 1.0);
    double l6_quad = -q::qgk([](double t) { return std::log(std::cos(t)); }, 0.0, kPi / 6, 1e-14);
    double l6_closed = kPi / 6 * kLn2 - (psi1_third() - 2.0 * pi2 / 3.0) / (6.0 * std::sqrt(3.0));
    const double k122 = G - kPi / 16 * (kPi - 4 * kLn2);

    auto ts = [](std::function<double(double)> f, double b) { return q::tanh_sinh(f, 0.0, b, 1e-12).value; };
    double i121a = ts([](double a) { return a == 0.0 ? 1.0 : a / std::sin(a); }, kPi / 2);
    double i121b = ts([](double a) { return a == 0.0 ? 1.0 : a / std::tan(a); }, kPi / 2);
    double i122a = ts([](double a) { double s = a == 0.0 ? 1.0 : a / std::sin(a); return s * s; }, kPi / 4);
    double i122b = ts([](double a) { double s = a == 0.0 ? 1.0 : a / std::tan(a); return s * s; }, kPi / 4);

    bool ok = all_within({
        {"Cl2(pi/2) = G (accelerated alternating series)", std::fabs(sf::cl2(kPi / 2) - G), kGoldenTol},
        {"Cl2(pi/3) from trigamma(1/3)",
         std::fabs(sf::cl2(kPi / 3) - (psi1_third() - 2.0 * pi2 / 3.0) / (2.0 * std::sqrt(3.0))), kGoldenTol},
        {"3F2(1/2,1/2,1/2;3/2,3/2;1) = (pi/2) ln 2",
         std::fabs(sf::pfq_series({0.5, 0.5, 0.5}, {1.5, 1.5}, 1.0).value - kPi / 2 * kLn2), kGoldenTol},
        {"Legendre even sum = 2 ln 2 - 1", std::fabs(hm::legendre_even_sum().value - (2 * kLn2 - 1)), kGoldenTol},
        {"Legendre zero sum = ln 2 - 1", std::fabs(hm::legendre_zero_sum().value - (kLn2 - 1)), kGoldenTol},
        {"int_0^{pi/2} a/sin a = 2G", std::fabs(i121a - 2 * kG), kGoldenQuadTol},
        {"int_0^{pi/2} a/tan a = (pi/2) ln 2", std::fabs(i121b - kPi / 2 * kLn2), kGoldenQuadTol},
        {"int_0^{pi/4} a^2/sin^2 a", std::fabs(i122a - k122), kGoldenTol},
        {"int_0^{pi/4} a^2/tan^2 a", std::fabs(i122b - (k122 - kPi * pi2 / 192)), kGoldenTol},
        {"L(pi/6) by quadrature against the trigamma form", std::fabs(l6_quad - l6_closed), kGoldenTol},
        {"L(pi/6) library value", std::fabs(sf::lobachevsky(kPi / 6) - l6_closed), kGoldenTol},
        {"(pi/6) ln 2 - L(pi/6) = Cl2(pi/3)/3",
         std::fabs(kPi / 6 * kLn2 - sf::lobachevsky(kPi / 6) - sf::cl2(kPi / 3) / 3), kGoldenTol},
        {"(pi/2) sum_{m>=1} c_m/(2m) = pi ln 2 - 2G", std::fabs(kPi / 2 * sum53a.value - (kPi * kLn2 - 2 * G)),
         kGoldenTol},
        {"(pi/2) sum_{m>=1} c_m/(2m+1) = 2G - pi/2", std::fabs(kPi / 2 * sum53b.value - (2 * G - kPi / 2)),
         kGoldenTol},
    });
    return report(2, "golden closed forms", ok, "14 values");
}

bool criterion_catalog() {
    auto t0 = std::chrono::steady_clock::now();
    ids::RunOptions opt;
    ids::Report rep = ids::run_suite(opt);
    double dt = seconds_since(t0);
    int pass = 0, fail = 0, disc = 0, resolved = 0;
    std::size_t min_samples = 1u << 30;
    for (const auto& r : rep.identities) {
        min_samples = std::min(min_samples, r.samples.size());
        if (r.status == ids::Status::pass) ++pass;
        if (r.status == ids::Status::fail) {
            ++fail;
            std::printf("    %s failed: %s\n", r.id.c_str(), r.message.c_str());
        }
        if (r.status == ids::Status::discrepancy_resolved) {
            ++disc;
            if (!r.candidates.empty()) ++resolved;
        }
    }
    bool ok = rep.identities.size() >= 40 && min_samples >= 5 && fail == 0 && disc == 2 && resolved == 2 &&
              dt < kCatalogSeconds;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu identities, %d pass, %d fail, %d discrepancy-resolved, min %zu samples, %.1f s",
                  rep.identities.size(), pass, fail, disc, min_samples, dt);
    return report(3, "identity suite", ok, buf);
}

bool criterion_derivative_limit() {
    std::vector<Check> cs;
    const double h = 1e-4;
    for (int i = 1; i <= 10; ++i) {
        double u = 0.55 * i;  // 0.55 .. 5.5
        double d = (sf::i_xu(h, u) - sf::i_xu(-h, u)) / (2 * h);
        cs.push_back({fmt("dI/dx at x=0, u=%.2f", u), std::fabs(d + sf::cl2(u)), kDerivTol});
    }
    for (double t : {0.3, 0.8, 1.2, 2.0, 2.9}) {
        ct::Sides s = ct::cosh_limit(t);
        cs.push_back({fmt("y=40 limit at t=%.1f", t), std::fabs(s.lhs - s.rhs), kLimitTol});
    }
    return report(4, "derivative and limit checks", all_within(cs), "10 derivative points, 5 limit points");
}

bool criterion_exact() {
    std::vector<Check> cs;
    using numkit::make_rational;
    using B = hm::RationalPair::Basis;
    auto same = [](const hm::RationalPair& r, B basis, const numkit::BigRational& a, const numkit::BigRational& b) {
        return r.basis == basis && r.a == a && r.b == b;
    };
    bool ic = same(hm::ik_exact(0, 0), B::pi, 0, make_rational(1, 4)) &&
              same(hm::ik_exact(0, 1), B::pi, 1, make_rational(-1, 4)) &&
              same(hm::ik_exact(1, 0), B::ln2, 0, make_rational(1, 2)) &&
              same(hm::ik_exact(1, 1), B::ln2, make_rational(1, 2), make_rational(-1, 2));
    bool moments = true;
    for (int k = 0; k <= 12; ++k) moments = moments && hm::legendre_moment(k + 1, k) == make_rational(1, 1L << (k + 1));
    for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 12; ++k) {
            auto f = [j, k](double v) { return std::pow(v, k + j) * sf::legendre_p(k, v) / (1 + v * v); };
            double quadv = q::qgk(f, 0.0, 1.0, 1e-14);
            cs.push_back({fmt("I_k^(j), j=%g k=%g", j, k), std::fabs(hm::ik_exact(j, k).value() - quadv), kExactTol});
        }
    bool ok = all_within(cs) && ic && moments;
    if (!ic) std::printf("    initial conditions not exact\n");
    if (!moments) std::printf("    moment identity not exact\n");
    return report(5, "exact layer", ok, "26 quadratures, 4 initial conditions, 13 moments");
}

struct BatteryItem {
    const char* name;
    q::QuadProblem problem;
    double exact;
};

q::QuadProblem prob(q::Integrand f, double a, double b, bool sl = false, bool su = false) {
    q::QuadProblem p;
    p.integrand = std::move(f);
    p.lower = a;
    p.upper = b;
    p.singular_lower = sl;
    p.singular_upper = su;
    return p;
}

bool criterion_honesty() {
    const double inf = q::kInf;
    std::vector<BatteryItem> battery{
        {"x^2 on [0,1]", prob([](double x) { return x * x; }, 0, 1), 1.0 / 3},
        {"sin on [0,pi]", prob([](double x) { return std::sin(x); }, 0, kPi), 2.0},
        {"1/(1+x) on [0,1]", prob([](double x) { return 1 / (1 + x); }, 0, 1), kLn2},
        {"atan x / x on [0,1]", prob([](double x) { return x == 0 ? 1.0 : std::atan(x) / x; }, 0, 1), kG},
        {"exp(cos x) on [0,2pi]", prob([](double x) { return std::exp(std::cos(x)); }, 0, 2 * kPi),
         2 * kPi * 1.2660658777520083356},
        {"x/sin x on [0,pi/2]", prob([](double x) { return x == 0 ? 1.0 : x / std::sin(x); }, 0, kPi / 2), 2 * kG},
        {"1/(1+25x^2) on [-1,1]", prob([](double x) { return 1 / (1 + 25 * x * x); }, -1, 1),
         0.4 * std::atan(5.0)},
        {"ln x on [0,1]", prob([](double x) { return std::log(x); }, 0, 1, true), -1.0},
        {"1/sqrt x on [0,1]", prob([](double x) { return 1 / std::sqrt(x); }, 0, 1, true), 2.0},
        {"sqrt(1-x^2) on [0,1]", prob([](double x) { return std::sqrt(1 - x * x); }, 0, 1, false, true), kPi / 4},
        {"ln x ln(1-x) on [0,1]", prob([](double x) { return std::log(x) * std::log1p(-x); }, 0, 1, true, true),
         2 - kPi * kPi / 6},
        {"ln x / sqrt x on [0,1]", prob([](double x) { return std::log(x) / std::sqrt(x); }, 0, 1, true), -4.0},
        {"ln sin x on [0,pi/2]", prob([](double x) { return std::log(std::sin(x)); }, 0, kPi / 2, true),
         -kPi / 2 * kLn2},
        {"1/sqrt(1-x^2) on [-1,1]", prob([](double x) { return 1 / std::sqrt((1 - x) * (1 + x)); }, -1, 1, true, true),
         kPi},
        {"-ln(1-x)/x on [0,1]", prob([](double x) { return x == 0 ? 1.0 : -std::log1p(-x) / x; }, 0, 1, false, true),
         kPi * kPi / 6},
        {"exp(-x) on [0,inf)", prob([](double x) { return std::exp(-x); }, 0, inf), 1.0},
        {"1/(1+x^2) on [0,inf)", prob([](double x) { return 1 / (1 + x * x); }, 0, inf), kPi / 2},
        {"x/(e^x-1) on [0,inf)", prob([](double x) { return x == 0 ? 1.0 : x / std::expm1(x); }, 0, inf),
         kPi * kPi / 6},
        {"exp(-x^2) on R", prob([](double x) { return std::exp(-x * x); }, -inf, inf), std::sqrt(kPi)},
        {"du/u^2 on [1,inf)", prob([](double u) { return 1 / (u * u); }, 1, inf), 1.0},
    };
    int converged = 0, honest = 0;
    for (const auto& b : battery) {
        q::QuadResult r = q::integrate(b.problem);
        if (!r.converged) {
            std::printf("    %-28s not converged (excluded)\n", b.name);
            continue;
        }
        ++converged;
        double err = std::fabs(r.value - b.exact);
        if (err <= kHonestyFactor * r.err_estimate)
            ++honest;
        else
            std::printf("    %-28s true err %.3g > 10 x estimate %.3g\n", b.name, err, r.err_estimate);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu integrals, %d converged, %d honest", battery.size(), converged, honest);
    return report(6, "quadrature error estimates", battery.size() == 20 && honest == converged && converged > 0, buf);
}

bool criterion_determinism() {
    ids::RunOptions opt;
    opt.seed = 42;
    std::string a = ids::render_report(ids::run_suite(opt), ids::Format::json);
    opt.jobs = 4;
    std::string b = ids::render_report(ids::run_suite(opt), ids::Format::json);
    return report(7, "seeded reports are byte-identical", a == b && !a.empty(), fmt("%g bytes", double(a.size())));
}

}  // namespace

int main() {
    bool ok = true;
    int n = 0;
    for (auto c : {criterion_routes, criterion_golden, criterion_catalog, criterion_derivative_limit, criterion_exact,
                   criterion_honesty, criterion_determinism}) {
        ++n;
        try {
            ok = c() && ok;
        } catch (const std::exception& e) {
            ok = report(n, "threw", false, e.what()) && ok;
        }
    }
    return ok ? 0 : 1;
}
