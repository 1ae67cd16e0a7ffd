#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "clausen/ctet.hpp"
#include "clausen/identities.hpp"
#include "clausen/numkit.hpp"
#include "clausen/specfun.hpp"

using namespace clausen;
using cplx = std::complex<double>;

namespace {

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvalResult {
    double value = 0.0;
    double bound = NAN;  // NaN when the evaluator carries no bound
    double imag = 0.0;
    bool complex = false;
    std::string meta;
};

struct Entry {
    int arity;  // -1: variable, checked by the evaluator
    std::string usage;
    std::function<EvalResult(const std::vector<double>&, double)> fn;
};

int as_int(double x, const char* what) {
    if (x != std::floor(x) || std::fabs(x) > 1e9) throw UsageError(std::string(what) + " must be an integer");
    return static_cast<int>(x);
}

cplx complex_arg(const std::vector<double>& a, const char* fn) {
    if (a.size() == 1) return {a[0], 0.0};
    if (a.size() == 2) return {a[0], a[1]};
    throw UsageError(std::string("usage: eval ") + fn + " RE [IM]");
}

EvalResult from_ext(numkit::ExtReal e, std::string meta) { return {e.value, e.bound, 0.0, false, std::move(meta)}; }
EvalResult from_cplx(cplx z, std::string meta) { return {z.real(), NAN, z.imag(), true, std::move(meta)}; }

const std::map<std::string, Entry>& registry() {
    static const std::map<std::string, Entry> r = {
        {"cl2", {1, "cl2 THETA", [](auto& a, double tol) { return from_ext(specfun::cl2(a[0], tol), "Clausen function"); }}},
        {"li2", {-1, "li2 RE [IM]", [](auto& a, double) { return from_cplx(specfun::li2(complex_arg(a, "li2")), "principal branch"); }}},
        {"chi2", {-1, "chi2 RE [IM]", [](auto& a, double) { return from_cplx(specfun::chi2(complex_arg(a, "chi2")), "Legendre chi"); }}},
        {"ti2", {1, "ti2 X", [](auto& a, double) { return EvalResult{specfun::ti2(a[0]), NAN, 0, false, "inverse tangent integral"}; }}},
        {"lerch_phi", {4, "lerch_phi RE IM S A", [](auto& a, double) {
             return from_cplx(specfun::lerch_phi({a[0], a[1]}, as_int(a[2], "S"), a[3]), "Lerch transcendent");
         }}},
        {"lobachevsky", {1, "lobachevsky X", [](auto& a, double) {
             return EvalResult{specfun::lobachevsky(a[0]), NAN, 0, false, "Lobachevsky function"};
         }}},
        {"lsn", {2, "lsn N THETA", [](auto& a, double tol) {
             return from_ext(specfun::lsn(as_int(a[0], "N"), a[1], std::max(tol, 1e-14)), "log-sine integral");
         }}},
        {"psi", {2, "psi ORDER X", [](auto& a, double) {
             return EvalResult{specfun::polygamma(as_int(a[0], "ORDER"), a[1]), NAN, 0, false, "polygamma"};
         }}},
        {"polylog", {2, "polylog R X", [](auto& a, double) {
             return EvalResult{specfun::polylog(as_int(a[0], "R"), a[1]), NAN, 0, false, "polylogarithm"};
         }}},
        {"pfq", {-1, "pfq P Q A1..AP B1..BQ Z", [](auto& a, double tol) {
             if (a.size() < 3) throw UsageError("pfq needs P Q ... Z");
             int p = as_int(a[0], "P"), q = as_int(a[1], "Q");
             if (p < 0 || q < 0 || a.size() != static_cast<size_t>(p + q + 3)) throw UsageError("pfq: wrong argument count");
             std::vector<double> num(a.begin() + 2, a.begin() + 2 + p), den(a.begin() + 2 + p, a.end() - 1);
             return from_ext(specfun::pfq_series(num, den, a.back(), std::max(tol, 1e-15)), "generalized hypergeometric");
         }}},
        {"elliptic_k", {1, "elliptic_k K", [](auto& a, double) {
             return EvalResult{specfun::elliptic_k_agm(a[0]), NAN, 0, false, "complete elliptic K, modulus"};
         }}},
        {"i_xu", {2, "i_xu X U", [](auto& a, double) {
             return EvalResult{specfun::i_xu(a[0], a[1]), NAN, 0, false, "int_0^u (2 sin(t/2))^x dt"};
         }}},
        {"legendre_p", {2, "legendre_p N X", [](auto& a, double) {
             return EvalResult{specfun::legendre_p(as_int(a[0], "N"), a[1]), NAN, 0, false, "Legendre polynomial"};
         }}},
        {"ctet_series", {0, "ctet_series", [](auto&, double) { return from_ext(ctet::ctet_series(), "C(1,1) series route"); }}},
        {"ctet_clausen", {0, "ctet_clausen", [](auto&, double) { return from_ext(ctet::ctet_clausen(), "C(1,1) Clausen route"); }}},
        {"ctet_rajantie", {0, "ctet_rajantie", [](auto&, double) { return from_ext(ctet::ctet_rajantie(), "C(1,1) log-integral route"); }}},
        {"ctet_srp", {0, "ctet_srp", [](auto&, double) { return from_ext(ctet::ctet_srp(), "C(1,1) three-electron route"); }}},
    };
    return r;
}

double parse_real(const std::string& s) {
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double x;
    if (!(in >> x) || !in.eof()) throw UsageError("not a number: " + s);
    return x;
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int cmd_eval(const std::string& fn, const std::vector<std::string>& raw, double tol) {
    auto it = registry().find(fn);
    if (it == registry().end()) {
        std::cerr << "unknown function: " << fn << "\nknown:";
        for (const auto& [k, e] : registry()) std::cerr << " " << k;
        std::cerr << "\n";
        return kExitUsage;
    }
    const Entry& e = it->second;
    std::vector<double> args;
    for (const auto& s : raw) args.push_back(parse_real(s));
    if (e.arity >= 0 && static_cast<int>(args.size()) != e.arity)
        throw UsageError("usage: eval " + e.usage);
    EvalResult r = e.fn(args, tol);
    std::cout << "value " << g17(r.value);
    if (r.complex) std::cout << (r.imag < 0 || std::signbit(r.imag) ? " - " : " + ") << g17(std::fabs(r.imag)) << "i";
    std::cout << "\n";
    if (!std::isnan(r.bound)) std::cout << "bound " << g17(r.bound) << "\n";
    std::cout << "function " << fn << " (" << r.meta << ")\n";
    return 0;
}

int cmd_verify(const identities::RunOptions& opt, const std::string& json_path) {
    auto rep = identities::run_suite(opt);
    std::cout << identities::render_report(rep, identities::Format::markdown);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return kExitUsage;
        }
        out << identities::render_report(rep, identities::Format::json);
    }
    return identities::assert_failures(rep) == 0 ? 0 : kExitMath;
}

std::string dd_digits(numkit::DD x, int digits) {
    mpf_class v(x.hi, 256);
    v += mpf_class(x.lo, 256);
    mp_exp_t ex;
    std::string d = v.get_str(ex, 10, digits);
    bool neg = !d.empty() && d[0] == '-';
    if (neg) d.erase(0, 1);
    // get_str drops trailing zeros
    if (d.size() < static_cast<size_t>(digits)) d.append(static_cast<size_t>(digits) - d.size(), '0');
    std::string out = neg ? "-" : "";
    if (ex <= 0) {
        out += "0." + std::string(static_cast<size_t>(-ex), '0') + d;
    } else {
        d.resize(std::max<size_t>(d.size(), static_cast<size_t>(ex)), '0');
        out += d.substr(0, ex) + "." + d.substr(ex);
    }
    return out;
}

int cmd_ctet(const std::string& route, int digits) {
    if (digits < 1 || digits > 25) throw UsageError("--digits must be in [1, 25]");
    std::vector<ctet::Route> routes;
    if (route == "all") {
        routes = {ctet::Route::series, ctet::Route::clausen, ctet::Route::rajantie, ctet::Route::srp};
    } else {
        ctet::Route r;
        if (!ctet::parse_route(route, r)) throw UsageError("unknown route: " + route);
        routes = {r};
    }
    if (digits > 17 && !(routes.size() == 1 && routes[0] == ctet::Route::series))
        throw UsageError("more than 17 digits needs --route series");

    std::vector<ctet::RouteValue> vals;
    for (auto r : routes) vals.push_back(ctet::evaluate(r));
    for (const auto& v : vals) {
        std::string shown;
        if (digits > 17) {
            shown = dd_digits(ctet::ctet_series_dd(), digits);
        } else {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.*g", digits, v.value.value);
            shown = buf;
        }
        std::printf("%-9s %s  bound %.2g\n", std::string(ctet::route_name(v.route)).c_str(), shown.c_str(),
                    v.value.bound);
    }
    bool ok = true;
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j) {
            double d = std::fabs(vals[i].value.value - vals[j].value.value);
            double tol = std::max(ctet::route_tolerance(vals[i].route), ctet::route_tolerance(vals[j].route));
            bool good = d <= tol;
            ok = ok && good;
            std::printf("delta %s-%s %.3g (tol %.0e) %s\n", std::string(ctet::route_name(vals[i].route)).c_str(),
                        std::string(ctet::route_name(vals[j].route)).c_str(), d, tol, good ? "ok" : "FAIL");
        }
    return ok ? 0 : kExitMath;
}

int cmd_bench(const std::string& fn, long points) {
    if (points < 1 || points > 1000000) throw UsageError("--points must be in [1, 1000000]");
    using Clock = std::chrono::steady_clock;
    struct Strategy {
        std::string name;
        std::function<double(long)> eval;
    };
    std::vector<Strategy> strategies;
    std::function<double(long)> oracle;
    if (fn == "cl2") {
        auto theta = [points](long i) { return (i + 0.5) * (2.0 * M_PI) / static_cast<double>(points); };
        auto method = [theta](specfun::Cl2Method m, double tol) {
            return [=](long i) { return specfun::cl2(theta(i), tol, m).value; };
        };
        strategies = {{"series", method(specfun::Cl2Method::sine_series, 1e-15)},
                      {"expansion", method(specfun::Cl2Method::expansion, 1e-15)},
                      {"quadrature", method(specfun::Cl2Method::quadrature, 1e-13)},
                      {"automatic", method(specfun::Cl2Method::automatic, 1e-15)}};
        oracle = method(specfun::Cl2Method::quadrature, 1e-14);
    } else if (fn == "li2") {
        auto z = [points](long i) {
            double r = 0.95 * std::fmod((i + 0.5) * 0.6180339887498949, 1.0);
            return std::polar(r, (i + 0.5) * (2.0 * M_PI) / static_cast<double>(points));
        };
        strategies = {{"series", [z](long i) { return specfun::li2(z(i)).real(); }},
                      {"quadrature", [z](long i) { return specfun::li2_quadrature(z(i), 1e-13).real(); }}};
        oracle = [z](long i) { return specfun::li2_quadrature(z(i), 1e-14).real(); };
    } else {
        throw UsageError("--fn must be cl2 or li2");
    }
    std::vector<double> ref(static_cast<size_t>(points));
    for (long i = 0; i < points; ++i) ref[static_cast<size_t>(i)] = oracle(i);

    std::printf("strategy,mean_ns,max_abs_err\n");
    for (const auto& s : strategies) {
        double err = 0.0;
        auto t0 = Clock::now();
        std::vector<double> out(static_cast<size_t>(points));
        for (long i = 0; i < points; ++i) out[static_cast<size_t>(i)] = s.eval(i);
        double ns = std::chrono::duration<double, std::nano>(Clock::now() - t0).count() / points;
        for (long i = 0; i < points; ++i)
            err = std::max(err, std::fabs(out[static_cast<size_t>(i)] - ref[static_cast<size_t>(i)]));
        std::printf("%s,%.0f,%.3g\n", s.name.c_str(), ns, err);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clausen-function numerics and identity checks"};
    app.require_subcommand(1);

    auto* ev = app.add_subcommand("eval", "evaluate a registered function");
    std::string fn;
    std::vector<std::string> args;
    double tol = 1e-15;
    ev->add_option("function", fn, "function name")->required();
    ev->add_option("args", args, "arguments");
    ev->add_option("--tol", tol, "requested error bound");
    std::string functions = "Functions:";
    for (const auto& [k, e] : registry()) functions += "\n  " + e.usage;
    ev->footer(functions);

    auto* ver = app.add_subcommand("verify", "run the identity catalog");
    identities::RunOptions opt;
    opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string json_path;
    ver->add_option("--filter", opt.filter, "id glob, matched against id or group");
    ver->add_option("--seed", opt.seed, "sampler seed");
    ver->add_option("--tol-scale", opt.tol_scale, "multiplies every tolerance")->check(CLI::PositiveNumber);
    ver->add_option("--json", json_path, "write the JSON report here");
    ver->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    ver->add_flag("--timing", opt.timing, "record wall time in the report");

    auto* ct = app.add_subcommand("ctet", "C(1,1) by route");
    std::string route = "all";
    int digits = 15;
    ct->add_option("--route", route, "all|series|clausen|rajantie|srp");
    ct->add_option("--digits", digits, "significant digits (up to 25 for the series route)");

    auto* be = app.add_subcommand("bench", "time and check evaluation strategies");
    std::string bfn = "cl2";
    long points = 1000;
    be->add_option("--fn", bfn, "cl2|li2");
    be->add_option("--points", points, "number of sample points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ev) return cmd_eval(fn, args, tol);
        if (*ver) return cmd_verify(opt, json_path);
        if (*ct) return cmd_ctet(route, digits);
        if (*be) return cmd_bench(bfn, points);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitUsage;
}
