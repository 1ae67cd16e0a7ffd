#include "clausen/identities.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <thread>

namespace clausen::identities {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::discrepancy_resolved: return "discrepancy-resolved";
    }
    return "fail";
}

bool matches_filter(const Identity& id, const std::string& glob) {
    if (glob.empty()) return true;
    if (fnmatch(glob.c_str(), id.id.c_str(), 0) == 0) return true;
    std::string group = id.id.substr(0, 4);
    return fnmatch(glob.c_str(), group.c_str(), 0) == 0;
}

namespace {

// FNV-1a; std::hash is not stable across library versions
std::uint64_t hash_id(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

constexpr double kMargin = 1e-3;
constexpr int kMinSamples = 5;

}  // namespace

std::vector<Point> sample_points(const Identity& id, std::uint64_t seed) {
    std::vector<Point> pts = id.fixed;
    int want = id.n_random;
    if (!id.params.empty())
        want = std::max(want, kMinSamples - static_cast<int>(pts.size()));
    if (id.params.empty() || want <= 0) return pts;

    std::mt19937_64 rng(seed ^ hash_id(id.id));
    int tries = 0;
    while (want > 0 && tries < 10000) {
        ++tries;
        Point p;
        for (const auto& par : id.params) {
            if (par.integer) {
                long lo = std::lround(par.lo), hi = std::lround(par.hi);
                long v = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
                p.push_back(static_cast<double>(v));
            } else {
                double lo = par.lo + kMargin, hi = par.hi - kMargin;
                p.push_back(lo + (hi - lo) * unit(rng));
            }
        }
        if (id.accept && !id.accept(p)) continue;
        pts.push_back(std::move(p));
        --want;
    }
    return pts;
}

namespace {

std::vector<std::pair<std::string, double>> label(const Identity& id, const Point& p) {
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.emplace_back(i < id.params.size() ? id.params[i].name : "x" + std::to_string(i), p[i]);
    return out;
}

SampleCheck compare(double lhs, double rhs, double tol) {
    SampleCheck s;
    s.lhs = lhs;
    s.rhs = rhs;
    s.abs_err = std::fabs(lhs - rhs);
    s.rel_err = s.abs_err / std::max(1.0, std::fabs(rhs));
    s.within_tol = std::isfinite(s.rel_err) && s.rel_err <= tol;
    return s;
}

}  // namespace

IdentityResult evaluate(const Identity& id, std::uint64_t seed, double tol_scale) {
    IdentityResult res;
    res.id = id.id;
    res.description = id.description;
    res.paper_ref = id.paper_ref;
    res.tolerance = id.tolerance * tol_scale;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<Point> pts;
    try {
        pts = sample_points(id, seed);
    } catch (const std::exception& e) {
        res.message = std::string("sampler: ") + e.what();
        return res;
    }

    bool all_ok = !pts.empty();
    if (pts.empty()) res.message = "no sample points";
    std::vector<std::vector<Candidate>> cand_rows;

    for (const auto& p : pts) {
        SampleCheck s;
        try {
            Sides v = id.eval(p);
            if (id.policy == Policy::discrepancy) {
                auto cands = id.candidates(p);
                // rhs shows the best-matching candidate form
                double best = nan, best_err = std::numeric_limits<double>::infinity();
                for (const auto& c : cands) {
                    double e = std::fabs(v.lhs - c.value);
                    if (e < best_err) {
                        best_err = e;
                        best = c.value;
                    }
                }
                s = compare(v.lhs, best, res.tolerance);
                for (auto& c : cands) c.value = std::fabs(v.lhs - c.value) / std::max(1.0, std::fabs(c.value));
                cand_rows.push_back(std::move(cands));
            } else {
                s = compare(v.lhs, v.rhs, res.tolerance);
            }
        } catch (const std::exception& e) {
            s = compare(nan, nan, res.tolerance);
            if (res.message.empty()) res.message = e.what();
        }
        s.inputs = label(id, p);
        all_ok = all_ok && s.within_tol;
        res.samples.push_back(std::move(s));
    }

    if (id.policy == Policy::discrepancy) {
        if (!cand_rows.empty() && cand_rows.size() == pts.size()) {
            for (std::size_t c = 0; c < cand_rows[0].size(); ++c) {
                CandidateMatch m;
                m.name = cand_rows[0][c].name;
                for (const auto& row : cand_rows) m.max_rel_err = std::max(m.max_rel_err, row[c].value);
                m.matched = m.max_rel_err <= res.tolerance;
                res.candidates.push_back(m);
            }
        }
        res.status = Status::discrepancy_resolved;
        bool any = std::any_of(res.candidates.begin(), res.candidates.end(),
                               [](const CandidateMatch& m) { return m.matched; });
        if (!any && res.message.empty()) res.message = "no candidate form matched";
    } else {
        res.status = all_ok ? Status::pass : Status::fail;
        if (!all_ok && res.message.empty()) res.message = "sample outside tolerance";
    }
    return res;
}

Report run_suite(const std::vector<Identity>& ids, const RunOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Identity*> chosen;
    for (const auto& id : ids)
        if (matches_filter(id, opt.filter)) chosen.push_back(&id);

    Report rep;
    rep.seed = opt.seed;
    rep.tol_scale = opt.tol_scale;
    rep.identities.resize(chosen.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < chosen.size(); i = next++)
            rep.identities[i] = evaluate(*chosen[i], opt.seed, opt.tol_scale);
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(chosen.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (opt.timing) {
        auto dt = std::chrono::steady_clock::now() - t0;
        rep.wall_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
    }
    return rep;
}

Report run_suite(const RunOptions& opt) { return run_suite(catalog(), opt); }

int assert_failures(const Report& r) {
    return static_cast<int>(std::count_if(r.identities.begin(), r.identities.end(),
                                          [](const IdentityResult& x) { return x.status == Status::fail; }));
}

}  // namespace clausen::identities
