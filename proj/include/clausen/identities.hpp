#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace clausen::identities {

enum class Policy { assert_equal, discrepancy };

struct Param {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    bool integer = false;  // integer params are drawn from [lo, hi] inclusive, no margin
};

using Point = std::vector<double>;

struct Sides {
    double lhs = 0.0;
    double rhs = 0.0;
};

struct Candidate {
    std::string name;
    double value = 0.0;
};

struct Identity {
    std::string id;  // "I-07b"; the group is the first four characters
    std::string description;
    std::string paper_ref;  // topic key, see topic_manifest()
    std::vector<Param> params;
    std::vector<Point> fixed;
    int n_random = 0;
    std::function<bool(const Point&)> accept;  // optional domain filter for random draws
    std::function<Sides(const Point&)> eval;
    double tolerance = 1e-12;
    Policy policy = Policy::assert_equal;
    // discrepancy records only: forms compared against eval().lhs at every sample
    std::function<std::vector<Candidate>(const Point&)> candidates;
};

const std::vector<Identity>& catalog();
// every topic the catalog must cover
const std::vector<std::string>& topic_manifest();

struct SampleCheck {
    std::vector<std::pair<std::string, double>> inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;  // abs_err / max(1, |rhs|)
    bool within_tol = false;
};

enum class Status { pass, fail, discrepancy_resolved };
const char* status_name(Status s);

struct CandidateMatch {
    std::string name;
    bool matched = false;
    double max_rel_err = 0.0;
};

struct IdentityResult {
    std::string id;
    std::string description;
    std::string paper_ref;
    Status status = Status::fail;
    double tolerance = 0.0;  // after tol_scale
    std::vector<SampleCheck> samples;
    std::string message;
    std::vector<CandidateMatch> candidates;
};

struct Report {
    std::uint64_t seed = 0;
    double tol_scale = 1.0;
    std::vector<IdentityResult> identities;
    std::uint64_t wall_ms = 0;
};

struct RunOptions {
    std::string filter = "*";
    std::uint64_t seed = 20260101;
    double tol_scale = 1.0;
    unsigned jobs = 1;
    bool timing = false;  // wall_ms stays 0 otherwise so reports are byte-identical
};

// fnmatch against the full id or its group
bool matches_filter(const Identity& id, const std::string& glob);
std::vector<Point> sample_points(const Identity& id, std::uint64_t seed);
IdentityResult evaluate(const Identity& id, std::uint64_t seed, double tol_scale);

Report run_suite(const std::vector<Identity>& ids, const RunOptions& opt);
Report run_suite(const RunOptions& opt);

int assert_failures(const Report& r);

enum class Format { json, markdown };
std::string render_report(const Report& r, Format f);

}  // namespace clausen::identities
