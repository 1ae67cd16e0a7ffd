#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "clausen/identities.hpp"

using namespace clausen::identities;

namespace {

Identity toy(const std::string& id, double offset) {
    Identity t;
    t.id = id;
    t.description = "x equals x plus offset";
    t.paper_ref = "toy";
    t.params = {{"x", -1.0, 1.0}};
    t.eval = [offset](const Point& p) { return Sides{p[0], p[0] + offset}; };
    return t;
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& cat = catalog();
    CHECK(cat.size() >= 40);
    std::set<std::string> ids;
    for (const auto& id : cat) {
        INFO(id.id);
        CHECK(ids.insert(id.id).second);
        CHECK(id.id.size() >= 5);
        CHECK(id.id.rfind("I-", 0) == 0);
        CHECK(!id.description.empty());
        CHECK(id.tolerance > 0.0);
        CHECK(static_cast<bool>(id.eval));
        CHECK(sample_points(id, 1).size() >= 5);
        if (id.policy == Policy::discrepancy) CHECK(static_cast<bool>(id.candidates));
    }
}

TEST_CASE("every catalog topic is in the manifest and every manifest topic is covered") {
    const auto& man = topic_manifest();
    std::set<std::string> topics(man.begin(), man.end()), used;
    for (const auto& id : catalog()) {
        INFO(id.id);
        CHECK(!id.paper_ref.empty());
        CHECK(topics.count(id.paper_ref) == 1);
        used.insert(id.paper_ref);
    }
    CHECK(used == topics);
}

TEST_CASE("exactly two discrepancy records") {
    std::vector<std::string> disc;
    for (const auto& id : catalog())
        if (id.policy == Policy::discrepancy) disc.push_back(id.id);
    CHECK(disc == std::vector<std::string>{"I-05a", "I-11k"});
}

TEST_CASE("filter semantics") {
    Identity a = toy("I-02a", 0), b = toy("I-12c", 0);
    CHECK(matches_filter(a, "I-0*"));
    CHECK_FALSE(matches_filter(b, "I-0*"));
    CHECK(matches_filter(a, "I-02"));
    CHECK(matches_filter(a, "I-02a"));
    CHECK_FALSE(matches_filter(a, "I-02b"));
    CHECK(matches_filter(b, "*"));
    CHECK(matches_filter(b, "I-1?c"));
}

TEST_CASE("sampling is seeded and respects the margin") {
    Identity t = toy("I-99a", 0);
    t.n_random = 8;
    auto p1 = sample_points(t, 42), p2 = sample_points(t, 42), p3 = sample_points(t, 43);
    CHECK(p1 == p2);
    CHECK(p1 != p3);
    CHECK(p1.size() == 8);
    for (const auto& p : p1) CHECK((p[0] >= -1.0 + 1e-3 && p[0] <= 1.0 - 1e-3));
    t.n_random = 0;
    CHECK(sample_points(t, 42).size() == 5);
    t.accept = [](const Point& p) { return p[0] > 0.0; };
    for (const auto& p : sample_points(t, 7)) CHECK(p[0] > 0.0);
}

TEST_CASE("status, tolerance scaling and exceptions") {
    std::vector<Identity> ids{toy("I-90a", 0.0), toy("I-90b", 1e-13), toy("I-90c", 1e-6), toy("I-90d", 0.0)};
    ids[3].eval = [](const Point&) -> Sides { throw std::domain_error("boom"); };
    Report r = run_suite(ids, RunOptions{});
    REQUIRE(r.identities.size() == 4);
    CHECK(r.identities[0].status == Status::pass);
    CHECK(r.identities[1].status == Status::pass);
    CHECK(r.identities[2].status == Status::fail);
    CHECK(r.identities[3].status == Status::fail);
    CHECK(r.identities[3].message == "boom");
    CHECK(assert_failures(r) == 2);

    RunOptions tight;
    tight.tol_scale = 1e-3;
    Report t = run_suite(ids, tight);
    CHECK(t.identities[1].status == Status::fail);
    CHECK(t.identities[1].tolerance == doctest::Approx(1e-15));
}

TEST_CASE("discrepancy records never fail") {
    Identity d = toy("I-91a", 0.0);
    d.policy = Policy::discrepancy;
    d.candidates = [](const Point& p) {
        return std::vector<Candidate>{{"off", p[0] + 1.0}, {"exact", p[0]}};
    };
    auto res = evaluate(d, 1, 1.0);
    CHECK(res.status == Status::discrepancy_resolved);
    REQUIRE(res.candidates.size() == 2);
    CHECK_FALSE(res.candidates[0].matched);
    CHECK(res.candidates[1].matched);
    d.candidates = [](const Point& p) { return std::vector<Candidate>{{"off", p[0] + 1.0}}; };
    auto none = evaluate(d, 1, 1.0);
    CHECK(none.status == Status::discrepancy_resolved);
    CHECK(none.message == "no candidate form matched");
}

TEST_CASE("reports are deterministic and parse as JSON") {
    RunOptions opt;
    opt.filter = "I-0*";
    opt.seed = 42;
    std::string a = render_report(run_suite(opt), Format::json);
    opt.jobs = 3;
    std::string b = render_report(run_suite(opt), Format::json);
    CHECK(a == b);

    auto j = nlohmann::json::parse(a);
    CHECK(j["seed"] == 42);
    CHECK(j["wall_ms"] == 0);
    REQUIRE(j["identities"].size() > 0);
    for (const auto& x : j["identities"]) {
        CHECK(x["id"].get<std::string>().rfind("I-0", 0) == 0);
        CHECK(x["samples"].size() >= 5);
        std::string st = x["status"];
        CHECK((st == "pass" || st == "discrepancy-resolved"));
        for (const auto& s : x["samples"])
            for (const char* k : {"inputs", "lhs", "rhs", "abs_err", "rel_err", "within_tol"}) CHECK(s.contains(k));
    }

    opt.filter = "nothing-matches";
    auto empty = nlohmann::json::parse(render_report(run_suite(opt), Format::json));
    CHECK(empty["identities"].empty());
}

TEST_CASE("markdown report has one row per identity") {
    std::vector<Identity> ids{toy("I-90a", 0.0), toy("I-90c", 1e-6)};
    std::string md = render_report(run_suite(ids, RunOptions{}), Format::markdown);
    CHECK(std::count(md.begin(), md.end(), '\n') == 2 + 2 + 2);
    CHECK(md.find("1 pass, 1 fail, 0 discrepancy-resolved") != std::string::npos);
}
