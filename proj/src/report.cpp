#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "clausen/identities.hpp"

namespace clausen::identities {

namespace {

// 17 significant digits, '.' separator regardless of locale; non-finite values become null
std::string num(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

std::string str(const std::string& s) { return nlohmann::json(s).dump(); }

void json_sample(std::string& out, const SampleCheck& s, const std::string& ind) {
    out += ind + "{\"inputs\": {";
    for (std::size_t i = 0; i < s.inputs.size(); ++i) {
        if (i) out += ", ";
        out += str(s.inputs[i].first) + ": " + num(s.inputs[i].second);
    }
    out += "}, \"lhs\": " + num(s.lhs) + ", \"rhs\": " + num(s.rhs) + ", \"abs_err\": " + num(s.abs_err) +
           ", \"rel_err\": " + num(s.rel_err) + ", \"within_tol\": " + (s.within_tol ? "true" : "false") + "}";
}

std::string render_json(const Report& r) {
    std::string out = "{\n";
    out += "  \"seed\": " + std::to_string(r.seed) + ",\n";
    out += "  \"tol_scale\": " + num(r.tol_scale) + ",\n";
    out += "  \"identities\": [";
    for (std::size_t i = 0; i < r.identities.size(); ++i) {
        const auto& x = r.identities[i];
        out += i ? ",\n" : "\n";
        out += "    {\n";
        out += "      \"id\": " + str(x.id) + ",\n";
        out += "      \"description\": " + str(x.description) + ",\n";
        out += "      \"paper_ref\": " + str(x.paper_ref) + ",\n";
        out += "      \"status\": " + str(status_name(x.status)) + ",\n";
        out += "      \"tolerance\": " + num(x.tolerance) + ",\n";
        if (!x.message.empty()) out += "      \"message\": " + str(x.message) + ",\n";
        if (!x.candidates.empty()) {
            out += "      \"resolution\": [";
            for (std::size_t c = 0; c < x.candidates.size(); ++c) {
                const auto& m = x.candidates[c];
                out += c ? ", " : "";
                out += "{\"form\": " + str(m.name) + ", \"matched\": " + (m.matched ? "true" : "false") +
                       ", \"max_rel_err\": " + num(m.max_rel_err) + "}";
            }
            out += "],\n";
        }
        out += "      \"samples\": [";
        for (std::size_t k = 0; k < x.samples.size(); ++k) {
            out += k ? ",\n" : "\n";
            json_sample(out, x.samples[k], "        ");
        }
        out += x.samples.empty() ? "]\n" : "\n      ]\n";
        out += "    }";
    }
    out += r.identities.empty() ? "],\n" : "\n  ],\n";
    out += "  \"wall_ms\": " + std::to_string(r.wall_ms) + "\n}\n";
    return out;
}

std::string sci(double x) {
    if (!std::isfinite(x)) return "nan";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 1);
    return std::string(buf, res.ptr);
}

std::string render_markdown(const Report& r) {
    std::string out = "| id | status | samples | max rel err | tolerance | topic |\n";
    out += "|---|---|---|---|---|---|\n";
    int pass = 0, fail = 0, disc = 0;
    for (const auto& x : r.identities) {
        double worst = 0.0;
        for (const auto& s : x.samples) worst = std::max(worst, std::isfinite(s.rel_err) ? s.rel_err : INFINITY);
        std::string status = status_name(x.status);
        if (x.status == Status::discrepancy_resolved) {
            ++disc;
            for (const auto& m : x.candidates)
                if (m.matched) status += " (" + m.name + ")";
        } else if (x.status == Status::pass) {
            ++pass;
        } else {
            ++fail;
            if (!x.message.empty()) status += ": " + x.message;
        }
        out += "| " + x.id + " | " + status + " | " + std::to_string(x.samples.size()) + " | " + sci(worst) +
               " | " + sci(x.tolerance) + " | " + x.paper_ref + " |\n";
    }
    out += "\n" + std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " + std::to_string(disc) +
           " discrepancy-resolved\n";
    return out;
}

}  // namespace

std::string render_report(const Report& r, Format f) {
    return f == Format::json ? render_json(r) : render_markdown(r);
}

}  // namespace clausen::identities
