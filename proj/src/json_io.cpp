#include "heightlab/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace heightlab {

std::string hex_double(double x) {
    char buf[64];
    snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

double parse_hex_double(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw std::invalid_argument("parse_hex_double: bad float '" + s + "'");
    return v;
}

nlohmann::ordered_json rootbag_json(const RootBag& bag) {
    nlohmann::ordered_json j;
    j["schema"] = kSchemaTag;
    j["poly"] = bag.poly.coeff_csv();
    j["precision_bits"] = bag.precision_bits;
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const RootDisk& d : bag.roots) {
        nlohmann::ordered_json r;
        r["re"] = hex_double(d.re);
        r["im"] = hex_double(d.im);
        r["radius"] = hex_double(d.radius);
        r["partner"] = d.partner;
        roots.push_back(std::move(r));
    }
    j["roots"] = std::move(roots);
    return j;
}

RootBag rootbag_from_json(const nlohmann::ordered_json& j) {
    RootBag bag;
    bag.poly = IntPoly::from_string(j.at("poly").get<std::string>());
    bag.precision_bits = j.at("precision_bits").get<long>();
    for (const auto& r : j.at("roots")) {
        RootDisk d;
        d.re = parse_hex_double(r.at("re").get<std::string>());
        d.im = parse_hex_double(r.at("im").get<std::string>());
        d.radius = parse_hex_double(r.at("radius").get<std::string>());
        d.partner = r.at("partner").get<int>();
        bag.roots.push_back(d);
    }
    return bag;
}

nlohmann::ordered_json height_report_json(const HeightReport& report) {
    nlohmann::ordered_json j;
    j["lo"] = report.lo;
    j["hi"] = report.hi;
    if (report.exact_log_arg) j["exact"] = to_string(*report.exact_log_arg);
    j["degree"] = report.degree;
    if (report.witness_prime) j["witness_prime"] = *report.witness_prime;
    if (report.irreducibility_asserted) j["irreducibility_asserted"] = true;
    return j;
}

nlohmann::ordered_json transcript_json(const Transcript& tr) {
    nlohmann::ordered_json j;
    j["schema"] = kSchemaTag;
    j["scenario"] = tr.scenario;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const TranscriptStep& s : tr.steps) {
        nlohmann::ordered_json step;
        step["id"] = s.id;
        step["claim"] = s.claim;
        step["evidence"] = s.evidence;
        step["status"] = to_string(s.status);
        step["ok"] = s.ok;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    if (!tr.table.empty()) {
        nlohmann::ordered_json table;
        table["header"] = tr.table_header;
        table["rows"] = tr.table;
        j["table"] = std::move(table);
    }
    j["asserted_steps"] = tr.asserted_count();
    j["verdict"] = tr.pass() ? "pass" : "fail";
    return j;
}

std::string render_transcript_text(const Transcript& tr) {
    std::string out = "scenario: " + tr.scenario + "\n";
    for (const TranscriptStep& s : tr.steps) {
        out += std::string(s.ok ? "  [ok]   " : "  [FAIL] ") + s.id + " (" + to_string(s.status) +
               ")\n";
        out += "         claim:    " + s.claim + "\n";
        out += "         evidence: " + s.evidence + "\n";
    }
    if (!tr.table.empty()) {
        out += "  table:\n";
        std::string header = "    ";
        for (const auto& h : tr.table_header) header += h + "  ";
        out += header + "\n";
        for (const auto& row : tr.table) {
            std::string line = "    ";
            for (const auto& cell : row) line += cell + "  ";
            out += line + "\n";
        }
    }
    out += "verdict: " + std::string(tr.pass() ? "pass" : "fail") +
           " (asserted-from-paper steps: " + std::to_string(tr.asserted_count()) + ")\n";
    return out;
}

}  // namespace heightlab
