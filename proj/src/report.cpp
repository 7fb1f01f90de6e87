#include "signed_spectra/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "signed_spectra/graph_io.hpp"

namespace signed_spectra {

using nlohmann::json;

std::string four_decimals(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

namespace {

std::string sg1_one_line(const SignedGraph& g) {
    auto s = to_sg1(g);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

}  // namespace

json class_to_json(const SignedGraphClass& c) {
    return {{"code", c.code.hex()},
            {"sg1", to_sg1(c.representative)},
            {"lambda1", c.lambda1},
            {"lambda_min", c.lambda_min},
            {"rho", c.rho}};
}

json verification_to_json(const VerificationReport& r, bool deterministic) {
    json classes = json::array();
    for (const auto& c : r.classes) classes.push_back(class_to_json(c));
    json argmax = json::array();
    for (const auto& c : r.argmax_codes) argmax.push_back(c.hex());
    json j{{"order", r.order},
           {"class_count", r.class_count},
           {"classes", std::move(classes)},
           {"max_rho", r.max_rho},
           {"max_rho_4dp", four_decimals(r.max_rho)},
           {"argmax_codes", std::move(argmax)},
           {"runner_up_gap", r.runner_up_gap},
           {"gamma_n", r.gamma_n},
           {"gamma_n_4dp", four_decimals(r.gamma_n)},
           {"extremal_code", r.extremal_code.hex()},
           {"maximizer_is_extremal", r.maximizer_is_extremal},
           {"maximizer_rho_is_lambda1", r.maximizer_rho_is_lambda1},
           {"theorem_holds", r.theorem_holds},
           {"unique_maximizer", r.unique_maximizer},
           {"tolerance", r.tolerance}};
    j["wall_time_ms"] = deterministic ? 0 : r.wall_time.count();
    return j;
}

json family_to_json(const FamilySpectrumReport& r) {
    json j{{"n", r.params.n},
           {"tau", r.params.tau},
           {"eigenvalues", r.eigenvalues},
           {"expected", r.expected},
           {"minus_one_multiplicity", r.minus_one_multiplicity},
           {"lambda1", r.lambda1},
           {"lambda1_4dp", four_decimals(r.lambda1)},
           {"max_deviation", r.max_deviation},
           {"spectrum_matches", r.spectrum_matches},
           {"roots_confirmed", r.roots_confirmed},
           {"failures", r.failures},
           {"ok", r.ok()}};
    if (r.lambda1_exceeds_n_minus_4) j["lambda1_exceeds_n_minus_4"] = *r.lambda1_exceeds_n_minus_4;
    if (r.offending_eigenvalue) j["offending_eigenvalue"] = *r.offending_eigenvalue;
    return j;
}

std::string classes_to_csv(const std::vector<SignedGraphClass>& classes) {
    std::vector<const SignedGraphClass*> sorted;
    for (const auto& c : classes) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
        return a->lambda1 != b->lambda1 ? a->lambda1 < b->lambda1 : a->lambda_min < b->lambda_min;
    });
    std::ostringstream os;
    os.precision(12);
    os << "index,lambda1,lambda_min,rho,sg1\n";
    int i = 1;
    for (const auto* c : sorted) {
        os << i++ << ',' << c->lambda1 << ',' << c->lambda_min << ',' << c->rho << ",\"" << sg1_one_line(c->representative)
           << "\"\n";
    }
    return os.str();
}

std::vector<std::pair<double, double>> eigenvalue_pairs_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV", 1);
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string field;
        while (std::getline(hs, field, ',')) header.push_back(field);
    }
    const auto col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw ParseError("CSV header lacks column '" + name + "'", 1);
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto c1 = col("lambda1"), c2 = col("lambda_min");
    std::vector<std::pair<double, double>> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() <= std::max(c1, c2)) throw ParseError("short CSV row", line_no);
        try {
            out.emplace_back(std::stod(fields[c1]), std::stod(fields[c2]));
        } catch (const std::exception&) {
            throw ParseError("non-numeric eigenvalue", line_no);
        }
    }
    return out;
}

bool match_eigenvalue_pairs(std::vector<std::pair<double, double>> computed,
                            std::vector<std::pair<double, double>> reference, double tolerance) {
    if (computed.size() != reference.size()) return false;
    std::vector<bool> used(reference.size(), false);
    std::sort(computed.begin(), computed.end());
    std::sort(reference.begin(), reference.end());
    for (const auto& [l1, lmin] : computed) {
        bool found = false;
        for (std::size_t k = 0; k < reference.size(); ++k) {
            if (used[k]) continue;
            if (std::abs(reference[k].first - l1) <= tolerance && std::abs(reference[k].second - lmin) <= tolerance) {
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

json to_json(const ReportDocument& doc) {
    return {{"tool_version", doc.tool_version}, {"config", doc.config},   {"timestamp", doc.timestamp},
            {"results", doc.results},           {"passed", doc.passed},   {"summary", doc.summary}};
}

ReportDocument report_from_json(const json& j) {
    ReportDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.config = j.at("config");
    doc.timestamp = j.at("timestamp").get<std::string>();
    doc.results = j.at("results");
    doc.passed = j.at("passed").get<bool>();
    doc.summary = j.at("summary").get<std::vector<std::string>>();
    return doc;
}

}  // namespace signed_spectra
