#include "ctx/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace ctx {

Rat parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rat(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("cannot parse rational '" + text + "': " + e.what());
    }
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void validate_context_orthogonality(const Scenario& s, const Context& c) {
    for (std::size_t i = 0; i < c.ray_ids.size(); ++i)
        for (std::size_t j = i + 1; j < c.ray_ids.size(); ++j) {
            const Ray& a = s.rays[c.ray_ids[i]];
            const Ray& b = s.rays[c.ray_ids[j]];
            if (dot(a.vector, b.vector) != 0)
                throw ParseError("context members '" + a.label + "' and '" + b.label +
                                 "' are not orthogonal");
        }
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("scenario document must be an object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw ParseError("missing integer field 'dimension'");
    Scenario s;
    s.dimension = doc["dimension"].get<std::size_t>();
    if (s.dimension < 2) throw ParseError("dimension must be at least 2");

    if (!doc.contains("rays") || !doc["rays"].is_array() || doc["rays"].empty())
        throw ParseError("missing non-empty array field 'rays'");

    std::map<std::string, std::size_t> by_label;
    for (const auto& entry : doc["rays"]) {
        if (!entry.contains("label") || !entry.contains("vector"))
            throw ParseError("each ray needs 'label' and 'vector'");
        Ray r;
        r.id = s.rays.size();
        r.label = entry["label"].get<std::string>();
        if (by_label.count(r.label)) throw ParseError("duplicate ray label '" + r.label + "'");
        std::vector<Rat> coords;
        for (const auto& c : entry["vector"]) coords.push_back(parse_rational(c.get<std::string>()));
        if (coords.size() != s.dimension)
            throw ParseError("ray '" + r.label + "' has " + std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(s.dimension));
        try {
            r.vector = RayVector::canonicalize(coords);
        } catch (const ZeroVectorError&) {
            throw ParseError("ray '" + r.label + "' is the zero vector");
        }
        r.synthetic = entry.value("synthetic", false);
        by_label.emplace(r.label, r.id);
        s.rays.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < s.rays.size(); ++i)
        for (std::size_t j = i + 1; j < s.rays.size(); ++j)
            if (s.rays[i].vector == s.rays[j].vector)
                throw DuplicateRayError("rays '" + s.rays[i].label + "' and '" + s.rays[j].label +
                                        "' are parallel");

    const auto options = doc.value("options", nlohmann::json::object());
    const bool derive = options.value("derive_contexts", false);
    const bool complete = options.value("complete", false);

    if (doc.contains("contexts") && !doc["contexts"].is_null()) {
        s.origin = ScenarioOrigin::Explicit;
        for (const auto& ctx_labels : doc["contexts"]) {
            Context c;
            for (const auto& l : ctx_labels) {
                const std::string label = l.get<std::string>();
                auto it = by_label.find(label);
                if (it == by_label.end())
                    throw ParseError("context references unknown ray '" + label + "'");
                c.ray_ids.push_back(it->second);
            }
            if (c.ray_ids.empty()) throw ParseError("empty context");
            validate_context_orthogonality(s, c);
            s.contexts.push_back(std::move(c));
        }
    } else if (derive) {
        s.origin = ScenarioOrigin::Derived;
        s.contexts = derive_contexts(build_orthogonality_graph(s.rays));
    } else {
        throw ParseError("document has no contexts and derive_contexts is not set");
    }
    if (s.contexts.empty()) throw ParseError("scenario has no contexts");

    if (complete) s = complete_contexts(s);
    return s;
}

nlohmann::json scenario_to_json(const Scenario& scenario) {
    nlohmann::json doc;
    doc["dimension"] = scenario.dimension;
    doc["rays"] = nlohmann::json::array();
    for (const Ray& r : scenario.rays) {
        nlohmann::json entry;
        entry["label"] = r.label;
        entry["vector"] = nlohmann::json::array();
        for (std::size_t i = 0; i < r.vector.dim(); ++i)
            entry["vector"].push_back(r.vector[i].str());
        if (r.synthetic) entry["synthetic"] = true;
        doc["rays"].push_back(std::move(entry));
    }
    doc["contexts"] = nlohmann::json::array();
    for (const Context& c : scenario.contexts) {
        nlohmann::json labels = nlohmann::json::array();
        for (std::size_t id : c.ray_ids) labels.push_back(scenario.rays[id].label);
        doc["contexts"].push_back(std::move(labels));
    }
    doc["options"] = {{"complete", false}, {"derive_contexts", false}};
    return doc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    return scenario_from_json(doc);
}

nlohmann::json report_to_json(const AnalysisReport& report, const Scenario& scenario,
                              double elapsed_ms) {
    nlohmann::json doc;
    doc["verdict"] = to_string(report.verdict);
    doc["method"] = to_string(report.method);
    doc["assignment_count"] = report.assignment_count;
    doc["witnesses"] = nlohmann::json::array();
    for (const RayVector& w : report.witnesses) {
        nlohmann::json v = nlohmann::json::array();
        for (std::size_t i = 0; i < w.dim(); ++i) v.push_back(w[i].str());
        doc["witnesses"].push_back(std::move(v));
    }
    doc["diagnostics"] = nlohmann::json::array();
    for (const PairDiagnosis& d : report.diagnostics) {
        nlohmann::json entry;
        entry["pair"] = {scenario.rays[d.ray_a].label, scenario.rays[d.ray_b].label};
        entry["situation"] = to_string(d.situation);
        if (d.orthogonal_ray) entry["orthogonal_ray"] = scenario.rays[*d.orthogonal_ray].label;
        entry["excluded"] = d.excluded;
        if (d.excluding_assignment) entry["excluding_assignment"] = *d.excluding_assignment;
        entry["shortcut_disagrees"] = d.shortcut_disagrees;
        doc["diagnostics"].push_back(std::move(entry));
    }
    doc["timings"] = {{"total_ms", elapsed_ms}};
    return doc;
}

nlohmann::json assignments_to_json(const Scenario& scenario,
                                   const std::vector<GlobalAssignment>& assignments) {
    nlohmann::json doc;
    doc["assignment_count"] = assignments.size();
    doc["rays"] = nlohmann::json::array();
    for (const Ray& r : scenario.rays) doc["rays"].push_back(r.label);
    doc["assignments"] = nlohmann::json::array();
    for (const GlobalAssignment& a : assignments) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint8_t v : a.values) row.push_back(static_cast<int>(v));
        doc["assignments"].push_back(std::move(row));
    }
    return doc;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_scenario_table(const Scenario& scenario) {
    std::ostringstream os;
    os << "dimension: " << scenario.dimension << "\n";
    os << "rays (" << scenario.rays.size() << "):\n";
    for (const Ray& r : scenario.rays) {
        os << "  " << pad(r.label, 5) << r.vector.str();
        if (r.synthetic) os << "  [completion]";
        os << "\n";
    }
    os << "contexts (" << scenario.contexts.size() << "):\n";
    for (const Context& c : scenario.contexts) {
        os << " ";
        for (std::size_t id : c.ray_ids) os << " " << scenario.rays[id].label;
        os << "\n";
    }
    return os.str();
}

std::string render_assignments_table(const Scenario& scenario,
                                     const std::vector<GlobalAssignment>& assignments) {
    std::ostringstream os;
    os << assignments.size() << " assignments\n";
    if (assignments.empty()) return os.str();
    std::size_t width = 5;
    for (const Ray& r : scenario.rays) width = std::max(width, r.label.size() + 1);
    os << pad("index", 7);
    for (const Ray& r : scenario.rays) os << pad(r.label, width);
    os << "\n";
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        os << pad(std::to_string(i + 1), 7);
        for (std::uint8_t v : assignments[i].values) os << pad(std::to_string(int(v)), width);
        os << "\n";
    }
    return os.str();
}

std::string render_model_table(const Scenario& scenario, const EmpiricalModel& model) {
    std::ostringstream os;
    os << "empirical model for state " << model.state.str() << "\n";
    for (std::size_t c = 0; c < scenario.contexts.size(); ++c) {
        std::string labels;
        for (std::size_t id : scenario.contexts[c].ray_ids)
            labels += (labels.empty() ? "" : " ") + scenario.rays[id].label;
        os << pad(labels, 14) << "| ";
        for (std::size_t k = 0; k < model.rows[c].size(); ++k) {
            if (k) os << "  ";
            os << rat_str(model.rows[c][k]);
        }
        os << "\n";
    }
    return os.str();
}

std::string render_report_table(const AnalysisReport& report, const Scenario& scenario) {
    std::ostringstream os;
    os << "method:      " << to_string(report.method) << "\n";
    os << "assignments: " << report.assignment_count << "\n";
    os << "verdict:     " << to_string(report.verdict) << "\n";
    if (!report.witnesses.empty()) {
        os << "witness states:\n";
        for (const RayVector& w : report.witnesses) os << "  " << w.str() << "\n";
    }
    std::size_t excluded = 0, flagged = 0;
    for (const PairDiagnosis& d : report.diagnostics) {
        if (d.excluded) ++excluded;
        if (d.shortcut_disagrees) ++flagged;
    }
    if (!report.diagnostics.empty()) {
        os << "pairs analyzed: " << report.diagnostics.size() << " (" << excluded
           << " excluded lines)\n";
        if (flagged)
            os << "pairs where the shortcut and span tests disagree: " << flagged << "\n";
    }
    (void)scenario;
    return os.str();
}

}  // namespace ctx
