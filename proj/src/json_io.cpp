#include "rainbow/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

using nlohmann::json;

std::string dump_line(const json& j) { return j.dump() + "\n"; }

json coloring_json(const KColoring& f) {
    return json{{"k", f.k}, {"colors", f.colors}};
}

json circular_json(const CircularColoring& c) {
    return json{{"n", c.n}, {"d", c.d}, {"values", c.values}};
}

json witness_json(const PathWitness& w) { return json(w.vertices); }

json report_verdicts_json(const RainbowReport& rep) {
    return json{{"begins", rep.begins}, {"lies_on", rep.lies_on}};
}

static json witness_map_json(const RainbowReport& rep) {
    json map = json::object();
    const std::size_t n = rep.begins.size();
    for (std::size_t v = 0; v < n; ++v) {
        const std::optional<PathWitness>* w = nullptr;
        if (v < rep.begins_witness.size() && rep.begins_witness[v]) w = &rep.begins_witness[v];
        else if (v < rep.lies_on_witness.size() && rep.lies_on_witness[v])
            w = &rep.lies_on_witness[v];
        if (w) map[std::to_string(v)] = witness_json(**w);
    }
    return map;
}

json report_json(const RainbowReport& rep) {
    json j = report_verdicts_json(rep);
    j["witnesses"] = witness_map_json(rep);
    return j;
}

json theorem1_json(const Theorem1Result& r) {
    json trace{{"base_circular", circular_json(r.trace.base_circular)},
               {"initial", r.trace.initial_f.colors},
               {"classes", r.trace.color_classes},
               {"recolored", r.trace.recolored_sets},
               {"final", r.trace.final_f.colors}};
    return json{{"theorem", 1},
                {"k", r.coloring.k},
                {"coloring", r.coloring.colors},
                {"witnesses", witness_map_json(r.report)},
                {"trace", trace},
                {"report", report_verdicts_json(r.report)}};
}

json theorem2_json(const Theorem2Result& r) {
    json weak = json::object();
    for (std::size_t v = 0; v < r.weak_witnesses.size(); ++v)
        if (r.weak_witnesses[v]) weak[std::to_string(v)] = witness_json(*r.weak_witnesses[v]);
    json trace{{"shifted_circular", circular_json(r.shifted_circular)},
               {"shift", r.shift},
               {"strong", r.strong_set},
               {"weak", r.weak_set},
               {"bound", json{{"num", r.bound.num}, {"den", r.bound.den}}},
               {"weak_witnesses", weak}};
    return json{{"theorem", 2},
                {"k", r.coloring.k},
                {"coloring", r.coloring.colors},
                {"witnesses", witness_map_json(r.report)},
                {"trace", trace},
                {"report", report_verdicts_json(r.report)}};
}

json theorem3_json(const Theorem3Result& r) {
    json trace{{"phase1_iterations", r.phase1_iterations},
               {"stage", r.phase2_stage},
               {"directed_cycle", r.directed_cycle}};
    return json{{"theorem", 3},
                {"k", r.coloring.k},
                {"coloring", r.coloring.colors},
                {"witnesses", witness_map_json(r.report)},
                {"trace", trace},
                {"report", report_verdicts_json(r.report)}};
}

json theorem4_json(const Theorem4Result& r) {
    json trace{{"case", r.decomposition.case_tag},
               {"sources", r.decomposition.sources},
               {"sinks", r.decomposition.sinks},
               {"middle", r.decomposition.middle}};
    return json{{"theorem", 4},
                {"k", r.coloring.k},
                {"coloring", r.coloring.colors},
                {"witnesses", json{{"directed_path", witness_json(r.witness)}}},
                {"trace", trace}};
}

json sweep_record_json(const SweepRecord& rec) {
    json j{{"graph", rec.graph},
           {"check", rec.check},
           {"outcome", rec.outcome},
           {"reason", rec.reason}};
    if (!rec.coloring.empty()) j["coloring"] = rec.coloring;
    return j;
}

json sweep_summary_json(const SweepReport& report) {
    json j{{"pass", report.counters.pass},
           {"fail", report.counters.fail},
           {"skipped", report.counters.skipped},
           {"open", report.counters.open}};
    if (report.c7) {
        j["begins_everywhere_colorings"] = report.c7->c7.begins_everywhere;
        j["lies_on_everywhere_colorings"] = report.c7->c7.lies_on_everywhere;
        j["c5_begins_everywhere_colorings"] = report.c7->c5.begins_everywhere;
    }
    if (report.counterexample) {
        j["counterexample"] =
            report.counterexample->graph ? json(*report.counterexample->graph) : json(nullptr);
        j["counterexample_complete"] = report.counterexample->complete;
    }
    return j;
}

namespace {

[[noreturn]] void config_fail(const std::string& msg) { throw parse_error("config: " + msg); }

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) known = true;
        if (!known) config_fail(std::string("unknown key \"") + it.key() + "\" in " + where);
    }
}

GeneratorSpec parse_generator_spec(const json& j) {
    if (!j.is_object()) config_fail("family entry must be an object");
    expect_keys(j, {"family", "k", "n", "p", "seed", "base"}, "family entry");
    GeneratorSpec spec;
    if (!j.contains("family") || !j["family"].is_string())
        config_fail("family entry needs a \"family\" string");
    spec.family = j["family"].get<std::string>();
    if (j.contains("k")) spec.k = j["k"].get<int>();
    if (j.contains("n")) spec.n = j["n"].get<int>();
    if (j.contains("p")) spec.p = j["p"].get<double>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("base"))
        spec.base = std::make_shared<GeneratorSpec>(parse_generator_spec(j["base"]));
    return spec;
}

} // namespace

SweepConfig parse_sweep_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        config_fail(e.what());
    }
    if (!j.is_object()) config_fail("top level must be an object");
    expect_keys(j,
                {"max_vertices", "families", "seed", "budget_ms", "checks",
                 "counterexample_search"},
                "config");
    SweepConfig cfg;
    try {
        if (j.contains("max_vertices")) cfg.max_vertices = j["max_vertices"].get<int>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("budget_ms")) cfg.budget_ms = j["budget_ms"].get<std::int64_t>();
        if (j.contains("families")) {
            if (!j["families"].is_array()) config_fail("\"families\" must be an array");
            for (const auto& f : j["families"]) cfg.families.push_back(parse_generator_spec(f));
        }
        if (j.contains("checks")) {
            if (!j["checks"].is_array()) config_fail("\"checks\" must be an array");
            cfg.checks.clear();
            for (const auto& c : j["checks"]) {
                std::string name = c.get<std::string>();
                if (std::find(kSweepChecks.begin(), kSweepChecks.end(), name) ==
                    kSweepChecks.end())
                    config_fail("unknown check \"" + name + "\"");
                cfg.checks.insert(name);
            }
        }
        if (j.contains("counterexample_search"))
            cfg.counterexample_search = j["counterexample_search"].get<bool>();
    } catch (const json::exception& e) {
        config_fail(e.what());
    }
    if (cfg.max_vertices < 0) config_fail("\"max_vertices\" must be nonnegative");
    if (cfg.max_vertices == 0 && cfg.families.empty())
        config_fail("corpus is empty: set max_vertices or families");
    return cfg;
}

std::vector<int> parse_color_list(const std::string& text) {
    std::string cleaned;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i == text.size()) break;
        }
        cleaned += text[i];
    }
    std::string body = cleaned;
    std::size_t first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '[') {
        try {
            json arr = json::parse(body);
            if (!arr.is_array()) throw parse_error("coloring: expected a JSON array");
            return arr.get<std::vector<int>>();
        } catch (const json::exception& e) {
            throw parse_error(std::string("coloring: ") + e.what());
        }
    }
    for (char& ch : body)
        if (ch == ',') ch = ' ';
    std::istringstream in(body);
    std::vector<int> colors;
    int c;
    while (in >> c) colors.push_back(c);
    in.clear();
    std::string rest;
    if (in >> rest) throw parse_error("coloring: unexpected token \"" + rest + "\"");
    if (colors.empty()) throw parse_error("coloring: no colors found");
    return colors;
}

} // namespace rainbow
