#pragma once

#include <string>

#include <json.hpp>

#include "rainbow/harness.hpp"
#include "rainbow/theorems.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

// All serializers use nlohmann's default object ordering (keys sorted), so a
// fixed input always produces byte-identical output.
std::string dump_line(const nlohmann::json& j);  // compact dump plus newline

nlohmann::json coloring_json(const KColoring& f);
nlohmann::json circular_json(const CircularColoring& c);
nlohmann::json witness_json(const PathWitness& w);

// {"begins": [...], "lies_on": [...], "witnesses": {"v": [path], ...}} — the
// witness for a vertex is its begins path when one exists, else its lies-on
// path; vertices on no full rainbow path are absent from the map.
nlohmann::json report_json(const RainbowReport& rep);
nlohmann::json report_verdicts_json(const RainbowReport& rep);  // begins/lies_on only

// Envelopes: {"theorem": t, "k": ..., "coloring": [...], "witnesses": ...,
// "trace": ..., "report": {verdicts}}.
nlohmann::json theorem1_json(const Theorem1Result& r);
nlohmann::json theorem2_json(const Theorem2Result& r);
nlohmann::json theorem3_json(const Theorem3Result& r);
nlohmann::json theorem4_json(const Theorem4Result& r);

nlohmann::json sweep_record_json(const SweepRecord& rec);
nlohmann::json sweep_summary_json(const SweepReport& report);

// Strict config reader: unknown keys, wrong types, or unknown family/check
// names raise parse_error.
SweepConfig parse_sweep_config(const std::string& text);

// Colors as integers separated by whitespace and/or commas, or a JSON array.
// '#' starts a comment through end of line.
std::vector<int> parse_color_list(const std::string& text);

} // namespace rainbow
