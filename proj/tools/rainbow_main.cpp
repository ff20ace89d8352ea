#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rainbow/errors.hpp"
#include "rainbow/json_io.hpp"

using namespace rainbow;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool has_extension(const std::string& path, const std::string& ext) {
    if (path.size() < ext.size()) return false;
    std::string tail = path.substr(path.size() - ext.size());
    for (char& c : tail) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return tail == ext;
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    bool dimacs = format == "col" || (format.empty() && has_extension(path, ".col"));
    return dimacs ? parse_dimacs_string(text) : parse_edge_list_string(text);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string body = text;
    for (char& ch : body)
        if (ch == ',') ch = ' ';
    std::istringstream in(body);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    in.clear();
    std::string rest;
    if (in >> rest) throw std::invalid_argument("bad vertex list near \"" + rest + "\"");
    if (out.empty()) throw std::invalid_argument("empty vertex list");
    return out;
}

int run_chromatic(const std::string& input, const std::string& format, bool circular) {
    Graph g = load_graph(input, format);
    nlohmann::json j;
    if (circular) {
        auto r = circular_chromatic_number(g);
        j = {{"chi_c", {{"n", r.number.n}, {"d", r.number.d}}}, {"witness", r.witness.values}};
    } else {
        auto r = chromatic_number(g);
        j = {{"chi", r.chi}, {"witness", r.witness.colors}};
    }
    std::cout << dump_line(j);
    return 0;
}

int run_color(const std::string& input, const std::string& format, int theorem,
              const std::string& cycle_text, const std::string& orientation_path,
              std::int64_t budget_ms, int k_ceiling) {
    Graph g = load_graph(input, format);
    nlohmann::json j;
    switch (theorem) {
        case 1:
            j = theorem1_json(theorem1(g));
            break;
        case 2:
            j = theorem2_json(theorem2(g));
            break;
        case 3: {
            std::optional<PathWitness> cycle;
            if (!cycle_text.empty()) cycle = PathWitness{parse_int_list(cycle_text), false};
            Theorem3Options opts;
            opts.budget_ms = budget_ms;
            opts.k_ceiling = k_ceiling;
            j = theorem3_json(theorem3(g, cycle, opts));
            break;
        }
        case 4: {
            if (orientation_path.empty())
                throw std::invalid_argument("--orientation is required with --theorem 4");
            Orientation o = parse_orientation_string(g, slurp(orientation_path));
            j = theorem4_json(theorem4(o));
            break;
        }
        default:
            throw std::invalid_argument("--theorem must be 1, 2, 3, or 4");
    }
    std::cout << dump_line(j);
    return 0;
}

int run_verify(const std::string& input, const std::string& format,
               const std::string& coloring_path, const std::string& mode,
               const std::string& orientation_path, int k_ceiling) {
    Graph g = load_graph(input, format);
    std::vector<int> colors = parse_color_list(slurp(coloring_path));
    int k = 0;
    for (int c : colors) k = std::max(k, c);
    KColoring f{k, colors};
    validate_coloring_shape(g, f);
    if (auto edge = find_improper_edge(g, f))
        throw std::invalid_argument("improper coloring: edge " + std::to_string(edge->first) +
                                    "-" + std::to_string(edge->second) +
                                    " joins equal colors");
    if (mode == "directed") {
        if (orientation_path.empty())
            throw std::invalid_argument("--orientation is required with --mode directed");
        Orientation o = parse_orientation_string(g, slurp(orientation_path));
        auto r = verify_directed_rainbow(o, f, k_ceiling);
        nlohmann::json j{{"found", r.found}};
        j["witness"] = r.witness ? witness_json(*r.witness) : nlohmann::json(nullptr);
        std::cout << dump_line(j);
        return r.found ? 0 : 1;
    }
    auto rep = verify_rainbow(g, f, {k_ceiling, true});
    std::cout << dump_line(report_json(rep));
    bool holds = mode == "begins" ? rep.all_begins() : rep.all_lies_on();
    return holds ? 0 : 1;
}

int run_sweep(const std::string& config_path, const std::string& out_path,
              std::optional<std::uint64_t> seed, std::optional<std::int64_t> budget_ms) {
    SweepConfig cfg;
    if (!config_path.empty()) cfg = parse_sweep_config(slurp(config_path));
    if (seed) cfg.seed = *seed;
    if (budget_ms) cfg.budget_ms = *budget_ms;
    SweepReport report = rainbow::run_sweep(cfg);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw parse_error("cannot write file: " + out_path);
        for (const auto& rec : report.records) out << dump_line(sweep_record_json(rec));
    }
    std::cout << dump_line(sweep_summary_json(report));
    if (report.counters.fail == 0) return 0;
    for (const auto& rec : report.records)
        if (rec.outcome == "fail" && rec.check != "counterexample") return 3;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph colorings with verified rainbow-path guarantees"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string input, format, coloring_path, mode = "lies_on", cycle_text, orientation_path;
    std::string config_path, out_path;
    bool circular = false;
    int theorem = 0, k_ceiling = 10;
    std::int64_t budget_ms = 30000;
    std::optional<std::uint64_t> sweep_seed;
    std::optional<std::int64_t> sweep_budget;

    auto* chrom = app.add_subcommand("chromatic", "Exact chromatic or circular chromatic number");
    chrom->add_option("input", input, "graph file (.col or edge list)")->required();
    chrom->add_flag("--circular", circular, "compute the circular chromatic number");
    chrom->add_option("--format", format, "force input format")
        ->check(CLI::IsMember({"col", "edges"}));
    chrom->callback([&] { exit_code = run_chromatic(input, format, circular); });

    auto* color = app.add_subcommand("color", "Run one of the four guaranteed constructions");
    color->add_option("input", input, "graph file (.col or edge list)")->required();
    color->add_option("--theorem", theorem, "construction to run (1-4)")
        ->required()
        ->check(CLI::Range(1, 4));
    color->add_option("--format", format, "force input format")
        ->check(CLI::IsMember({"col", "edges"}));
    color->add_option("--cycle", cycle_text, "comma-separated chi-cycle for --theorem 3");
    color->add_option("--orientation", orientation_path, "arc file for --theorem 4");
    color->add_option("--budget-ms", budget_ms, "search budget for --theorem 3");
    color->add_option("--k-ceiling", k_ceiling, "largest color count the verifier accepts");
    color->callback([&] {
        exit_code = run_color(input, format, theorem, cycle_text, orientation_path, budget_ms,
                              k_ceiling);
    });

    auto* verify = app.add_subcommand("verify", "Check rainbow-path properties of a coloring");
    verify->add_option("input", input, "graph file (.col or edge list)")->required();
    verify->add_option("coloring", coloring_path, "color list file")->required();
    verify->add_option("--mode", mode, "property to decide")
        ->check(CLI::IsMember({"lies_on", "begins", "directed"}));
    verify->add_option("--format", format, "force input format")
        ->check(CLI::IsMember({"col", "edges"}));
    verify->add_option("--orientation", orientation_path, "arc file for --mode directed");
    verify->add_option("--k-ceiling", k_ceiling, "largest color count the verifier accepts");
    verify->callback([&] {
        exit_code = run_verify(input, format, coloring_path, mode, orientation_path, k_ceiling);
    });

    auto* sweep = app.add_subcommand("sweep", "Run property sweeps over a graph corpus");
    sweep->add_option("config", config_path, "JSON sweep configuration");
    sweep->add_option("--out", out_path, "JSON-lines record file");
    sweep->add_option("--seed", sweep_seed, "override the corpus seed");
    sweep->add_option("--budget-ms", sweep_budget, "override the per-graph budget");
    sweep->callback(
        [&] { exit_code = run_sweep(config_path, out_path, sweep_seed, sweep_budget); });

    try {
        app.parse(argc, argv);
        return exit_code;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const internal_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
