#include "eil/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eil/catalog.hpp"
#include "eil/graph_io.hpp"
#include "eil/harness.hpp"
#include "eil/ideal.hpp"
#include "eil/report.hpp"

namespace eil {

namespace {

// Thrown for bad input after option parsing succeeded.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string graph6;
    std::string input;
    std::string edge_list;
};

struct CommonOptions {
    std::string field = "2";
    unsigned jobs = 0;
    std::string output;
    std::string format = "text";
    std::size_t ambient_cap = 24;
};

unsigned default_jobs() {
    if (const char* env = std::getenv("EIL_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::vector<FieldChoice> fields_of(const std::string& text) {
    if (text == "both") return {FieldChoice::gf2, FieldChoice::rationals};
    try {
        return {parse_field(text)};
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown field '" + text + "' (expected 2, q, 0 or both)");
    }
}

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// graph6 lines, blank lines skipped; errors name the 1-based line.
std::vector<Graph> parse_graph6_lines(const std::string& text, const std::string& source) {
    std::vector<Graph> out;
    std::istringstream lines(text);
    std::string line;
    for (std::size_t number = 1; std::getline(lines, line); ++number) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw UsageError(source + " line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Graph> read_graphs(const InputOptions& o, std::istream& in) {
    const int given = !o.graph6.empty() + !o.input.empty() + !o.edge_list.empty();
    if (given == 0) throw UsageError("no graph given (use --graph6, --input or --edge-list)");
    if (given > 1) throw UsageError("--graph6, --input and --edge-list are mutually exclusive");
    if (!o.graph6.empty()) {
        try {
            return {parse_graph6(o.graph6)};
        } catch (const ParseError& e) {
            throw UsageError(std::string("bad graph6: ") + e.what());
        }
    }
    if (!o.input.empty()) return parse_graph6_lines(slurp(o.input, in), o.input == "-" ? "stdin" : o.input);
    try {
        return {parse_edge_list(slurp(o.edge_list, in))};
    } catch (const ParseError& e) {
        throw UsageError(o.edge_list + " line " + std::to_string(e.position()) + ": " + e.what());
    }
}

void add_input_flags(CLI::App* cmd, InputOptions& o) {
    cmd->add_option("--graph6", o.graph6, "inline graph6 string");
    cmd->add_option("--input", o.input, "file of graph6 lines, '-' for stdin");
    cmd->add_option("--edge-list", o.edge_list, "edge-list file, '-' for stdin");
}

void add_common_flags(CLI::App* cmd, CommonOptions& o, bool with_output) {
    cmd->add_option("--field", o.field, "2, q (characteristic 0) or both")->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "worker threads (default: $EIL_JOBS or 1)");
    cmd->add_option("--ambient-cap", o.ambient_cap, "largest polarized ambient for the depth engine")
        ->capture_default_str();
    if (with_output) {
        cmd->add_option("--output", o.output, "report file (written once, atomically)");
        cmd->add_option("--format", o.format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
    }
}

HarnessOptions harness_options(const CommonOptions& common, std::uint64_t seed) {
    HarnessOptions h;
    h.seed = seed;
    h.jobs = common.jobs ? common.jobs : default_jobs();
    h.engine.ambient_cap = common.ambient_cap;
    return h;
}

void warn_cap(const CommonOptions& common, std::ostream& err) {
    if (common.ambient_cap != 24) {
        err << "warning: ambient cap set to " << common.ambient_cap
            << "; the Hochster sweep is exponential in the polarized ambient\n";
    }
}

std::string render(const VerificationReport& report, const std::string& format, bool timing = false) {
    if (format == "json") return report_json(report, {timing});
    if (format == "csv") return report_csv(report, {timing});
    return report_text(report);
}

// Full report to --output (or stdout); with a file, stdout gets the summary line.
void emit_report(const VerificationReport& report, const CommonOptions& common, std::ostream& out,
                 bool timing = false) {
    if (common.output.empty()) {
        out << render(report, common.format, timing);
        return;
    }
    write_atomically(common.output, render(report, common.format, timing));
    const auto text = report_text(report);
    out << text.substr(0, text.find('\n') + 1);
}

// ---- alpha2 ----

int cmd_alpha2(const InputOptions& input, const CommonOptions& common, std::istream& in, std::ostream& out) {
    const auto graphs = read_graphs(input, in);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& g : graphs) {
        const auto w = star_packing_number(g);
        if (common.format == "json") {
            std::vector<std::string> centers;
            for (int v : members(w.centers)) centers.push_back(g.label(v));
            rows.push_back({{"graph6", to_graph6(g)}, {"alpha2", w.size}, {"centers", centers}});
        } else {
            out << "alpha2=" << w.size << " centers=" << g.describe(w.centers) << "\n";
        }
    }
    if (common.format == "json") out << rows.dump(2) << "\n";
    return exit_ok;
}

// ---- depth ----

struct DepthFlags {
    int power = 2;
    bool symbolic = false;
    std::string betti;
};

int cmd_depth(const InputOptions& input, const CommonOptions& common, const DepthFlags& flags, std::istream& in,
              std::ostream& out, std::ostream& err) {
    if (flags.power != 1 && flags.power != 2) throw UsageError("--power must be 1 or 2");
    if (flags.symbolic && flags.power != 2) throw UsageError("--symbolic needs --power 2");
    warn_cap(common, err);
    const auto fields = fields_of(common.field);
    const auto graphs = read_graphs(input, in);
    for (const auto& g : graphs) {
        if (g.edge_count() == 0) throw UsageError("graph " + to_graph6(g) + " has no edges; its edge ideal is zero");
        const MonomialIdeal ideal = flags.symbolic      ? symbolic_square_edge_ideal(g)
                                    : flags.power == 2 ? power(edge_ideal(g), 2)
                                                       : edge_ideal(g);
        const int a2 = star_packing_number(g).size;
        int bound = a2;
        if (flags.power == 1) {
            bound = a2 + 1;
        } else if (!flags.symbolic) {
            bound = is_triangle_free(g) ? a2 : is_wk3_free(g) ? a2 - 1 : a2 - 2;
        }
        std::optional<int> first;
        for (auto field : fields) {
            EngineOptions engine;
            engine.field = field;
            engine.jobs = common.jobs ? common.jobs : default_jobs();
            engine.ambient_cap = common.ambient_cap;
            engine.keep_betti = !flags.betti.empty();
            const DepthResult r = depth_quotient(ideal, engine);
            const int depth = *r.depth_ideal;
            out << "depth=" << depth << " bound=" << bound << " slack=" << depth - bound
                << " alpha2=" << a2 << " field_char=" << characteristic(field) << "\n";
            if (first && *first != depth) {
                err << "finding: characteristics disagree on " << to_graph6(g) << " (" << *first << " vs " << depth
                    << ")\n";
            }
            first = depth;
            if (!flags.betti.empty()) {
                std::string path = flags.betti;
                if (fields.size() > 1) path += "." + std::to_string(characteristic(field));
                write_atomically(path, betti_csv(*r.betti));
            }
        }
    }
    return exit_ok;
}

// ---- verify ----

struct VerifyFlags {
    std::vector<std::string> suite{"all"};
    int max_n = 0;
    std::uint64_t seed = 0;
    double budget = 0;
    bool timing = false;
};

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream s(item);
        std::string name;
        while (std::getline(s, name, ','))
            if (!name.empty()) out.push_back(name);
    }
    return out;
}

int cmd_verify(const InputOptions& input, const CommonOptions& common, const VerifyFlags& flags, std::istream& in,
               std::ostream& out, std::ostream& err) {
    const auto fields = fields_of(common.field);
    std::vector<std::string> checks;
    try {
        checks = resolve_checks(split_names(flags.suite));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bool examples_only = checks.size() == 1 && checks.front() == "examples";
    const bool has_input = !input.graph6.empty() || !input.input.empty() || !input.edge_list.empty();
    Corpus corpus;
    if (flags.max_n > 0) {
        if (has_input) throw UsageError("--max-n and an input corpus are mutually exclusive");
        if (flags.max_n > 8) throw UsageError("--max-n is limited to 8");
        corpus = {"all graphs on 1.." + std::to_string(flags.max_n) + " vertices", enumerate_graphs_up_to(flags.max_n)};
    } else if (has_input) {
        const std::string name = !input.graph6.empty() ? "graph6 " + input.graph6
                                 : !input.input.empty() ? input.input
                                                        : input.edge_list;
        corpus = {name, read_graphs(input, in)};
    } else if (examples_only) {
        corpus = {"sharp examples", {}};
    } else {
        throw UsageError("verify needs --max-n or an input corpus");
    }
    warn_cap(common, err);
    HarnessOptions options = harness_options(common, flags.seed);
    if (flags.budget > 0) options.budget_seconds = flags.budget;
    const VerificationReport report = run_suite(corpus, checks, fields, options);
    emit_report(report, common, out, flags.timing);
    if (report.truncated) err << "budget exhausted: " << report.graphs_skipped << " graphs skipped\n";
    return report.summary.fails == 0 ? exit_ok : exit_counterexample;
}

// ---- hunt ----

struct HuntFlags {
    std::string check;
    int n = 0;
    int random = 100;
    std::optional<std::uint64_t> seed;
};

// Largest polarized ambient the check can hand to the depth engine on n vertices.
std::size_t ambient_needed(const std::string& check, int n) {
    const auto& reg = check_registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckDefinition& s) { return s.name == check; });
    if (it == reg.end() || !it->uses_depth) return 0;
    const bool squares = check.rfind("main", 0) == 0 || check == "last" || check == "symbolic";
    return static_cast<std::size_t>(squares ? 2 * n : n);
}

int cmd_hunt(const CommonOptions& common, const HuntFlags& flags, std::ostream& out, std::ostream& err) {
    if (!flags.seed) throw UsageError("hunt needs --seed");
    if (flags.n < 1 || flags.n > 64) throw UsageError("--n must be between 1 and 64");
    if (flags.random < 1) throw UsageError("--random must be positive");
    try {
        if (resolve_checks({flags.check}).size() != 1 || flags.check == "all" || flags.check == "examples") {
            throw UsageError("hunt takes a single graph check");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::size_t need = ambient_needed(flags.check, flags.n);
    if (need > common.ambient_cap) {
        throw UsageError("n=" + std::to_string(flags.n) + " needs a polarized ambient of up to " + std::to_string(need) +
                         " variables, over the cap of " + std::to_string(common.ambient_cap));
    }
    warn_cap(common, err);
    const auto fields = fields_of(common.field);
    const HuntResult result = hunt(flags.check, flags.n, flags.random, fields, harness_options(common, *flags.seed));
    emit_report(result.report, common, out);
    if (result.counterexample) {
        const auto& c = *result.counterexample;
        out << "counterexample check=" << c.check_id << " graph6=" << c.graph_id << " field_char=" << c.field_char
            << " lhs=" << to_string(c.lhs) << " rhs=" << to_string(c.rhs);
        if (!c.params.empty()) out << " " << c.params;
        out << "\n";
        return exit_counterexample;
    }
    return exit_ok;
}

// ---- catalog / examples ----

int cmd_catalog(int max_n, int exact_n, std::ostream& out) {
    if ((max_n > 0) == (exact_n > 0)) throw UsageError("catalog needs exactly one of --max-n and --n");
    if (std::max(max_n, exact_n) > 8) throw UsageError("enumeration is limited to 8 vertices");
    const auto graphs = max_n > 0 ? enumerate_graphs_up_to(max_n) : enumerate_graphs(exact_n);
    for (const auto& g : graphs) out << to_graph6(g) << "\n";
    return exit_ok;
}

int cmd_examples(const CommonOptions& common, std::ostream& out) {
    for (auto field : fields_of(common.field)) {
        EngineOptions engine;
        engine.field = field;
        const auto rows = check_examples_sharp(engine);
        for (std::size_t k = 0; k + 2 < rows.size(); k += 3) {
            const auto& depth = rows[k];
            const auto& alpha = rows[k + 1];
            const auto& eq = rows[k + 2];
            const auto name = depth.params.substr(depth.params.find('=') + 1);
            out << "graph=\"" << name << "\" graph6=" << depth.graph_id << " alpha2=" << to_string(alpha.lhs)
                << " depth=" << to_string(depth.lhs) << " bound=" << to_string(eq.rhs)
                << " slack=" << std::get<long long>(depth.lhs) - std::get<long long>(eq.rhs)
                << " field_char=" << characteristic(field) << "\n";
        }
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge ideal depth and star packing toolkit"};
    app.name("eil");
    app.require_subcommand(1, 1);

    InputOptions input;
    CommonOptions common;

    auto* alpha2 = app.add_subcommand("alpha2", "star packing number and witness centers");
    add_input_flags(alpha2, input);
    alpha2->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"json", "text"}));

    DepthFlags depth_flags;
    auto* depth = app.add_subcommand("depth", "depth of I(G)^k or I(G)^(2) with the matching lower bound");
    add_input_flags(depth, input);
    add_common_flags(depth, common, false);
    depth->add_option("--power", depth_flags.power, "1 or 2")->capture_default_str();
    depth->add_flag("--symbolic", depth_flags.symbolic, "use the second symbolic power");
    depth->add_option("--betti", depth_flags.betti, "write the multigraded Betti table as CSV");

    VerifyFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "run checks over a corpus");
    add_input_flags(verify, input);
    add_common_flags(verify, common, true);
    verify->add_option("--suite", verify_flags.suite, "comma-separated check names, 'all' or 'examples'");
    verify->add_option("--max-n", verify_flags.max_n, "generate every graph on 1..N vertices");
    verify->add_option("--seed", verify_flags.seed, "seed for sampled admissible sets")->capture_default_str();
    verify->add_option("--budget", verify_flags.budget, "wall-clock limit in seconds");
    verify->add_flag("--timing", verify_flags.timing, "include per-outcome milliseconds in json/csv");

    HuntFlags hunt_flags;
    std::uint64_t hunt_seed = 0;
    auto* hunt_cmd = app.add_subcommand("hunt", "search random G(n, 1/2) graphs for a counterexample");
    add_common_flags(hunt_cmd, common, true);
    hunt_cmd->add_option("--check", hunt_flags.check, "check name")->required();
    hunt_cmd->add_option("--n", hunt_flags.n, "vertex count")->required();
    hunt_cmd->add_option("--random", hunt_flags.random, "number of graphs")->capture_default_str();
    auto* seed_opt = hunt_cmd->add_option("--seed", hunt_seed, "random seed (required)");

    int catalog_max = 0;
    int catalog_n = 0;
    auto* catalog = app.add_subcommand("catalog", "graph6 list of all graphs up to isomorphism");
    catalog->add_option("--max-n", catalog_max, "all vertex counts 1..N");
    catalog->add_option("--n", catalog_n, "exactly N vertices");

    auto* examples = app.add_subcommand("examples", "the three sharp instances");
    examples->add_option("--field", common.field, "2, q or both")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "eil: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (alpha2->parsed()) return cmd_alpha2(input, common, in, out);
        if (depth->parsed()) return cmd_depth(input, common, depth_flags, in, out, err);
        if (verify->parsed()) return cmd_verify(input, common, verify_flags, in, out, err);
        if (hunt_cmd->parsed()) {
            if (seed_opt->count() > 0) hunt_flags.seed = hunt_seed;
            return cmd_hunt(common, hunt_flags, out, err);
        }
        if (catalog->parsed()) return cmd_catalog(catalog_max, catalog_n, out);
        if (examples->parsed()) return cmd_examples(common, out);
    } catch (const UsageError& e) {
        err << "eil: " << e.what() << "\n";
        return exit_usage;
    } catch (const CapacityError& e) {
        err << "eil: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "eil: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace eil
