#include "taskdag/analysis.hpp"
#include "taskdag/error.hpp"
#include "taskdag/families.hpp"
#include "taskdag/graph.hpp"
#include "taskdag/harness.hpp"
#include "taskdag/oracle.hpp"
#include "taskdag/processes.hpp"
#include "taskdag/serialize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace taskdag;
using ordered_json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
ordered_json big_to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

void fail_json(std::string_view kind, std::string_view message) {
    ordered_json err;
    err["error"] = kind;
    err["message"] = message;
    std::cerr << err.dump() << '\n';
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Format, "cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw Error(ErrorKind::Parameter, "pair '" + item + "' is not of the form x:y");
        }
        try {
            std::size_t used_x = 0;
            std::size_t used_y = 0;
            const int x = std::stoi(item.substr(0, colon), &used_x);
            const int y = std::stoi(item.substr(colon + 1), &used_y);
            if (used_x != colon || used_y != item.size() - colon - 1) throw std::invalid_argument(item);
            pairs.emplace_back(x, y);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parameter, "pair '" + item + "' is not of the form x:y");
        }
    }
    if (pairs.empty()) throw Error(ErrorKind::Parameter, "at least one pair is required");
    return pairs;
}

struct ProcessArgs {
    std::string process;
    std::optional<int> x;
    std::optional<int> y;
    int n = 0;
    std::optional<std::int64_t> m;
    std::uint64_t seed = 0;
    std::string semantics = "permutation";

    ProcessConfig config() const {
        ProcessConfig cfg;
        cfg.kind = parse_process_kind(process);
        if (cfg.kind != ProcessKind::RandomTree && (!x || !y)) {
            throw Error(ErrorKind::Parameter, "--x and --y are required for the " + process + " process");
        }
        cfg.x = x.value_or(1);
        cfg.y = y.value_or(1);
        cfg.n = n;
        cfg.m = m;
        cfg.seed = seed;
        cfg.semantics = parse_semantics(semantics);
        validate(cfg);
        return cfg;
    }
};

void add_process_options(CLI::App& cmd, ProcessArgs& args, bool with_seed) {
    cmd.add_option("--process", args.process, "removal | addition | combined | tree")->required();
    cmd.add_option("--x", args.x, "target number of initial vertices");
    cmd.add_option("--y", args.y, "target number of terminal vertices");
    cmd.add_option("--n", args.n, "number of vertices")->required();
    cmd.add_option("--m", args.m, "edge target (combined process only)");
    if (with_seed) cmd.add_option("--seed", args.seed, "master seed")->required();
    cmd.add_option("--semantics", args.semantics, "permutation | rejection")->capture_default_str();
}

ordered_json witness_json(const StructureWitness& w) {
    ordered_json out;
    out["components"] = w.components;
    out["interior"] = w.interior;
    out["hub_initial"] = w.hub_initial ? ordered_json(*w.hub_initial) : ordered_json(nullptr);
    out["hub_terminal"] = w.hub_terminal ? ordered_json(*w.hub_terminal) : ordered_json(nullptr);
    out["p"] = w.p;
    out["q"] = w.q;
    return out;
}

ordered_json analyze(const OrderedDag& g, std::optional<int> x, std::optional<int> y) {
    const int tx = x.value_or(g.initial_count());
    const int ty = y.value_or(g.terminal_count());
    const bool on_target = g.initial_count() == tx && g.terminal_count() == ty;

    ordered_json out;
    out["n"] = g.order();
    out["edges"] = g.edge_count();
    out["initial"] = g.initial_count();
    out["terminal"] = g.terminal_count();
    out["isolated"] = g.isolated_count();
    out["x"] = tx;
    out["y"] = ty;
    out["is_target_xy"] = on_target;
    out["longest_path"] = longest_path_length(g);
    out["components"] = underlying_components(g).size();
    out["is_forest"] = is_underlying_forest(g);
    out["is_minimal"] = on_target && is_minimal_xy(g);
    if (g.order() <= kDefaultLinextCap) {
        out["linear_extensions"] = big_to_json(count_linear_extensions(g));
    } else {
        out["linear_extensions"] = nullptr;
    }
    if (const auto path = find_removable_path(g)) {
        out["removable_path"] = *path;
    } else {
        out["removable_path"] = nullptr;
    }
    if (on_target) {
        const StructureCase found = classify_extremal(g, tx, ty);
        out["structure"] = to_string(found.label);
        out["witness"] = found.label == StructureLabel::NotExtremal ? ordered_json(nullptr)
                                                                    : witness_json(found.witness);
    } else {
        out["structure"] = nullptr;
        out["witness"] = nullptr;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Random task-dependency graph generator and analysis toolkit", "taskdag"};
    app.require_subcommand(1);

    ProcessArgs gen;
    bool trace = false;
    std::string format = "json";
    auto* generate = app.add_subcommand("generate", "run one process and print the resulting graph");
    add_process_options(*generate, gen, true);
    generate->add_flag("--trace", trace, "print one JSON line per accepted mutation before the result");
    generate->add_option("--format", format, "json | dot")->capture_default_str();

    ProcessArgs tri;
    std::size_t trial_count = 0;
    unsigned jobs = 1;
    bool records = false;
    auto* trials = app.add_subcommand("trials", "run independent seeded trials and summarize them");
    add_process_options(*trials, tri, true);
    trials->add_option("--trials", trial_count, "number of trials")->required()->check(CLI::PositiveNumber);
    trials->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    trials->add_flag("--records", records, "include per-trial records");

    std::string table_process;
    std::string pairs_text;
    int n_min = 0;
    int n_max = 0;
    std::size_t table_trials = 0;
    std::uint64_t table_seed = 0;
    unsigned table_jobs = 1;
    auto* table = app.add_subcommand("table", "success-ratio grid as CSV (pair,n,ratio)");
    table->add_option("--process", table_process, "removal | addition")->required();
    table->add_option("--pairs", pairs_text, "comma-separated x:y pairs, e.g. 1:2,2:3")->required();
    table->add_option("--n-min", n_min)->required();
    table->add_option("--n-max", n_max)->required();
    table->add_option("--trials", table_trials)->required()->check(CLI::PositiveNumber);
    table->add_option("--seed", table_seed)->required();
    table->add_option("--jobs", table_jobs)->capture_default_str()->check(CLI::PositiveNumber);

    std::string growth_process;
    int gx = 0;
    int gy = 0;
    std::vector<int> n_list;
    std::size_t growth_trials = 0;
    std::uint64_t growth_seed = 0;
    unsigned growth_jobs = 1;
    auto* growth = app.add_subcommand("growth", "mean edges / longest path / isolated per n as CSV");
    growth->add_option("--process", growth_process, "removal | addition | combined | tree")->required();
    growth->add_option("--x", gx)->required();
    growth->add_option("--y", gy)->required();
    growth->add_option("--n-list", n_list, "comma-separated vertex counts")->required()->delimiter(',');
    growth->add_option("--trials", growth_trials)->required()->check(CLI::PositiveNumber);
    growth->add_option("--seed", growth_seed)->required();
    growth->add_option("--jobs", growth_jobs)->capture_default_str()->check(CLI::PositiveNumber);

    std::string input;
    std::optional<int> ax;
    std::optional<int> ay;
    auto* analyze_cmd = app.add_subcommand("analyze", "structural report for a graph in JSON form");
    analyze_cmd->add_option("--input", input, "graph JSON file, or - for stdin")->required();
    analyze_cmd->add_option("--x", ax, "target initial count (default: the graph's own)");
    analyze_cmd->add_option("--y", ay, "target terminal count (default: the graph's own)");

    std::string family_kind;
    int fx = 0;
    int fy = 0;
    int fn = 0;
    std::string family_format = "json";
    auto* families = app.add_subcommand("families", "build a named graph family");
    families->add_option("--kind", family_kind, "S | T | Q | removal-trap | addition-trap")->required();
    families->add_option("--x", fx)->required();
    families->add_option("--y", fy)->required();
    families->add_option("--n", fn)->required();
    families->add_option("--format", family_format, "json | dot")->capture_default_str();

    std::string oracle_kind;
    int ox = 0;
    int oy = 0;
    int on = 0;
    bool extended = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "compare a closed form with exhaustive search");
    oracle_cmd->add_option("--kind", oracle_kind,
                           "MaxMinimalEdges | MinEdges | MaxEdges | MaxAdditionResultEdges | "
                           "MaxConnectedMinimalEdges | MaxOrderings")
        ->required();
    oracle_cmd->add_option("--x", ox)->required();
    oracle_cmd->add_option("--y", oy)->required();
    oracle_cmd->add_option("--n", on)->required();
    oracle_cmd->add_flag("--extended", extended, "allow n = 7 (slow)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        fail_json("usage", e.what());
        return 2;
    }

    if (generate->parsed()) {
        const ProcessConfig cfg = gen.config();
        const GraphFormat fmt = parse_graph_format(format);
        TraceSink sink;
        if (trace) {
            sink = [](const Mutation& mu) {
                ordered_json line;
                line["round"] = mu.round;
                line["op"] = mu.added ? "add" : "remove";
                line["a"] = mu.edge.from;
                line["b"] = mu.edge.to;
                line["initial"] = mu.initial;
                line["terminal"] = mu.terminal;
                std::cout << line.dump() << '\n';
            };
        }
        const ProcessOutcome outcome = run_process(cfg, sink);
        if (fmt == GraphFormat::Json) {
            std::cout << to_json(outcome) << '\n';
        } else {
            std::cout << to_dot(outcome.graph);
        }
    } else if (trials->parsed()) {
        const ProcessConfig cfg = tri.config();
        std::cout << to_json(run_trials(cfg, trial_count, tri.seed, jobs, records)) << '\n';
    } else if (table->parsed()) {
        std::cout << table_experiment(parse_process_kind(table_process), parse_pairs(pairs_text), n_min, n_max,
                                      table_trials, table_seed, table_jobs);
    } else if (growth->parsed()) {
        std::cout << growth_experiment(parse_process_kind(growth_process), gx, gy, n_list, growth_trials,
                                       growth_seed, growth_jobs);
    } else if (analyze_cmd->parsed()) {
        const OrderedDag g = graph_from_json(read_input(input));
        std::cout << analyze(g, ax, ay).dump() << '\n';
    } else if (families->parsed()) {
        const GraphFormat fmt = parse_graph_format(family_format);
        const OrderedDag g = build_family(parse_family_kind(family_kind), fx, fy, fn);
        std::cout << export_graph(g, fmt);
        if (fmt == GraphFormat::Json) std::cout << '\n';
    } else if (oracle_cmd->parsed()) {
        const ExtremalKind kind = parse_extremal_kind(oracle_kind);
        const BigInt closed = extremal_value(kind, ox, oy, on);
        const std::optional<BigInt> brute = oracle::extremal(kind, ox, oy, on, extended);
        ordered_json out;
        out["kind"] = to_string(kind);
        out["x"] = ox;
        out["y"] = oy;
        out["n"] = on;
        out["closed_form"] = big_to_json(closed);
        out["brute_force"] = brute ? big_to_json(*brute) : ordered_json(nullptr);
        out["match"] = brute.has_value() && *brute == closed;
        std::cout << out.dump() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const taskdag::Error& e) {
        fail_json(taskdag::to_string(e.kind()), e.what());
    } catch (const std::exception& e) {
        fail_json("internal", e.what());
    }
    return 1;
}
