#include "taskdag/serialize.hpp"

#include "taskdag/error.hpp"

#include "json.hpp"

namespace taskdag {

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "json") return GraphFormat::Json;
    if (name == "dot") return GraphFormat::Dot;
    throw Error(ErrorKind::Format, "unknown graph format '" + std::string(name) + "' (expected json or dot)");
}

std::string to_json(const OrderedDag& g) {
    std::string out = "{\"n\":" + std::to_string(g.order()) + ",\"edges\":[";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) out += ',';
        first = false;
        out += '[' + std::to_string(e.from) + ',' + std::to_string(e.to) + ']';
    }
    out += "]}";
    return out;
}

OrderedDag graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Format, std::string("malformed graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw Error(ErrorKind::Format, "graph JSON needs fields \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer()) throw Error(ErrorKind::Format, "\"n\" must be an integer");
    if (!doc["edges"].is_array()) throw Error(ErrorKind::Format, "\"edges\" must be an array");
    try {
        OrderedDag g(doc["n"].get<int>());
        for (const auto& pair : doc["edges"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer()) {
                throw Error(ErrorKind::Format, "each edge must be a 2-element integer array");
            }
            g.add_edge(pair[0].get<int>(), pair[1].get<int>());
        }
        return g;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Format) throw;
        throw Error(ErrorKind::Format, std::string("invalid graph: ") + e.what());
    }
}

std::string to_dot(const OrderedDag& g) {
    std::string out = "digraph G {\n";
    for (Vertex v = 1; v <= g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const Edge& e : g.edges()) {
        out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string export_graph(const OrderedDag& g, GraphFormat format) {
    return format == GraphFormat::Json ? to_json(g) : to_dot(g);
}

std::string to_json(const ProcessOutcome& outcome) {
    std::string out = "{\"graph\":" + to_json(outcome.graph);
    out += ",\"rounds\":" + std::to_string(outcome.rounds);
    out += ",\"attempts\":" + (outcome.attempts ? std::to_string(*outcome.attempts) : std::string("null"));
    out += ",\"halt_reason\":\"" + std::string(to_string(outcome.halt_reason)) + "\"";
    out += ",\"is_target_xy\":" + std::string(outcome.is_target_xy ? "true" : "false");
    out += ",\"initial\":" + std::to_string(outcome.graph.initial_count());
    out += ",\"terminal\":" + std::to_string(outcome.graph.terminal_count());
    out += "}";
    return out;
}

}  // namespace taskdag
