#pragma once

#include "taskdag/graph.hpp"
#include "taskdag/processes.hpp"

#include <string>
#include <string_view>

namespace taskdag {

enum class GraphFormat { Json, Dot };

GraphFormat parse_graph_format(std::string_view name);

// {"n":3,"edges":[[1,2],[2,3]]} with edges sorted lexicographically and no
// whitespace.
std::string to_json(const OrderedDag& g);

// Accepts any whitespace; requires "n" and "edges", each edge [a,b] with a<b.
OrderedDag graph_from_json(std::string_view text);

// digraph with one line per vertex, then one line per edge in sorted order.
std::string to_dot(const OrderedDag& g);

std::string export_graph(const OrderedDag& g, GraphFormat format);

// {"graph":{...},"rounds":r,"attempts":a|null,"halt_reason":"...",
//  "is_target_xy":b,"initial":i,"terminal":t}
std::string to_json(const ProcessOutcome& outcome);

}  // namespace taskdag
