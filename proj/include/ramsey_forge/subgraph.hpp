#pragma once

#include "ramsey_forge/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rf {

// Injective map of pattern vertices into host vertices that carries every
// pattern edge onto a host edge (not necessarily induced). Host <= 64 vertices.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern);

// As find_subgraph, restricted to copies that use host edge {a, b}.
std::optional<std::vector<Vertex>> find_subgraph_through(const Graph& host,
                                                         const Graph& pattern,
                                                         Vertex a, Vertex b);

/// Canonical form: the graph relabelled so that its upper-triangle adjacency
/// string is lexicographically least over the leaves of an
/// individualisation-refinement search. Two graphs are isomorphic iff their
/// canonical forms are equal.
Graph canonical_form(const Graph& g);
std::string canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace rf
