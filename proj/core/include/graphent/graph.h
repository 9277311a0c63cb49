// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphent {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1. Vertex i is qubit q[i].
///
/// Edges are stored canonically as (i, j) with i < j, sorted and unique, so two
/// graphs built from the same edge set compare equal regardless of input order
/// or orientation.
class Graph {
   public:
    Graph() = default;

    /// Throws ValidationError on a self-loop or an out-of-range endpoint.
    /// Duplicate edges (in either orientation) are merged.
    Graph(std::size_t n_vertices, std::vector<Edge> edges);

    std::size_t n_vertices() const { return n_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t degree(Vertex v) const;

    /// Sorted adjacent vertices; with closed = true, v itself is included.
    std::vector<Vertex> neighborhood(Vertex v, bool closed = false) const;

    bool has_edge(Vertex a, Vertex b) const;

    bool operator==(const Graph&) const = default;

   private:
    void check_vertex(Vertex v) const;

    std::size_t n_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

enum class GraphKind { Chain, Claw, Complete, Cycle, Star };

/// Parses "chain", "claw", "complete", "cycle" or "star".
GraphKind parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

/// Named families.
///
/// chain(n): path 0-1-...-(n-1). cycle(n): chain plus (n-1, 0), needs n >= 3.
/// complete(n): all pairs. star(n): hub 0 joined to every other vertex.
/// claw: only n = 4, hub 1 with leaves 0, 2, 3.
Graph generate_named(GraphKind kind, std::size_t n);

/// Edge-list text format:
///
///     # comment
///     n 5
///     0 1
///     1 2
///
/// The header must be the first non-blank, non-comment line. Throws ParseError
/// (message carries the line number) or ValidationError.
Graph parse_edge_list(std::string_view text);

/// Canonical form: "n <count>" then one "i j" line per edge, i < j, sorted.
std::string to_edge_list(const Graph& g);

}  // namespace graphent
