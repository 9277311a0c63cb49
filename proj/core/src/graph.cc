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
#include "graphent/graph.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "graphent/error.h"

namespace graphent {

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges) : n_vertices_(n_vertices) {
    for (auto& [a, b] : edges) {
        if (a == b) {
            throw ValidationError("self-loop on vertex " + std::to_string(a));
        }
        if (a >= n_vertices || b >= n_vertices) {
            throw ValidationError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") out of range for " + std::to_string(n_vertices) +
                                  " vertices");
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.resize(n_vertices_);
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_vertices_) {
        throw ValidationError("vertex " + std::to_string(v) + " out of range for " +
                              std::to_string(n_vertices_) + " vertices");
    }
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
}

std::vector<Vertex> Graph::neighborhood(Vertex v, bool closed) const {
    check_vertex(v);
    std::vector<Vertex> out = adjacency_[v];
    if (closed) out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

GraphKind parse_graph_kind(std::string_view name) {
    if (name == "chain") return GraphKind::Chain;
    if (name == "claw") return GraphKind::Claw;
    if (name == "complete") return GraphKind::Complete;
    if (name == "cycle") return GraphKind::Cycle;
    if (name == "star") return GraphKind::Star;
    throw ValidationError("unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Chain: return "chain";
        case GraphKind::Claw: return "claw";
        case GraphKind::Complete: return "complete";
        case GraphKind::Cycle: return "cycle";
        case GraphKind::Star: return "star";
    }
    return "?";
}

Graph generate_named(GraphKind kind, std::size_t n) {
    if (n == 0) throw ValidationError("graph needs at least one vertex");
    std::vector<Edge> edges;
    const auto v = [](std::size_t i) { return static_cast<Vertex>(i); };
    switch (kind) {
        case GraphKind::Chain:
            for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(v(i), v(i + 1));
            break;
        case GraphKind::Cycle:
            if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
            for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(v(i), v(i + 1));
            edges.emplace_back(v(n - 1), 0);
            break;
        case GraphKind::Complete:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(v(i), v(j));
            break;
        case GraphKind::Star:
            for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, v(i));
            break;
        case GraphKind::Claw:
            if (n != 4) throw ValidationError("claw is defined only for 4 vertices");
            edges = {{1, 0}, {1, 2}, {1, 3}};
            break;
    }
    return Graph(n, std::move(edges));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         std::string(tok) + "'");
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].starts_with('#')) continue;

        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'n <vertex_count>'");
            }
            n = parse_index(tokens[1], line_no);
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'i j'");
        }
        std::size_t a = parse_index(tokens[0], line_no);
        std::size_t b = parse_index(tokens[1], line_no);
        if (a >= *n || b >= *n) {
            throw ValidationError("line " + std::to_string(line_no) + ": endpoint out of range for " +
                                  std::to_string(*n) + " vertices");
        }
        if (a == b) {
            throw ValidationError("line " + std::to_string(line_no) + ": self-loop on vertex " +
                                  std::to_string(a));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!n) throw ParseError("missing header 'n <vertex_count>'");
    return Graph(*n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n_vertices() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
    return out.str();
}

}  // namespace graphent
