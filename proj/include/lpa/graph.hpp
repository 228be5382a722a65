#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpa/error.hpp"

namespace lpa {

struct Edge {
    std::string id;
    std::size_t src = 0;
    std::size_t dst = 0;
};

// Finite directed graph. Vertices and edges keep their declaration order;
// identifiers are unique across both sets. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(std::string name,
          const std::vector<std::string>& vertex_ids,
          const std::vector<std::tuple<std::string, std::string, std::string>>& edge_decls);

    // Parses the graph DSL:
    //   graph <name> { vertices <id>...; edges <id>: <src> -> <dst>; ... }
    // '#' starts a line comment. Errors carry line:col positions.
    static Graph parse(const std::string& text);

    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool is_null() const { return vertices_.empty(); }

    const std::string& vertex_id(std::size_t v) const { return vertices_[v]; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    std::size_t source(std::size_t e) const { return edges_[e].src; }
    std::size_t range(std::size_t e) const { return edges_[e].dst; }

    std::optional<std::size_t> vertex_index(const std::string& id) const;
    std::optional<std::size_t> edge_index(const std::string& id) const;

    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

    // Position of the edge in the id-sorted order; used wherever a
    // deterministic "lexicographic by edge ids" order is required.
    std::size_t edge_rank(std::size_t e) const { return rank_[e]; }

    bool is_acyclic() const;

    bool operator==(const Graph& o) const {
        return name_ == o.name_ && vertices_ == o.vertices_ && edge_tuples() == o.edge_tuples();
    }

    nlohmann::json to_json() const;

private:
    std::vector<std::tuple<std::string, std::string, std::string>> edge_tuples() const;
    void build_indices();

    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::vector<std::size_t> rank_;
};

// Path in a graph: an edge sequence with r(edge_i) = s(edge_{i+1}), or a
// single anchor vertex for length zero (so s(v) = r(v) = v structurally).
struct Path {
    std::size_t source_vertex = 0;
    std::vector<std::size_t> edges;

    static Path vertex(std::size_t v) { return Path{v, {}}; }

    std::size_t length() const { return edges.size(); }
    bool is_vertex() const { return edges.empty(); }
    std::size_t source() const { return source_vertex; }
    std::size_t range(const Graph& g) const {
        return edges.empty() ? source_vertex : g.range(edges.back());
    }

    // Appends one edge; the edge must start where this path ends.
    Path extended(const Graph& g, std::size_t e) const;
    Path dropped_last() const;

    bool operator==(const Path& o) const = default;

    std::string to_string(const Graph& g) const;
};

// True if `p` is an initial subpath of `q` (anchors must agree for the
// length-zero case).
bool is_initial_subpath(const Graph& g, const Path& p, const Path& q);

// Deterministic path order: by edge-id rank sequence (lexicographic, with
// prefixes first), anchors breaking ties among vertex paths.
bool path_lex_less(const Graph& g, const Path& a, const Path& b);

struct Classification {
    std::vector<std::size_t> sinks;
    std::vector<std::size_t> sources;
    std::vector<std::size_t> regular;
};

// Sink(E), sources and Reg(E). On a finite graph there are no infinite
// emitters, so every non-sink is regular.
Classification classify(const Graph& g);

std::vector<std::size_t> regular_vertices(const Graph& g);

// All paths of length <= max_len, ordered by (length, lexicographic by
// edge ids); length-0 paths come in vertex declaration order.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len);

// The graph E(X): for Y = Reg(E) \ X, adds a primed copy v' of every
// v in Y and an edge a': s(a) -> r(a)' for every edge a with r(a) in Y.
// Primed identifiers get a trailing apostrophe; originals keep their
// indices and order.
Graph graph_of_X(const Graph& g, const std::vector<std::size_t>& X);

// Checks X ⊆ Reg(g); returns an offending vertex if any.
std::optional<std::size_t> invalid_regular_subset(const Graph& g, const std::vector<std::size_t>& X);

} // namespace lpa
