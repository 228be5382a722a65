#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lpa/brandt.hpp"
#include "lpa/graph.hpp"

namespace lpa {

// Vertex -> index label (canonical labels 1..k by first occurrence in
// vertex order). Valid assignments satisfy, for all edges a, b:
//   f(s(a)) = f(s(b))  =>  f(r(a)) = f(r(b))   and the converse.
class IndexAssignment {
public:
    IndexAssignment() = default;
    explicit IndexAssignment(std::vector<int> labels);

    int label(std::size_t v) const { return labels_[v]; }
    int index_count() const { return count_; }
    std::size_t vertex_count() const { return labels_.size(); }

    bool operator==(const IndexAssignment&) const = default;

    static IndexAssignment from_json(const Graph& g, const nlohmann::json& j);
    nlohmann::json to_json(const Graph& g) const;

private:
    std::vector<int> labels_;
    int count_ = 0;
};

// The finest valid assignment: start with all vertices distinct and close
// under the two merge rules (shared-source edges force equal ranges,
// shared-range edges force equal sources) until a fixpoint is reached.
IndexAssignment finest_assignment(const Graph& g);

// All vertices map to index 1; induces the canonical Z-grading placed at a
// single index.
IndexAssignment coarsest_assignment(const Graph& g);

// Returns a violating edge pair if `a` breaks the assignment invariants.
std::optional<std::pair<std::size_t, std::size_t>> assignment_violation(const Graph& g,
                                                                        const IndexAssignment& a);

// Canonical weight mapping: w(v) = (a(v),0,a(v)), w(alpha) = (a(s),1,a(r)),
// ghost weights are the inverses. Built only from valid assignments;
// rules w1)-w4) are re-validated on construction.
class WeightMap {
public:
    WeightMap() = default;

    static WeightMap build(std::shared_ptr<const Graph> g, const IndexAssignment& a);

    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    const IndexAssignment& assignment() const { return assignment_; }

    BrandtElem vertex_weight(std::size_t v) const {
        return BrandtElem::idempotent(assignment_.label(v));
    }
    BrandtElem edge_weight(std::size_t e) const {
        return BrandtElem(assignment_.label(graph_->source(e)), 1,
                          assignment_.label(graph_->range(e)));
    }
    BrandtElem ghost_weight(std::size_t e) const { return edge_weight(e).inverse(); }

    // Product of the edge weights in order (the vertex weight for length
    // zero); never the zero element.
    BrandtElem path_weight(const Path& p) const;

    bool operator==(const WeightMap& o) const {
        return *graph_ == *o.graph_ && assignment_ == o.assignment_;
    }

    nlohmann::json to_json() const;

private:
    WeightMap(std::shared_ptr<const Graph> g, IndexAssignment a)
        : graph_(std::move(g)), assignment_(std::move(a)) {}

    std::shared_ptr<const Graph> graph_;
    IndexAssignment assignment_;
};

} // namespace lpa
