#include "lpa/weight.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lpa {

IndexAssignment::IndexAssignment(std::vector<int> labels) : labels_(std::move(labels)) {
    // Canonicalize to 1..k by first occurrence in vertex order.
    std::map<int, int> relabel;
    for (auto& l : labels_) {
        auto it = relabel.find(l);
        if (it == relabel.end()) {
            int fresh = static_cast<int>(relabel.size()) + 1;
            relabel.emplace(l, fresh);
            l = fresh;
        } else {
            l = it->second;
        }
    }
    count_ = static_cast<int>(relabel.size());
}

IndexAssignment IndexAssignment::from_json(const Graph& g, const nlohmann::json& j) {
    std::vector<int> labels(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const std::string& id = g.vertex_id(v);
        if (!j.contains(id)) throw Error("assignment file misses vertex '" + id + "'");
        labels[v] = j.at(id).get<int>();
    }
    return IndexAssignment(std::move(labels));
}

nlohmann::json IndexAssignment::to_json(const Graph& g) const {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) j[g.vertex_id(v)] = labels_[v];
    return j;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        // Smaller root wins, keeping labels stable across edge orders.
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

IndexAssignment finest_assignment(const Graph& g) {
    UnionFind uf(g.vertex_count());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < g.edge_count(); ++a)
            for (std::size_t b = 0; b < g.edge_count(); ++b) {
                if (uf.find(g.source(a)) == uf.find(g.source(b)))
                    changed |= uf.unite(g.range(a), g.range(b));
                if (uf.find(g.range(a)) == uf.find(g.range(b)))
                    changed |= uf.unite(g.source(a), g.source(b));
            }
    }
    std::vector<int> labels(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        labels[v] = static_cast<int>(uf.find(v));
    return IndexAssignment(std::move(labels));
}

IndexAssignment coarsest_assignment(const Graph& g) {
    return IndexAssignment(std::vector<int>(g.vertex_count(), 1));
}

std::optional<std::pair<std::size_t, std::size_t>> assignment_violation(const Graph& g,
                                                                        const IndexAssignment& a) {
    if (a.vertex_count() != g.vertex_count()) return std::make_pair(std::size_t{0}, std::size_t{0});
    for (std::size_t e1 = 0; e1 < g.edge_count(); ++e1)
        for (std::size_t e2 = 0; e2 < g.edge_count(); ++e2) {
            if (a.label(g.source(e1)) == a.label(g.source(e2)) &&
                a.label(g.range(e1)) != a.label(g.range(e2)))
                return std::make_pair(e1, e2);
            if (a.label(g.range(e1)) == a.label(g.range(e2)) &&
                a.label(g.source(e1)) != a.label(g.source(e2)))
                return std::make_pair(e1, e2);
        }
    return std::nullopt;
}

WeightMap WeightMap::build(std::shared_ptr<const Graph> g, const IndexAssignment& a) {
    if (!g) throw Error("WeightMap: null graph");
    if (auto bad = assignment_violation(*g, a)) {
        throw Error("assignment violates w3/w4 on edges '" + g->edge(bad->first).id + "', '" +
                    g->edge(bad->second).id + "'");
    }
    WeightMap w(std::move(g), a);
    // Re-validate w1)-w4) on the constructed weights.
    const Graph& gr = w.graph();
    for (std::size_t e = 0; e < gr.edge_count(); ++e) {
        const BrandtElem we = w.edge_weight(e);
        if (w.vertex_weight(gr.source(e)) * we != we || we * w.vertex_weight(gr.range(e)) != we)
            throw Error("w1 violated on edge '" + gr.edge(e).id + "'");
        if (w.ghost_weight(e) != we.inverse())
            throw Error("w2 violated on edge '" + gr.edge(e).id + "'");
    }
    for (std::size_t e1 = 0; e1 < gr.edge_count(); ++e1)
        for (std::size_t e2 = 0; e2 < gr.edge_count(); ++e2) {
            if (w.vertex_weight(gr.source(e1)) == w.vertex_weight(gr.source(e2)) &&
                w.edge_weight(e1) != w.edge_weight(e2))
                throw Error("w3 violated on edges '" + gr.edge(e1).id + "', '" + gr.edge(e2).id + "'");
            if (w.vertex_weight(gr.range(e1)) == w.vertex_weight(gr.range(e2)) &&
                w.edge_weight(e1) != w.edge_weight(e2))
                throw Error("w4 violated on edges '" + gr.edge(e1).id + "', '" + gr.edge(e2).id + "'");
        }
    return w;
}

BrandtElem WeightMap::path_weight(const Path& p) const {
    if (p.is_vertex()) return vertex_weight(p.source_vertex);
    BrandtElem acc = edge_weight(p.edges.front());
    for (std::size_t i = 1; i < p.edges.size(); ++i) acc = acc * edge_weight(p.edges[i]);
    if (acc.is_zero()) throw Error("path weight collapsed to zero (invalid weight map)");
    return acc;
}

nlohmann::json WeightMap::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::object();
    j["edges"] = nlohmann::json::object();
    for (std::size_t v = 0; v < graph_->vertex_count(); ++v)
        j["vertices"][graph_->vertex_id(v)] = vertex_weight(v).to_json();
    for (std::size_t e = 0; e < graph_->edge_count(); ++e)
        j["edges"][graph_->edge(e).id] = edge_weight(e).to_json();
    return j;
}

} // namespace lpa
