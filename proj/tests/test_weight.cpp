#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "lpa/weight.hpp"
#include "test_graphs.hpp"

using namespace lpa;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<Graph>(std::move(g)); }

} // namespace

TEST_CASE("finest assignment on A_n keeps all vertices distinct") {
    for (std::size_t n = 2; n <= 5; ++n) {
        Graph an = test_graphs::line(n);
        auto a = finest_assignment(an);
        CHECK(a.index_count() == static_cast<int>(n));
        for (std::size_t v = 0; v < n; ++v) CHECK(a.label(v) == static_cast<int>(v) + 1);
    }
}

TEST_CASE("finest assignment collapses a loop's component") {
    auto a = finest_assignment(test_graphs::rose(1));
    CHECK(a.index_count() == 1);
    CHECK(a == coarsest_assignment(test_graphs::rose(1)));
}

TEST_CASE("shared source merges ranges") {
    // Two parallel edges v->w plus v->u: w ~ u, v separate.
    Graph g = test_graphs::parallel_plus();
    auto a = finest_assignment(g);
    CHECK(a.index_count() == 2);
    CHECK(a.label(0) == 1);       // v
    CHECK(a.label(1) == 2);       // w
    CHECK(a.label(2) == a.label(1)); // u merged with w
}

TEST_CASE("coarsest assignment is the constant map") {
    for (const Graph& g : {test_graphs::line(3), test_graphs::rose(2), test_graphs::fork()}) {
        auto a = coarsest_assignment(g);
        CHECK(a.index_count() == 1);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(a.label(v) == 1);
    }
}

TEST_CASE("finest assignment is idempotent and edge-order independent") {
    Graph g1("G", {"x", "y", "z", "w"},
             {{"a", "x", "y"}, {"b", "x", "z"}, {"c", "z", "w"}, {"d", "y", "w"}});
    // Same graph with edges declared in reverse order.
    Graph g2("G", {"x", "y", "z", "w"},
             {{"d", "y", "w"}, {"c", "z", "w"}, {"b", "x", "z"}, {"a", "x", "y"}});
    auto a1 = finest_assignment(g1);
    auto a2 = finest_assignment(g2);
    for (std::size_t v = 0; v < 4; ++v) CHECK(a1.label(v) == a2.label(v));
    // Re-running on top of the induced partition changes nothing.
    CHECK(finest_assignment(g1) == a1);
}

TEST_CASE("build_weight_map canonical weights") {
    auto a3 = share(test_graphs::line(3));
    auto w = WeightMap::build(a3, finest_assignment(*a3));
    CHECK(w.edge_weight(0) == BrandtElem(1, 1, 2));
    CHECK(w.edge_weight(1) == BrandtElem(2, 1, 3));
    CHECK(w.vertex_weight(0) == BrandtElem(1, 0, 1));
    CHECK(w.ghost_weight(0) == BrandtElem(2, -1, 1));

    auto wc = WeightMap::build(a3, coarsest_assignment(*a3));
    CHECK(wc.edge_weight(0) == BrandtElem(1, 1, 1));
    CHECK(wc.edge_weight(1) == BrandtElem(1, 1, 1));

    auto r1 = share(test_graphs::rose(1));
    auto wr = WeightMap::build(r1, finest_assignment(*r1));
    CHECK(wr.vertex_weight(0) == BrandtElem(1, 0, 1));
    CHECK(wr.edge_weight(0) == BrandtElem(1, 1, 1));
}

TEST_CASE("invalid assignments are rejected with a witness pair") {
    Graph g = test_graphs::parallel_plus();
    // v->w and v->u share a source but get different range labels.
    CHECK(assignment_violation(g, IndexAssignment({1, 2, 3})).has_value());
    CHECK_THROWS_WITH_AS(WeightMap::build(share(g), IndexAssignment({1, 2, 3})),
                         doctest::Contains("w3/w4"), Error);
}

TEST_CASE("assignments between finest and coarsest are accepted when valid") {
    Graph a4 = test_graphs::line(4);
    // Period-2 labeling of the line: valid (it satisfies both implications).
    auto w = WeightMap::build(share(a4), IndexAssignment({1, 2, 1, 2}));
    CHECK(w.edge_weight(0) == BrandtElem(1, 1, 2));
    CHECK(w.edge_weight(1) == BrandtElem(2, 1, 1));
    CHECK(w.edge_weight(2) == BrandtElem(1, 1, 2));
}

TEST_CASE("rules w1-w4 hold on every constructed map") {
    for (Graph g : {test_graphs::line(4), test_graphs::rose(2), test_graphs::fork(),
                    test_graphs::parallel_plus()}) {
        auto gp = share(std::move(g));
        for (auto a : {finest_assignment(*gp), coarsest_assignment(*gp)}) {
            auto w = WeightMap::build(gp, a);
            for (std::size_t e = 0; e < gp->edge_count(); ++e) {
                auto we = w.edge_weight(e);
                CHECK(w.vertex_weight(gp->source(e)) * we == we);
                CHECK(we * w.vertex_weight(gp->range(e)) == we);
                CHECK(w.ghost_weight(e) == we.inverse());
            }
            for (std::size_t e1 = 0; e1 < gp->edge_count(); ++e1)
                for (std::size_t e2 = 0; e2 < gp->edge_count(); ++e2) {
                    if (w.vertex_weight(gp->source(e1)) == w.vertex_weight(gp->source(e2)))
                        CHECK(w.edge_weight(e1) == w.edge_weight(e2));
                    if (w.vertex_weight(gp->range(e1)) == w.vertex_weight(gp->range(e2)))
                        CHECK(w.edge_weight(e1) == w.edge_weight(e2));
                }
        }
    }
}

TEST_CASE("path weights") {
    auto a3 = share(test_graphs::line(3));
    auto w = WeightMap::build(a3, finest_assignment(*a3));
    Path a1a2{0, {0, 1}};
    CHECK(w.path_weight(a1a2) == BrandtElem(1, 2, 3));
    CHECK(w.path_weight(Path::vertex(1)) == BrandtElem(2, 0, 2));

    auto r1 = share(test_graphs::rose(1));
    auto wr = WeightMap::build(r1, finest_assignment(*r1));
    CHECK(wr.path_weight(Path{0, {0, 0, 0}}) == BrandtElem(1, 3, 1));
}

TEST_CASE("coarsest path weight records the length") {
    for (Graph g : {test_graphs::line(4), test_graphs::rose(2), test_graphs::fork()}) {
        auto gp = share(std::move(g));
        auto w = WeightMap::build(gp, coarsest_assignment(*gp));
        for (const auto& p : enumerate_paths(*gp, 4))
            CHECK(w.path_weight(p) == BrandtElem(1, static_cast<long>(p.length()), 1));
    }
}

TEST_CASE("S_e is directed: same-source weights are subpath-comparable") {
    // Directedness property: for weights s, t with the same
    // left idempotent, either every path of weight t has an initial subpath
    // of weight s or conversely (checked on paths up to length 6).
    for (Graph g : {test_graphs::line(5), test_graphs::rose(2), test_graphs::fork(),
                    test_graphs::parallel_plus()}) {
        auto gp = share(std::move(g));
        for (auto a : {finest_assignment(*gp), coarsest_assignment(*gp)}) {
            auto w = WeightMap::build(gp, a);
            auto paths = enumerate_paths(*gp, 6);
            std::map<BrandtElem, std::vector<Path>> by_weight;
            for (const auto& p : paths) by_weight[w.path_weight(p)].push_back(p);
            for (const auto& [s, s_paths] : by_weight)
                for (const auto& [t, t_paths] : by_weight) {
                    if (s * s.inverse() != t * t.inverse()) continue;
                    auto all_contain = [&](const std::vector<Path>& longer, const BrandtElem& sub) {
                        for (const auto& q : longer) {
                            bool has = false;
                            for (std::size_t k = 0; k <= q.length() && !has; ++k) {
                                Path init{q.source_vertex, {q.edges.begin(), q.edges.begin() + k}};
                                if (w.path_weight(init) == sub) has = true;
                            }
                            if (!has) return false;
                        }
                        return true;
                    };
                    CHECK((all_contain(t_paths, s) || all_contain(s_paths, t)));
                }
        }
    }
}

TEST_CASE("weight map JSON") {
    auto a3 = share(test_graphs::line(3));
    auto w = WeightMap::build(a3, finest_assignment(*a3));
    auto j = w.to_json();
    CHECK(j["vertices"]["v1"] == nlohmann::json::array({1, 0, 1}));
    CHECK(j["edges"]["a1"] == nlohmann::json::array({1, 1, 2}));
}
