// Acceptance suite: machine-checks the structural properties of the
// canonical gradings on a fixed battery of finite graphs, coefficient
// rings and index assignments.
// Prints one PASS/FAIL line per criterion; exit code = number of failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/brandt.hpp"
#include "lpa/models.hpp"
#include "lpa/regularity.hpp"

using namespace lpa;

namespace {

// ---------------------------------------------------------------- fixtures

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<Graph>(std::move(g)); }

Graph line(std::size_t n) { return make_line_graph(n); }

Graph rose(std::size_t petals) {
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (std::size_t i = 1; i <= petals; ++i)
        es.emplace_back("a" + std::to_string(i), "v", "v");
    return Graph("R" + std::to_string(petals), {"v"}, es);
}

// Seeded random acyclic graphs on <= 6 vertices (edges only go forward).
Graph random_acyclic(int idx) {
    std::mt19937_64 rng(1000 + idx);
    const std::size_t n = 4 + idx % 3;
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= n; ++i)
        vs.push_back("g" + std::to_string(idx) + "v" + std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    int k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 100 < 45)
                es.emplace_back("g" + std::to_string(idx) + "e" + std::to_string(++k), vs[i],
                                vs[j]);
    if (es.empty()) es.emplace_back("g" + std::to_string(idx) + "e1", vs[0], vs[1]);
    return Graph("rand" + std::to_string(idx), vs, es);
}

std::vector<Graph> test_battery() {
    std::vector<Graph> gs;
    for (std::size_t n : {2, 3, 4, 5}) gs.push_back(line(n));
    gs.push_back(rose(1));
    gs.push_back(rose(2));
    for (int i = 0; i < 3; ++i) gs.push_back(random_acyclic(i));
    return gs;
}

std::vector<RingSpec> field_battery() {
    return {RingSpec::rationals(), RingSpec::prime_field(2), RingSpec::prime_field(5)};
}

struct Context {
    CtxPtr ctx;
    std::string label;
};

std::vector<Context> context_battery() {
    std::vector<Context> out;
    for (const Graph& g : test_battery()) {
        auto gp = share(g);
        for (const RingSpec& ring : field_battery()) {
            for (bool finest : {true, false}) {
                auto a = finest ? finest_assignment(*gp) : coarsest_assignment(*gp);
                out.push_back({make_leavitt_context(gp, a, ring),
                               g.name() + "/" + ring.to_string() + "/" +
                                   (finest ? "finest" : "coarsest")});
            }
        }
    }
    return out;
}

// ------------------------------------------------------------- harness

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!out.pass) ++failures;
    std::printf("[%2d] %s  %s (%s; %lld ms)\n", id, out.pass ? "PASS" : "FAIL", title.c_str(),
                out.detail.c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
}

#ifdef LPA_BIN
int run_cli(const std::string& args) {
    std::string cmd = std::string(LPA_BIN) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

// ------------------------------------------------------------- criteria

Outcome graded_regularity_positive() {
    auto contexts = context_battery();
    int total = 0;
    for (const auto& c : contexts) {
        auto rep = check_graded_regular(c.ctx, SamplerSpec{200, 4, 3, 7});
        if (!rep.verdict)
            return {false, c.label + ": " + rep.witnesses.front().description};
        total += 200;
    }
    return {true, std::to_string(contexts.size()) + " contexts, " + std::to_string(total) +
                      " certified inverses"};
}

Outcome graded_regularity_negative() {
    // 2 v over Z/4: provably no graded inverse (divisibility), and over Z.
    auto a2 = share(line(2));
    auto z4 = make_leavitt_context(a2, finest_assignment(*a2), RingSpec::integers_mod(4));
    auto x4 = parse_element(z4, "2 v1");
    auto r4 = graded_vn_inverse(x4);
    if (r4.status != InverseSearch::Status::ProvenNonexistent ||
        r4.note.find("divisible") == std::string::npos)
        return {false, "Z/4 divisibility proof missing"};

    auto zz = make_leavitt_context(a2, finest_assignment(*a2), RingSpec::integers());
    auto rz = graded_vn_inverse(parse_element(zz, "2 v1"));
    if (rz.found()) return {false, "2 v1 unexpectedly invertible over Z"};

    // Every vertex of every test graph, over Z/4.
    for (const Graph& g : test_battery()) {
        auto gp = share(g);
        auto ctx = make_leavitt_context(gp, finest_assignment(*gp), RingSpec::integers_mod(4));
        for (std::size_t v = 0; v < gp->vertex_count(); ++v) {
            auto r = graded_vn_inverse(AlgebraElem::vertex(ctx, v).scaled(
                Coefficient::from_integer(ctx->ring, 2)));
            if (r.status != InverseSearch::Status::ProvenNonexistent)
                return {false, "2 " + gp->vertex_id(v) + " not refuted on " + g.name()};
        }
    }

#ifdef LPA_BIN
    // Exit code 1 through the CLI as well.
    const std::string gfile =
        (std::filesystem::temp_directory_path() / "lpa_acc_a2.g").string();
    std::ofstream(gfile) << "graph A2 { vertices v1 v2; edges a1: v1 -> v2; }\n";
    if (run_cli("--graph " + gfile + " --ring Zn:4 inverse \"2 v1\"") != 1)
        return {false, "CLI exit code for Z/4 is not 1"};
    if (run_cli("--graph " + gfile + " --ring Z inverse \"2 v1\"") != 1)
        return {false, "CLI exit code for Z is not 1"};
#endif
    return {true, "witness 2 v refuted with divisibility proof; CLI exit 1"};
}

Outcome nearly_eps_strong() {
    auto contexts = context_battery();
    for (const auto& c : contexts) {
        auto rep = check_nearly_eps_strong(c.ctx, SamplerSpec{500, 4, 3, 11});
        if (!rep.verdict) return {false, c.label + ": " + rep.witnesses.front().description};
    }
    return {true, std::to_string(contexts.size()) + " contexts x 500 samples, zero failures"};
}

Outcome anti_graded_involution() {
    std::mt19937_64 rng(13);
    int samples = 0;
    for (const auto& c : context_battery()) {
        auto groups = monomials_by_degree(c.ctx, 3);
        for (int i = 0; i < 20; ++i) {
            auto x = sample_homogeneous(c.ctx, groups, rng, 4);
            if (x.is_zero()) continue;
            ++samples;
            if (!(x.adjoint().adjoint() == x)) return {false, "x** != x on " + c.label};
            if (!(x.adjoint().degree() == x.degree().inverse()))
                return {false, "deg(x*) != deg(x)^{-1} on " + c.label};
        }
        if (samples >= 1000) break;
    }
    if (samples < 1000) {
        // Top up on one rich context.
        auto gp = share(rose(2));
        auto ctx = make_leavitt_context(gp, finest_assignment(*gp), RingSpec::rationals());
        auto groups = monomials_by_degree(ctx, 3);
        while (samples < 1000) {
            auto x = sample_homogeneous(ctx, groups, rng, 4);
            if (x.is_zero()) continue;
            ++samples;
            if (!(x.adjoint().adjoint() == x && x.adjoint().degree() == x.degree().inverse()))
                return {false, "involution failure on the rose"};
        }
    }
    return {true, std::to_string(samples) + " samples, zero failures"};
}

Outcome idempotent_components_balanced() {
    // w(mu) = w(nu) for every monomial of every idempotent-degree component.
    long checked = 0;
    for (const Graph& g : test_battery()) {
        auto gp = share(g);
        for (bool finest : {true, false}) {
            auto a = finest ? finest_assignment(*gp) : coarsest_assignment(*gp);
            auto ctx = make_leavitt_context(gp, a, RingSpec::rationals());
            std::optional<std::size_t> bound;
            if (!gp->is_acyclic()) bound = 6;
            auto basis = enumerate_basis(ctx, bound);
            for (const auto& m : basis) {
                BrandtElem wmu = ctx->weights.path_weight(m.mu);
                BrandtElem wnu = ctx->weights.path_weight(m.nu);
                BrandtElem d = wmu * wnu.inverse();
                if (d * d == d && !d.is_zero()) {
                    ++checked;
                    if (!(wmu == wnu))
                        return {false, "unbalanced monomial in " + g.name()};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " idempotent-component monomials, zero violations"};
}

Outcome rewriting_soundness() {
    std::mt19937_64 rng(17);
    std::vector<CtxPtr> ctxs;
    for (const Graph& g : {line(3), rose(2), random_acyclic(0), line(4)}) {
        auto gp = share(g);
        ctxs.push_back(make_leavitt_context(gp, finest_assignment(*gp), RingSpec::rationals()));
    }
    // Confluence: 1000 random words, two independent random bracketings.
    std::function<AlgebraElem(const std::vector<AlgebraElem>&, std::size_t, std::size_t)> eval =
        [&](const std::vector<AlgebraElem>& w, std::size_t lo, std::size_t hi) -> AlgebraElem {
        if (hi - lo == 1) return w[lo];
        std::size_t split = lo + 1 + rng() % (hi - lo - 1);
        return eval(w, lo, split) * eval(w, split, hi);
    };
    for (int t = 0; t < 1000; ++t) {
        const CtxPtr& ctx = ctxs[t % ctxs.size()];
        const Graph& g = *ctx->graph;
        std::vector<AlgebraElem> word;
        std::size_t len = 1 + rng() % 8;
        for (std::size_t i = 0; i < len; ++i) {
            switch (rng() % 3) {
                case 0: word.push_back(AlgebraElem::vertex(ctx, rng() % g.vertex_count())); break;
                case 1: word.push_back(AlgebraElem::edge(ctx, rng() % g.edge_count())); break;
                default: word.push_back(AlgebraElem::ghost(ctx, rng() % g.edge_count())); break;
            }
        }
        auto r1 = eval(word, 0, word.size());
        auto r2 = eval(word, 0, word.size());
        if (!(r1 == r2)) return {false, "confluence failure at trial " + std::to_string(t)};
    }
    // Associativity: 1000 random triples.
    for (int t = 0; t < 1000; ++t) {
        const CtxPtr& ctx = ctxs[t % ctxs.size()];
        auto groups = monomials_by_degree(ctx, 3);
        auto draw = [&]() {
            AlgebraElem x = AlgebraElem::zero(ctx);
            std::size_t parts = 1 + rng() % 3;
            for (std::size_t k = 0; k < parts; ++k) {
                auto h = sample_homogeneous(ctx, groups, rng, 2);
                x = x + h;
            }
            return x;
        };
        AlgebraElem x = draw(), y = draw(), z = draw();
        if (!((x * y) * z == x * (y * z)))
            return {false, "associativity failure at trial " + std::to_string(t)};
    }
    return {true, "1000 confluence words + 1000 associativity triples, exact equality"};
}

Outcome matrix_model() {
    std::mt19937_64 rng(19);
    for (std::size_t n : {2, 3, 4, 5}) {
        LineGraphIso iso(n, RingSpec::rationals());
        auto rep = iso.verify(100, 19);
        if (!rep.verdict)
            return {false, "iso verification fails at n=" + std::to_string(n)};
        if (enumerate_basis(iso.context(), std::nullopt).size() != n * n)
            return {false, "dim L(A_n) != n^2 at n=" + std::to_string(n)};
        auto groups = monomials_by_degree(iso.context(), n);
        for (int t = 0; t < 100; ++t) {
            auto x = sample_homogeneous(iso.context(), groups, rng, 4);
            if (x.is_zero()) continue;
            auto y = iso.from_matrix(matrix_vn_inverse(iso.to_matrix(x)));
            if (!(x * y * x == x) || !(y.degree() == x.degree().inverse()))
                return {false, "inverse transport fails at n=" + std::to_string(n)};
        }
    }
    return {true, "graded bijection, dim n^2, inverse transport on 100 samples per n"};
}

Outcome ds_dimension_audit() {
    long audits = 0;
    for (const Graph& g : test_battery()) {
        auto gp = share(g);
        for (bool finest : {true, false}) {
            auto a = finest ? finest_assignment(*gp) : coarsest_assignment(*gp);
            auto ctx = make_leavitt_context(gp, a, RingSpec::rationals());
            for (const auto& e : occurring_idempotents(ctx)) {
                for (const auto& s : reachable_weights(ctx, e, 4)) {
                    auto audit = ds_audit(ctx, e, s);
                    ++audits;
                    if (!audit.ok)
                        return {false, g.name() + " e=" + e.to_string() + " s=" + s.to_string() +
                                           ": predicted " + std::to_string(audit.predicted_dim) +
                                           " vs " + std::to_string(audit.enumerated_dim)};
                }
            }
        }
    }
    return {true, std::to_string(audits) + " (e, s) audits, zero mismatches"};
}

Outcome brandt_axioms() {
    for (int k = 1; k <= 4; ++k) {
        auto t = brandt_window_table(k, -3, 3);
        auto rep = check_axioms(t);
        if (!rep.all_hold()) {
            for (const auto& v : rep.verdicts)
                if (!v.holds) return {false, "|I|=" + std::to_string(k) + " " + v.axiom};
        }
        if (rep.out_of_carrier_products == 0 && k >= 1)
            return {false, "window truncation invisible (expected excluded products)"};
    }
    auto pair_rep = check_axioms(pair_groupoid_table(2));
    if (!pair_rep.all_hold()) return {false, "pair groupoid axiom failure"};
    if (pair_rep.has_global_identity) return {false, "pair groupoid should not be a monoid"};
    for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::integers_mod(4)}) {
        auto mrep = GradedMatrixRing(2, ring).check_grading_conditions();
        if (!mrep.verdict) return {false, "M_2 grading conditions fail over " + ring.to_string()};
    }
    return {true, "M(Z window, I) exhaustive for |I| <= 4; M_2 pair grading conditions i)-ii)"};
}

Outcome cohn_leavitt_bridge() {
    {
        auto g = share(line(3));
        CohnLeavittIso iso(g, {}, finest_assignment(*g), RingSpec::rationals());
        auto rep = iso.verify(100, 23);
        if (!rep.verdict) return {false, "A_3, X = 0: " + rep.witnesses.front().description};
    }
    {
        auto g = share(rose(1));
        CohnLeavittIso iso(g, {}, finest_assignment(*g), RingSpec::rationals());
        auto rep = iso.verify(100, 23);
        if (!rep.verdict) return {false, "R_1, X = 0: " + rep.witnesses.front().description};
    }
    return {true, "relations and 100 random products preserved exactly on both bridges"};
}

Outcome pseudo_unitary() {
    for (const auto& c : context_battery()) {
        auto rep = check_pseudo_unitary(c.ctx, 3);
        if (!rep.verdict) return {false, c.label + ": " + rep.witnesses.front().description};
    }
    // Coarsest unit is the sum of all vertices.
    for (const Graph& g : test_battery()) {
        auto gp = share(g);
        auto ctx = make_leavitt_context(gp, coarsest_assignment(*gp), RingSpec::rationals());
        if (!(local_unit(ctx, BrandtElem(1, 0, 1)) == AlgebraElem::one(ctx)))
            return {false, "coarsest unit differs from sum of vertices on " + g.name()};
    }
    return {true, "local unit identities on all contexts; coarsest unit = sum of vertices"};
}

Outcome semisimplicity() {
    for (const auto& c : context_battery()) {
        auto rep = semisimplicity_certificate(c.ctx, SamplerSpec{500, 4, 3, 29});
        if (!rep.verdict) return {false, c.label + ": " + rep.witnesses.front().description};
        if (c.ctx->graph->is_acyclic() &&
            rep.params["condition_i"] != "verified (matricial structure per component)")
            return {false, c.label + ": condition i) not verified on an acyclic context"};
    }
    return {true, "condition ii) on 500 samples per context; condition i) exact on acyclic ones"};
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion(1, "regular coefficients: graded inverses exist and certify",
              graded_regularity_positive);
    criterion(2, "non-regular coefficients: 2v refuted over Z/4 and Z",
              graded_regularity_negative);
    criterion(3, "nearly epsilon-strong grading: eps(x) x = x = x eps'(x)", nearly_eps_strong);
    criterion(4, "anti-graded involution: deg(x*) = deg(x)^{-1}, x** = x",
              anti_graded_involution);
    criterion(5, "idempotent components are weight-balanced: w(mu) = w(nu)",
              idempotent_components_balanced);
    criterion(6, "rewriting soundness: confluence and associativity", rewriting_soundness);
    criterion(7, "matrix model: L(A_n) = M_n as graded rings with inverse transport",
              matrix_model);
    criterion(8, "D_s audit: predicted matricial dimension = enumerated dimension",
              ds_dimension_audit);
    criterion(9, "Brandt axioms exhaustive; M_2 pair grading conditions", brandt_axioms);
    criterion(10, "Cohn-Leavitt bridge phi preserves relations and products",
              cohn_leavitt_bridge);
    criterion(11, "pseudo-unitary local units and global unity", pseudo_unitary);
    criterion(12, "graded semisimplicity certificate", semisimplicity);

    auto total = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    std::printf("%s: %d criterion(s) failed (total %lld ms)\n",
                failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures,
                static_cast<long long>(total));
    return failures;
}
