// lpa: command-line front end for the Brandt-groupoid graded Leavitt/Cohn
// path algebra toolkit. Parses graphs and element expressions, runs the
// structural checkers, and emits human-readable and JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lpa/algebra.hpp"
#include "lpa/brandt.hpp"
#include "lpa/models.hpp"
#include "lpa/regularity.hpp"

using namespace lpa;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string graph_path;
    std::string ring = "Q";
    std::string x_mode = "all-regular";
    std::string assignment = "finest";
    std::string json_path;
    std::uint64_t seed = 0;
    std::size_t max_len = 3;
    int samples = 200;
    std::size_t cap = 16; // inverse-search deepening cap
    int index_count = 4; // brandt-axioms
    long window = 3;     // brandt-axioms grade window
};

RingSpec parse_ring(const std::string& text) {
    // Accept the documented forms plus the short aliases F5 / Z4.
    if (text.size() > 1 && (text[0] == 'F' || text[0] == 'Z') &&
        std::isdigit(static_cast<unsigned char>(text[1]))) {
        unsigned long m = std::stoul(text.substr(1));
        return text[0] == 'F' ? RingSpec::prime_field(m) : RingSpec::integers_mod(m);
    }
    return RingSpec::parse(text);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Session {
    std::shared_ptr<const Graph> graph;
    CtxPtr ctx;
};

Session make_session(const Options& opt) {
    if (opt.graph_path.empty()) throw Error("--graph <file> is required for this command");
    Session s;
    s.graph = std::make_shared<Graph>(Graph::parse(slurp(opt.graph_path)));

    std::vector<std::size_t> X;
    if (opt.x_mode == "all-regular") {
        X = regular_vertices(*s.graph);
    } else if (opt.x_mode == "none") {
        X = {};
    } else {
        std::stringstream ss(opt.x_mode);
        std::string id;
        while (std::getline(ss, id, ',')) {
            auto v = s.graph->vertex_index(id);
            if (!v) throw Error("--X names unknown vertex '" + id + "'");
            X.push_back(*v);
        }
    }

    IndexAssignment a;
    if (opt.assignment == "finest")
        a = finest_assignment(*s.graph);
    else if (opt.assignment == "coarsest")
        a = coarsest_assignment(*s.graph);
    else
        a = IndexAssignment::from_json(*s.graph, nlohmann::json::parse(slurp(opt.assignment)));

    s.ctx = make_context(s.graph, std::move(X), a, parse_ring(opt.ring));
    return s;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

void emit_report(const Options& opt, const CheckReport& rep) {
    std::cout << rep.summary() << "\n";
    for (const auto& c : rep.certificates) std::cout << "  certified: " << c << "\n";
    for (const auto& w : rep.witnesses) std::cout << "  witness: " << w.description << "\n";
    std::cout << "  elapsed: " << rep.elapsed_ms << " ms\n";
    if (!opt.json_path.empty()) write_json(opt.json_path, rep.to_json());
}

int cmd_normalize(const Options& opt, const std::string& expr) {
    Session s = make_session(opt);
    AlgebraElem x = parse_element(s.ctx, expr);
    if (x.is_zero()) {
        std::cout << "0\n";
        return kExitPass;
    }
    for (const auto& [deg, comp] : x.decompose())
        std::cout << comp.to_string() << "  [deg " << deg.to_string() << "]\n";
    return kExitPass;
}

int cmd_inverse(const Options& opt, const std::string& expr) {
    Session s = make_session(opt);
    AlgebraElem x = parse_element(s.ctx, expr);
    if (x.is_zero()) {
        std::cout << "0\nx y x == x : true\n";
        return kExitPass;
    }
    auto res = graded_vn_inverse(x, opt.cap);
    nlohmann::json j{{"element", x.to_string()}, {"found", res.found()}, {"note", res.note}};
    if (res.found()) {
        const AlgebraElem& y = *res.inverse;
        bool certified = x * y * x == x && y.degree() == x.degree().inverse();
        std::cout << y.to_string() << "\n";
        std::cout << "x y x == x : " << (certified ? "true" : "false") << "\n";
        j["inverse"] = y.to_string();
        j["certified"] = certified;
        if (!opt.json_path.empty()) write_json(opt.json_path, j);
        return certified ? kExitPass : kExitFail;
    }
    std::cout << (res.status == InverseSearch::Status::ProvenNonexistent
                      ? "no graded inverse exists: "
                      : "not found within bound: ")
              << res.note << "\n";
    if (!opt.json_path.empty()) write_json(opt.json_path, j);
    return kExitFail;
}

CheckReport run_brandt_axioms(const Options& opt) {
    CheckReport rep;
    rep.check = "brandt-axioms";
    rep.params = {{"index_count", opt.index_count}, {"window", opt.window}};
    for (int k = 1; k <= opt.index_count; ++k) {
        auto t = brandt_window_table(k, -opt.window, opt.window);
        auto ax = check_axioms(t);
        rep.params["out_of_carrier_|I|=" + std::to_string(k)] = ax.out_of_carrier_products;
        for (const auto& v : ax.verdicts)
            if (!v.holds)
                rep.fail("|I|=" + std::to_string(k) + " " + v.axiom + ": " + v.witness);
    }
    auto pair = check_axioms(pair_groupoid_table(2));
    for (const auto& v : pair.verdicts)
        if (!v.holds) rep.fail("pair groupoid " + v.axiom + ": " + v.witness);
    if (pair.has_global_identity) rep.fail("pair groupoid unexpectedly has a global identity");
    if (rep.verdict)
        rep.certify("B1-B4, cancellativity, (LRI) and idempotent orthogonality hold on "
                    "M(Z window, I) for |I| <= " +
                    std::to_string(opt.index_count) + " and on the pair groupoid");
    return rep;
}

CheckReport run_ds_audit(const Session& s, const Options& opt) {
    CheckReport rep;
    rep.check = "ds-audit";
    rep.params = {{"context", s.ctx->describe()}, {"max_len", opt.max_len}};
    std::size_t audits = 0;
    for (const auto& e : occurring_idempotents(s.ctx)) {
        for (const auto& w : reachable_weights(s.ctx, e, opt.max_len)) {
            auto audit = ds_audit(s.ctx, e, w);
            ++audits;
            if (!audit.ok)
                rep.fail("dimension mismatch at e=" + e.to_string() + ", s=" + w.to_string(),
                         {{"predicted", audit.predicted_dim},
                          {"enumerated", audit.enumerated_dim}});
        }
    }
    rep.params["audits"] = audits;
    if (rep.verdict)
        rep.certify("predicted = enumerated dimension on " + std::to_string(audits) +
                    " (e, s) pairs");
    return rep;
}

CheckReport run_iso_matrix(const Session& s, const Options& opt) {
    // The loaded graph must be an oriented line A_n.
    const Graph& g = *s.graph;
    const std::size_t n = g.vertex_count();
    bool is_line = g.edge_count() + 1 == n && n >= 1;
    if (is_line) {
        auto cls = classify(g);
        is_line = cls.sources.size() == 1 || (n == 1 && g.edge_count() == 0);
        for (std::size_t v = 0; v < n && is_line; ++v)
            if (g.out_edges(v).size() > 1) is_line = false;
        if (is_line && !g.is_acyclic()) is_line = false;
    }
    if (!is_line) throw Error("iso-matrix needs an oriented line graph A_n");
    LineGraphIso iso(n, s.ctx->ring);
    return iso.verify(opt.samples, opt.seed);
}

int cmd_check(const Options& opt, const std::string& name) {
    SamplerSpec sampler{opt.samples, 4, opt.max_len, opt.seed, opt.cap};
    CheckReport rep;
    if (name == "brandt-axioms") {
        rep = run_brandt_axioms(opt);
    } else {
        Session s = make_session(opt);
        if (name == "graded-regular")
            rep = check_graded_regular(s.ctx, sampler);
        else if (name == "nearly-eps-strong")
            rep = check_nearly_eps_strong(s.ctx, sampler);
        else if (name == "pseudo-unitary")
            rep = check_pseudo_unitary(s.ctx, opt.max_len);
        else if (name == "strongly-graded")
            rep = check_strongly_graded(s.ctx);
        else if (name == "semisimple-cert")
            rep = semisimplicity_certificate(s.ctx, sampler);
        else if (name == "ds-audit")
            rep = run_ds_audit(s, opt);
        else if (name == "iso-matrix")
            rep = run_iso_matrix(s, opt);
        else if (name == "cohn-iso") {
            CohnLeavittIso iso(s.graph, s.ctx->X, s.ctx->weights.assignment(), s.ctx->ring);
            rep = iso.verify(opt.samples, opt.seed);
        } else {
            throw Error("unknown checker '" + name +
                        "' (expected graded-regular, nearly-eps-strong, pseudo-unitary, "
                        "strongly-graded, semisimple-cert, brandt-axioms, ds-audit, "
                        "iso-matrix or cohn-iso)");
        }
        rep.seed = opt.seed;
    }
    emit_report(opt, rep);
    return rep.verdict ? kExitPass : kExitFail;
}

int cmd_report(const Options& opt, const std::string& path) {
    Session s = make_session(opt);
    SamplerSpec sampler{opt.samples, 4, opt.max_len, opt.seed, opt.cap};
    nlohmann::json out;
    out["context"] = s.ctx->describe();
    out["seed"] = opt.seed;
    out["reports"] = nlohmann::json::array();
    out["skipped"] = nlohmann::json::object();

    bool all_pass = true;
    auto add = [&](CheckReport rep) {
        all_pass = all_pass && rep.verdict;
        std::cout << rep.summary() << "\n";
        out["reports"].push_back(rep.to_json());
    };
    add(check_graded_regular(s.ctx, sampler));
    add(check_nearly_eps_strong(s.ctx, sampler));
    add(check_pseudo_unitary(s.ctx, opt.max_len));
    if (s.ctx->ring.is_field())
        add(semisimplicity_certificate(s.ctx, sampler));
    else
        out["skipped"]["semisimple-cert"] = "needs field coefficients";
    if (s.graph->is_acyclic() && s.ctx->ring.is_field())
        add(check_strongly_graded(s.ctx));
    else
        out["skipped"]["strongly-graded"] = "needs an acyclic graph and field coefficients";
    if (s.ctx->is_leavitt() && s.ctx->ring.kind != RingKind::IntegersMod)
        add(run_ds_audit(s, opt));
    else
        out["skipped"]["ds-audit"] = "needs a Leavitt context over a field or Z";
    add(run_brandt_axioms(opt));

    write_json(path, out);
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int cmd_graph(const Options& opt) {
    Session s = make_session(opt);
    const Graph& g = *s.graph;
    auto cls = classify(g);
    auto names = [&](const std::vector<std::size_t>& vs) {
        std::string out;
        for (std::size_t v : vs) out += (out.empty() ? "" : " ") + g.vertex_id(v);
        return out.empty() ? "(none)" : out;
    };
    std::cout << "graph " << g.name() << ": " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges, " << (g.is_acyclic() ? "acyclic" : "cyclic") << "\n";
    std::cout << "  sinks:   " << names(cls.sinks) << "\n";
    std::cout << "  sources: " << names(cls.sources) << "\n";
    std::cout << "  regular: " << names(cls.regular) << "\n";
    if (!opt.json_path.empty()) write_json(opt.json_path, g.to_json());
    return kExitPass;
}

int cmd_weights(const Options& opt) {
    Session s = make_session(opt);
    nlohmann::json j = s.ctx->weights.to_json();
    std::cout << j.dump(2) << "\n";
    if (!opt.json_path.empty()) write_json(opt.json_path, j);
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact computations in Brandt-groupoid graded Leavitt/Cohn path algebras"};
    app.require_subcommand(1);
    app.add_option("--graph", opt.graph_path, "graph DSL file");
    app.add_option("--ring", opt.ring, "coefficient ring: Q | Fp:<p> | Zn:<n> | Z")
        ->default_val("Q");
    app.add_option("--X", opt.x_mode, "relation-4 vertex set: all-regular | none | id,id,...")
        ->default_val("all-regular");
    app.add_option("--assignment", opt.assignment,
                   "index assignment: finest | coarsest | <json file>")
        ->default_val("finest");
    app.add_option("--seed", opt.seed, "random seed")->default_val(0);
    app.add_option("--max-len", opt.max_len, "path length bound for sampling and audits")
        ->default_val(3);
    app.add_option("--samples", opt.samples, "sample count for randomized checkers")
        ->default_val(200);
    app.add_option("--cap", opt.cap, "inverse-search path length cap")->default_val(16);
    app.add_option("--json", opt.json_path, "write the JSON report here");
    app.add_option("--index-count", opt.index_count, "brandt-axioms: largest |I|")->default_val(4);
    app.add_option("--window", opt.window, "brandt-axioms: grade window half-width")
        ->default_val(3);

    std::string expr, name, path;
    auto* norm = app.add_subcommand("normalize", "normal form and per-term degrees");
    norm->add_option("expr", expr)->required();
    auto* inv = app.add_subcommand("inverse", "graded von Neumann inverse search");
    inv->add_option("expr", expr)->required();
    auto* chk = app.add_subcommand("check", "run a structural checker");
    chk->add_option("name", name)->required();
    auto* repc = app.add_subcommand("report", "run all applicable checkers, write combined JSON");
    repc->add_option("path", path)->required();
    auto* gr = app.add_subcommand("graph", "classify the loaded graph");
    auto* wt = app.add_subcommand("weights", "print the canonical weight map");
    // Global flags may follow the subcommand, per the documented usage.
    for (auto* sub : {norm, inv, chk, repc, gr, wt}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (norm->parsed()) return cmd_normalize(opt, expr);
        if (inv->parsed()) return cmd_inverse(opt, expr);
        if (chk->parsed()) return cmd_check(opt, name);
        if (repc->parsed()) return cmd_report(opt, path);
        if (gr->parsed()) return cmd_graph(opt);
        if (wt->parsed()) return cmd_weights(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
