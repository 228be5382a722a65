#include "lpa/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace lpa {

SpecialEdgeChoice SpecialEdgeChoice::least_edge(const Graph& g, const std::vector<std::size_t>& X) {
    SpecialEdgeChoice c;
    c.designated.assign(g.vertex_count(), std::nullopt);
    for (std::size_t v : X) {
        const auto& out = g.out_edges(v); // already in edge-id order
        if (out.empty()) throw Error("designated edge requested for sink '" + g.vertex_id(v) + "'");
        c.designated[v] = out.front();
    }
    return c;
}

bool AlgebraContext::is_leavitt() const { return X == regular_vertices(*graph); }

bool AlgebraContext::equivalent(const AlgebraContext& o) const {
    if (this == &o) return true;
    return *graph == *o.graph && X == o.X && weights == o.weights && ring == o.ring &&
           special == o.special;
}

std::string AlgebraContext::describe() const {
    std::string xdesc = is_leavitt() ? "Reg" : ("{" + std::to_string(X.size()) + " vertices}");
    return (is_leavitt() ? "L_" : "C^X_") + ring.to_string() + "(" + graph->name() + "), X=" + xdesc;
}

CtxPtr make_context(std::shared_ptr<const Graph> graph, std::vector<std::size_t> X,
                    const IndexAssignment& assignment, const RingSpec& ring) {
    if (!graph) throw Error("make_context: null graph");
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    if (auto bad = invalid_regular_subset(*graph, X))
        throw Error("X contains the non-regular vertex index " + std::to_string(*bad));
    auto ctx = std::make_shared<AlgebraContext>();
    ctx->graph = graph;
    ctx->X = X;
    ctx->in_X.assign(graph->vertex_count(), 0);
    for (std::size_t v : X) ctx->in_X[v] = 1;
    ctx->weights = WeightMap::build(graph, assignment);
    ctx->ring = ring;
    ctx->special = SpecialEdgeChoice::least_edge(*graph, X);
    return ctx;
}

CtxPtr make_leavitt_context(std::shared_ptr<const Graph> graph, const IndexAssignment& assignment,
                            const RingSpec& ring) {
    auto reg = regular_vertices(*graph);
    return make_context(std::move(graph), std::move(reg), assignment, ring);
}

bool is_normal_monomial(const AlgebraContext& ctx, const Monomial& m) {
    if (m.mu.is_vertex() || m.nu.is_vertex()) return true;
    const std::size_t a = m.mu.edges.back();
    if (a != m.nu.edges.back()) return true;
    const std::size_t v = ctx.graph->source(a);
    return !(ctx.in_X[v] && ctx.special.designated[v] == a);
}

AlgebraElem::AlgebraElem(CtxPtr ctx)
    : ctx_(std::move(ctx)), terms_(MonomialOrder{ctx_->graph.get()}) {
    if (!ctx_) throw Error("AlgebraElem: null context");
}

AlgebraElem AlgebraElem::zero(CtxPtr ctx) { return AlgebraElem(std::move(ctx)); }

AlgebraElem AlgebraElem::vertex(CtxPtr ctx, std::size_t v) {
    AlgebraElem x(std::move(ctx));
    if (v >= x.ctx_->graph->vertex_count()) throw Error("vertex index out of range");
    x.add_raw(Monomial{Path::vertex(v), Path::vertex(v)}, Coefficient::one(x.ctx_->ring));
    return x;
}

AlgebraElem AlgebraElem::edge(CtxPtr ctx, std::size_t e) {
    AlgebraElem x(std::move(ctx));
    const Graph& g = *x.ctx_->graph;
    if (e >= g.edge_count()) throw Error("edge index out of range");
    x.add_raw(Monomial{Path{g.source(e), {e}}, Path::vertex(g.range(e))},
              Coefficient::one(x.ctx_->ring));
    return x;
}

AlgebraElem AlgebraElem::ghost(CtxPtr ctx, std::size_t e) {
    AlgebraElem x(std::move(ctx));
    const Graph& g = *x.ctx_->graph;
    if (e >= g.edge_count()) throw Error("edge index out of range");
    x.add_raw(Monomial{Path::vertex(g.range(e)), Path{g.source(e), {e}}},
              Coefficient::one(x.ctx_->ring));
    return x;
}

AlgebraElem AlgebraElem::monomial(CtxPtr ctx, const Monomial& m, const Coefficient& c) {
    AlgebraElem x(std::move(ctx));
    const Graph& g = *x.ctx_->graph;
    if (m.mu.range(g) != m.nu.range(g)) throw Error("monomial paths must share their range");
    if (c.ring() != x.ctx_->ring) throw Error("coefficient ring does not match the context");
    x.accumulate(m, c);
    return x;
}

AlgebraElem AlgebraElem::one(CtxPtr ctx) {
    AlgebraElem x(std::move(ctx));
    for (std::size_t v = 0; v < x.ctx_->graph->vertex_count(); ++v)
        x.add_raw(Monomial{Path::vertex(v), Path::vertex(v)}, Coefficient::one(x.ctx_->ring));
    return x;
}

void AlgebraElem::require_same_context(const AlgebraElem& o) const {
    if (ctx_ == o.ctx_) return;
    if (!ctx_->equivalent(*o.ctx_))
        throw Error("mixed contexts: " + ctx_->describe() + " vs " + o.ctx_->describe());
}

void AlgebraElem::add_raw(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Coefficient s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

void AlgebraElem::accumulate(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    const AlgebraContext& ctx = *ctx_;
    const Graph& g = *ctx.graph;
    Monomial cur = m;
    Coefficient coef = c;
    // Relation 4) oriented at the designated edge, applied at the tail:
    //   mu' g g* nu'* = mu' nu'* - sum_{a != g, s(a)=v} (mu' a)(nu' a)*.
    // The subtracted terms are already normal; only the shortened pair can
    // reduce further.
    while (!is_normal_monomial(ctx, cur)) {
        const std::size_t gamma = cur.mu.edges.back();
        const std::size_t v = g.source(gamma);
        Monomial base{cur.mu.dropped_last(), cur.nu.dropped_last()};
        for (std::size_t a : g.out_edges(v)) {
            if (a == gamma) continue;
            add_raw(Monomial{base.mu.extended(g, a), base.nu.extended(g, a)}, -coef);
        }
        cur = base;
    }
    add_raw(cur, coef);
}

AlgebraElem AlgebraElem::operator+(const AlgebraElem& o) const {
    require_same_context(o);
    AlgebraElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_raw(m, c);
    return out;
}

AlgebraElem AlgebraElem::operator-(const AlgebraElem& o) const {
    require_same_context(o);
    AlgebraElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_raw(m, -c);
    return out;
}

AlgebraElem AlgebraElem::scaled(const Coefficient& c) const {
    if (c.ring() != ctx_->ring) throw Error("coefficient ring does not match the context");
    AlgebraElem out(ctx_);
    for (const auto& [m, cc] : terms_) out.add_raw(m, cc * c);
    return out;
}

AlgebraElem AlgebraElem::operator-() const {
    AlgebraElem out(ctx_);
    for (const auto& [m, c] : terms_) out.add_raw(m, -c);
    return out;
}

AlgebraElem AlgebraElem::operator*(const AlgebraElem& o) const {
    require_same_context(o);
    const Graph& g = *ctx_->graph;
    AlgebraElem out(ctx_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            // nu1* mu2 collapses by relation 3): one factor must be an
            // initial subpath of the other, else the product dies.
            if (is_initial_subpath(g, m1.nu, m2.mu)) {
                Path mu = m1.mu;
                for (std::size_t i = m1.nu.length(); i < m2.mu.length(); ++i)
                    mu = mu.extended(g, m2.mu.edges[i]);
                out.accumulate(Monomial{mu, m2.nu}, c1 * c2);
            } else if (is_initial_subpath(g, m2.mu, m1.nu)) {
                Path nu = m2.nu;
                for (std::size_t i = m2.mu.length(); i < m1.nu.length(); ++i)
                    nu = nu.extended(g, m1.nu.edges[i]);
                out.accumulate(Monomial{m1.mu, nu}, c1 * c2);
            }
        }
    }
    return out;
}

AlgebraElem AlgebraElem::adjoint() const {
    AlgebraElem out(ctx_);
    for (const auto& [m, c] : terms_) out.accumulate(Monomial{m.nu, m.mu}, c);
    return out;
}

bool AlgebraElem::operator==(const AlgebraElem& o) const {
    require_same_context(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

BrandtElem AlgebraElem::term_degree(const Monomial& m) const {
    const WeightMap& w = ctx_->weights;
    return w.path_weight(m.mu) * w.path_weight(m.nu).inverse();
}

std::map<BrandtElem, AlgebraElem> AlgebraElem::decompose() const {
    std::map<BrandtElem, AlgebraElem> parts;
    for (const auto& [m, c] : terms_) {
        BrandtElem s = term_degree(m);
        auto it = parts.find(s);
        if (it == parts.end()) it = parts.emplace(s, AlgebraElem::zero(ctx_)).first;
        it->second.add_raw(m, c);
    }
    return parts;
}

bool AlgebraElem::is_homogeneous() const {
    if (terms_.empty()) return true;
    const BrandtElem d = term_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (term_degree(m) != d) return false;
    return true;
}

BrandtElem AlgebraElem::degree() const {
    if (terms_.empty()) return BrandtElem::zero();
    const BrandtElem d = term_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (term_degree(m) != d) throw Error("degree of a non-homogeneous element");
    return d;
}

std::size_t AlgebraElem::max_path_length() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max({n, m.mu.length(), m.nu.length()});
    return n;
}

std::string AlgebraElem::to_string() const {
    if (terms_.empty()) return "0";
    const Graph& g = *ctx_->graph;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Coefficient coef = c;
        const bool negative =
            !ctx_->ring.is_modular() && coef.value() < 0; // residues print as-is
        if (first) {
            if (negative) {
                os << "-";
                coef = -coef;
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) coef = -coef;
        }
        first = false;

        std::string mon;
        if (m.is_vertex()) {
            mon = g.vertex_id(m.mu.source_vertex);
        } else {
            std::vector<std::string> parts;
            for (std::size_t e : m.mu.edges) parts.push_back(g.edge(e).id);
            for (auto it = m.nu.edges.rbegin(); it != m.nu.edges.rend(); ++it)
                parts.push_back(g.edge(*it).id + "~");
            for (std::size_t i = 0; i < parts.size(); ++i) mon += (i ? " " : "") + parts[i];
        }
        if (!coef.is_one()) {
            std::string cs = ctx_->ring.is_modular() ? coef.value().get_num().get_str()
                                                     : coef.value().get_str();
            os << cs << " ";
        }
        os << mon;
    }
    return os.str();
}

std::vector<Monomial> enumerate_basis(const CtxPtr& ctx, std::optional<std::size_t> max_path_len) {
    const Graph& g = *ctx->graph;
    std::size_t bound;
    if (max_path_len) {
        bound = *max_path_len;
    } else {
        if (!g.is_acyclic())
            throw Error("unbounded basis enumeration requested on a cyclic graph");
        bound = g.vertex_count() == 0 ? 0 : g.vertex_count() - 1;
    }
    const auto paths = enumerate_paths(g, bound);
    std::vector<std::vector<Path>> by_range(g.vertex_count());
    for (const auto& p : paths) by_range[p.range(g)].push_back(p);

    std::vector<Monomial> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& mu : by_range[v])
            for (const auto& nu : by_range[v]) {
                Monomial m{mu, nu};
                if (is_normal_monomial(*ctx, m)) out.push_back(m);
            }
    std::sort(out.begin(), out.end(), MonomialOrder{&g});
    return out;
}

std::map<BrandtElem, std::vector<Monomial>> monomials_by_degree(const CtxPtr& ctx,
                                                                std::size_t max_path_len) {
    std::map<BrandtElem, std::vector<Monomial>> groups;
    const WeightMap& w = ctx->weights;
    for (const auto& m : enumerate_basis(ctx, max_path_len))
        groups[w.path_weight(m.mu) * w.path_weight(m.nu).inverse()].push_back(m);
    return groups;
}

AlgebraElem local_unit(const CtxPtr& ctx, const BrandtElem& e) {
    AlgebraElem out = AlgebraElem::zero(ctx);
    for (std::size_t v = 0; v < ctx->graph->vertex_count(); ++v)
        if (ctx->weights.vertex_weight(v) == e)
            out = out + AlgebraElem::vertex(ctx, v);
    return out;
}

namespace {

// Tokens of the element expression grammar.
struct ExprToken {
    enum Kind { Number, Ident, Ghost, Plus, Minus, Star, Slash, End } kind;
    std::string text;
};

class ExprLexer {
public:
    explicit ExprLexer(const std::string& s) : s_(s) {}

    ExprToken peek() {
        if (!buf_) buf_ = lex();
        return *buf_;
    }
    ExprToken next() {
        ExprToken t = peek();
        buf_.reset();
        return t;
    }

private:
    ExprToken lex() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {ExprToken::End, ""};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num += s_[pos_++];
            return {ExprToken::Number, num};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                    s_[pos_] == '\''))
                id += s_[pos_++];
            return {ExprToken::Ident, id};
        }
        ++pos_;
        switch (c) {
            case '~': return {ExprToken::Ghost, "~"};
            case '+': return {ExprToken::Plus, "+"};
            case '-': return {ExprToken::Minus, "-"};
            case '*': return {ExprToken::Star, "*"};
            case '/': return {ExprToken::Slash, "/"};
            default: throw Error("unexpected character '" + std::string(1, c) + "' in expression");
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::optional<ExprToken> buf_;
};

AlgebraElem parse_term(const CtxPtr& ctx, ExprLexer& lex, bool negate) {
    Coefficient coef = Coefficient::one(ctx->ring);
    bool have_factor = false;
    AlgebraElem acc = AlgebraElem::zero(ctx);

    if (lex.peek().kind == ExprToken::Number) {
        std::string num = lex.next().text;
        if (lex.peek().kind == ExprToken::Slash) {
            lex.next();
            if (lex.peek().kind != ExprToken::Number) throw Error("expected denominator");
            num += "/" + lex.next().text;
        }
        coef = Coefficient::parse(ctx->ring, num);
        if (lex.peek().kind == ExprToken::Star) lex.next(); // '*' optional
    }
    while (lex.peek().kind == ExprToken::Ident) {
        std::string id = lex.next().text;
        bool ghost = false;
        if (lex.peek().kind == ExprToken::Ghost) {
            lex.next();
            ghost = true;
        }
        AlgebraElem gen = AlgebraElem::zero(ctx);
        if (auto v = ctx->graph->vertex_index(id)) {
            if (ghost) throw Error("'~' applies to edges, not vertex '" + id + "'");
            gen = AlgebraElem::vertex(ctx, *v);
        } else if (auto e = ctx->graph->edge_index(id)) {
            gen = ghost ? AlgebraElem::ghost(ctx, *e) : AlgebraElem::edge(ctx, *e);
        } else {
            throw Error("generator '" + id + "' is not in graph '" + ctx->graph->name() + "'");
        }
        acc = have_factor ? acc * gen : gen;
        have_factor = true;
    }
    if (!have_factor) {
        if (coef.is_zero()) return AlgebraElem::zero(ctx); // a literal 0
        throw Error("expected a generator word in expression");
    }
    if (negate) coef = -coef;
    return acc.scaled(coef);
}

} // namespace

AlgebraElem parse_element(const CtxPtr& ctx, const std::string& text) {
    ExprLexer lex(text);
    AlgebraElem total = AlgebraElem::zero(ctx);
    bool negate = false;
    if (lex.peek().kind == ExprToken::Minus) {
        lex.next();
        negate = true;
    }
    total = parse_term(ctx, lex, negate);
    while (lex.peek().kind != ExprToken::End) {
        ExprToken op = lex.next();
        if (op.kind != ExprToken::Plus && op.kind != ExprToken::Minus)
            throw Error("expected '+' or '-' in expression, got '" + op.text + "'");
        total = total + parse_term(ctx, lex, op.kind == ExprToken::Minus);
    }
    return total;
}

} // namespace lpa
