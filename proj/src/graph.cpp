#include "lpa/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lpa {

Graph::Graph(std::string name,
             const std::vector<std::string>& vertex_ids,
             const std::vector<std::tuple<std::string, std::string, std::string>>& edge_decls)
    : name_(std::move(name)) {
    std::set<std::string> seen;
    for (const auto& v : vertex_ids) {
        if (!seen.insert(v).second) throw Error("duplicate identifier '" + v + "'");
        vertices_.push_back(v);
    }
    for (const auto& [id, src, dst] : edge_decls) {
        if (!seen.insert(id).second) throw Error("duplicate identifier '" + id + "'");
        auto s = vertex_index(src);
        if (!s) throw Error("dangling endpoint '" + src + "' in edge '" + id + "'");
        auto r = vertex_index(dst);
        if (!r) throw Error("dangling endpoint '" + dst + "' in edge '" + id + "'");
        edges_.push_back(Edge{id, *s, *r});
    }
    build_indices();
}

void Graph::build_indices() {
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        out_[edges_[e].src].push_back(e);
        in_[edges_[e].dst].push_back(e);
    }
    rank_.resize(edges_.size());
    std::vector<std::size_t> order(edges_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges_[a].id < edges_[b].id; });
    for (std::size_t pos = 0; pos < order.size(); ++pos) rank_[order[pos]] = pos;
    // Out/in lists in edge-id order, so traversals are deterministic.
    for (auto& lst : out_)
        std::sort(lst.begin(), lst.end(),
                  [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
    for (auto& lst : in_)
        std::sort(lst.begin(), lst.end(),
                  [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
}

std::optional<std::size_t> Graph::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> Graph::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return i;
    return std::nullopt;
}

bool Graph::is_acyclic() const {
    // Kahn's algorithm.
    std::vector<std::size_t> indeg(vertices_.size(), 0);
    for (const auto& e : edges_) ++indeg[e.dst];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t removed = 0;
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        ++removed;
        for (std::size_t e : out_[v])
            if (--indeg[edges_[e].dst] == 0) queue.push_back(edges_[e].dst);
    }
    return removed == vertices_.size();
}

std::vector<std::tuple<std::string, std::string, std::string>> Graph::edge_tuples() const {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : edges_)
        out.emplace_back(e.id, vertices_[e.src], vertices_[e.dst]);
    return out;
}

nlohmann::json Graph::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["vertices"] = vertices_;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges_)
        j["edges"].push_back({{"id", e.id}, {"src", vertices_[e.src]}, {"dst", vertices_[e.dst]}});
    return j;
}

namespace {

struct Token {
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::optional<Token> next() {
        skip_ws_and_comments();
        if (pos_ >= text_.size()) return std::nullopt;
        Token t{"", line_, col_};
        char c = text_[pos_];
        if (is_ident_start(c)) {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                t.text += text_[pos_];
                advance();
            }
        } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            t.text = "->";
            advance();
            advance();
        } else if (c == '{' || c == '}' || c == ';' || c == ':') {
            t.text = std::string(1, c);
            advance();
        } else {
            throw Error(position(t) + "syntax error: unexpected character '" + std::string(1, c) + "'");
        }
        return t;
    }

    static std::string position(const Token& t) {
        return std::to_string(t.line) + ":" + std::to_string(t.col) + ": ";
    }

private:
    // Identifiers: ASCII letters, digits, '_', primes, plus any non-ASCII
    // UTF-8 bytes, so weight-preserving primed copies and unicode names
    // round-trip.
    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
               static_cast<unsigned char>(c) >= 0x80;
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
               static_cast<unsigned char>(c) >= 0x80;
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

} // namespace

Graph Graph::parse(const std::string& text) {
    Lexer lex(text);
    auto expect = [&](const std::string& what) -> Token {
        auto t = lex.next();
        if (!t) throw Error("syntax error: unexpected end of input, expected " + what);
        return *t;
    };
    auto expect_exact = [&](const std::string& lit) {
        Token t = expect("'" + lit + "'");
        if (t.text != lit)
            throw Error(Lexer::position(t) + "syntax error: expected '" + lit + "', got '" + t.text + "'");
        return t;
    };

    expect_exact("graph");
    Token name = expect("graph name");
    expect_exact("{");

    std::vector<std::string> vertex_ids;
    std::vector<std::tuple<std::string, std::string, std::string>> edge_decls;

    std::optional<Token> tok = lex.next();
    while (tok && tok->text != "}") {
        if (tok->text == "vertices") {
            for (tok = lex.next();; tok = lex.next()) {
                if (!tok) throw Error("syntax error: unterminated vertices section");
                if (tok->text == ";") break;
                vertex_ids.push_back(tok->text);
            }
            tok = lex.next();
        } else if (tok->text == "edges") {
            tok = lex.next();
            while (tok && tok->text != "}" && tok->text != "vertices" && tok->text != "edges") {
                Token id = *tok;
                expect_exact(":");
                Token src = expect("source vertex");
                expect_exact("->");
                Token dst = expect("target vertex");
                expect_exact(";");
                edge_decls.emplace_back(id.text, src.text, dst.text);
                tok = lex.next();
            }
        } else {
            throw Error(Lexer::position(*tok) + "syntax error: expected 'vertices' or 'edges', got '" +
                        tok->text + "'");
        }
    }
    if (!tok) throw Error("syntax error: missing closing '}'");
    return Graph(name.text, vertex_ids, edge_decls);
}

Path Path::extended(const Graph& g, std::size_t e) const {
    if (g.source(e) != range(g))
        throw Error("edge '" + g.edge(e).id + "' does not continue the path");
    Path p = *this;
    p.edges.push_back(e);
    return p;
}

Path Path::dropped_last() const {
    Path p = *this;
    p.edges.pop_back();
    return p;
}

std::string Path::to_string(const Graph& g) const {
    if (edges.empty()) return g.vertex_id(source_vertex);
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += " ";
        s += g.edge(edges[i]).id;
    }
    return s;
}

bool is_initial_subpath(const Graph& g, const Path& p, const Path& q) {
    if (p.length() > q.length()) return false;
    if (p.is_vertex()) return p.source_vertex == q.source();
    for (std::size_t i = 0; i < p.length(); ++i)
        if (p.edges[i] != q.edges[i]) return false;
    return true;
}

bool path_lex_less(const Graph& g, const Path& a, const Path& b) {
    const std::size_t n = std::min(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.edges[i] != b.edges[i])
            return g.edge_rank(a.edges[i]) < g.edge_rank(b.edges[i]);
    }
    if (a.length() != b.length()) return a.length() < b.length();
    return a.source_vertex < b.source_vertex;
}

Classification classify(const Graph& g) {
    Classification c;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.out_edges(v).empty())
            c.sinks.push_back(v);
        else
            c.regular.push_back(v);
        if (g.in_edges(v).empty()) c.sources.push_back(v);
    }
    return c;
}

std::vector<std::size_t> regular_vertices(const Graph& g) {
    return classify(g).regular;
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len) {
    std::vector<Path> all, frontier;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) frontier.push_back(Path::vertex(v));
    all = frontier;
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (std::size_t e : g.out_edges(p.range(g))) next.push_back(p.extended(g, e));
        std::sort(next.begin(), next.end(),
                  [&](const Path& a, const Path& b) { return path_lex_less(g, a, b); });
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return all;
}

std::optional<std::size_t> invalid_regular_subset(const Graph& g, const std::vector<std::size_t>& X) {
    for (std::size_t v : X) {
        if (v >= g.vertex_count() || g.out_edges(v).empty()) return v;
    }
    return std::nullopt;
}

Graph graph_of_X(const Graph& g, const std::vector<std::size_t>& X) {
    if (auto bad = invalid_regular_subset(g, X))
        throw Error("graph_of_X: vertex index " + std::to_string(*bad) + " is not regular");
    std::set<std::size_t> xset(X.begin(), X.end());
    std::vector<std::size_t> Y;
    for (std::size_t v : regular_vertices(g))
        if (!xset.count(v)) Y.push_back(v);
    if (Y.empty()) return g;

    std::vector<std::string> vertex_ids;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) vertex_ids.push_back(g.vertex_id(v));
    std::set<std::size_t> yset(Y.begin(), Y.end());
    for (std::size_t v : Y) vertex_ids.push_back(g.vertex_id(v) + "'");

    std::vector<std::tuple<std::string, std::string, std::string>> edge_decls;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        edge_decls.emplace_back(g.edge(e).id, g.vertex_id(g.source(e)), g.vertex_id(g.range(e)));
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (yset.count(g.range(e)))
            edge_decls.emplace_back(g.edge(e).id + "'", g.vertex_id(g.source(e)),
                                    g.vertex_id(g.range(e)) + "'");

    return Graph(g.name() + "(X)", vertex_ids, edge_decls);
}

} // namespace lpa
