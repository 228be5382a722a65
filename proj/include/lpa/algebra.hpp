#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpa/coeff.hpp"
#include "lpa/graph.hpp"
#include "lpa/weight.hpp"

namespace lpa {

// mu nu* with r(mu) = r(nu); a vertex monomial when both paths have
// length zero.
struct Monomial {
    Path mu, nu;

    bool is_vertex() const { return mu.is_vertex() && nu.is_vertex(); }
    std::size_t total_length() const { return mu.length() + nu.length(); }
    bool operator==(const Monomial& o) const = default;
};

// Deterministic term order: (total length, mu edge-id sequence, nu edge-id
// sequence).
struct MonomialOrder {
    const Graph* g = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
        if (!(a.mu == b.mu)) return path_lex_less(*g, a.mu, b.mu);
        return path_lex_less(*g, a.nu, b.nu);
    }
};

// Designated edge per vertex of X, orienting relation 4) into a rewrite
// rule. The default choice takes the lexicographically least edge id.
struct SpecialEdgeChoice {
    std::vector<std::optional<std::size_t>> designated;

    static SpecialEdgeChoice least_edge(const Graph& g, const std::vector<std::size_t>& X);
    bool operator==(const SpecialEdgeChoice&) const = default;
};

// Everything an element needs to know about where it lives: the graph, the
// relation-4 vertex set X, the weight map, the coefficient ring and the
// rewrite orientation.
struct AlgebraContext {
    std::shared_ptr<const Graph> graph;
    std::vector<std::size_t> X; // sorted
    std::vector<char> in_X;     // indicator, size = vertex count
    WeightMap weights;
    RingSpec ring;
    SpecialEdgeChoice special;

    bool is_leavitt() const;
    bool equivalent(const AlgebraContext& o) const;
    std::string describe() const;
};

using CtxPtr = std::shared_ptr<const AlgebraContext>;

// Builds a validated context. X must consist of regular vertices.
CtxPtr make_context(std::shared_ptr<const Graph> graph, std::vector<std::size_t> X,
                    const IndexAssignment& assignment, const RingSpec& ring);

// Leavitt context (X = Reg) with the given assignment.
CtxPtr make_leavitt_context(std::shared_ptr<const Graph> graph, const IndexAssignment& assignment,
                            const RingSpec& ring);

// True if the monomial is irreducible: its paths do not both end with the
// designated edge of a common X-vertex.
bool is_normal_monomial(const AlgebraContext& ctx, const Monomial& m);

// Element of C_R^X(E) in canonical normal form: a finite sum of normal
// monomials with nonzero coefficients, in deterministic term order.
// Immutable value; all operations are pure.
class AlgebraElem {
public:
    using TermMap = std::map<Monomial, Coefficient, MonomialOrder>;

    static AlgebraElem zero(CtxPtr ctx);
    static AlgebraElem vertex(CtxPtr ctx, std::size_t v);
    static AlgebraElem edge(CtxPtr ctx, std::size_t e);
    static AlgebraElem ghost(CtxPtr ctx, std::size_t e);
    static AlgebraElem monomial(CtxPtr ctx, const Monomial& m, const Coefficient& c);
    // Sum of all vertices; the unity of C_R^X(E) for a finite graph.
    static AlgebraElem one(CtxPtr ctx);

    const CtxPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    AlgebraElem operator+(const AlgebraElem& o) const;
    AlgebraElem operator-(const AlgebraElem& o) const;
    AlgebraElem operator*(const AlgebraElem& o) const;
    AlgebraElem scaled(const Coefficient& c) const;
    AlgebraElem operator-() const;

    // The anti-graded involution: term-wise mu nu* -> nu mu*.
    AlgebraElem adjoint() const;

    bool operator==(const AlgebraElem& o) const;
    bool operator!=(const AlgebraElem& o) const { return !(*this == o); }

    // Weight of a term: w(mu) w(nu)^{-1}.
    BrandtElem term_degree(const Monomial& m) const;

    // Homogeneous decomposition; keys are the distinct term degrees and the
    // summands add up to *this.
    std::map<BrandtElem, AlgebraElem> decompose() const;

    bool is_homogeneous() const;
    // Degree of a homogeneous element (zero element has degree 0).
    BrandtElem degree() const;

    // Longest single-path length over all terms.
    std::size_t max_path_length() const;

    std::string to_string() const;

private:
    explicit AlgebraElem(CtxPtr ctx);

    void require_same_context(const AlgebraElem& o) const;
    // Adds c * m, rewriting m to normal form first.
    void accumulate(const Monomial& m, const Coefficient& c);
    void add_raw(const Monomial& m, const Coefficient& c);

    CtxPtr ctx_;
    TermMap terms_;
};

// All normal-form monomials with both path lengths <= max_path_len
// (deterministic order). With no bound the graph must be acyclic and the
// result is the full finite basis.
std::vector<Monomial> enumerate_basis(const CtxPtr& ctx, std::optional<std::size_t> max_path_len);

// The same monomials grouped by degree.
std::map<BrandtElem, std::vector<Monomial>> monomials_by_degree(const CtxPtr& ctx,
                                                                std::size_t max_path_len);

// Sum of the vertices of weight e: the local unit 1_e.
AlgebraElem local_unit(const CtxPtr& ctx, const BrandtElem& e);

// Parses the element expression syntax, e.g. "2/3 * a1 a2 a2~ a1~ + v1".
// '~' marks ghost edges, juxtaposition is multiplication.
AlgebraElem parse_element(const CtxPtr& ctx, const std::string& text);

} // namespace lpa
