#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/linalg.hpp"
#include "lpa/report.hpp"

namespace lpa {

// M_n(R) graded by the Brandt groupoid {(i, j-i, j)}: the component
// (i, j-i, j) holds the matrices supported at entry (i, j).
struct GradedMatrixRing {
    std::size_t n = 0;
    RingSpec ring;

    GradedMatrixRing(std::size_t size, const RingSpec& spec) : n(size), ring(spec) {}

    BrandtElem component(std::size_t i, std::size_t j) const {
        return BrandtElem(static_cast<int>(i), static_cast<long>(j) - static_cast<long>(i),
                          static_cast<int>(j));
    }
    CoeffMatrix unit(std::size_t i, std::size_t j) const; // e_{ij}, 1-based

    // Degree of a matrix supported in a single component; nullopt for zero
    // or mixed support.
    std::optional<BrandtElem> degree(const CoeffMatrix& A) const;

    // Exhaustive verification of the grading conditions: component products
    // land in the component of the partial product, and nonzero products
    // only occur where the product is defined.
    CheckReport check_grading_conditions() const;

    // The epsilon construction on matrix components: for nonzero
    // homogeneous A there are eps, eps' in the matching component products
    // with eps A = A = A eps'.
    CheckReport check_nearly_eps_strong(int samples, std::uint64_t seed) const;
};

// B with A B A = A, via rank factorization A = C F and exact one-sided
// inverses; valid over any field, including singular input.
CoeffMatrix matrix_vn_inverse(const CoeffMatrix& A);

// The graded isomorphism L_R(A_n) <-> M_n(R): v_i -> e_{i,i},
// a_i -> e_{i,i+1}, ghosts transpose.
class LineGraphIso {
public:
    LineGraphIso(std::size_t n, const RingSpec& ring);

    const CtxPtr& context() const { return ctx_; }
    std::size_t size() const { return n_; }

    CoeffMatrix to_matrix(const AlgebraElem& x) const;
    AlgebraElem from_matrix(const CoeffMatrix& A) const;

    // Bijectivity on the full bases, multiplicativity on all basis pairs
    // plus random pairs, and degree preservation.
    CheckReport verify(int random_pairs, std::uint64_t seed) const;

private:
    std::size_t n_;
    CtxPtr ctx_;
    std::vector<Monomial> basis_;                      // full basis of L(A_n)
    std::map<std::pair<std::size_t, std::size_t>, Monomial> by_entry_; // (i,j) -> monomial
};

Graph make_line_graph(std::size_t n);

// One matrix block of the D_s decomposition: paths of weight t ending at
// vertex v.
struct DsSummand {
    BrandtElem t;
    std::size_t vertex = 0;
    std::size_t block_size = 0;
};

struct DsAuditReport {
    std::vector<DsSummand> summands;
    std::size_t predicted_dim = 0;
    std::size_t enumerated_dim = 0;
    bool ok = false;
    CheckReport report;
};

// Compares the matricial dimension predicted by the block sizes |P(t,v)|
// with the exact dimension of the reduced span of the weight-(<= s)
// monomial pairs. Leavitt contexts only.
DsAuditReport ds_audit(const CtxPtr& ctx, const BrandtElem& e, const BrandtElem& s);

// The idempotent degrees e with nonzero component, i.e. the vertex weights.
std::vector<BrandtElem> occurring_idempotents(const CtxPtr& ctx);

// Weights s in S_e realized by paths of length <= max_len.
std::vector<BrandtElem> reachable_weights(const CtxPtr& ctx, const BrandtElem& e,
                                          std::size_t max_len);

// Exact matricial structure certificate for one component of an acyclic
// Leavitt context: sink-path matrix units span R_e, are independent, and
// multiply like matrix units, so R_e is a finite direct sum of matrix
// rings over R and J(R_e) = 0 over a field.
struct MatricialCertificate {
    bool ok = false;
    std::string detail;
    std::vector<DsSummand> blocks;
    std::size_t component_dim = 0;
};

MatricialCertificate component_matrix_units(const CtxPtr& ctx, const BrandtElem& e);

// The graded homomorphism phi: C_R^X(E) -> L_R(E(X)) with
// phi(v) = v + v' on Y and phi(a) = a + a' when r(a) lies in Y.
class CohnLeavittIso {
public:
    CohnLeavittIso(std::shared_ptr<const Graph> graph, std::vector<std::size_t> X,
                   const IndexAssignment& assignment, const RingSpec& ring);

    const CtxPtr& source() const { return source_; }
    const CtxPtr& target() const { return target_; }

    AlgebraElem map(const AlgebraElem& x) const;

    // Defining relations 1)-4) of the source algebra under phi, plus
    // multiplicativity on random pairs and degree preservation.
    CheckReport verify(int random_pairs, std::uint64_t seed) const;

private:
    AlgebraElem map_vertex(std::size_t v) const;
    AlgebraElem map_edge(std::size_t e) const;

    CtxPtr source_, target_;
    std::vector<char> in_Y_;
};

} // namespace lpa
