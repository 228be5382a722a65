#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/brandt.hpp"
#include "lpa/report.hpp"

namespace lpa {

struct SamplerSpec {
    int samples = 200;
    std::size_t max_monomials = 4;
    std::size_t max_path_len = 3;
    std::uint64_t seed = 0;
    std::size_t length_cap = 16; // inverse-search deepening cap
};

// ~-classes of a homogeneous element's monomials (mu nu* ~ zeta theta*
// iff mu = zeta), with the class order induced by the initial-subpath
// preorder.
struct MinimalClassData {
    std::vector<Monomial> class_representatives; // one per ~-class, term order
    std::vector<std::size_t> minimal;            // indices of ⪯-minimal classes
};

MinimalClassData minimal_classes(const AlgebraElem& x);

struct EpsilonWitnesses {
    AlgebraElem eps, eps_prime;
    // eps = sum of f * f_inv over the listed factor pairs, with
    // deg(f) = s and deg(f_inv) = s^{-1}; likewise for eps_prime with the
    // degrees swapped. This exhibits membership in R_s R_{s^-1}.
    std::vector<std::pair<AlgebraElem, AlgebraElem>> eps_factors;
    std::vector<std::pair<AlgebraElem, AlgebraElem>> eps_prime_factors;
};

// The local-unit construction: eps(x) x = x = x eps'(x) for nonzero
// homogeneous x, built from the ⪯-minimal classes of x and of x*.
EpsilonWitnesses epsilon_witnesses(const AlgebraElem& x);

struct InverseSearch {
    enum class Status { Found, NotFoundWithinBound, ProvenNonexistent };
    Status status = Status::NotFoundWithinBound;
    std::optional<AlgebraElem> inverse;
    std::string note;
    std::size_t bound_reached = 0;

    bool found() const { return status == Status::Found; }
};

// Searches for homogeneous y of degree deg(x)^{-1} with x y x = x, by
// iterative deepening over the normal-form monomials of that degree.
// Fields solve the linear system exactly; Z/n with composite n enumerates
// the finite solution space; Z only attempts unit monomial cases. The
// coefficient-divisibility lattice argument upgrades failures to genuine
// nonexistence proofs where it applies.
InverseSearch graded_vn_inverse(const AlgebraElem& x, std::size_t length_cap = 16);

// a = x y for a graded inverse y; a is a homogeneous idempotent generating
// the same principal one-sided ideals as x.
std::optional<AlgebraElem> principal_ideal_idempotent(const AlgebraElem& x,
                                                      std::size_t length_cap = 16);

// Checkers. Each returns a CheckReport with the stated name.
CheckReport check_graded_regular(const CtxPtr& ctx, const SamplerSpec& sampler);
CheckReport check_nearly_eps_strong(const CtxPtr& ctx, const SamplerSpec& sampler);
CheckReport check_pseudo_unitary(const CtxPtr& ctx, std::size_t span_len = 4);
CheckReport check_strongly_graded(const CtxPtr& ctx);
CheckReport semisimplicity_certificate(const CtxPtr& ctx, const SamplerSpec& sampler);

// Deterministic homogeneous sampling used by the checkers (exposed for the
// CLI and the acceptance suite).
AlgebraElem sample_homogeneous(const CtxPtr& ctx,
                               const std::map<BrandtElem, std::vector<Monomial>>& groups,
                               std::mt19937_64& rng, std::size_t max_monomials);

// Homogeneous y with x y nonzero of idempotent degree: x* when x x* does
// not cancel, otherwise a single-monomial conjugate of one of x's terms.
std::optional<AlgebraElem> idempotent_degree_witness(const AlgebraElem& x);

} // namespace lpa
