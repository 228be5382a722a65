#include "lpa/regularity.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "lpa/linalg.hpp"
#include "lpa/models.hpp"

namespace lpa {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace

MinimalClassData minimal_classes(const AlgebraElem& x) {
    if (x.is_zero()) throw Error("minimal_classes: zero element");
    if (!x.is_homogeneous()) throw Error("minimal_classes: non-homogeneous element");
    const Graph& g = *x.context()->graph;

    MinimalClassData out;
    for (const auto& [m, c] : x.terms()) {
        bool seen = false;
        for (const auto& rep : out.class_representatives)
            if (rep.mu == m.mu) seen = true;
        if (!seen) out.class_representatives.push_back(m);
    }
    for (std::size_t i = 0; i < out.class_representatives.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < out.class_representatives.size() && minimal; ++j) {
            if (i == j) continue;
            const Path& mi = out.class_representatives[i].mu;
            const Path& mj = out.class_representatives[j].mu;
            if (!(mj == mi) && is_initial_subpath(g, mj, mi)) minimal = false;
        }
        if (minimal) out.minimal.push_back(i);
    }
    return out;
}

EpsilonWitnesses epsilon_witnesses(const AlgebraElem& x) {
    if (x.is_zero()) throw Error("epsilon_witnesses: zero element");
    if (!x.is_homogeneous()) throw Error("epsilon_witnesses: non-homogeneous element");
    const CtxPtr& ctx = x.context();
    const Coefficient one = Coefficient::one(ctx->ring);

    EpsilonWitnesses w{AlgebraElem::zero(ctx), AlgebraElem::zero(ctx), {}, {}};
    MinimalClassData mc = minimal_classes(x);
    for (std::size_t i : mc.minimal) {
        AlgebraElem f = AlgebraElem::monomial(ctx, mc.class_representatives[i], one);
        AlgebraElem fi = f.adjoint();
        w.eps = w.eps + f * fi; // N_s of the class: (mu nu*)(nu mu*) = mu mu*
        w.eps_factors.emplace_back(f, fi);
    }
    AlgebraElem xs = x.adjoint();
    MinimalClassData mcs = minimal_classes(xs);
    for (std::size_t i : mcs.minimal) {
        AlgebraElem f = AlgebraElem::monomial(ctx, mcs.class_representatives[i], one);
        AlgebraElem fi = f.adjoint();
        w.eps_prime = w.eps_prime + f * fi;
        w.eps_prime_factors.emplace_back(f, fi);
    }
    return w;
}

namespace {

// All coefficients of x y x lie in the subgroup generated by d^2, where d
// divides every coefficient of x (and the modulus, if any). If x itself
// escapes that subgroup, no inverse exists in any length bound.
std::optional<std::string> divisibility_obstruction(const AlgebraElem& x) {
    const RingSpec& ring = x.context()->ring;
    if (ring.kind != RingKind::Integers && ring.kind != RingKind::IntegersMod) return std::nullopt;
    mpz_class d = ring.kind == RingKind::IntegersMod ? mpz_class(ring.modulus) : mpz_class(0);
    for (const auto& [m, c] : x.terms()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.value().get_num().get_mpz_t());
        d = g;
    }
    mpz_class dd = d * d;
    if (ring.kind == RingKind::IntegersMod) {
        mpz_class g, n(ring.modulus);
        mpz_gcd(g.get_mpz_t(), dd.get_mpz_t(), n.get_mpz_t());
        dd = g;
    }
    if (dd <= 1) return std::nullopt;
    for (const auto& [m, c] : x.terms()) {
        if (c.value().get_num() % dd != 0) {
            std::ostringstream os;
            os << "every coefficient of x y x is divisible by " << dd.get_str()
               << (ring.kind == RingKind::IntegersMod
                       ? " (mod " + std::to_string(ring.modulus) + ")"
                       : "")
               << ", but x has coefficient " << c.to_string();
            return os.str();
        }
    }
    return std::nullopt;
}

// Coordinate rows of the elements z_i and the target x over the union of
// their supporting monomials.
struct LinearSystem {
    CoeffMatrix A;
    std::vector<Coefficient> b;
};

LinearSystem build_system(const AlgebraElem& x, const std::vector<AlgebraElem>& z) {
    const CtxPtr& ctx = x.context();
    std::map<Monomial, std::size_t, MonomialOrder> row{MonomialOrder{ctx->graph.get()}};
    auto reg = [&row](const AlgebraElem& e) {
        for (const auto& [m, c] : e.terms()) row.emplace(m, row.size());
    };
    reg(x);
    for (const auto& zi : z) reg(zi);
    // Re-number rows in deterministic monomial order.
    std::size_t idx = 0;
    for (auto& [m, r] : row) r = idx++;

    LinearSystem sys{CoeffMatrix(ctx->ring, row.size(), z.size()),
                     std::vector<Coefficient>(row.size(), Coefficient::zero(ctx->ring))};
    for (std::size_t j = 0; j < z.size(); ++j)
        for (const auto& [m, c] : z[j].terms()) sys.A.at(row.at(m), j) = c;
    for (const auto& [m, c] : x.terms()) sys.b[row.at(m)] = c;
    return sys;
}

// Tries y in the span of the candidate monomials; candidates must be
// normal monomials of degree deg(x)^{-1}.
std::optional<AlgebraElem> solve_in_span(const AlgebraElem& x, const std::vector<Monomial>& cand) {
    if (cand.empty()) return std::nullopt;
    const CtxPtr& ctx = x.context();
    const RingSpec& ring = ctx->ring;
    const Coefficient one = Coefficient::one(ring);

    // Columns with x m x = 0 cannot contribute to a solution.
    std::vector<Monomial> kept;
    std::vector<AlgebraElem> z;
    z.reserve(cand.size());
    for (const auto& m : cand) {
        AlgebraElem zi = x * AlgebraElem::monomial(ctx, m, one) * x;
        if (zi.is_zero()) continue;
        kept.push_back(m);
        z.push_back(std::move(zi));
    }
    if (kept.empty()) return std::nullopt;

    if (ring.is_field()) {
        auto sys = build_system(x, z);
        auto sol = solve_linear(sys.A, sys.b);
        if (!sol) return std::nullopt;
        AlgebraElem y = AlgebraElem::zero(ctx);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (!(*sol)[j].is_zero())
                y = y + AlgebraElem::monomial(ctx, kept[j], (*sol)[j]);
        return y;
    }

    if (ring.kind == RingKind::IntegersMod) {
        // No division available: enumerate the finite solution space.
        const unsigned long n = ring.modulus;
        double space = 1;
        for (std::size_t j = 0; j < kept.size(); ++j) space *= static_cast<double>(n);
        if (space > 2e5) return std::nullopt; // enumeration out of reach at this bound
        std::vector<unsigned long> digits(kept.size(), 0);
        for (;;) {
            AlgebraElem y = AlgebraElem::zero(ctx);
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (digits[j] != 0)
                    y = y + AlgebraElem::monomial(
                                ctx, kept[j],
                                Coefficient::from_integer(ring, static_cast<long>(digits[j])));
            if (!y.is_zero() && x * y * x == x) return y;
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
            if (k == digits.size()) break;
        }
        return std::nullopt;
    }

    return std::nullopt;
}

// Normal conjugate monomials (nu_i, mu_j) of degree deg(x)^{-1} taken from
// x's own terms; the constructive proof assembles inverses from exactly
// this data, so try it before the full basis search.
std::vector<Monomial> conjugate_candidates(const AlgebraElem& x) {
    const CtxPtr& ctx = x.context();
    const Graph& g = *ctx->graph;
    const BrandtElem target = x.degree().inverse();
    std::vector<Monomial> cand;
    for (const auto& [mi, ci] : x.terms())
        for (const auto& [mj, cj] : x.terms()) {
            Monomial m{mi.nu, mj.mu};
            if (m.mu.range(g) != m.nu.range(g)) continue;
            if (!is_normal_monomial(*ctx, m)) continue;
            if (!(ctx->weights.path_weight(m.mu) * ctx->weights.path_weight(m.nu).inverse() ==
                  target))
                continue;
            if (std::find(cand.begin(), cand.end(), m) == cand.end()) cand.push_back(m);
        }
    return cand;
}

} // namespace

InverseSearch graded_vn_inverse(const AlgebraElem& x, std::size_t length_cap) {
    if (x.is_zero()) throw Error("graded_vn_inverse: zero element");
    if (!x.is_homogeneous()) throw Error("graded_vn_inverse: non-homogeneous element");
    const CtxPtr& ctx = x.context();
    const RingSpec& ring = ctx->ring;
    const BrandtElem sinv = x.degree().inverse();

    InverseSearch res;

    // Single monomial with an invertible coefficient: y = c^{-1} nu mu*.
    if (x.term_count() == 1) {
        const auto& [m, c] = *x.terms().begin();
        if (auto ci = c.inverse()) {
            AlgebraElem y = AlgebraElem::monomial(ctx, Monomial{m.nu, m.mu}, *ci);
            if (x * y * x == x) {
                res.status = InverseSearch::Status::Found;
                res.inverse = y;
                res.note = "single-monomial conjugate";
                return res;
            }
        }
    }

    if (auto proof = divisibility_obstruction(x)) {
        res.status = InverseSearch::Status::ProvenNonexistent;
        res.note = *proof;
        return res;
    }

    if (ring.kind == RingKind::Integers) {
        res.status = InverseSearch::Status::NotFoundWithinBound;
        res.note = "over Z only unit monomial cases are attempted";
        return res;
    }

    auto accept = [&](AlgebraElem y, const std::string& note) {
        if (!(x * y * x == x) || !(y.degree() == sinv))
            throw Error("graded_vn_inverse: internal verification failed");
        res.status = InverseSearch::Status::Found;
        res.inverse = std::move(y);
        res.note = note;
    };

    if (auto y = solve_in_span(x, conjugate_candidates(x))) {
        accept(std::move(*y), "conjugate-span solution");
        return res;
    }

    // A cheap warm-up level below the deepening start; any solution found
    // here would also appear at the first deepening level.
    const std::size_t warm = std::min(length_cap, std::max<std::size_t>(x.max_path_length(), 1));
    std::size_t len = warm;
    for (;;) {
        res.bound_reached = len;
        auto groups = monomials_by_degree(ctx, len);
        auto it = groups.find(sinv);
        if (it != groups.end()) {
            if (auto y = solve_in_span(x, it->second)) {
                accept(std::move(*y), "basis solution at length " + std::to_string(len));
                return res;
            }
        }
        if (len >= length_cap) break;
        len = len == warm ? std::min(length_cap, x.max_path_length() + 2)
                          : std::min(length_cap, len * 2);
        if (len <= res.bound_reached) break;
    }
    res.status = InverseSearch::Status::NotFoundWithinBound;
    res.note = "no homogeneous inverse found with path length <= " + std::to_string(length_cap);
    return res;
}

std::optional<AlgebraElem> principal_ideal_idempotent(const AlgebraElem& x,
                                                      std::size_t length_cap) {
    auto search = graded_vn_inverse(x, length_cap);
    if (!search.found()) return std::nullopt;
    const AlgebraElem& y = *search.inverse;
    AlgebraElem a = x * y;
    if (!(a * a == a) || !(a * x == x))
        throw Error("principal_ideal_idempotent: internal verification failed");
    return a;
}

AlgebraElem sample_homogeneous(const CtxPtr& ctx,
                               const std::map<BrandtElem, std::vector<Monomial>>& groups,
                               std::mt19937_64& rng, std::size_t max_monomials) {
    if (groups.empty()) return AlgebraElem::zero(ctx);
    std::size_t gi = rng() % groups.size();
    auto it = groups.begin();
    std::advance(it, gi);
    const auto& monos = it->second;
    std::size_t count = 1 + rng() % std::min(max_monomials, monos.size());
    std::vector<std::size_t> picked;
    AlgebraElem x = AlgebraElem::zero(ctx);
    while (picked.size() < count) {
        std::size_t k = rng() % monos.size();
        if (std::find(picked.begin(), picked.end(), k) != picked.end()) continue;
        picked.push_back(k);
        Coefficient c = Coefficient::zero(ctx->ring);
        switch (ctx->ring.kind) {
            case RingKind::Rationals: {
                long num = static_cast<long>(rng() % 11) - 5;
                if (num == 0) num = 1;
                long den = 1 + static_cast<long>(rng() % 4);
                c = Coefficient(ctx->ring, mpq_class(num, den));
                break;
            }
            case RingKind::PrimeField:
            case RingKind::IntegersMod:
                c = Coefficient::from_integer(
                    ctx->ring, 1 + static_cast<long>(rng() % (ctx->ring.modulus - 1)));
                break;
            case RingKind::Integers: {
                long v = static_cast<long>(rng() % 9) - 4;
                if (v == 0) v = 1;
                c = Coefficient::from_integer(ctx->ring, v);
                break;
            }
        }
        x = x + AlgebraElem::monomial(ctx, monos[k], c);
    }
    return x;
}

CheckReport check_graded_regular(const CtxPtr& ctx, const SamplerSpec& sampler) {
    Stopwatch clock;
    CheckReport rep;
    rep.check = "graded-regular";
    rep.seed = sampler.seed;
    rep.params = {{"samples", sampler.samples},
                  {"max_monomials", sampler.max_monomials},
                  {"max_path_len", sampler.max_path_len},
                  {"context", ctx->describe()}};

    std::mt19937_64 rng(sampler.seed);
    auto groups = monomials_by_degree(ctx, sampler.max_path_len);

    // Deterministic screen: a non-regular coefficient ring yields the
    // canonical witness c * v with c von Neumann singular in R.
    if (!is_vn_regular_ring(ctx->ring) && ctx->graph->vertex_count() > 0) {
        Coefficient c = Coefficient::zero(ctx->ring);
        if (ctx->ring.kind == RingKind::Integers) {
            c = Coefficient::from_integer(ctx->ring, 2);
        } else {
            for (unsigned long v = 2; v < ctx->ring.modulus; ++v) {
                Coefficient cv = Coefficient::from_integer(ctx->ring, static_cast<long>(v));
                if (!vn_inverse(cv)) {
                    c = cv;
                    break;
                }
            }
        }
        if (!c.is_zero()) {
            AlgebraElem x = AlgebraElem::vertex(ctx, 0).scaled(c);
            auto search = graded_vn_inverse(x, sampler.length_cap);
            if (!search.found()) {
                rep.fail(x.to_string(),
                         {{"element", x.to_string()},
                          {"status", search.status == InverseSearch::Status::ProvenNonexistent
                                         ? "proven nonexistent"
                                         : "not found within bound"},
                          {"note", search.note}});
            }
        }
    }

    int passed = 0;
    for (int i = 0; i < sampler.samples; ++i) {
        AlgebraElem x = sample_homogeneous(ctx, groups, rng, sampler.max_monomials);
        if (x.is_zero()) break; // no monomials in reach at all
        auto search = graded_vn_inverse(x, sampler.length_cap);
        if (search.found()) {
            const AlgebraElem& y = *search.inverse;
            if (x * y * x == x && y.degree() == x.degree().inverse()) {
                ++passed;
            } else {
                rep.fail("inverse verification failed for " + x.to_string(),
                         {{"element", x.to_string()}});
            }
        } else {
            rep.fail(x.to_string(), {{"element", x.to_string()},
                                     {"status", search.status == InverseSearch::Status::ProvenNonexistent
                                                    ? "proven nonexistent"
                                                    : "not found within bound"},
                                     {"note", search.note}});
        }
    }
    if (rep.verdict)
        rep.certify(std::to_string(passed) +
                    " sampled homogeneous elements admit graded inverses; each instance "
                    "re-verified by exact x y x = x and deg(y) = deg(x)^{-1}");
    rep.elapsed_ms = clock.ms();
    return rep;
}

CheckReport check_nearly_eps_strong(const CtxPtr& ctx, const SamplerSpec& sampler) {
    Stopwatch clock;
    CheckReport rep;
    rep.check = "nearly-eps-strong";
    rep.seed = sampler.seed;
    rep.params = {{"samples", sampler.samples},
                  {"max_monomials", sampler.max_monomials},
                  {"max_path_len", sampler.max_path_len},
                  {"context", ctx->describe()}};

    std::mt19937_64 rng(sampler.seed);
    auto groups = monomials_by_degree(ctx, sampler.max_path_len);

    // (LRI) on every occurring degree.
    for (const auto& [s, monos] : groups) {
        if (s.is_zero()) continue;
        auto d = lri_data(s);
        if (!(d.e * s == s && s * d.f == s && d.f * d.inv == d.inv && d.inv * d.e == d.inv &&
              s * d.inv == d.e && d.inv * s == d.f))
            rep.fail("(LRI) fails for degree " + s.to_string());
    }
    rep.certify("(LRI) data verified on " + std::to_string(groups.size()) + " occurring degrees");

    int passed = 0;
    for (int i = 0; i < sampler.samples; ++i) {
        AlgebraElem x = sample_homogeneous(ctx, groups, rng, sampler.max_monomials);
        if (x.is_zero()) break;
        auto w = epsilon_witnesses(x);
        bool ok = w.eps * x == x && x * w.eps_prime == x;
        // Membership in R_s R_{s^-1}: the factor lists multiply back to eps
        // and live in the right components.
        const BrandtElem s = x.degree();
        AlgebraElem eps_sum = AlgebraElem::zero(ctx);
        for (const auto& [f, fi] : w.eps_factors) {
            eps_sum = eps_sum + f * fi;
            if (!(f.degree() == s) || !(fi.degree() == s.inverse())) ok = false;
        }
        if (!(eps_sum == w.eps)) ok = false;
        AlgebraElem epsp_sum = AlgebraElem::zero(ctx);
        for (const auto& [f, fi] : w.eps_prime_factors) {
            epsp_sum = epsp_sum + f * fi;
            if (!(f.degree() == s.inverse()) || !(fi.degree() == s)) ok = false;
        }
        if (!(epsp_sum == w.eps_prime)) ok = false;
        if (ok)
            ++passed;
        else
            rep.fail("epsilon identities fail for " + x.to_string(),
                     {{"element", x.to_string()}});
    }
    if (rep.verdict)
        rep.certify(std::to_string(passed) +
                    " samples satisfy eps(x) x = x = x eps'(x) with factor lists in "
                    "R_s R_{s^-1} and R_{s^-1} R_s");
    rep.elapsed_ms = clock.ms();
    return rep;
}

CheckReport check_pseudo_unitary(const CtxPtr& ctx, std::size_t span_len) {
    Stopwatch clock;
    CheckReport rep;
    rep.check = "pseudo-unitary";
    rep.params = {{"span_len", span_len}, {"context", ctx->describe()}};

    auto idems = occurring_idempotents(ctx);
    std::map<BrandtElem, AlgebraElem> units;
    for (const auto& e : idems) {
        AlgebraElem u = local_unit(ctx, e);
        if (!(u * u == u)) rep.fail("1_e is not idempotent for e = " + e.to_string());
        units.emplace(e, u);
    }
    for (const auto& [e, ue] : units)
        for (const auto& [f, uf] : units) {
            if (e == f) continue;
            if (!(ue * uf).is_zero())
                rep.fail("1_e 1_f != 0 for e = " + e.to_string() + ", f = " + f.to_string());
        }

    std::size_t checked = 0;
    for (const auto& [s, monos] : monomials_by_degree(ctx, span_len)) {
        if (s.is_zero()) continue;
        const BrandtElem el = s * s.inverse();
        const BrandtElem er = s.inverse() * s;
        for (const auto& m : monos) {
            AlgebraElem b = AlgebraElem::monomial(ctx, m, Coefficient::one(ctx->ring));
            if (!(units.at(el) * b == b))
                rep.fail("1_e x != x", {{"e", el.to_string()}, {"x", b.to_string()}});
            if (!(b * units.at(er) == b))
                rep.fail("x 1_f != x", {{"f", er.to_string()}, {"x", b.to_string()}});
            ++checked;
        }
    }

    // On a finite graph the local units sum to the unity sum_v v.
    AlgebraElem total = AlgebraElem::zero(ctx);
    for (const auto& [e, u] : units) total = total + u;
    if (!(total == AlgebraElem::one(ctx)))
        rep.fail("sum of local units differs from sum of vertices");
    else
        rep.certify("sum_e 1_e = sum_v v verified");

    if (rep.verdict)
        rep.certify("1_e x = x = x 1_f on " + std::to_string(checked) +
                    " spanning monomials across all nonzero components");
    rep.elapsed_ms = clock.ms();
    return rep;
}

CheckReport check_strongly_graded(const CtxPtr& ctx) {
    Stopwatch clock;
    CheckReport rep;
    rep.check = "strongly-graded";
    rep.params = {{"context", ctx->describe()}};
    if (!ctx->graph->is_acyclic())
        throw Error("strongly-graded check needs an acyclic graph (components must be "
                    "finite-dimensional)");
    if (!ctx->ring.is_field())
        throw Error("strongly-graded check needs field coefficients, got " +
                    ctx->ring.to_string());

    auto groups = monomials_by_degree(ctx, ctx->graph->vertex_count());
    const Coefficient one = Coefficient::one(ctx->ring);
    std::size_t pairs_checked = 0;

    for (const auto& [s, smonos] : groups) {
        for (const auto& [t, tmonos] : groups) {
            const BrandtElem st = s * t;
            if (st.is_zero()) continue;
            auto target = groups.find(st);
            const std::size_t dim = target == groups.end() ? 0 : target->second.size();
            if (dim == 0) continue; // products land in the zero component
            std::map<Monomial, std::size_t, MonomialOrder> col{MonomialOrder{ctx->graph.get()}};
            for (const auto& m : target->second) col.emplace(m, col.size());
            CoeffMatrix M(ctx->ring, smonos.size() * tmonos.size(), dim);
            std::size_t r = 0;
            for (const auto& ms : smonos)
                for (const auto& mt : tmonos) {
                    AlgebraElem prod = AlgebraElem::monomial(ctx, ms, one) *
                                       AlgebraElem::monomial(ctx, mt, one);
                    for (const auto& [m, c] : prod.terms()) M.at(r, col.at(m)) = c;
                    ++r;
                }
            std::size_t rk = rank(M);
            ++pairs_checked;
            if (rk != dim)
                rep.fail("R_s R_t is a proper subspace of R_st",
                         {{"s", s.to_string()},
                          {"t", t.to_string()},
                          {"st", st.to_string()},
                          {"rank", rk},
                          {"dim", dim}});
        }
    }
    if (rep.verdict)
        rep.certify("span equality R_s R_t = R_st verified by exact rank on " +
                    std::to_string(pairs_checked) + " degree pairs");
    rep.elapsed_ms = clock.ms();
    return rep;
}

std::optional<AlgebraElem> idempotent_degree_witness(const AlgebraElem& x) {
    if (x.is_zero()) throw Error("idempotent_degree_witness: zero element");
    if (!x.is_homogeneous()) throw Error("idempotent_degree_witness: non-homogeneous element");
    const CtxPtr& ctx = x.context();
    const BrandtElem e = x.degree() * x.degree().inverse();
    AlgebraElem y = x.adjoint();
    if (!(x * y).is_zero() && (x * y).degree() == e) return y;
    for (const auto& [m, c] : x.terms()) {
        AlgebraElem cand =
            AlgebraElem::monomial(ctx, Monomial{m.nu, m.mu}, Coefficient::one(ctx->ring));
        AlgebraElem z = x * cand;
        if (!z.is_zero() && z.degree() == e) return cand;
    }
    return std::nullopt;
}

CheckReport semisimplicity_certificate(const CtxPtr& ctx, const SamplerSpec& sampler) {
    Stopwatch clock;
    CheckReport rep;
    rep.check = "semisimple-cert";
    rep.seed = sampler.seed;
    rep.params = {{"samples", sampler.samples},
                  {"max_monomials", sampler.max_monomials},
                  {"max_path_len", sampler.max_path_len},
                  {"context", ctx->describe()}};
    if (!ctx->ring.is_field())
        throw Error("semisimplicity certificate needs field coefficients, got " +
                    ctx->ring.to_string());

    std::mt19937_64 rng(sampler.seed);
    auto groups = monomials_by_degree(ctx, sampler.max_path_len);

    // Condition ii): for each sampled nonzero homogeneous x, exhibit y with
    // x y nonzero of idempotent degree. y = x* works unless cancellation
    // kills it, in which case a single-monomial conjugate is searched.
    int passed = 0, fallback_used = 0;
    for (int i = 0; i < sampler.samples; ++i) {
        AlgebraElem x = sample_homogeneous(ctx, groups, rng, sampler.max_monomials);
        if (x.is_zero()) break;
        if (auto y = idempotent_degree_witness(x)) {
            if ((x * x.adjoint()).is_zero()) ++fallback_used;
            ++passed;
        } else {
            rep.fail("no homogeneous y with x y nonzero of idempotent degree found",
                     {{"element", x.to_string()}});
        }
    }
    if (rep.verdict)
        rep.certify("condition ii): " + std::to_string(passed) +
                    " samples, witness y = x* or a conjugate (" + std::to_string(fallback_used) +
                    " fallbacks)");

    // Condition i): exact only when the components are finite-dimensional.
    if (ctx->graph->is_acyclic() && ctx->is_leavitt()) {
        for (const auto& e : occurring_idempotents(ctx)) {
            auto cert = component_matrix_units(ctx, e);
            if (!cert.ok) {
                rep.fail("matricial certificate failed for component " + e.to_string(),
                         {{"detail", cert.detail}});
                continue;
            }
            // Over Q the regular-representation trace form gives a second,
            // independent route: its radical equals J(R_e) in char 0.
            if (ctx->ring.kind == RingKind::Rationals) {
                auto basis_all = enumerate_basis(ctx, std::nullopt);
                std::vector<Monomial> basis;
                for (const auto& m : basis_all) {
                    AlgebraElem el = AlgebraElem::monomial(ctx, m, Coefficient::one(ctx->ring));
                    if (el.term_degree(m) == e) basis.push_back(m);
                }
                const std::size_t d = basis.size();
                std::map<Monomial, std::size_t, MonomialOrder> col{MonomialOrder{ctx->graph.get()}};
                for (const auto& m : basis) col.emplace(m, col.size());
                auto mult_trace = [&](const AlgebraElem& u) {
                    // Tr of left multiplication by u on R_e.
                    Coefficient tr = Coefficient::zero(ctx->ring);
                    for (const auto& m : basis) {
                        AlgebraElem prod =
                            u * AlgebraElem::monomial(ctx, m, Coefficient::one(ctx->ring));
                        auto it = prod.terms().find(m);
                        if (it != prod.terms().end()) tr = tr + it->second;
                    }
                    return tr;
                };
                CoeffMatrix gram(ctx->ring, d, d);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) {
                        AlgebraElem prod =
                            AlgebraElem::monomial(ctx, basis[i], Coefficient::one(ctx->ring)) *
                            AlgebraElem::monomial(ctx, basis[j], Coefficient::one(ctx->ring));
                        gram.at(i, j) = mult_trace(prod);
                    }
                if (rank(gram) != d)
                    rep.fail("trace form of the regular representation is degenerate on " +
                             e.to_string());
            }
        }
        rep.params["condition_i"] = "verified (matricial structure per component)";
        if (rep.verdict)
            rep.certify("condition i): every component carries an exact matrix-unit basis, "
                        "so J(R_e) = 0");
    } else {
        rep.params["condition_i"] = "not checked (cyclic graph or Cohn context)";
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

} // namespace lpa
