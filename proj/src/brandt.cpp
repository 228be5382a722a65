#include "lpa/brandt.hpp"

#include <map>

namespace lpa {

LriData lri_data(const BrandtElem& s) {
    if (s.is_zero()) throw Error("lri_data: zero element has no (LRI) data");
    return LriData{s.inverse(), BrandtElem::idempotent(s.left()), BrandtElem::idempotent(s.right())};
}

PartialGroupoidTable brandt_window_table(int index_count, long g_lo, long g_hi) {
    if (index_count < 1 || g_lo > g_hi) throw Error("brandt_window_table: empty carrier");
    PartialGroupoidTable t;
    t.names.push_back("0");
    std::vector<BrandtElem> elems;
    elems.push_back(BrandtElem::zero());
    std::map<std::string, std::size_t> index;
    for (int i = 1; i <= index_count; ++i)
        for (long g = g_lo; g <= g_hi; ++g)
            for (int j = 1; j <= index_count; ++j) {
                BrandtElem b(i, g, j);
                index[b.to_string()] = elems.size();
                elems.push_back(b);
                t.names.push_back(b.to_string());
            }
    t.zero = 0;
    const std::size_t n = elems.size();
    t.entries.assign(n * n, std::nullopt);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            BrandtElem p = elems[a] * elems[b];
            if (p.is_zero()) {
                t.set(a, b, 0);
            } else if (p.grade() >= g_lo && p.grade() <= g_hi) {
                t.set(a, b, index.at(p.to_string()));
            }
            // else: out of the grade window, left unknown
        }
    return t;
}

PartialGroupoidTable pair_groupoid_table(int n) {
    if (n < 1) throw Error("pair_groupoid_table: need n >= 1");
    PartialGroupoidTable t;
    t.names.push_back("0");
    t.zero = 0;
    auto idx = [n](int i, int j) { return static_cast<std::size_t>((i - 1) * n + (j - 1) + 1); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            t.names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    const std::size_t m = t.names.size();
    t.entries.assign(m * m, std::nullopt);
    for (std::size_t a = 0; a < m; ++a) {
        t.set(a, 0, 0);
        t.set(0, a, 0);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    t.set(idx(i, j), idx(k, l), j == k ? idx(i, l) : 0);
    return t;
}

nlohmann::json AxiomReport::to_json() const {
    nlohmann::json j;
    j["verdicts"] = nlohmann::json::array();
    for (const auto& v : verdicts) j["verdicts"].push_back(v.to_json());
    j["out_of_carrier_products"] = out_of_carrier_products;
    j["has_global_identity"] = has_global_identity;
    j["all_hold"] = all_hold();
    return j;
}

namespace {

// -1 marks an out-of-carrier product.
using ProductMatrix = std::vector<long>;

long prod(const ProductMatrix& m, std::size_t n, std::size_t a, std::size_t b) {
    return m[a * n + b];
}

} // namespace

AxiomReport check_axioms(const PartialGroupoidTable& t) {
    const std::size_t n = t.size();
    const std::size_t z = t.zero;
    AxiomReport rep;

    ProductMatrix m(n * n, -1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto p = t.product(a, b);
            if (p)
                m[a * n + b] = static_cast<long>(*p);
            else
                ++rep.out_of_carrier_products;
        }

    auto known = [&](std::size_t a, std::size_t b) { return prod(m, n, a, b) >= 0; };
    auto defined = [&](std::size_t a, std::size_t b) {
        long p = prod(m, n, a, b);
        return p >= 0 && static_cast<std::size_t>(p) != z;
    };
    auto value = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(prod(m, n, a, b)); };
    auto name = [&](std::size_t a) { return t.names[a]; };

    // Zero must be absorbing wherever its products are recorded.
    {
        AxiomVerdict v{"zero-absorbing", true, ""};
        for (std::size_t a = 0; a < n && v.holds; ++a) {
            if (known(a, z) && value(a, z) != z) v = {v.axiom, false, name(a) + "*0 != 0"};
            if (known(z, a) && value(z, a) != z) v = {v.axiom, false, "0*" + name(a) + " != 0"};
        }
        rep.verdicts.push_back(v);
    }

    // B1: in st = u, each of s, t, u is determined by the other two.
    {
        AxiomVerdict v{"B1", true, ""};
        for (std::size_t s = 0; s < n && v.holds; ++s) {
            if (s == z) continue;
            for (std::size_t tt = 0; tt < n && v.holds; ++tt) {
                if (tt == z || !defined(s, tt)) continue;
                std::size_t u = value(s, tt);
                for (std::size_t s2 = s + 1; s2 < n && v.holds; ++s2)
                    if (s2 != z && defined(s2, tt) && value(s2, tt) == u)
                        v = {v.axiom, false,
                             name(s) + "*" + name(tt) + " = " + name(s2) + "*" + name(tt) + " = " + name(u)};
                for (std::size_t t2 = tt + 1; t2 < n && v.holds; ++t2)
                    if (t2 != z && defined(s, t2) && value(s, t2) == u)
                        v = {v.axiom, false,
                             name(s) + "*" + name(tt) + " = " + name(s) + "*" + name(t2) + " = " + name(u)};
            }
        }
        rep.verdicts.push_back(v);
    }

    // B2 (i)-(iii): associativity under the three definedness premises.
    {
        AxiomVerdict v1{"B2(i)", true, ""}, v2{"B2(ii)", true, ""}, v3{"B2(iii)", true, ""};
        for (std::size_t s = 0; s < n; ++s) {
            if (s == z) continue;
            for (std::size_t tt = 0; tt < n; ++tt) {
                if (tt == z) continue;
                for (std::size_t u = 0; u < n; ++u) {
                    if (u == z) continue;
                    const bool st_def = defined(s, tt);
                    const bool tu_def = defined(tt, u);
                    const std::string triple =
                        "s=" + name(s) + ", t=" + name(tt) + ", u=" + name(u);
                    if (v1.holds && st_def && tu_def) {
                        if (known(value(s, tt), u) && known(s, value(tt, u))) {
                            if (!defined(value(s, tt), u) || !defined(s, value(tt, u)) ||
                                value(value(s, tt), u) != value(s, value(tt, u)))
                                v1 = {v1.axiom, false, triple};
                        }
                    }
                    if (v2.holds && st_def && defined(value(s, tt), u)) {
                        if (known(tt, u)) {
                            if (!defined(tt, u))
                                v2 = {v2.axiom, false, triple};
                            else if (known(s, value(tt, u)) &&
                                     (!defined(s, value(tt, u)) ||
                                      value(s, value(tt, u)) != value(value(s, tt), u)))
                                v2 = {v2.axiom, false, triple};
                        }
                    }
                    if (v3.holds && tu_def && defined(s, value(tt, u))) {
                        if (known(s, tt)) {
                            if (!defined(s, tt))
                                v3 = {v3.axiom, false, triple};
                            else if (known(value(s, tt), u) &&
                                     (!defined(value(s, tt), u) ||
                                      value(value(s, tt), u) != value(s, value(tt, u))))
                                v3 = {v3.axiom, false, triple};
                        }
                    }
                }
            }
        }
        rep.verdicts.push_back(v1);
        rep.verdicts.push_back(v2);
        rep.verdicts.push_back(v3);
    }

    std::vector<std::size_t> idempotents; // nonzero ones
    for (std::size_t e = 0; e < n; ++e)
        if (e != z && known(e, e) && value(e, e) == e) idempotents.push_back(e);

    // B3: unique e, f, s' with es = sf = s and s's = f.
    {
        AxiomVerdict v{"B3", true, ""};
        for (std::size_t s = 0; s < n && v.holds; ++s) {
            if (s == z) continue;
            std::size_t count = 0;
            for (std::size_t e : idempotents) {
                if (!(defined(e, s) && value(e, s) == s)) continue;
                for (std::size_t f : idempotents) {
                    if (!(defined(s, f) && value(s, f) == s)) continue;
                    for (std::size_t si = 0; si < n; ++si) {
                        if (si == z) continue;
                        if (defined(si, s) && value(si, s) == f) ++count;
                    }
                }
            }
            if (count != 1)
                v = {v.axiom, false,
                     name(s) + " admits " + std::to_string(count) + " (e,f,s') triples"};
        }
        rep.verdicts.push_back(v);
    }

    // B4: for idempotents e, f there is s with es = sf = s.
    {
        AxiomVerdict v{"B4", true, ""};
        for (std::size_t e : idempotents) {
            for (std::size_t f : idempotents) {
                bool found = false;
                for (std::size_t s = 0; s < n && !found; ++s) {
                    if (s == z) continue;
                    if (defined(e, s) && value(e, s) == s && defined(s, f) && value(s, f) == s)
                        found = true;
                }
                if (!found) {
                    v = {v.axiom, false, "no s with " + name(e) + "s = s" + name(f) + " = s"};
                    break;
                }
            }
            if (!v.holds) break;
        }
        rep.verdicts.push_back(v);
    }

    // Cancellativity: 0 != su = tu implies s = t, and dually.
    {
        AxiomVerdict v{"cancellative", true, ""};
        for (std::size_t u = 0; u < n && v.holds; ++u)
            for (std::size_t s = 0; s < n && v.holds; ++s)
                for (std::size_t tt = s + 1; tt < n && v.holds; ++tt) {
                    if (defined(s, u) && defined(tt, u) && value(s, u) == value(tt, u))
                        v = {v.axiom, false,
                             name(s) + "*" + name(u) + " = " + name(tt) + "*" + name(u) + " != 0"};
                    else if (defined(u, s) && defined(u, tt) && value(u, s) == value(u, tt))
                        v = {v.axiom, false,
                             name(u) + "*" + name(s) + " = " + name(u) + "*" + name(tt) + " != 0"};
                }
        rep.verdicts.push_back(v);
    }

    // (LRI).
    {
        AxiomVerdict v{"LRI", true, ""};
        for (std::size_t s = 0; s < n && v.holds; ++s) {
            if (s == z) continue;
            bool found = false;
            for (std::size_t si = 0; si < n && !found; ++si) {
                if (si == z) continue;
                for (std::size_t e : idempotents) {
                    if (found) break;
                    for (std::size_t f : idempotents) {
                        if (defined(e, s) && value(e, s) == s && defined(s, f) && value(s, f) == s &&
                            defined(f, si) && value(f, si) == si && defined(si, e) &&
                            value(si, e) == si && defined(s, si) && value(s, si) == e &&
                            defined(si, s) && value(si, s) == f) {
                            found = true;
                            break;
                        }
                    }
                }
            }
            if (!found) v = {v.axiom, false, "no (s^{-1}, e, f) for s = " + name(s)};
        }
        rep.verdicts.push_back(v);
    }

    // Orthogonality of distinct idempotents.
    {
        AxiomVerdict v{"idempotent-orthogonality", true, ""};
        for (std::size_t e : idempotents)
            for (std::size_t f : idempotents) {
                if (e == f) continue;
                if (known(e, f) && value(e, f) != z) {
                    v = {v.axiom, false, name(e) + "*" + name(f) + " != 0"};
                    break;
                }
            }
        rep.verdicts.push_back(v);
    }

    // Informational: is there a global identity (making S^x a monoid)?
    rep.has_global_identity = false;
    for (std::size_t u = 0; u < n && !rep.has_global_identity; ++u) {
        if (u == z) continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (a == z) continue;
            if (!(known(u, a) && value(u, a) == a && known(a, u) && value(a, u) == a)) ok = false;
        }
        rep.has_global_identity = ok;
    }

    return rep;
}

} // namespace lpa
