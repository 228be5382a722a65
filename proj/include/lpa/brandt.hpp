#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpa/error.hpp"

namespace lpa {

// Element of the Brandt semigroup S = M(Z, I) ∪ {0}: either the adjoined
// absorbing zero or a triple (i, g, j) with indices in a finite index set
// and g an unbounded integer.
class BrandtElem {
public:
    BrandtElem() : zero_(true) {}
    BrandtElem(int i, mpz_class g, int j) : zero_(false), i_(i), g_(std::move(g)), j_(j) {}

    static BrandtElem zero() { return BrandtElem(); }
    static BrandtElem idempotent(int i) { return BrandtElem(i, 0, i); }

    bool is_zero() const { return zero_; }
    bool is_idempotent() const { return zero_ || (i_ == j_ && g_ == 0); }

    int left() const { return i_; }
    int right() const { return j_; }
    const mpz_class& grade() const { return g_; }

    // The partial product with zero adjoined: (i,g,j)(j,h,l) = (i,g+h,l),
    // everything else is zero.
    friend BrandtElem operator*(const BrandtElem& a, const BrandtElem& b) {
        if (a.zero_ || b.zero_ || a.j_ != b.i_) return zero();
        return BrandtElem(a.i_, a.g_ + b.g_, b.j_);
    }

    // s^{-1} for nonzero s = (i,g,j): the element (j,-g,i).
    BrandtElem inverse() const {
        if (zero_) throw Error("inverse of the zero Brandt element");
        return BrandtElem(j_, -g_, i_);
    }

    bool operator==(const BrandtElem& o) const {
        if (zero_ || o.zero_) return zero_ == o.zero_;
        return i_ == o.i_ && j_ == o.j_ && g_ == o.g_;
    }
    bool operator!=(const BrandtElem& o) const { return !(*this == o); }
    bool operator<(const BrandtElem& o) const {
        if (zero_ != o.zero_) return zero_;
        if (zero_) return false;
        if (i_ != o.i_) return i_ < o.i_;
        if (g_ != o.g_) return g_ < o.g_;
        return j_ < o.j_;
    }

    std::string to_string() const {
        if (zero_) return "0";
        return "(" + std::to_string(i_) + "," + g_.get_str() + "," + std::to_string(j_) + ")";
    }

    nlohmann::json to_json() const {
        if (zero_) return nlohmann::json(0);
        return nlohmann::json::array({i_, static_cast<long>(g_.get_si()), j_});
    }

private:
    bool zero_;
    int i_ = 0;
    mpz_class g_ = 0;
    int j_ = 0;
};

struct LriData {
    BrandtElem inv, e, f;
};

// The unique data of condition (LRI) for nonzero s = (i,g,j):
// inv = (j,-g,i), e = (i,0,i), f = (j,0,j).
LriData lri_data(const BrandtElem& s);

// Finite partial groupoid with an absorbing zero, as a total product table.
// Entries are indices into `names`; an empty entry marks a product that
// falls outside the carrier (a truncation artifact, distinct from zero).
struct PartialGroupoidTable {
    std::vector<std::string> names;
    std::size_t zero = 0;
    std::vector<std::optional<std::size_t>> entries; // row-major, size n*n

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> product(std::size_t a, std::size_t b) const {
        return entries[a * size() + b];
    }
    void set(std::size_t a, std::size_t b, std::size_t p) { entries[a * size() + b] = p; }
};

// M(Z ∩ [g_lo, g_hi], I) ∪ {0} with |I| = index_count; products whose grade
// leaves the window are marked out-of-carrier.
PartialGroupoidTable brandt_window_table(int index_count, long g_lo, long g_hi);

// The pair groupoid S^× = {(i,j)}, (i,j)(k,l) = δ_{j,k}(i,l), with zero.
PartialGroupoidTable pair_groupoid_table(int n);

struct AxiomVerdict {
    std::string axiom;
    bool holds = true;
    std::string witness; // empty iff holds

    nlohmann::json to_json() const {
        nlohmann::json j{{"axiom", axiom}, {"holds", holds}};
        if (!holds) j["witness"] = witness;
        return j;
    }
};

struct AxiomReport {
    std::vector<AxiomVerdict> verdicts;
    std::size_t out_of_carrier_products = 0;
    bool has_global_identity = false;

    bool all_hold() const {
        for (const auto& v : verdicts)
            if (!v.holds) return false;
        return true;
    }
    const AxiomVerdict* find(const std::string& axiom) const {
        for (const auto& v : verdicts)
            if (v.axiom == axiom) return &v;
        return nullptr;
    }
    nlohmann::json to_json() const;
};

// Checks B1, B2(i)-(iii), B3, B4, cancellativity, (LRI) and orthogonality
// of distinct idempotents on the defined fragment of the table; triples
// touching out-of-carrier products are skipped and counted.
AxiomReport check_axioms(const PartialGroupoidTable& t);

} // namespace lpa
