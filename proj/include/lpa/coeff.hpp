#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "lpa/error.hpp"

namespace lpa {

enum class RingKind { Rationals, PrimeField, IntegersMod, Integers };

// One of the supported exact commutative unital coefficient rings:
// Q, GF(p), Z/n or Z.
struct RingSpec {
    RingKind kind = RingKind::Rationals;
    unsigned long modulus = 0; // p or n; 0 for Q and Z

    static RingSpec rationals() { return {RingKind::Rationals, 0}; }
    static RingSpec prime_field(unsigned long p);
    static RingSpec integers_mod(unsigned long n);
    static RingSpec integers() { return {RingKind::Integers, 0}; }

    // Parses "Q", "Z", "Fp:5", "Zn:4" (the CLI --ring syntax).
    static RingSpec parse(const std::string& text);

    bool is_field() const {
        return kind == RingKind::Rationals || kind == RingKind::PrimeField;
    }
    bool is_modular() const {
        return kind == RingKind::PrimeField || kind == RingKind::IntegersMod;
    }

    bool operator==(const RingSpec&) const = default;

    std::string to_string() const;
};

// Exact element of a RingSpec ring, always kept in canonical form:
// reduced fraction with positive denominator, residue in [0, n), or
// arbitrary-precision integer.
class Coefficient {
public:
    Coefficient() : spec_(RingSpec::rationals()), v_(0) {}
    Coefficient(const RingSpec& spec, const mpq_class& value);

    static Coefficient zero(const RingSpec& spec) { return {spec, 0}; }
    static Coefficient one(const RingSpec& spec) { return {spec, 1}; }
    static Coefficient from_integer(const RingSpec& spec, const mpz_class& n) {
        return {spec, mpq_class(n)};
    }

    // Parses "3/4", "2 mod 5", "-7", interpreted in `spec`.
    static Coefficient parse(const RingSpec& spec, const std::string& text);

    const RingSpec& ring() const { return spec_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator-() const;

    // Multiplicative inverse; only available for nonzero field elements
    // and for residues coprime to n.
    std::optional<Coefficient> inverse() const;

    bool operator==(const Coefficient& o) const {
        return spec_ == o.spec_ && v_ == o.v_;
    }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void canonicalize();
    void require_same_ring(const Coefficient& o) const;

    RingSpec spec_;
    mpq_class v_;
};

// Searches for y with x*y*x = x. For fields this is x^{-1} (or 0 for x=0);
// for Z/n an exhaustive scan over all residues; for Z only x in {-1,0,1}
// admit a solution.
std::optional<Coefficient> vn_inverse(const Coefficient& x);

// Decides von Neumann regularity of the whole ring. Fields are regular;
// Z/n is scanned exhaustively (element by element, no factoring); Z is not
// regular.
bool is_vn_regular_ring(const RingSpec& spec);

} // namespace lpa
