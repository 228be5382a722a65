#include "lpa/coeff.hpp"

#include <sstream>

namespace lpa {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

RingSpec RingSpec::prime_field(unsigned long p) {
    if (!is_prime(p)) throw Error("prime_field: " + std::to_string(p) + " is not prime");
    return {RingKind::PrimeField, p};
}

RingSpec RingSpec::integers_mod(unsigned long n) {
    if (n < 2) throw Error("integers_mod: modulus must be >= 2, got " + std::to_string(n));
    return {RingKind::IntegersMod, n};
}

RingSpec RingSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "Z") return integers();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string tail = text.substr(colon + 1);
        unsigned long m = 0;
        try {
            m = std::stoul(tail);
        } catch (const std::exception&) {
            throw Error("bad ring modulus: " + text);
        }
        if (head == "Fp") return prime_field(m);
        if (head == "Zn") return integers_mod(m);
    }
    throw Error("unknown ring spec '" + text + "' (expected Q, Z, Fp:<p> or Zn:<n>)");
}

std::string RingSpec::to_string() const {
    switch (kind) {
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "GF(" + std::to_string(modulus) + ")";
        case RingKind::IntegersMod: return "Z/" + std::to_string(modulus);
        case RingKind::Integers: return "Z";
    }
    return "?";
}

Coefficient::Coefficient(const RingSpec& spec, const mpq_class& value)
    : spec_(spec), v_(value) {
    canonicalize();
}

void Coefficient::canonicalize() {
    v_.canonicalize();
    if (spec_.is_modular()) {
        if (v_.get_den() != 1)
            throw Error("non-integer value in " + spec_.to_string());
        mpz_class r = v_.get_num() % static_cast<long>(spec_.modulus);
        if (r < 0) r += spec_.modulus;
        v_ = mpq_class(r);
    } else if (spec_.kind == RingKind::Integers) {
        if (v_.get_den() != 1)
            throw Error("non-integer value in Z");
    }
}

void Coefficient::require_same_ring(const Coefficient& o) const {
    if (spec_ != o.spec_)
        throw Error("mixed-ring operands: " + spec_.to_string() + " vs " + o.spec_.to_string());
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    require_same_ring(o);
    return {spec_, v_ + o.v_};
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
    require_same_ring(o);
    return {spec_, v_ - o.v_};
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    require_same_ring(o);
    return {spec_, v_ * o.v_};
}

Coefficient Coefficient::operator-() const { return {spec_, -v_}; }

std::optional<Coefficient> Coefficient::inverse() const {
    if (is_zero()) return std::nullopt;
    switch (spec_.kind) {
        case RingKind::Rationals:
            return Coefficient(spec_, 1 / v_);
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            mpz_class inv, n(static_cast<unsigned long>(spec_.modulus));
            if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), n.get_mpz_t()) == 0)
                return std::nullopt;
            return Coefficient(spec_, mpq_class(inv));
        }
        case RingKind::Integers:
            if (v_ == 1 || v_ == -1) return *this;
            return std::nullopt;
    }
    return std::nullopt;
}

Coefficient Coefficient::parse(const RingSpec& spec, const std::string& text) {
    std::string t = text;
    // "2 mod 5" form: the modulus must agree with the target ring.
    auto mod_pos = t.find(" mod ");
    if (mod_pos != std::string::npos) {
        if (!spec.is_modular())
            throw Error("'mod' literal in non-modular ring " + spec.to_string());
        unsigned long m = std::stoul(t.substr(mod_pos + 5));
        if (m != spec.modulus)
            throw Error("modulus mismatch in '" + text + "' for " + spec.to_string());
        t = t.substr(0, mod_pos);
    }
    try {
        mpq_class q(t);
        q.canonicalize();
        if (spec.is_modular() && q.get_den() != 1) {
            // p/q means p * q^{-1} when q is invertible mod n.
            Coefficient den = Coefficient::from_integer(spec, q.get_den());
            auto inv = den.inverse();
            if (!inv)
                throw Error("denominator " + den.to_string() + " is not invertible in " +
                            spec.to_string());
            return Coefficient::from_integer(spec, q.get_num()) * *inv;
        }
        return Coefficient(spec, q);
    } catch (const std::invalid_argument&) {
        throw Error("bad coefficient literal '" + text + "'");
    }
}

std::string Coefficient::to_string() const {
    std::ostringstream os;
    switch (spec_.kind) {
        case RingKind::Rationals:
            os << v_;
            break;
        case RingKind::PrimeField:
        case RingKind::IntegersMod:
            os << v_.get_num() << " mod " << spec_.modulus;
            break;
        case RingKind::Integers:
            os << v_.get_num();
            break;
    }
    return os.str();
}

std::optional<Coefficient> vn_inverse(const Coefficient& x) {
    const RingSpec& spec = x.ring();
    if (x.is_zero()) return Coefficient::zero(spec);
    switch (spec.kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
            return x.inverse();
        case RingKind::IntegersMod: {
            for (unsigned long y = 0; y < spec.modulus; ++y) {
                Coefficient cy = Coefficient::from_integer(spec, mpz_class(y));
                if (x * cy * x == x) return cy;
            }
            return std::nullopt;
        }
        case RingKind::Integers:
            if (x.value() == 1 || x.value() == -1) return x;
            return std::nullopt;
    }
    return std::nullopt;
}

bool is_vn_regular_ring(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
            return true;
        case RingKind::IntegersMod: {
            for (unsigned long v = 0; v < spec.modulus; ++v) {
                if (!vn_inverse(Coefficient::from_integer(spec, mpz_class(v))))
                    return false;
            }
            return true;
        }
        case RingKind::Integers:
            return false;
    }
    return false;
}

} // namespace lpa
