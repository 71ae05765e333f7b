#include "hermite/field.hpp"

#include <charconv>

namespace hermite {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
        static_cast<unsigned __int128>(p));
}

// Extended Euclid; a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

} // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw NotPrimeError("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    constexpr std::string_view prefix = "Fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::int64_t p = 0;
        auto body = text.substr(prefix.size());
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size()) return prime_field(p);
    }
    throw ParseError("bad field spec '" + std::string(text) + "', expected Q or Fp:<prime>");
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(modulus_);
}

FieldElement FieldElement::from_integer(const FieldSpec& spec, std::int64_t n) {
    FieldElement e(spec);
    if (spec.kind() == FieldKind::PrimeField)
        e.residue_ = mod_reduce(n, spec.modulus());
    else
        e.rat_ = mpq_class(static_cast<long>(n));
    return e;
}

FieldElement FieldElement::from_integer(const FieldSpec& spec, const mpz_class& n) {
    FieldElement e(spec);
    if (spec.kind() == FieldKind::PrimeField) {
        mpz_class r = n % spec.modulus();
        e.residue_ = mod_reduce(r.get_si(), spec.modulus());
    } else {
        e.rat_ = mpq_class(n);
    }
    return e;
}

FieldElement FieldElement::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    FieldElement e(FieldSpec::rationals());
    e.rat_ = mpq_class(num, den);
    e.rat_.canonicalize();
    return e;
}

FieldElement FieldElement::parse(const FieldSpec& spec, std::string_view text) {
    std::string s(text);
    if (spec.kind() == FieldKind::PrimeField) {
        try {
            mpz_class n(s);
            return from_integer(spec, n);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad prime-field literal '" + s + "'");
        }
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational(mpz_class(s), 1);
        return rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

void FieldElement::check_same_spec(const FieldElement& o) const {
    if (!(spec_ == o.spec_))
        throw SpecMismatchError("field mismatch: " + spec_.to_string() + " vs " + o.spec_.to_string());
}

bool FieldElement::is_zero() const {
    return spec_.kind() == FieldKind::PrimeField ? residue_ == 0 : rat_ == 0;
}

bool FieldElement::is_one() const {
    return spec_.kind() == FieldKind::PrimeField ? residue_ == 1 : rat_ == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_spec(o);
    FieldElement r(spec_);
    if (spec_.kind() == FieldKind::PrimeField)
        r.residue_ = mod_reduce(residue_ + o.residue_, spec_.modulus());
    else
        r.rat_ = rat_ + o.rat_;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_spec(o);
    FieldElement r(spec_);
    if (spec_.kind() == FieldKind::PrimeField)
        r.residue_ = mod_reduce(residue_ - o.residue_, spec_.modulus());
    else
        r.rat_ = rat_ - o.rat_;
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_spec(o);
    FieldElement r(spec_);
    if (spec_.kind() == FieldKind::PrimeField)
        r.residue_ = mod_mul(residue_, o.residue_, spec_.modulus());
    else
        r.rat_ = rat_ * o.rat_;
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r(spec_);
    if (spec_.kind() == FieldKind::PrimeField)
        r.residue_ = mod_reduce(-residue_, spec_.modulus());
    else
        r.rat_ = -rat_;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in " + spec_.to_string());
    FieldElement r(spec_);
    if (spec_.kind() == FieldKind::PrimeField)
        r.residue_ = mod_inverse(residue_, spec_.modulus());
    else
        r.rat_ = 1 / rat_;
    return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement acc = one(spec_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!(spec_ == o.spec_)) return false;
    return spec_.kind() == FieldKind::PrimeField ? residue_ == o.residue_ : rat_ == o.rat_;
}

std::string FieldElement::to_string() const {
    if (spec_.kind() == FieldKind::PrimeField) return std::to_string(residue_);
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

} // namespace hermite
