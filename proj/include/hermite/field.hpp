#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hermite/errors.hpp"

namespace hermite {

enum class FieldKind { Rationals, PrimeField };

// Identifies the coefficient field: the rationals, or GF(p) for a prime p.
// Textual form ("Q", "Fp:2", ...) is shared by the CLI and all JSON output.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::int64_t p);
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    std::int64_t modulus() const { return modulus_; }
    // 0 for the rationals, p for GF(p).
    std::int64_t characteristic() const { return modulus_; }

    bool operator==(const FieldSpec& o) const = default;
    std::string to_string() const;

private:
    FieldSpec(FieldKind k, std::int64_t p) : kind_(k), modulus_(p) {}
    FieldKind kind_;
    std::int64_t modulus_;
};

// Exact scalar in the field described by its FieldSpec. Rational values are
// arbitrary-precision reduced fractions with positive denominator; prime
// field values are canonical residues in [0, p). Mixing specs in arithmetic
// throws SpecMismatchError; there is no implicit coercion.
//
// Values are immutable after construction and safe to share across threads.
class FieldElement {
public:
    // Rational zero; useful as a placeholder before assignment.
    FieldElement() : spec_(FieldSpec::rationals()) {}

    static FieldElement zero(const FieldSpec& spec) { return from_integer(spec, 0); }
    static FieldElement one(const FieldSpec& spec) { return from_integer(spec, 1); }
    static FieldElement from_integer(const FieldSpec& spec, std::int64_t n);
    static FieldElement from_integer(const FieldSpec& spec, const mpz_class& n);
    // Rationals only, arbitrary fraction (reduced on construction).
    static FieldElement rational(const mpz_class& num, const mpz_class& den);
    static FieldElement parse(const FieldSpec& spec, std::string_view text);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const; // throws DivisionByZeroError on 0
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
    FieldElement pow(std::uint64_t e) const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // "num/den" for rationals (always with the slash), decimal residue for GF(p).
    std::string to_string() const;

    // Prime field residue in [0, p).
    std::int64_t residue() const { return residue_; }
    const mpq_class& rational_value() const { return rat_; }

private:
    explicit FieldElement(const FieldSpec& spec) : spec_(spec) {}
    void check_same_spec(const FieldElement& o) const;

    FieldSpec spec_;
    std::int64_t residue_ = 0; // PrimeField
    mpq_class rat_;            // Rationals
};

} // namespace hermite
