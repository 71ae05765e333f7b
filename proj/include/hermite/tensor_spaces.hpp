#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermite/field.hpp"
#include "hermite/partitions.hpp"

namespace hermite {

// The four plethysm/wedge spaces built from F^2. A descriptor carries the
// square parameters (m, ell); each shape derives its own slot count and
// maximal slot value:
//
//   DividedOfSym   Sym_m Sym^ell        m slots, entries <= ell, weakly decr.
//   SymOfDivided   Sym^m Sym_ell        m slots, entries <= ell, weakly decr.
//   WedgeOfSym     /\^m Sym^{ell+m-1}   m slots, entries <= ell+m-1, strictly decr.
//   WedgeOfDivided /\^ell Sym_{ell+m-1} ell slots, entries <= ell+m-1, strictly decr.
//
// A slot value s stands for the monomial x^s y^{n-s} when the inner power is
// Sym^n, and for the divided generator F(s) (the orbit sum of the tensor word
// with s copies of x and n-s copies of y) when it is Sym_n, where n is the
// inner degree max_entry().
enum class Shape { DividedOfSym, SymOfDivided, WedgeOfSym, WedgeOfDivided };

std::string shape_name(Shape s);
Shape shape_from_name(const std::string& name);

struct SpaceDescriptor {
    Shape shape;
    int m = 0;
    int ell = 0;
    FieldSpec field = FieldSpec::rationals();

    int slot_count() const;
    int max_entry() const; // inner symmetric/divided power degree
    bool is_wedge() const;
    // Inner power uses monomials (Sym^n) or divided generators (Sym_n).
    bool inner_is_sym() const { return shape == Shape::DividedOfSym || shape == Shape::WedgeOfSym; }
    std::size_t dimension() const;

    bool operator==(const SpaceDescriptor& o) const = default;
    std::string to_string() const;
};

// Index into the standard basis of a space: an m-slot (or ell-slot)
// partition, strictly decreasing for the wedge shapes.
struct BasisIndex {
    SpaceDescriptor descriptor;
    Partition parts;
};

// Throws unless parts is a valid index for the descriptor.
void validate_index(const SpaceDescriptor& d, const Partition& parts);

// All valid indices in the canonical order (ascending weight, dominance
// linear extension within each weight).
std::vector<Partition> standard_basis(const SpaceDescriptor& d);

// Element of one of the four spaces: finite map from basis partitions to
// nonzero coefficients. Immutable value semantics; all operations are pure.
class SparseVector {
public:
    explicit SparseVector(SpaceDescriptor d) : desc_(std::move(d)) {}
    static SparseVector basis_vector(const SpaceDescriptor& d, const Partition& p);

    const SpaceDescriptor& descriptor() const { return desc_; }
    const std::map<Partition, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const Partition& p) const;
    // Adds c to the coefficient of p, dropping the term if it cancels.
    void add_term(const Partition& p, const FieldElement& c);

    SparseVector operator+(const SparseVector& o) const;
    SparseVector operator*(const FieldElement& c) const;
    bool operator==(const SparseVector& o) const;

    std::vector<Partition> support() const;

private:
    SpaceDescriptor desc_;
    std::map<Partition, FieldElement> terms_;
};

// Product Sym^a Sym_n x Sym^b Sym_n -> Sym^{a+b} Sym_n: multiset union of
// the slot values on basis vectors, extended bilinearly.
SparseVector multiply_sym_of_divided(const SparseVector& a, const SparseVector& b);

// 2x2 matrix over a field; the action convention is g.x = a x + c y,
// g.y = b x + d y (columns give the images of the basis vectors).
struct Gl2 {
    FieldElement a, b, c, d;

    static Gl2 from_integers(const FieldSpec& spec, std::int64_t a, std::int64_t b,
                             std::int64_t c, std::int64_t d);
    static Gl2 identity(const FieldSpec& spec);
    FieldElement det() const { return a * d - b * c; }
    Gl2 operator*(const Gl2& o) const; // matrix product
    const FieldSpec& spec() const { return a.spec(); }
};

// Sorts a raw slot tuple strictly decreasing. Returns the sign of the
// sorting permutation and the sorted partition, or nullopt when two slots
// collide (the wedge kills the term). Out-of-range values throw.
std::optional<std::pair<FieldElement, Partition>>
wedge_normalize(const std::vector<int>& raw_slots, const SpaceDescriptor& d);

// Coefficients c_{k,j} of g.F(k) = sum_j c_{k,j} F(j) in Sym_n F^2, read off
// the ordered tensor words after full expansion; no divisions, so the result
// is correct in every characteristic.
std::vector<FieldElement> gl2_on_divided_generator(const Gl2& g, int k, int n);

// Coefficients of g.(x^k y^{n-k}) in the monomial basis of Sym^n F^2.
std::vector<FieldElement> gl2_on_sym_monomial(const Gl2& g, int k, int n);

// GL_2(F) action on any of the four shapes.
SparseVector gl2_action(const Gl2& g, const SparseVector& v);

// Bilinear pairing of dual standard bases, <lambda, mu> = delta_{lambda,mu}.
// The spaces must be dual partners: {DividedOfSym, SymOfDivided} with equal
// (m, ell), or {WedgeOfSym, WedgeOfDivided} with matching slot structure.
FieldElement duality_pairing(const SparseVector& f, const SparseVector& t);

} // namespace hermite
