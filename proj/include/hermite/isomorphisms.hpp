#pragma once

#include <string>
#include <vector>

#include "hermite/matrix.hpp"
#include "hermite/polyring.hpp"
#include "hermite/tensor_spaces.hpp"

namespace hermite {

// Source/target of a linear map: one of the four plethysm/wedge spaces, or a
// tensor-invariant space carried by its generator basis.
struct SpaceRef {
    enum class Kind { Plethysm, InvariantSym, InvariantDivided };

    static SpaceRef plethysm(SpaceDescriptor d) {
        SpaceRef r;
        r.kind = Kind::Plethysm;
        r.desc = std::move(d);
        return r;
    }
    // Invariants of Sym^{ell*m}(F^{ell x ell x 2}), basis {M(lambda)}.
    static SpaceRef invariant_sym(int ell, int m, FieldSpec field) {
        SpaceRef r;
        r.kind = Kind::InvariantSym;
        r.ell = ell;
        r.m = m;
        r.field = std::move(field);
        return r;
    }
    // Invariants of Sym_{ell*m}(F^{ell x ell x 2}), dual basis of {M(lambda)}.
    static SpaceRef invariant_divided(int ell, int m, FieldSpec field) {
        SpaceRef r = invariant_sym(ell, m, std::move(field));
        r.kind = Kind::InvariantDivided;
        return r;
    }

    Kind kind = Kind::Plethysm;
    SpaceDescriptor desc{Shape::DividedOfSym, 0, 0, FieldSpec::rationals()};
    int ell = 0;
    int m = 0;
    FieldSpec field = FieldSpec::rationals();

    std::string to_string() const;
};

// Matrix of a linear map in explicit basis orders: column j is the image of
// source_basis[j] expanded in target_basis. Basis orders are the canonical
// dominance linear extension.
struct LinearMapMatrix {
    SpaceRef source;
    SpaceRef target;
    std::vector<Partition> source_basis;
    std::vector<Partition> target_basis;
    FieldMatrix entries;
};

// Wronskian: basis vector lambda of Sym_m Sym^ell maps to the signed sum of
// wedge-normalized arrangements sigma*lambda + d_m in /\^m Sym^{ell+m-1}.
SparseVector wronskian(const SparseVector& v);

// Hodge: coefficient-1 relabeling of wedge basis vectors along tilde_d.
SparseVector hodge(const SparseVector& v);

// Dual Wronskian: signed full symmetric-group sum of pi*lambda - d_ell with
// out-of-range slots dropped; lands in Sym^ell Sym_m. Coefficients of
// colliding images combine and may vanish in characteristic p. The sgn(pi)
// factor is what makes the composed reciprocity map intertwine the GL_2
// actions and satisfy R(m,ell) = R(ell,m)^T.
SparseVector dual_wronskian(const SparseVector& v);

// Hermite reciprocity W* o D o W as a matrix from Sym_m Sym^ell to
// Sym^ell Sym_m.
LinearMapMatrix hermite_r(int m, int ell, const FieldSpec& field);

// Matrix of the Hodge relabeling (a permutation matrix).
LinearMapMatrix hodge_matrix(int m, int ell, const FieldSpec& field);

// Images of invariants under the Kronecker-plethysm isomorphism: expands
// Phi(p) against the Phi images of the M(lambda) basis and reads the result
// in the F(lambda) basis of Sym^m Sym_ell. Throws NotHomogeneousError or
// NotInvariantError.
SparseVector k_forward(const Polynomial& p, int ell, int m);

// Inverse on basis vectors: F(lambda) -> prod_i M_ell(lambda_i).
Polynomial k_inverse(const SparseVector& v);

// The C(m+ell, ell) products M(lambda), lambda in the m x ell box, in
// canonical order; linear independence is re-verified by a rank computation
// over the monomial supports.
std::vector<Polynomial> closure_invariant_basis(int ell, int m, const FieldSpec& field);

// Matrix of the degree-(ell*m) Kronecker-plethysm isomorphism, columns over
// the closure-invariant basis, rows over the standard basis of
// Sym^m Sym_ell. Computed honestly through Phi, not by formal relabeling.
LinearMapMatrix k_matrix(int ell, int m, const FieldSpec& field);

// Tensor-invariant isomorphism: inv(K_{ell,m}) . R_{m,ell} . inv(K_{m,ell}^T)
// under the delta-duality convention (dual map = matrix transpose).
LinearMapMatrix iso_i(int m, int ell, const FieldSpec& field);

struct TriangularityReport {
    bool unit_triangular = false;
    std::string detail; // first violation, empty when clean
};

// Verifies both halves of the triangularity statement: entry 1 at every
// (transpose(lambda), lambda) position, and every other nonzero entry of
// column lambda at a row strictly dominating transpose(lambda).
TriangularityReport check_hermite_triangularity(const LinearMapMatrix& r);

} // namespace hermite
