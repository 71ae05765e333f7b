#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hermite/field.hpp"
#include "hermite/matrix.hpp"
#include "hermite/partitions.hpp"

namespace hermite {

// Variable universe of a polynomial.
//
// PairSlices: the 2*ell^2 coordinates of F^{ell x ell x 2} in the fixed order
//   x11, x12, ..., x(ell)(ell), y11, ..., y(ell)(ell) (row-major per slice).
//   Slice 0 (x) is the first matrix, slice 1 (y) the second.
// PhiVars: the ell+1 variables nu, mu1, ..., mu(ell) of the evaluation map.
enum class RingKind { PairSlices, PhiVars };

struct PolyRing {
    FieldSpec field = FieldSpec::rationals();
    int ell = 1;
    RingKind kind = RingKind::PairSlices;

    int var_count() const {
        return kind == RingKind::PairSlices ? 2 * ell * ell : ell + 1;
    }
    // slice in {0, 1}; i, j are 1-based matrix positions.
    int var_index(int slice, int i, int j) const;
    int nu_index() const { return 0; }
    int mu_index(int i) const { return i; } // 1-based
    std::string var_name(int v) const;

    bool operator==(const PolyRing& o) const = default;
};

// Dense per-monomial exponent vector, length PolyRing::var_count().
using Monomial = std::vector<std::uint16_t>;

int monomial_degree(const Monomial& m);

// Sparse exact multivariate polynomial. Zero coefficients are never stored;
// term order is the lexicographic order on exponent vectors, which makes all
// serialization deterministic. Values are immutable in spirit: operations
// return new polynomials.
class Polynomial {
public:
    explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const PolyRing& ring) { return Polynomial(ring); }
    static Polynomial constant(const PolyRing& ring, const FieldElement& c);
    static Polynomial variable(const PolyRing& ring, int var);

    const PolyRing& ring() const { return ring_; }
    const std::map<Monomial, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const FieldElement& c);
    FieldElement coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial pow(int e) const;
    bool operator==(const Polynomial& o) const;

    int degree() const; // max term degree, -1 for zero
    bool is_homogeneous(int* deg = nullptr) const;

    // Replaces every variable v by images[v]; the images must share a ring.
    Polynomial substituted(const std::vector<Polynomial>& images) const;

    std::string to_string() const;

private:
    PolyRing ring_;
    std::map<Monomial, FieldElement> terms_;
};

enum class Slice { X = 0, Y = 1 };

// Determinant of the slice-X or slice-Y matrix of coordinates, as an element
// of Sym^ell; signs are mapped through the field (all +1 in characteristic 2).
Polynomial determinant(int ell, Slice slice, const FieldSpec& field);

// The product of a degree-d slice-X polynomial with the divided tensor
// [z1^(mu1) z2^(mu2)]_sym, mu1+mu2 = d: each canonical variable word of f is
// summed over all distinct slice arrangements, so coefficients acquire the
// arrangement multiplicities demanded by equivariance (they may vanish mod p).
Polynomial boxtimes(const Polynomial& f, int mu1, int mu2);

// det_ell boxtimes F(k): equivalently the sum over k-subsets S of rows of the
// determinant with rows in S from slice X and the rest from slice Y.
Polynomial mixed_determinant(int ell, int k, const FieldSpec& field);

// Action of (g1, g2, id) on the coordinates: v_{i,j} picks up g1 on the row
// index and g2 on the column index, slices preserved.
Polynomial pair_action(const FieldMatrix& g1, const FieldMatrix& g2, const Polynomial& p);

// Action of (id, id, g): x_{i,j} -> a x_{i,j} + c y_{i,j},
// y_{i,j} -> b x_{i,j} + d y_{i,j} for g = [[a,b],[c,d]].
Polynomial gl2_poly_action(const FieldElement& a, const FieldElement& b,
                           const FieldElement& c, const FieldElement& d,
                           const Polynomial& p);

// Evaluation p(nu*I, Diag(mu1..mu_ell)): x_{i,i} -> nu, y_{i,i} -> mu_i,
// off-diagonal coordinates -> 0. Lands in the PhiVars ring.
Polynomial phi_evaluate(const Polynomial& p);

// Elementary symmetric polynomial e_k(mu1..mu_ell) in the PhiVars ring.
Polynomial elementary_symmetric(const PolyRing& phi_ring, int k);

// Phi image of the invariant-basis element M(lambda):
// prod_i nu^{lambda_i} e_{ell - lambda_i}(mu).
Polynomial phi_of_m_product(const PolyRing& phi_ring, const Partition& lambda);

// Unique expansion of a homogeneous degree ell*m PhiVars polynomial in the
// basis {phi_of_m_product(lambda) : lambda in the m x ell box}, by exact
// elimination over the monomial supports. Throws NotHomogeneousError or
// NotInImageError.
std::map<Partition, FieldElement> phi_decompose(const Polynomial& q, int ell, int m);

// Incremental sparse row echelon over the monomial basis, used for rank and
// span-membership questions about polynomial families.
class PolyEchelon {
public:
    // Fully reduces p against the rows held so far.
    Polynomial reduce(Polynomial p) const;
    // Reduces p and, if a nonzero remainder survives, inserts it (normalized
    // to leading coefficient 1). Returns true when the rank grew.
    bool insert(const Polynomial& p);
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Polynomial>& rows() const { return rows_; }

private:
    std::vector<Polynomial> rows_; // each with distinct leading monomial
};

} // namespace hermite
