#include <doctest.h>

#include <set>

#include "hermite/rng.hpp"
#include "hermite/tensor_spaces.hpp"

using namespace hermite;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F3 = FieldSpec::prime_field(3);

Partition pt(std::vector<int> v) { return Partition(std::move(v)); }

} // namespace

TEST_CASE("standard bases") {
    SpaceDescriptor sod{Shape::SymOfDivided, 2, 2, Q};
    CHECK(standard_basis(sod) == std::vector<Partition>{pt({0, 0}), pt({1, 0}), pt({1, 1}),
                                                        pt({2, 0}), pt({2, 1}), pt({2, 2})});
    SpaceDescriptor dos{Shape::DividedOfSym, 1, 3, Q};
    CHECK(standard_basis(dos) == std::vector<Partition>{pt({0}), pt({1}), pt({2}), pt({3})});
    SpaceDescriptor ws{Shape::WedgeOfSym, 2, 1, Q};
    auto wedge = standard_basis(ws);
    CHECK(std::set<Partition>(wedge.begin(), wedge.end()) ==
          std::set<Partition>{pt({2, 1}), pt({2, 0}), pt({1, 0})});
    CHECK(wedge.size() == ws.dimension());
}

TEST_CASE("index validation") {
    SpaceDescriptor ws{Shape::WedgeOfSym, 2, 2, Q};
    CHECK_THROWS_AS(validate_index(ws, pt({2, 2})), NotRegularError);
    CHECK_THROWS_AS(validate_index(ws, pt({4, 0})), RangeViolationError);
    CHECK_THROWS_AS(validate_index(ws, pt({2, 1, 0})), ShapeMismatchError);
}

TEST_CASE("wedge normalization") {
    SpaceDescriptor ws{Shape::WedgeOfSym, 2, 2, Q};
    auto r = wedge_normalize({1, 2}, ws);
    REQUIRE(r.has_value());
    CHECK(r->first == FieldElement::from_integer(Q, -1));
    CHECK(r->second == pt({2, 1}));

    SpaceDescriptor ws2{Shape::WedgeOfSym, 2, 2, F2};
    auto r2 = wedge_normalize({1, 2}, ws2);
    REQUIRE(r2.has_value());
    CHECK(r2->first.is_one());

    CHECK(!wedge_normalize({2, 2}, ws).has_value());

    SpaceDescriptor ws3{Shape::WedgeOfSym, 3, 1, Q};
    auto r3 = wedge_normalize({0, 2, 1}, ws3);
    REQUIRE(r3.has_value());
    CHECK(r3->first.is_one()); // cyclic shift is even
    CHECK(r3->second == pt({2, 1, 0}));

    CHECK_THROWS_AS(wedge_normalize({5, 0}, ws), RangeViolationError);
}

TEST_CASE("divided generator coefficients") {
    // identity
    auto c = gl2_on_divided_generator(Gl2::identity(Q), 1, 3);
    CHECK(c == std::vector<FieldElement>{FieldElement::zero(Q), FieldElement::one(Q),
                                         FieldElement::zero(Q), FieldElement::zero(Q)});
    // shear: g.x = x, g.y = x + y on Sym_2; F(2) coefficient is the
    // characteristic-sensitive 2.
    auto cq = gl2_on_divided_generator(Gl2::from_integers(Q, 1, 1, 0, 1), 1, 2);
    CHECK(cq == std::vector<FieldElement>{FieldElement::zero(Q), FieldElement::one(Q),
                                          FieldElement::from_integer(Q, 2)});
    auto c2 = gl2_on_divided_generator(Gl2::from_integers(F2, 1, 1, 0, 1), 1, 2);
    CHECK(c2 == std::vector<FieldElement>{FieldElement::zero(F2), FieldElement::one(F2),
                                          FieldElement::zero(F2)});
    // swap reverses the generator index
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            auto cs = gl2_on_divided_generator(Gl2::from_integers(Q, 0, 1, 1, 0), k, n);
            for (int j = 0; j <= n; ++j)
                CHECK(cs[static_cast<std::size_t>(j)].is_one() == (j == n - k));
        }
    CHECK_THROWS_AS(gl2_on_divided_generator(Gl2::from_integers(Q, 1, 1, 1, 1), 0, 1),
                    SingularMatrixError);
}

TEST_CASE("gl2 action on the defining representation") {
    // SymOfDivided m=1, ell=1 is F^2 itself: F(1) = x maps to a F(1) + c F(0).
    SpaceDescriptor d{Shape::SymOfDivided, 1, 1, Q};
    SparseVector x = SparseVector::basis_vector(d, pt({1}));
    Gl2 g = Gl2::from_integers(Q, 2, 3, 5, 7);
    SparseVector img = gl2_action(g, x);
    CHECK(img.coeff(pt({1})) == FieldElement::from_integer(Q, 2));
    CHECK(img.coeff(pt({0})) == FieldElement::from_integer(Q, 5));
}

TEST_CASE("gl2 action is a group action") {
    Rng rng(2024);
    for (Shape shape : {Shape::DividedOfSym, Shape::SymOfDivided, Shape::WedgeOfSym,
                        Shape::WedgeOfDivided}) {
        SpaceDescriptor d{shape, 2, 2, F3};
        auto basis = standard_basis(d);
        for (int trial = 0; trial < 20; ++trial) {
            SparseVector v(d);
            v.add_term(basis[rng.below(basis.size())],
                       FieldElement::from_integer(F3, 1 + static_cast<std::int64_t>(rng.below(2))));
            auto rand_g = [&] {
                while (true) {
                    Gl2 g{FieldElement::from_integer(F3, static_cast<std::int64_t>(rng.below(3))),
                          FieldElement::from_integer(F3, static_cast<std::int64_t>(rng.below(3))),
                          FieldElement::from_integer(F3, static_cast<std::int64_t>(rng.below(3))),
                          FieldElement::from_integer(F3, static_cast<std::int64_t>(rng.below(3)))};
                    if (!g.det().is_zero()) return g;
                }
            };
            Gl2 g1 = rand_g(), g2 = rand_g();
            CHECK(gl2_action(Gl2::identity(F3), v) == v);
            // direct double application oracle
            CHECK(gl2_action(g1, gl2_action(g2, v)) == gl2_action(g1 * g2, v));
        }
    }
}

TEST_CASE("duality pairing is the delta form") {
    SpaceDescriptor mono{Shape::DividedOfSym, 1, 2, Q}; // Sym^2 F^2 monomials
    SpaceDescriptor divd{Shape::SymOfDivided, 1, 2, Q}; // Sym_2 F^2 generators
    CHECK(duality_pairing(SparseVector::basis_vector(mono, pt({2})),
                          SparseVector::basis_vector(divd, pt({2})))
              .is_one());
    CHECK(duality_pairing(SparseVector::basis_vector(mono, pt({1})),
                          SparseVector::basis_vector(divd, pt({2})))
              .is_zero());
    for (int n = 1; n <= 4; ++n) {
        SpaceDescriptor a{Shape::DividedOfSym, 1, n, F3};
        SpaceDescriptor b{Shape::SymOfDivided, 1, n, F3};
        for (const auto& p : standard_basis(a))
            for (const auto& q : standard_basis(b)) {
                FieldElement v = duality_pairing(SparseVector::basis_vector(a, p),
                                                 SparseVector::basis_vector(b, q));
                CHECK(v.is_one() == (p == q));
            }
    }
    SpaceDescriptor bad{Shape::DividedOfSym, 2, 2, Q};
    CHECK_THROWS_AS(duality_pairing(SparseVector::basis_vector(bad, pt({1, 0})),
                                    SparseVector::basis_vector(bad, pt({1, 0}))),
                    ShapeMismatchError);
}

TEST_CASE("sym-of-divided product merges multisets") {
    SpaceDescriptor d1{Shape::SymOfDivided, 1, 2, Q};
    SparseVector f2v = SparseVector::basis_vector(d1, pt({2}));
    SparseVector f1v = SparseVector::basis_vector(d1, pt({1}));
    SparseVector prod = multiply_sym_of_divided(f2v, f1v);
    CHECK(prod.descriptor().m == 2);
    CHECK(prod.coeff(pt({2, 1})).is_one());
}

TEST_CASE("vector json-facing invariants") {
    SpaceDescriptor d{Shape::SymOfDivided, 2, 2, F3};
    SparseVector v(d);
    v.add_term(pt({2, 1}), FieldElement::from_integer(F3, 2));
    v.add_term(pt({2, 1}), FieldElement::from_integer(F3, 1)); // cancels to zero
    CHECK(v.is_zero()); // no stored zero coefficients
}
