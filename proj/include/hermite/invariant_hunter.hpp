#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermite/matrix.hpp"
#include "hermite/polyring.hpp"

namespace hermite {

enum class SliceCount { One, Two };

// Elementary transvections I + E_{i,j}, i != j. They generate SL_ell over
// any field, so a joint nullspace against them is the full fixed subspace.
std::vector<FieldMatrix> sl_generators(int ell, std::int64_t p);

// Whole group by closure under multiplication; only sensible for tiny cases
// such as SL_2(F_2) (order 6).
std::vector<FieldMatrix> sl_group_closure(int ell, std::int64_t p);

struct InvariantReport {
    int ell = 0;
    int degree = 0;
    FieldSpec field = FieldSpec::rationals();
    SliceCount slices = SliceCount::One;
    std::size_t dim_fq_invariants = 0;
    std::size_t dim_closure_span = 0;
    std::vector<Polynomial> fixed_basis; // reduced-echelon canonical
    std::vector<Polynomial> extra_basis; // complement of the closure span
};

struct HunterOptions {
    std::size_t monomial_budget = 2'000'000;
};

// Exact fixed subspace of the degree-d component under the transvection
// generator pairs (g, I) and (I, g) over GF(p), by stacked nullspace
// computation on the monomial basis. The closure span is span{det^{d/ell}}
// for one slice and the M(lambda)-product span for two slices (empty when
// ell does not divide d).
InvariantReport fixed_subspace(int ell, int d, std::int64_t p, SliceCount slices,
                               const HunterOptions& options = {});

// True when v is fixed by pair_action under every generator pair.
bool is_fixed_by_generators(const Polynomial& p);

// Parses the A_{i,j}/B_{i,j} polynomial syntax used by the degree listings
// (optional integer coefficients, juxtaposed factors, '+' separated).
Polynomial parse_invariant_polynomial(const PolyRing& ring, const std::string& text);

struct ListedInvariantResult {
    std::string id;
    FieldSpec field = FieldSpec::rationals();
    int degree = 0;
    bool fixed_ok = false;
    bool in_span_expected = false;
    bool in_span_actual = false;
    bool pass = false;
};

struct ListedInvariantsReport {
    std::vector<ListedInvariantResult> per_poly;
    bool all_pass = false;
};

// Checks every fixture polynomial for fixedness under the generator pairs
// and for membership in the determinant-power span, against the expected
// verdicts stored in the fixture. Throws FixtureParseError on bad input.
ListedInvariantsReport verify_listed_invariants(const std::string& fixture_json);
ListedInvariantsReport verify_listed_invariants(); // embedded fixture

// Lifts a degree-d slice-X invariant to the two-slice space via the product
// with the divided tensor of multiplicities (k, d-k); fixedness under the
// generator pairs is re-verified before returning.
Polynomial lift_invariant(const Polynomial& p_inv, int k);

} // namespace hermite
