#include <doctest.h>

#include <cstdlib>

#include "hermite/json_io.hpp"
#include "hermite/verify.hpp"

using namespace hermite;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime_field(3);
} // namespace

TEST_CASE("partition json uses most-significant-first arrays") {
    Partition p({4, 2, 2, 1, 0});
    json j = partition_to_json(p);
    CHECK(j.dump() == "[4,2,2,1,0]");
    CHECK(partition_from_json(j) == p);
}

TEST_CASE("sparse vector json round trip matches the declared schema") {
    SpaceDescriptor d{Shape::SymOfDivided, 2, 2, F3};
    SparseVector v(d);
    v.add_term(Partition({2, 1}), FieldElement::from_integer(F3, 2));
    json j = sparse_vector_to_json(v);
    CHECK(j["space"]["shape"] == "SymOfDivided");
    CHECK(j["space"]["m"] == 2);
    CHECK(j["space"]["ell"] == 2);
    CHECK(j["space"]["field"] == "Fp:3");
    CHECK(j["terms"][0]["index"].dump() == "[2,1]");
    CHECK(j["terms"][0]["coeff"] == "2");
    CHECK(sparse_vector_from_json(j) == v);
}

TEST_CASE("polynomial json carries the fixed variable order") {
    PolyRing ring{FieldSpec::prime_field(2), 2, RingKind::PairSlices};
    Polynomial p(ring);
    Monomial m(8, 0);
    m[0] = 2;
    m[3] = 1;
    p.add_term(m, FieldElement::one(ring.field));
    json j = polynomial_to_json(p);
    CHECK(j["vars"] == "x11,x12,x21,x22,y11,y12,y21,y22");
    CHECK(j["field"] == "Fp:2");
    CHECK(j["terms"][0]["exps"].dump() == "[2,0,0,1,0,0,0,0]");
    CHECK(polynomial_from_json(j) == p);
}

TEST_CASE("rational coefficients serialize as num/den strings") {
    SpaceDescriptor d{Shape::DividedOfSym, 1, 2, Q};
    SparseVector v(d);
    v.add_term(Partition({1}), FieldElement::rational(-5, 6));
    json j = sparse_vector_to_json(v);
    CHECK(j["terms"][0]["coeff"] == "-5/6");
    CHECK(sparse_vector_from_json(j) == v);
}

TEST_CASE("linear map json exposes bases and entries") {
    LinearMapMatrix r = hermite_r(2, 2, Q);
    json j = linear_map_to_json(r);
    CHECK(j["source"]["shape"] == "DividedOfSym");
    CHECK(j["target"]["shape"] == "SymOfDivided");
    CHECK(j["source_basis"].size() == 6);
    CHECK(j["entries"].size() == 6);
    CHECK(j["entries"][0].size() == 6);
}

TEST_CASE("verification results are byte-deterministic under a fixed seed") {
    VerifyOptions opts;
    opts.seed = 42;
    opts.suite = "field";
    auto a = run_verification(opts);
    auto b = run_verification(opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].passed == b[i].passed);
        CHECK(a[i].detail == b[i].detail);
    }
    VerifyOptions other = opts;
    other.suite = "partitions";
    for (const auto& r : run_verification(other)) CHECK(r.suite == "partitions");
}

TEST_CASE("field filter narrows randomized suites") {
    VerifyOptions opts;
    opts.seed = 7;
    opts.suite = "field";
    opts.field_filter = FieldSpec::prime_field(2);
    auto results = run_verification(opts);
    for (const auto& r : results) CHECK(r.passed);
}

TEST_CASE("results do not depend on the thread cap") {
    setenv("HERMITE_LAB_THREADS", "1", 1);
    json serial = linear_map_to_json(hermite_r(3, 2, F3));
    setenv("HERMITE_LAB_THREADS", "4", 1);
    json parallel = linear_map_to_json(hermite_r(3, 2, F3));
    unsetenv("HERMITE_LAB_THREADS");
    CHECK(serial.dump() == parallel.dump());
}
