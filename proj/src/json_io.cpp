#include "hermite/json_io.hpp"

namespace hermite {

json partition_to_json(const Partition& p) {
    json arr = json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

json descriptor_to_json(const SpaceDescriptor& d) {
    return json{{"shape", shape_name(d.shape)},
                {"m", d.m},
                {"ell", d.ell},
                {"field", d.field.to_string()}};
}

SpaceDescriptor descriptor_from_json(const json& j) {
    return SpaceDescriptor{shape_from_name(j.at("shape").get<std::string>()), j.at("m").get<int>(),
                           j.at("ell").get<int>(),
                           FieldSpec::parse(j.at("field").get<std::string>())};
}

json sparse_vector_to_json(const SparseVector& v) {
    json terms = json::array();
    for (const auto& [p, c] : v.terms())
        terms.push_back(json{{"index", partition_to_json(p)}, {"coeff", c.to_string()}});
    return json{{"space", descriptor_to_json(v.descriptor())}, {"terms", terms}};
}

SparseVector sparse_vector_from_json(const json& j) {
    SpaceDescriptor d = descriptor_from_json(j.at("space"));
    SparseVector v(d);
    for (const auto& t : j.at("terms")) {
        Partition p = partition_from_json(t.at("index"));
        validate_index(d, p);
        v.add_term(p, FieldElement::parse(d.field, t.at("coeff").get<std::string>()));
    }
    return v;
}

json polynomial_to_json(const Polynomial& p) {
    const PolyRing& ring = p.ring();
    std::string vars;
    for (int v = 0; v < ring.var_count(); ++v) {
        if (v) vars += ",";
        vars += ring.var_name(v);
    }
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (auto e : m) exps.push_back(static_cast<int>(e));
        terms.push_back(json{{"exps", exps}, {"coeff", c.to_string()}});
    }
    return json{{"field", ring.field.to_string()},
                {"ell", ring.ell},
                {"kind", ring.kind == RingKind::PairSlices ? "pair_slices" : "phi_vars"},
                {"vars", vars},
                {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
    PolyRing ring{FieldSpec::parse(j.at("field").get<std::string>()), j.at("ell").get<int>(),
                  j.value("kind", "pair_slices") == std::string("phi_vars") ? RingKind::PhiVars
                                                                            : RingKind::PairSlices};
    Polynomial p(ring);
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& e : t.at("exps")) m.push_back(static_cast<std::uint16_t>(e.get<int>()));
        p.add_term(m, FieldElement::parse(ring.field, t.at("coeff").get<std::string>()));
    }
    return p;
}

json space_ref_to_json(const SpaceRef& r) {
    switch (r.kind) {
        case SpaceRef::Kind::Plethysm: return descriptor_to_json(r.desc);
        case SpaceRef::Kind::InvariantSym:
            return json{{"kind", "invariant_sym"}, {"ell", r.ell}, {"m", r.m},
                        {"field", r.field.to_string()}};
        case SpaceRef::Kind::InvariantDivided:
            return json{{"kind", "invariant_divided"}, {"ell", r.ell}, {"m", r.m},
                        {"field", r.field.to_string()}};
    }
    throw Error("unreachable");
}

json linear_map_to_json(const LinearMapMatrix& m) {
    json src_basis = json::array(), dst_basis = json::array();
    for (const auto& p : m.source_basis) src_basis.push_back(partition_to_json(p));
    for (const auto& p : m.target_basis) dst_basis.push_back(partition_to_json(p));
    json rows = json::array();
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.entries.cols(); ++j)
            row.push_back(m.entries.at(i, j).to_string());
        rows.push_back(row);
    }
    return json{{"source", space_ref_to_json(m.source)},
                {"target", space_ref_to_json(m.target)},
                {"source_basis", src_basis},
                {"target_basis", dst_basis},
                {"entries", rows}};
}

json invariant_report_to_json(const InvariantReport& r) {
    json fixed = json::array(), extra = json::array();
    for (const auto& p : r.fixed_basis) fixed.push_back(polynomial_to_json(p));
    for (const auto& p : r.extra_basis) extra.push_back(polynomial_to_json(p));
    return json{{"ell", r.ell},
                {"degree", r.degree},
                {"field", r.field.to_string()},
                {"slices", r.slices == SliceCount::One ? "one" : "two"},
                {"dim_fq_invariants", r.dim_fq_invariants},
                {"dim_closure_span", r.dim_closure_span},
                {"fixed_basis", fixed},
                {"extra_basis", extra}};
}

json listed_invariants_to_json(const ListedInvariantsReport& r) {
    json rows = json::array();
    for (const auto& e : r.per_poly)
        rows.push_back(json{{"id", e.id},
                            {"field", e.field.to_string()},
                            {"degree", e.degree},
                            {"fixed", e.fixed_ok},
                            {"in_closure_span", e.in_span_actual},
                            {"expected_in_closure_span", e.in_span_expected},
                            {"pass", e.pass}});
    return json{{"polynomials", rows}, {"all_pass", r.all_pass}};
}

} // namespace hermite
