#include "hermite/isomorphisms.hpp"

#include <algorithm>
#include <map>

#include "hermite/parallel.hpp"

namespace hermite {

std::string SpaceRef::to_string() const {
    switch (kind) {
        case Kind::Plethysm: return desc.to_string();
        case Kind::InvariantSym:
            return "Inv(Sym^" + std::to_string(ell * m) + "(F^" + std::to_string(ell) + "x" +
                   std::to_string(ell) + "x2))," + field.to_string();
        case Kind::InvariantDivided:
            return "Inv(Sym_" + std::to_string(ell * m) + "(F^" + std::to_string(ell) + "x" +
                   std::to_string(ell) + "x2))," + field.to_string();
    }
    throw Error("unreachable");
}

SparseVector wronskian(const SparseVector& v) {
    const auto& d = v.descriptor();
    if (d.shape != Shape::DividedOfSym)
        throw ShapeMismatchError("wronskian source must be DividedOfSym, got " + d.to_string());
    SpaceDescriptor target{Shape::WedgeOfSym, d.m, d.ell, d.field};
    SparseVector out(target);
    const int m = d.m;
    for (const auto& [lambda, coeff] : v.terms()) {
        std::vector<int> word = lambda.parts();
        std::sort(word.begin(), word.end());
        do {
            std::vector<int> raw(word.size());
            for (int i = 0; i < m; ++i)
                raw[static_cast<std::size_t>(i)] = word[static_cast<std::size_t>(i)] + (m - 1 - i);
            if (auto norm = wedge_normalize(raw, target))
                out.add_term(norm->second, coeff * norm->first);
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return out;
}

SparseVector hodge(const SparseVector& v) {
    const auto& d = v.descriptor();
    if (d.shape != Shape::WedgeOfSym)
        throw ShapeMismatchError("hodge source must be WedgeOfSym, got " + d.to_string());
    SpaceDescriptor target{Shape::WedgeOfDivided, d.m, d.ell, d.field};
    SparseVector out(target);
    for (const auto& [lambda, coeff] : v.terms())
        out.add_term(tilde_d(lambda, d.m, d.ell), coeff);
    return out;
}

SparseVector dual_wronskian(const SparseVector& v) {
    const auto& d = v.descriptor();
    if (d.shape != Shape::WedgeOfDivided)
        throw ShapeMismatchError("dual wronskian source must be WedgeOfDivided, got " + d.to_string());
    SpaceDescriptor target{Shape::SymOfDivided, d.ell, d.m, d.field};
    SparseVector out(target);
    const int ell = d.ell;
    const int m = d.m;
    for (const auto& [lambda, coeff] : v.terms()) {
        std::vector<int> arranged = lambda.parts();
        std::sort(arranged.begin(), arranged.end());
        do {
            // Each summand carries the sign of the permutation taking the
            // sorted slot tuple to this arrangement. Without it the
            // composite reciprocity map fails to intertwine the group
            // actions and the transpose relation between R(m,ell) and
            // R(ell,m) breaks; the identity term is even, so triangularity
            // and the diagonal are unaffected.
            int inversions = 0;
            for (std::size_t i = 0; i < arranged.size(); ++i)
                for (std::size_t j = i + 1; j < arranged.size(); ++j)
                    if (arranged[i] < arranged[j]) ++inversions;
            std::vector<int> slots(arranged.size());
            bool alive = true;
            for (int i = 0; i < ell && alive; ++i) {
                int x = arranged[static_cast<std::size_t>(i)] - (ell - 1 - i);
                if (x < 0 || x > m) alive = false;
                else slots[static_cast<std::size_t>(i)] = x;
            }
            if (!alive) continue;
            std::sort(slots.begin(), slots.end(), std::greater<int>());
            FieldElement sign = FieldElement::from_integer(d.field, inversions % 2 == 0 ? 1 : -1);
            out.add_term(Partition(std::move(slots)), coeff * sign);
        } while (std::next_permutation(arranged.begin(), arranged.end()));
    }
    return out;
}

namespace {

LinearMapMatrix matrix_of(const SpaceDescriptor& src, const SpaceDescriptor& dst,
                          const std::function<SparseVector(const SparseVector&)>& map) {
    LinearMapMatrix out{SpaceRef::plethysm(src), SpaceRef::plethysm(dst), standard_basis(src),
                        standard_basis(dst), FieldMatrix(src.field, 0, 0)};
    std::map<Partition, std::size_t> row_of;
    for (std::size_t i = 0; i < out.target_basis.size(); ++i) row_of.emplace(out.target_basis[i], i);
    FieldMatrix entries(src.field, out.target_basis.size(), out.source_basis.size());
    parallel_for(out.source_basis.size(), [&](std::size_t j) {
        SparseVector img = map(SparseVector::basis_vector(src, out.source_basis[j]));
        for (const auto& [p, c] : img.terms()) entries.at(row_of.at(p), j) = c;
    });
    out.entries = std::move(entries);
    return out;
}

} // namespace

LinearMapMatrix hermite_r(int m, int ell, const FieldSpec& field) {
    SpaceDescriptor src{Shape::DividedOfSym, m, ell, field};
    SpaceDescriptor dst{Shape::SymOfDivided, ell, m, field};
    return matrix_of(src, dst, [](const SparseVector& v) {
        return dual_wronskian(hodge(wronskian(v)));
    });
}

LinearMapMatrix hodge_matrix(int m, int ell, const FieldSpec& field) {
    SpaceDescriptor src{Shape::WedgeOfSym, m, ell, field};
    SpaceDescriptor dst{Shape::WedgeOfDivided, m, ell, field};
    return matrix_of(src, dst, [](const SparseVector& v) { return hodge(v); });
}

SparseVector k_forward(const Polynomial& p, int ell, int m) {
    const PolyRing& ring = p.ring();
    if (ring.kind != RingKind::PairSlices || ring.ell != ell)
        throw ShapeMismatchError("k_forward expects coordinates of F^{ell x ell x 2}");
    int deg = 0;
    if (!p.is_homogeneous(&deg) || (!p.is_zero() && deg != ell * m))
        throw NotHomogeneousError("k_forward input must be homogeneous of degree ell*m");
    std::map<Partition, FieldElement> coords;
    try {
        coords = phi_decompose(phi_evaluate(p), ell, m);
    } catch (const NotInImageError& e) {
        throw NotInvariantError(std::string("Phi image outside the invariant span: ") + e.what());
    }
    SpaceDescriptor target{Shape::SymOfDivided, m, ell, ring.field};
    SparseVector out(target);
    for (const auto& [lambda, c] : coords) out.add_term(lambda, c);
    return out;
}

Polynomial k_inverse(const SparseVector& v) {
    const auto& d = v.descriptor();
    if (d.shape != Shape::SymOfDivided)
        throw ShapeMismatchError("k_inverse source must be SymOfDivided, got " + d.to_string());
    const int ell = d.ell;
    PolyRing ring{d.field, ell, RingKind::PairSlices};
    std::map<int, Polynomial> generators; // M_ell(k) cache
    auto mgen = [&](int k) -> const Polynomial& {
        auto it = generators.find(k);
        if (it == generators.end())
            it = generators.emplace(k, mixed_determinant(ell, k, d.field)).first;
        return it->second;
    };
    Polynomial out(ring);
    for (const auto& [lambda, c] : v.terms()) {
        Polynomial prod = Polynomial::constant(ring, c);
        for (int i = 0; i < lambda.slots(); ++i) prod = prod * mgen(lambda.part(i));
        out = out + prod;
    }
    return out;
}

std::vector<Polynomial> closure_invariant_basis(int ell, int m, const FieldSpec& field) {
    std::vector<Partition> box;
    for (int k = 0; k <= ell * m; ++k) {
        auto shell = enumerate_box(k, m, ell);
        box.insert(box.end(), shell.begin(), shell.end());
    }
    box = canonical_order(std::move(box));
    PolyRing ring{field, ell, RingKind::PairSlices};
    std::map<int, Polynomial> generators;
    for (int k = 0; k <= ell; ++k) generators.emplace(k, mixed_determinant(ell, k, field));
    std::vector<Polynomial> out(box.size(), Polynomial::zero(ring));
    parallel_for(box.size(), [&](std::size_t i) {
        Polynomial prod = Polynomial::constant(ring, FieldElement::one(field));
        for (int s = 0; s < box[i].slots(); ++s) prod = prod * generators.at(box[i].part(s));
        out[i] = std::move(prod);
    });
    PolyEchelon echelon;
    for (const auto& p : out)
        if (!echelon.insert(p))
            throw Error("closure invariant products are not independent (ell=" +
                        std::to_string(ell) + ", m=" + std::to_string(m) + ")");
    return out;
}

LinearMapMatrix k_matrix(int ell, int m, const FieldSpec& field) {
    auto basis = closure_invariant_basis(ell, m, field);
    SpaceDescriptor dst{Shape::SymOfDivided, m, ell, field};
    LinearMapMatrix out{SpaceRef::invariant_sym(ell, m, field), SpaceRef::plethysm(dst), {},
                        standard_basis(dst), FieldMatrix(field, 0, 0)};
    {
        std::vector<Partition> box;
        for (int k = 0; k <= ell * m; ++k) {
            auto shell = enumerate_box(k, m, ell);
            box.insert(box.end(), shell.begin(), shell.end());
        }
        out.source_basis = canonical_order(std::move(box));
    }
    std::map<Partition, std::size_t> row_of;
    for (std::size_t i = 0; i < out.target_basis.size(); ++i) row_of.emplace(out.target_basis[i], i);
    FieldMatrix entries(field, out.target_basis.size(), basis.size());
    parallel_for(basis.size(), [&](std::size_t j) {
        SparseVector img = k_forward(basis[j], ell, m);
        for (const auto& [p, c] : img.terms()) entries.at(row_of.at(p), j) = c;
    });
    out.entries = std::move(entries);
    return out;
}

LinearMapMatrix iso_i(int m, int ell, const FieldSpec& field) {
    FieldMatrix k_ml = k_matrix(ell, m, field).entries; // K_{m,ell}
    FieldMatrix k_lm = k_matrix(m, ell, field).entries; // K_{ell,m}
    LinearMapMatrix r = hermite_r(m, ell, field);
    LinearMapMatrix out{SpaceRef::invariant_divided(ell, m, field),
                        SpaceRef::invariant_sym(m, ell, field), r.source_basis, r.target_basis,
                        k_lm.inverse() * r.entries * k_ml.transposed().inverse()};
    return out;
}

TriangularityReport check_hermite_triangularity(const LinearMapMatrix& r) {
    TriangularityReport rep;
    std::map<Partition, std::size_t> row_of;
    for (std::size_t i = 0; i < r.target_basis.size(); ++i) row_of.emplace(r.target_basis[i], i);
    const int target_slots = r.target_basis.empty() ? 0 : r.target_basis[0].slots();
    for (std::size_t j = 0; j < r.source_basis.size(); ++j) {
        const Partition& lambda = r.source_basis[j];
        Partition lt = Partition::padded(lambda.transposed(), target_slots);
        std::size_t diag = row_of.at(lt);
        if (!r.entries.at(diag, j).is_one()) {
            rep.detail = "entry at (" + lt.to_string() + ", " + lambda.to_string() + ") is " +
                         r.entries.at(diag, j).to_string() + ", want 1";
            return rep;
        }
        for (std::size_t i = 0; i < r.target_basis.size(); ++i) {
            if (i == diag || r.entries.at(i, j).is_zero()) continue;
            const Partition& mu = r.target_basis[i];
            if (mu.weight() != lt.weight() || dominance(mu, lt) != Dominance::Dominates) {
                rep.detail = "off-diagonal entry at (" + mu.to_string() + ", " +
                             lambda.to_string() + ") does not strictly dominate " + lt.to_string();
                return rep;
            }
        }
    }
    rep.unit_triangular = true;
    return rep;
}

} // namespace hermite
