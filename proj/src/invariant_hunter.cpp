#include "hermite/invariant_hunter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "hermite/isomorphisms.hpp"
#include "hermite/parallel.hpp"
#include "hermite/listed_invariants_fixture.hpp"

namespace hermite {

std::vector<FieldMatrix> sl_generators(int ell, std::int64_t p) {
    if (ell < 2) throw OutOfRangeError("transvections need ell >= 2");
    FieldSpec spec = FieldSpec::prime_field(p);
    std::vector<FieldMatrix> gens;
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            if (i == j) continue;
            FieldMatrix g = FieldMatrix::identity(spec, static_cast<std::size_t>(ell));
            g.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = FieldElement::one(spec);
            gens.push_back(std::move(g));
        }
    return gens;
}

std::vector<FieldMatrix> sl_group_closure(int ell, std::int64_t p) {
    auto gens = sl_generators(ell, p);
    auto key = [ell](const FieldMatrix& m) {
        std::vector<std::int64_t> k;
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j)
                k.push_back(m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).residue());
        return k;
    };
    std::map<std::vector<std::int64_t>, FieldMatrix> seen;
    std::vector<FieldMatrix> frontier = {FieldMatrix::identity(gens[0].spec(), static_cast<std::size_t>(ell))};
    seen.emplace(key(frontier[0]), frontier[0]);
    while (!frontier.empty()) {
        std::vector<FieldMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                FieldMatrix prod = m * g;
                auto k = key(prod);
                if (seen.emplace(k, prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    std::vector<FieldMatrix> out;
    out.reserve(seen.size());
    for (auto& [k, m] : seen) out.push_back(std::move(m));
    return out;
}

namespace {

// Dense matrix over GF(p) with word-sized entries; pivoting picks the first
// nonzero row, so elimination output is deterministic.
// TODO: bit-pack rows for p=2 if degree-8 two-slice searches become routine.
struct GfpMatrix {
    std::uint64_t p;
    std::size_t rows, cols;
    std::vector<std::uint64_t> a;

    GfpMatrix(std::uint64_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
    std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) {
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(x);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
    }

    // In-place reduced row echelon; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t piv = rows;
            for (std::size_t r = row; r < rows; ++r)
                if (at(r, col) != 0) { piv = r; break; }
            if (piv == rows) continue;
            if (piv != row)
                for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(row, j));
            std::uint64_t inv = inv_mod(at(row, col), p);
            for (std::size_t j = col; j < cols; ++j) at(row, j) = at(row, j) * inv % p;
            for (std::size_t r = 0; r < rows; ++r) {
                std::uint64_t f = at(r, col);
                if (r == row || f == 0) continue;
                std::uint64_t neg = p - f;
                for (std::size_t j = col; j < cols; ++j)
                    at(r, j) = (at(r, j) + neg * at(row, j)) % p;
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    // Right nullspace, rows of the result canonicalized by a second rref.
    std::vector<std::vector<std::uint64_t>> nullspace() {
        std::vector<std::size_t> pivots = rref();
        std::vector<bool> is_pivot(cols, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<std::uint64_t>> basis;
        for (std::size_t free = 0; free < cols; ++free) {
            if (is_pivot[free]) continue;
            std::vector<std::uint64_t> v(cols, 0);
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                std::uint64_t c = at(r, free);
                if (c != 0) v[pivots[r]] = p - c;
            }
            basis.push_back(std::move(v));
        }
        if (basis.empty()) return basis;
        GfpMatrix canon(p, basis.size(), cols);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) canon.at(i, j) = basis[i][j];
        canon.rref();
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) basis[i][j] = canon.at(i, j);
        return basis;
    }
};

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        r /= static_cast<unsigned long>(i);
    }
    return r;
}

// Degree-d monomials over the first nvars variables of the ring, in
// lexicographic-descending exponent order.
void enumerate_monomials(int nvars, int total_vars, int d, std::vector<Monomial>& out) {
    Monomial cur(static_cast<std::size_t>(total_vars), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nvars - 1) {
            cur[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(remaining);
            out.push_back(cur);
            cur[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
            rec(var + 1, remaining - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(0, d);
}

std::vector<Polynomial> rows_to_polynomials(const std::vector<std::vector<std::uint64_t>>& rows,
                                            const std::vector<Monomial>& monomials,
                                            const PolyRing& ring) {
    std::vector<Polynomial> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        Polynomial p(ring);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                p.add_term(monomials[j],
                           FieldElement::from_integer(ring.field, static_cast<std::int64_t>(row[j])));
        out.push_back(std::move(p));
    }
    return out;
}

// Fully inter-reduced monic echelon rows, leading monomials descending.
std::vector<Polynomial> canonical_echelon(std::vector<Polynomial> polys) {
    PolyEchelon ech;
    for (const auto& p : polys) ech.insert(p);
    std::vector<Polynomial> rows = ech.rows();
    std::sort(rows.begin(), rows.end(), [](const Polynomial& a, const Polynomial& b) {
        return b.terms().rbegin()->first < a.terms().rbegin()->first;
    });
    // back-substitution
    for (std::size_t i = rows.size(); i-- > 0;) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const auto& lead = rows[j].terms().rbegin()->first;
            FieldElement c = rows[i].coeff(lead);
            if (!c.is_zero()) rows[i] = rows[i] - rows[j].scaled(c);
        }
    }
    return rows;
}

} // namespace

bool is_fixed_by_generators(const Polynomial& p) {
    const PolyRing& ring = p.ring();
    if (ring.field.kind() != FieldKind::PrimeField)
        throw SpecMismatchError("generator fixedness check needs a prime field");
    auto gens = sl_generators(ring.ell, ring.field.modulus());
    FieldMatrix id = FieldMatrix::identity(ring.field, static_cast<std::size_t>(ring.ell));
    for (const auto& g : gens) {
        if (!(pair_action(g, id, p) == p)) return false;
        if (!(pair_action(id, g, p) == p)) return false;
    }
    return true;
}

InvariantReport fixed_subspace(int ell, int d, std::int64_t p, SliceCount slices,
                               const HunterOptions& options) {
    FieldSpec field = FieldSpec::prime_field(p);
    PolyRing ring{field, ell, RingKind::PairSlices};
    const int nvars = slices == SliceCount::One ? ell * ell : 2 * ell * ell;

    mpz_class count = binomial(static_cast<std::uint64_t>(nvars + d - 1), static_cast<std::uint64_t>(d));
    if (count > static_cast<unsigned long>(options.monomial_budget))
        throw BudgetExceededError("monomial space of dimension " + count.get_str() +
                                  " exceeds budget " + std::to_string(options.monomial_budget));

    std::vector<Monomial> monomials;
    enumerate_monomials(nvars, ring.var_count(), d, monomials);
    const std::size_t n = monomials.size();
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(monomials[i], i);

    auto gens = sl_generators(ell, p);
    FieldMatrix id = FieldMatrix::identity(field, static_cast<std::size_t>(ell));
    const std::size_t blocks = gens.size() * 2;
    GfpMatrix constraints(static_cast<std::uint64_t>(p), blocks * n, n);
    for (std::size_t b = 0; b < blocks; ++b) {
        const FieldMatrix& g1 = b % 2 == 0 ? gens[b / 2] : id;
        const FieldMatrix& g2 = b % 2 == 0 ? id : gens[b / 2];
        parallel_for(n, [&](std::size_t j) {
            Polynomial mono(ring);
            mono.add_term(monomials[j], FieldElement::one(field));
            Polynomial img = pair_action(g1, g2, mono);
            for (const auto& [mon, c] : img.terms())
                constraints.at(b * n + index.at(mon), j) = static_cast<std::uint64_t>(c.residue());
            auto& diag = constraints.at(b * n + j, j);
            diag = (diag + static_cast<std::uint64_t>(p) - 1) % static_cast<std::uint64_t>(p);
        });
    }

    InvariantReport report;
    report.ell = ell;
    report.degree = d;
    report.field = field;
    report.slices = slices;
    report.fixed_basis = rows_to_polynomials(constraints.nullspace(), monomials, ring);
    report.dim_fq_invariants = report.fixed_basis.size();

    std::vector<Polynomial> closure;
    if (d % ell == 0) {
        if (slices == SliceCount::One)
            closure.push_back(determinant(ell, Slice::X, field).pow(d / ell));
        else
            closure = closure_invariant_basis(ell, d / ell, field);
    }
    PolyEchelon closure_echelon;
    for (const auto& c : closure) closure_echelon.insert(c);
    report.dim_closure_span = closure_echelon.rank();

    std::vector<Polynomial> extras;
    for (const auto& v : report.fixed_basis) {
        Polynomial rem = closure_echelon.reduce(v);
        if (!rem.is_zero()) extras.push_back(std::move(rem));
    }
    report.extra_basis = canonical_echelon(std::move(extras));

    for (const auto& v : report.fixed_basis)
        if (!is_fixed_by_generators(v))
            throw Error("post-hoc fixedness verification failed");
    for (const auto& v : report.extra_basis)
        if (!is_fixed_by_generators(v))
            throw Error("post-hoc fixedness verification failed for a complement vector");
    return report;
}

Polynomial parse_invariant_polynomial(const PolyRing& ring, const std::string& text) {
    Polynomial out(ring);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    auto parse_int = [&]() -> int {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw FixtureParseError("expected integer at offset " + std::to_string(i) +
                                                " in '" + text + "'");
        return std::stoi(text.substr(start, i - start));
    };
    while (true) {
        skip_ws();
        std::int64_t coeff = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = parse_int();
        Monomial mono(static_cast<std::size_t>(ring.var_count()), 0);
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (i >= text.size() || (text[i] != 'A' && text[i] != 'B')) break;
            int slice = text[i] == 'A' ? 0 : 1;
            ++i;
            if (i + 1 >= text.size() || text[i] != '_' || text[i + 1] != '{')
                throw FixtureParseError("expected _{ after variable letter in '" + text + "'");
            i += 2;
            int r = parse_int();
            if (i >= text.size() || text[i] != ',') throw FixtureParseError("expected , in index");
            ++i;
            int c = parse_int();
            if (i >= text.size() || text[i] != '}') throw FixtureParseError("expected } in index");
            ++i;
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = parse_int();
            }
            auto v = static_cast<std::size_t>(ring.var_index(slice, r, c));
            mono[v] = static_cast<std::uint16_t>(mono[v] + e);
            any_factor = true;
        }
        if (!any_factor) throw FixtureParseError("empty term in '" + text + "'");
        out.add_term(mono, FieldElement::from_integer(ring.field, coeff));
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw FixtureParseError("expected + at offset " + std::to_string(i) +
                                                    " in '" + text + "'");
        ++i;
    }
    return out;
}

ListedInvariantsReport verify_listed_invariants(const std::string& fixture_json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(fixture_json);
    } catch (const nlohmann::json::exception& e) {
        throw FixtureParseError(std::string("fixture is not valid JSON: ") + e.what());
    }
    if (!doc.contains("polynomials") || !doc["polynomials"].is_array())
        throw FixtureParseError("fixture lacks a 'polynomials' array");

    ListedInvariantsReport report;
    report.all_pass = true;
    std::map<std::pair<std::int64_t, int>, PolyEchelon> span_cache;
    for (const auto& entry : doc["polynomials"]) {
        ListedInvariantResult res;
        res.id = entry.at("id").get<std::string>();
        res.field = FieldSpec::parse(entry.at("field").get<std::string>());
        res.degree = entry.at("degree").get<int>();
        res.in_span_expected = entry.at("in_closure_span").get<bool>();
        PolyRing ring{res.field, 2, RingKind::PairSlices};
        Polynomial p = parse_invariant_polynomial(ring, entry.at("text").get<std::string>());
        int deg = 0;
        if (!p.is_homogeneous(&deg) || deg != res.degree)
            throw FixtureParseError("fixture polynomial " + res.id + " is not homogeneous of its degree");
        res.fixed_ok = is_fixed_by_generators(p);

        auto key = std::make_pair(res.field.modulus(), res.degree);
        auto it = span_cache.find(key);
        if (it == span_cache.end()) {
            PolyEchelon ech;
            if (res.degree % 2 == 0)
                ech.insert(determinant(2, Slice::X, res.field).pow(res.degree / 2));
            it = span_cache.emplace(key, std::move(ech)).first;
        }
        res.in_span_actual = it->second.contains(p);
        res.pass = res.fixed_ok && res.in_span_actual == res.in_span_expected;
        report.all_pass = report.all_pass && res.pass;
        report.per_poly.push_back(std::move(res));
    }
    return report;
}

ListedInvariantsReport verify_listed_invariants() {
    return verify_listed_invariants(kListedInvariantsJson);
}

Polynomial lift_invariant(const Polynomial& p_inv, int k) {
    int d = 0;
    if (!p_inv.is_homogeneous(&d) || p_inv.is_zero())
        throw DegreeMismatchError("lift needs a nonzero homogeneous polynomial");
    if (k < 0 || k > d) throw DegreeMismatchError("lift multiplicity outside [0, degree]");
    Polynomial lifted = boxtimes(p_inv, k, d - k);
    if (p_inv.ring().field.kind() == FieldKind::PrimeField && !is_fixed_by_generators(lifted))
        throw NotInvariantError("lifted polynomial is not fixed by the generators");
    return lifted;
}

} // namespace hermite
