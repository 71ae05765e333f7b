#include "hermite/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace hermite {

int PolyRing::var_index(int slice, int i, int j) const {
    if (kind != RingKind::PairSlices) throw Error("coordinate variables need a PairSlices ring");
    if (slice < 0 || slice > 1 || i < 1 || i > ell || j < 1 || j > ell)
        throw OutOfRangeError("variable index out of range");
    return slice * ell * ell + (i - 1) * ell + (j - 1);
}

std::string PolyRing::var_name(int v) const {
    if (kind == RingKind::PhiVars)
        return v == 0 ? "nu" : "mu" + std::to_string(v);
    int slice = v / (ell * ell);
    int rest = v % (ell * ell);
    return std::string(slice == 0 ? "x" : "y") + std::to_string(rest / ell + 1) +
           std::to_string(rest % ell + 1);
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

Polynomial Polynomial::constant(const PolyRing& ring, const FieldElement& c) {
    Polynomial p(ring);
    p.add_term(Monomial(static_cast<std::size_t>(ring.var_count()), 0), c);
    return p;
}

Polynomial Polynomial::variable(const PolyRing& ring, int var) {
    Monomial m(static_cast<std::size_t>(ring.var_count()), 0);
    m.at(static_cast<std::size_t>(var)) = 1;
    Polynomial p(ring);
    p.add_term(m, FieldElement::one(ring.field));
    return p;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
    if (m.size() != static_cast<std::size_t>(ring_.var_count()))
        throw ShapeMismatchError("monomial length does not match ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElement Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(ring_.field) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw SpecMismatchError("polynomial rings differ");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw SpecMismatchError("polynomial rings differ");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw SpecMismatchError("polynomial rings differ");
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < ma.size(); ++i)
                m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw OutOfRangeError("negative polynomial power");
    Polynomial acc = constant(ring_, FieldElement::one(ring_.field));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

bool Polynomial::is_homogeneous(int* deg) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int md = monomial_degree(m);
        if (d == -1) d = md;
        else if (md != d) return false;
    }
    if (deg) *deg = d;
    return true;
}

Polynomial Polynomial::substituted(const std::vector<Polynomial>& images) const {
    if (images.size() != static_cast<std::size_t>(ring_.var_count()))
        throw ShapeMismatchError("substitution needs one image per variable");
    const PolyRing& target = images.empty() ? ring_ : images[0].ring();
    std::map<std::pair<int, int>, Polynomial> power_cache;
    auto power = [&](int var, int e) -> const Polynomial& {
        auto key = std::make_pair(var, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end())
            it = power_cache.emplace(key, images[static_cast<std::size_t>(var)].pow(e)).first;
        return it->second;
    };
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) term = term * power(static_cast<int>(v), m[v]);
        out = out + term;
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string();
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            s += "*" + ring_.var_name(static_cast<int>(v));
            if (m[v] > 1) s += "^" + std::to_string(m[v]);
        }
    }
    return s;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

Polynomial determinant(int ell, Slice slice, const FieldSpec& field) {
    if (ell < 1) throw OutOfRangeError("determinant needs ell >= 1");
    PolyRing ring{field, ell, RingKind::PairSlices};
    Polynomial det(ring);
    std::vector<int> perm(static_cast<std::size_t>(ell));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Monomial m(static_cast<std::size_t>(ring.var_count()), 0);
        for (int i = 0; i < ell; ++i)
            ++m[static_cast<std::size_t>(
                ring.var_index(static_cast<int>(slice), i + 1, perm[static_cast<std::size_t>(i)] + 1))];
        det.add_term(m, FieldElement::from_integer(field, permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Polynomial boxtimes(const Polynomial& f, int mu1, int mu2) {
    const PolyRing& ring = f.ring();
    if (ring.kind != RingKind::PairSlices) throw ShapeMismatchError("boxtimes needs a PairSlices ring");
    if (mu1 < 0 || mu2 < 0) throw DegreeMismatchError("negative slice multiplicity");
    const int d = mu1 + mu2;
    if (f.is_zero()) return Polynomial::zero(ring);
    int fdeg = 0;
    if (!f.is_homogeneous(&fdeg) || fdeg != d)
        throw DegreeMismatchError("left factor must be homogeneous of degree mu1+mu2");
    const int ell2 = ring.ell * ring.ell;

    // Distinct slice arrangements (0 = x-slice, 1 = y-slice).
    std::vector<int> pattern(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < mu2; ++i) pattern[static_cast<std::size_t>(i)] = 1;
    std::sort(pattern.begin(), pattern.end());
    std::vector<std::vector<int>> arrangements;
    do {
        arrangements.push_back(pattern);
    } while (std::next_permutation(pattern.begin(), pattern.end()));

    Polynomial out(ring);
    for (const auto& [mono, c] : f.terms()) {
        // Canonical word: variable indices in nondecreasing order.
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(d));
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            if (static_cast<int>(v) >= ell2)
                throw RangeViolationError("boxtimes left factor uses a slice-Y variable");
            word.insert(word.end(), mono[v], static_cast<int>(v));
        }
        for (const auto& s : arrangements) {
            Monomial m(mono.size(), 0);
            for (int t = 0; t < d; ++t)
                ++m[static_cast<std::size_t>(word[static_cast<std::size_t>(t)] +
                                             s[static_cast<std::size_t>(t)] * ell2)];
            out.add_term(m, c);
        }
    }
    return out;
}

Polynomial mixed_determinant(int ell, int k, const FieldSpec& field) {
    if (k < 0 || k > ell) throw OutOfRangeError("mixed determinant needs 0 <= k <= ell");
    return boxtimes(determinant(ell, Slice::X, field), k, ell - k);
}

namespace {

void check_square_invertible(const FieldMatrix& g, int ell) {
    if (g.rows() != static_cast<std::size_t>(ell) || g.cols() != static_cast<std::size_t>(ell))
        throw ShapeMismatchError("group element has wrong dimensions");
    if (g.determinant().is_zero()) throw SingularMatrixError("group element is singular");
}

} // namespace

Polynomial pair_action(const FieldMatrix& g1, const FieldMatrix& g2, const Polynomial& p) {
    const PolyRing& ring = p.ring();
    if (ring.kind != RingKind::PairSlices) throw ShapeMismatchError("pair_action needs a PairSlices ring");
    const int ell = ring.ell;
    check_square_invertible(g1, ell);
    check_square_invertible(g2, ell);
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(ring.var_count()));
    for (int slice = 0; slice <= 1; ++slice)
        for (int i = 1; i <= ell; ++i)
            for (int j = 1; j <= ell; ++j) {
                Polynomial img(ring);
                for (int a = 1; a <= ell; ++a)
                    for (int b = 1; b <= ell; ++b) {
                        FieldElement coeff = g1.at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(i - 1)) *
                                             g2.at(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(j - 1));
                        if (coeff.is_zero()) continue;
                        Monomial m(static_cast<std::size_t>(ring.var_count()), 0);
                        m[static_cast<std::size_t>(ring.var_index(slice, a, b))] = 1;
                        img.add_term(m, coeff);
                    }
                images.push_back(std::move(img));
            }
    return p.substituted(images);
}

Polynomial gl2_poly_action(const FieldElement& a, const FieldElement& b,
                           const FieldElement& c, const FieldElement& d,
                           const Polynomial& p) {
    const PolyRing& ring = p.ring();
    if (ring.kind != RingKind::PairSlices) throw ShapeMismatchError("gl2_poly_action needs a PairSlices ring");
    if ((a * d - b * c).is_zero()) throw SingularMatrixError("2x2 matrix is singular");
    const int ell = ring.ell;
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(ring.var_count()));
    for (int slice = 0; slice <= 1; ++slice)
        for (int i = 1; i <= ell; ++i)
            for (int j = 1; j <= ell; ++j) {
                Polynomial img(ring);
                Monomial mx(static_cast<std::size_t>(ring.var_count()), 0);
                mx[static_cast<std::size_t>(ring.var_index(0, i, j))] = 1;
                Monomial my(static_cast<std::size_t>(ring.var_count()), 0);
                my[static_cast<std::size_t>(ring.var_index(1, i, j))] = 1;
                img.add_term(mx, slice == 0 ? a : b);
                img.add_term(my, slice == 0 ? c : d);
                images.push_back(std::move(img));
            }
    return p.substituted(images);
}

Polynomial phi_evaluate(const Polynomial& p) {
    const PolyRing& ring = p.ring();
    if (ring.kind != RingKind::PairSlices) throw ShapeMismatchError("phi_evaluate needs a PairSlices ring");
    const int ell = ring.ell;
    PolyRing phi_ring{ring.field, ell, RingKind::PhiVars};
    Polynomial out(phi_ring);
    for (const auto& [m, c] : p.terms()) {
        Monomial img(static_cast<std::size_t>(phi_ring.var_count()), 0);
        bool dead = false;
        for (int slice = 0; slice <= 1 && !dead; ++slice)
            for (int i = 1; i <= ell && !dead; ++i)
                for (int j = 1; j <= ell && !dead; ++j) {
                    auto e = m[static_cast<std::size_t>(ring.var_index(slice, i, j))];
                    if (e == 0) continue;
                    if (i != j) { dead = true; break; }
                    auto target = static_cast<std::size_t>(slice == 0 ? phi_ring.nu_index()
                                                                      : phi_ring.mu_index(i));
                    img[target] = static_cast<std::uint16_t>(img[target] + e);
                }
        if (!dead) out.add_term(img, c);
    }
    return out;
}

Polynomial elementary_symmetric(const PolyRing& phi_ring, int k) {
    if (phi_ring.kind != RingKind::PhiVars) throw ShapeMismatchError("e_k lives in the PhiVars ring");
    const int ell = phi_ring.ell;
    if (k < 0 || k > ell) throw OutOfRangeError("e_k needs 0 <= k <= ell");
    Polynomial out(phi_ring);
    std::vector<int> subset(static_cast<std::size_t>(ell), 0);
    std::fill(subset.begin(), subset.begin() + k, 1);
    std::sort(subset.begin(), subset.end());
    do {
        Monomial m(static_cast<std::size_t>(phi_ring.var_count()), 0);
        for (int i = 0; i < ell; ++i)
            if (subset[static_cast<std::size_t>(i)])
                m[static_cast<std::size_t>(phi_ring.mu_index(i + 1))] = 1;
        out.add_term(m, FieldElement::one(phi_ring.field));
    } while (std::next_permutation(subset.begin(), subset.end()));
    return out;
}

Polynomial phi_of_m_product(const PolyRing& phi_ring, const Partition& lambda) {
    Polynomial out = Polynomial::constant(phi_ring, FieldElement::one(phi_ring.field));
    for (int i = 0; i < lambda.slots(); ++i) {
        int li = lambda.part(i);
        Polynomial factor = elementary_symmetric(phi_ring, phi_ring.ell - li);
        Monomial numono(static_cast<std::size_t>(phi_ring.var_count()), 0);
        numono[static_cast<std::size_t>(phi_ring.nu_index())] = static_cast<std::uint16_t>(li);
        Polynomial nupow(phi_ring);
        nupow.add_term(numono, FieldElement::one(phi_ring.field));
        out = out * factor * nupow;
    }
    return out;
}

std::map<Partition, FieldElement> phi_decompose(const Polynomial& q, int ell, int m) {
    const PolyRing& ring = q.ring();
    if (ring.kind != RingKind::PhiVars || ring.ell != ell)
        throw ShapeMismatchError("phi_decompose expects a PhiVars ring of matching ell");
    int deg = 0;
    if (!q.is_homogeneous(&deg) || (!q.is_zero() && deg != ell * m))
        throw NotHomogeneousError("input is not homogeneous of degree ell*m");

    std::vector<Partition> all;
    for (int k = 0; k <= ell * m; ++k) {
        auto shell = enumerate_box(k, m, ell);
        all.insert(all.end(), shell.begin(), shell.end());
    }
    std::vector<Partition> box = canonical_order(std::move(all));
    std::vector<Polynomial> basis;
    basis.reserve(box.size());
    for (const auto& lambda : box) basis.push_back(phi_of_m_product(ring, lambda));

    // Column space over the union of monomial supports.
    std::map<Monomial, std::size_t> rows;
    auto note = [&](const Polynomial& p) {
        for (const auto& [mono, c] : p.terms()) rows.emplace(mono, rows.size());
    };
    for (const auto& b : basis) note(b);
    note(q);

    FieldMatrix sys(ring.field, rows.size(), basis.size() + 1);
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [mono, c] : basis[col].terms()) sys.at(rows.at(mono), col) = c;
    for (const auto& [mono, c] : q.terms()) sys.at(rows.at(mono), basis.size()) = c;

    std::vector<std::size_t> pivots;
    FieldMatrix red = sys.rref(&pivots);
    if (!pivots.empty() && pivots.back() == basis.size())
        throw NotInImageError("polynomial is not in the span of the Phi images");
    // The basis polynomials are linearly independent, so every basis column
    // is a pivot and the last column is the coordinate vector.
    std::map<Partition, FieldElement> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const FieldElement& c = red.at(r, basis.size());
        if (!c.is_zero()) out.emplace(box[pivots[r]], c);
    }
    return out;
}

namespace {

// Leading term: the largest monomial in the term order.
const std::pair<const Monomial, FieldElement>& leading(const Polynomial& p) {
    return *p.terms().rbegin();
}

} // namespace

Polynomial PolyEchelon::reduce(Polynomial p) const {
    bool changed = true;
    while (!p.is_zero() && changed) {
        changed = false;
        for (const auto& row : rows_) {
            if (p.is_zero()) break;
            const auto& lead = leading(row);
            FieldElement c = p.coeff(lead.first);
            if (c.is_zero()) continue;
            p = p - row.scaled(c); // rows are monic
            changed = true;
        }
    }
    return p;
}

bool PolyEchelon::insert(const Polynomial& p) {
    Polynomial r = reduce(p);
    if (r.is_zero()) return false;
    rows_.push_back(r.scaled(leading(r).second.inverse()));
    return true;
}

} // namespace hermite
