#include "hermite/tensor_spaces.hpp"

#include <algorithm>

namespace hermite {

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::DividedOfSym: return "DividedOfSym";
        case Shape::SymOfDivided: return "SymOfDivided";
        case Shape::WedgeOfSym: return "WedgeOfSym";
        case Shape::WedgeOfDivided: return "WedgeOfDivided";
    }
    throw Error("unreachable shape");
}

Shape shape_from_name(const std::string& name) {
    if (name == "DividedOfSym") return Shape::DividedOfSym;
    if (name == "SymOfDivided") return Shape::SymOfDivided;
    if (name == "WedgeOfSym") return Shape::WedgeOfSym;
    if (name == "WedgeOfDivided") return Shape::WedgeOfDivided;
    throw ParseError("unknown shape '" + name + "'");
}

int SpaceDescriptor::slot_count() const {
    return shape == Shape::WedgeOfDivided ? ell : m;
}

int SpaceDescriptor::max_entry() const {
    return is_wedge() ? ell + m - 1 : ell;
}

bool SpaceDescriptor::is_wedge() const {
    return shape == Shape::WedgeOfSym || shape == Shape::WedgeOfDivided;
}

std::size_t SpaceDescriptor::dimension() const {
    // Both non-wedge shapes: multisets of size slots from {0..max}; both
    // wedge shapes: subsets. All four give binomial(m+ell, m).
    std::size_t n = is_wedge() ? static_cast<std::size_t>(max_entry()) + 1
                               : static_cast<std::size_t>(slot_count() + max_entry());
    std::size_t k = static_cast<std::size_t>(slot_count());
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string SpaceDescriptor::to_string() const {
    return shape_name(shape) + "(m=" + std::to_string(m) + ",ell=" + std::to_string(ell) +
           "," + field.to_string() + ")";
}

void validate_index(const SpaceDescriptor& d, const Partition& parts) {
    if (parts.slots() != d.slot_count())
        throw ShapeMismatchError("index " + parts.to_string() + " has wrong slot count for " + d.to_string());
    if (parts.part(0) > d.max_entry())
        throw RangeViolationError("index " + parts.to_string() + " exceeds entry bound of " + d.to_string());
    if (d.is_wedge() && !parts.is_regular())
        throw NotRegularError("wedge index " + parts.to_string() + " has repeated slots");
}

std::vector<Partition> standard_basis(const SpaceDescriptor& d) {
    std::vector<Partition> all;
    for (int k = 0; k <= d.slot_count() * d.max_entry(); ++k) {
        auto shell = enumerate_box(k, d.slot_count(), d.max_entry(), d.is_wedge());
        all.insert(all.end(), shell.begin(), shell.end());
    }
    return canonical_order(std::move(all));
}

SparseVector SparseVector::basis_vector(const SpaceDescriptor& d, const Partition& p) {
    validate_index(d, p);
    SparseVector v(d);
    v.add_term(p, FieldElement::one(d.field));
    return v;
}

FieldElement SparseVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? FieldElement::zero(desc_.field) : it->second;
}

void SparseVector::add_term(const Partition& p, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
    if (!(desc_ == o.desc_)) throw ShapeMismatchError("adding vectors of different spaces");
    SparseVector r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

SparseVector SparseVector::operator*(const FieldElement& c) const {
    SparseVector r(desc_);
    if (c.is_zero()) return r;
    for (const auto& [p, v] : terms_) r.add_term(p, v * c);
    return r;
}

bool SparseVector::operator==(const SparseVector& o) const {
    return desc_ == o.desc_ && terms_ == o.terms_;
}

std::vector<Partition> SparseVector::support() const {
    std::vector<Partition> s;
    s.reserve(terms_.size());
    for (const auto& [p, c] : terms_) s.push_back(p);
    return s;
}

SparseVector multiply_sym_of_divided(const SparseVector& a, const SparseVector& b) {
    const auto& da = a.descriptor();
    const auto& db = b.descriptor();
    if (da.shape != Shape::SymOfDivided || db.shape != Shape::SymOfDivided ||
        da.ell != db.ell || !(da.field == db.field))
        throw ShapeMismatchError("product needs SymOfDivided factors over the same inner space");
    SpaceDescriptor dr{Shape::SymOfDivided, da.m + db.m, da.ell, da.field};
    SparseVector r(dr);
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) {
            std::vector<int> merged = p.parts();
            merged.insert(merged.end(), q.parts().begin(), q.parts().end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            r.add_term(Partition(std::move(merged)), cp * cq);
        }
    return r;
}

Gl2 Gl2::from_integers(const FieldSpec& spec, std::int64_t a, std::int64_t b,
                       std::int64_t c, std::int64_t d) {
    return Gl2{FieldElement::from_integer(spec, a), FieldElement::from_integer(spec, b),
               FieldElement::from_integer(spec, c), FieldElement::from_integer(spec, d)};
}

Gl2 Gl2::identity(const FieldSpec& spec) { return from_integers(spec, 1, 0, 0, 1); }

Gl2 Gl2::operator*(const Gl2& o) const {
    return Gl2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::optional<std::pair<FieldElement, Partition>>
wedge_normalize(const std::vector<int>& raw_slots, const SpaceDescriptor& d) {
    for (int v : raw_slots)
        if (v < 0 || v > d.max_entry())
            throw RangeViolationError("wedge slot value " + std::to_string(v) + " out of range");
    std::vector<int> s = raw_slots;
    // insertion sort, counting transpositions
    int swaps = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && s[j - 1] < s[j]) {
            std::swap(s[j - 1], s[j]);
            ++swaps;
            --j;
        }
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return std::nullopt;
    FieldElement sign = FieldElement::from_integer(d.field, swaps % 2 == 0 ? 1 : -1);
    return std::make_pair(sign, Partition(std::move(s)));
}

namespace {

void check_invertible(const Gl2& g) {
    if (g.det().is_zero()) throw SingularMatrixError("2x2 matrix is singular");
}

// Distinct arrangements of the multiset with k ones in n slots (1 = letter x,
// 0 = letter y), in a fixed deterministic order.
std::vector<std::vector<int>> xy_words(int k, int n) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = 1;
    std::sort(w.begin(), w.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace

std::vector<FieldElement> gl2_on_divided_generator(const Gl2& g, int k, int n) {
    if (k < 0 || k > n) throw OutOfRangeError("generator index out of range");
    check_invertible(g);
    const FieldSpec& spec = g.spec();
    // g.F(k) is the sum over the orbit words w of x^k y^{n-k} of the slotwise
    // image; the coefficient of F(j) equals the coefficient of the single
    // ordered word x...x y...y (j heads), i.e. a product of matrix entries
    // per slot, summed over w.
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(n) + 1, FieldElement::zero(spec));
    for (const auto& w : xy_words(k, n)) {
        for (int j = 0; j <= n; ++j) {
            FieldElement prod = FieldElement::one(spec);
            for (int t = 0; t < n && !prod.is_zero(); ++t) {
                bool target_x = t < j;
                bool source_x = w[static_cast<std::size_t>(t)] == 1;
                prod *= source_x ? (target_x ? g.a : g.c) : (target_x ? g.b : g.d);
            }
            coeffs[static_cast<std::size_t>(j)] += prod;
        }
    }
    return coeffs;
}

std::vector<FieldElement> gl2_on_sym_monomial(const Gl2& g, int k, int n) {
    if (k < 0 || k > n) throw OutOfRangeError("monomial index out of range");
    check_invertible(g);
    const FieldSpec& spec = g.spec();
    // (a x + c y)^k (b x + d y)^{n-k}, expanded with integer binomials mapped
    // into the field.
    auto expand = [&](const FieldElement& xc, const FieldElement& yc, int e) {
        std::vector<FieldElement> res(static_cast<std::size_t>(e) + 1, FieldElement::zero(spec));
        mpz_class binom = 1;
        for (int i = 0; i <= e; ++i) { // coefficient of x^i y^{e-i}
            res[static_cast<std::size_t>(i)] =
                FieldElement::from_integer(spec, binom) * xc.pow(static_cast<std::uint64_t>(i)) *
                yc.pow(static_cast<std::uint64_t>(e - i));
            binom = binom * (e - i) / (i + 1);
        }
        return res;
    };
    auto fx = expand(g.a, g.c, k);
    auto fy = expand(g.b, g.d, n - k);
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(n) + 1, FieldElement::zero(spec));
    for (std::size_t i = 0; i < fx.size(); ++i)
        for (std::size_t j = 0; j < fy.size(); ++j) coeffs[i + j] += fx[i] * fy[j];
    return coeffs;
}

namespace {

// Coefficient table for the inner action: row s = image coefficients of the
// slot value s.
std::vector<std::vector<FieldElement>> slot_action_table(const Gl2& g, const SpaceDescriptor& d) {
    int n = d.max_entry();
    std::vector<std::vector<FieldElement>> table;
    table.reserve(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s)
        table.push_back(d.inner_is_sym() ? gl2_on_sym_monomial(g, s, n)
                                         : gl2_on_divided_generator(g, s, n));
    return table;
}

// Distinct arrangements of the slots of p (orbit representatives).
std::vector<std::vector<int>> distinct_arrangements(const Partition& p) {
    std::vector<int> w = p.parts();
    std::sort(w.begin(), w.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

void expand_slots(const std::vector<int>& word,
                  const std::vector<std::vector<FieldElement>>& table,
                  const FieldElement& coeff, std::size_t slot, std::vector<int>& img,
                  const std::function<void(const std::vector<int>&, const FieldElement&)>& emit) {
    if (coeff.is_zero()) return;
    if (slot == word.size()) {
        emit(img, coeff);
        return;
    }
    const auto& row = table[static_cast<std::size_t>(word[slot])];
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
        if (row[static_cast<std::size_t>(j)].is_zero()) continue;
        img.push_back(j);
        expand_slots(word, table, coeff * row[static_cast<std::size_t>(j)], slot + 1, img, emit);
        img.pop_back();
    }
}

SparseVector act_on_wedge(const Gl2& g, const SparseVector& v) {
    const auto& d = v.descriptor();
    auto table = slot_action_table(g, d);
    SparseVector out(d);
    std::vector<int> img;
    for (const auto& [p, c] : v.terms()) {
        expand_slots(p.parts(), table, c, 0, img,
                     [&](const std::vector<int>& word, const FieldElement& coeff) {
                         if (auto norm = wedge_normalize(word, d))
                             out.add_term(norm->second, coeff * norm->first);
                     });
    }
    return out;
}

SparseVector act_on_sym_of_divided(const Gl2& g, const SparseVector& v) {
    const auto& d = v.descriptor();
    auto table = slot_action_table(g, d);
    SparseVector out(d);
    std::vector<int> img;
    for (const auto& [p, c] : v.terms()) {
        // F(lambda) is a commutative product of generators, so the slot
        // images collect as multisets.
        expand_slots(p.parts(), table, c, 0, img,
                     [&](const std::vector<int>& word, const FieldElement& coeff) {
                         std::vector<int> sorted = word;
                         std::sort(sorted.begin(), sorted.end(), std::greater<int>());
                         out.add_term(Partition(std::move(sorted)), coeff);
                     });
    }
    return out;
}

SparseVector act_on_divided_of_sym(const Gl2& g, const SparseVector& v) {
    const auto& d = v.descriptor();
    auto table = slot_action_table(g, d);
    // Expand into the full tensor-word coefficient map, then read each basis
    // coefficient off its weakly decreasing representative word. This is the
    // ordered-word extraction rule; no multinomial divisions occur.
    std::map<std::vector<int>, FieldElement> words;
    std::vector<int> img;
    for (const auto& [p, c] : v.terms()) {
        for (const auto& arrangement : distinct_arrangements(p)) {
            expand_slots(arrangement, table, c, 0, img,
                         [&](const std::vector<int>& word, const FieldElement& coeff) {
                             auto [it, inserted] = words.emplace(word, coeff);
                             if (!inserted) {
                                 it->second += coeff;
                                 if (it->second.is_zero()) words.erase(it);
                             }
                         });
        }
    }
    SparseVector out(d);
    for (const auto& [word, coeff] : words) {
        if (!std::is_sorted(word.begin(), word.end(), std::greater<int>())) continue;
        std::vector<int> key = word;
        out.add_term(Partition(std::move(key)), coeff);
    }
    return out;
}

} // namespace

SparseVector gl2_action(const Gl2& g, const SparseVector& v) {
    if (!(g.spec() == v.descriptor().field))
        throw SpecMismatchError("group element and vector live over different fields");
    check_invertible(g);
    switch (v.descriptor().shape) {
        case Shape::SymOfDivided: return act_on_sym_of_divided(g, v);
        case Shape::DividedOfSym: return act_on_divided_of_sym(g, v);
        case Shape::WedgeOfSym:
        case Shape::WedgeOfDivided: return act_on_wedge(g, v);
    }
    throw Error("unreachable shape");
}

FieldElement duality_pairing(const SparseVector& f, const SparseVector& t) {
    const auto& df = f.descriptor();
    const auto& dt = t.descriptor();
    bool partners =
        (df.shape == Shape::DividedOfSym && dt.shape == Shape::SymOfDivided) ||
        (df.shape == Shape::SymOfDivided && dt.shape == Shape::DividedOfSym) ||
        (df.shape == Shape::WedgeOfSym && dt.shape == Shape::WedgeOfDivided) ||
        (df.shape == Shape::WedgeOfDivided && dt.shape == Shape::WedgeOfSym);
    if (!partners || !(df.field == dt.field) || df.slot_count() != dt.slot_count() ||
        df.max_entry() != dt.max_entry())
        throw ShapeMismatchError("pairing needs dual partner spaces: " + df.to_string() +
                                 " vs " + dt.to_string());
    FieldElement sum = FieldElement::zero(df.field);
    for (const auto& [p, c] : f.terms()) {
        auto it = t.terms().find(p);
        if (it != t.terms().end()) sum += c * it->second;
    }
    return sum;
}

} // namespace hermite
