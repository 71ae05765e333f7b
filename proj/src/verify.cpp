#include "hermite/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "hermite/invariant_hunter.hpp"
#include "hermite/isomorphisms.hpp"
#include "hermite/json_io.hpp"
#include "hermite/rng.hpp"

namespace hermite {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    VerifyOptions options;
    std::vector<CheckResult>* out;

    void run(const std::string& suite, const std::string& name,
             const std::function<std::string()>& body) {
        if (options.suite != "all" && options.suite != suite) return;
        CheckResult res;
        res.suite = suite;
        res.name = name;
        auto t0 = Clock::now();
        try {
            // Empty detail means pass; a "note:" prefix means pass with a
            // finding worth surfacing in the report.
            res.detail = body();
            res.passed = res.detail.empty() || res.detail.rfind("note:", 0) == 0;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out->push_back(std::move(res));
    }

    std::vector<FieldSpec> sampled_fields(std::vector<FieldSpec> defaults) const {
        if (options.field_filter) return {*options.field_filter};
        return defaults;
    }

    Rng rng(std::uint64_t salt) const { return Rng(options.seed * 0x1000193u + salt); }
};

FieldElement random_element(Rng& rng, const FieldSpec& spec) {
    if (spec.kind() == FieldKind::PrimeField)
        return FieldElement::from_integer(spec, static_cast<std::int64_t>(rng.below(
                                                    static_cast<std::uint64_t>(spec.modulus()))));
    return FieldElement::rational(rng.int_in(-20, 20), rng.int_in(1, 12));
}

Gl2 random_gl2(Rng& rng, const FieldSpec& spec) {
    while (true) {
        Gl2 g{random_element(rng, spec), random_element(rng, spec), random_element(rng, spec),
              random_element(rng, spec)};
        if (!g.det().is_zero()) return g;
    }
}

// Product of a few transvections I + t E_{i,j}; always in SL_ell.
FieldMatrix random_sl(Rng& rng, const FieldSpec& spec, int ell) {
    FieldMatrix g = FieldMatrix::identity(spec, static_cast<std::size_t>(ell));
    int factors = 2 + static_cast<int>(rng.below(4));
    for (int f = 0; f < factors; ++f) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(ell)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(ell)));
        if (i == j) continue;
        FieldElement t = spec.kind() == FieldKind::PrimeField
                             ? random_element(rng, spec)
                             : FieldElement::from_integer(spec, rng.int_in(-3, 3));
        FieldMatrix tv = FieldMatrix::identity(spec, static_cast<std::size_t>(ell));
        tv.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = t;
        g = g * tv;
    }
    return g;
}

SparseVector random_vector(Rng& rng, const SpaceDescriptor& d,
                           const std::vector<Partition>& basis, int terms) {
    SparseVector v(d);
    for (int t = 0; t < terms; ++t) {
        const Partition& p = basis[rng.below(basis.size())];
        FieldElement c = random_element(rng, d.field);
        v.add_term(p, c);
    }
    return v;
}

std::string check_group_action_on_shape(Rng& rng, const SpaceDescriptor& d, int samples) {
    auto basis = standard_basis(d);
    for (int s = 0; s < samples; ++s) {
        SparseVector v = random_vector(rng, d, basis, 2);
        Gl2 id = Gl2::identity(d.field);
        if (!(gl2_action(id, v) == v)) return "identity action moved a vector in " + d.to_string();
        Gl2 g1 = random_gl2(rng, d.field);
        Gl2 g2 = random_gl2(rng, d.field);
        if (!(gl2_action(g1, gl2_action(g2, v)) == gl2_action(g1 * g2, v)))
            return "compatibility failed in " + d.to_string();
    }
    return "";
}

// Oracle for the product with a divided tensor: evaluates the arrangement
// sum over an explicitly ordered variable word, so word-order independence
// can be tested directly.
Polynomial boxtimes_word_oracle(const PolyRing& ring, const std::vector<int>& word,
                                const FieldElement& coeff, int mu1, int mu2) {
    const int d = mu1 + mu2;
    const int ell2 = ring.ell * ring.ell;
    std::vector<int> pattern(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < mu2; ++i) pattern[static_cast<std::size_t>(i)] = 1;
    std::sort(pattern.begin(), pattern.end());
    Polynomial out(ring);
    do {
        Monomial m(static_cast<std::size_t>(ring.var_count()), 0);
        for (int t = 0; t < d; ++t)
            ++m[static_cast<std::size_t>(word[static_cast<std::size_t>(t)] +
                                         pattern[static_cast<std::size_t>(t)] * ell2)];
        out.add_term(m, coeff);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return out;
}

Polynomial random_x_monomial_poly(Rng& rng, const PolyRing& ring, int degree) {
    Monomial m(static_cast<std::size_t>(ring.var_count()), 0);
    for (int t = 0; t < degree; ++t)
        ++m[rng.below(static_cast<std::uint64_t>(ring.ell * ring.ell))];
    Polynomial p(ring);
    FieldElement c = random_element(rng, ring.field);
    if (c.is_zero()) c = FieldElement::one(ring.field);
    p.add_term(m, c);
    return p;
}

std::vector<int> monomial_word(const Monomial& mono) {
    std::vector<int> word;
    for (std::size_t v = 0; v < mono.size(); ++v)
        word.insert(word.end(), mono[v], static_cast<int>(v));
    return word;
}

// Swaps mu_i and mu_{i+1} in a PhiVars polynomial.
Polynomial swap_mu(const Polynomial& p, int i) {
    const PolyRing& ring = p.ring();
    Polynomial out(ring);
    for (const auto& [m, c] : p.terms()) {
        Monomial s = m;
        std::swap(s[static_cast<std::size_t>(ring.mu_index(i))],
                  s[static_cast<std::size_t>(ring.mu_index(i + 1))]);
        out.add_term(s, c);
    }
    return out;
}

void register_field_checks(Ctx& ctx) {
    ctx.run("field", "field-axioms", [&] {
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3), FieldSpec::prime_field(5)});
        Rng rng = ctx.rng(11);
        for (const auto& spec : fields) {
            std::vector<FieldElement> pool;
            for (int i = 0; i < 1000; ++i) pool.push_back(random_element(rng, spec));
            for (int i = 0; i < 1000; ++i) {
                const auto& a = pool[rng.below(pool.size())];
                const auto& b = pool[rng.below(pool.size())];
                const auto& c = pool[rng.below(pool.size())];
                if (!((a + b) + c == a + (b + c))) return "additive associativity failed in " + spec.to_string();
                if (!((a * b) * c == a * (b * c))) return "multiplicative associativity failed in " + spec.to_string();
                if (!(a * (b + c) == a * b + a * c)) return "distributivity failed in " + spec.to_string();
                if (!(a + (-a) == FieldElement::zero(spec))) return "additive inverse failed in " + spec.to_string();
                if (!a.is_zero() && !(a * a.inverse() == FieldElement::one(spec)))
                    return "multiplicative inverse failed in " + spec.to_string();
            }
        }
        return std::string{};
    });

    ctx.run("field", "field-from-integer-hom", [&] {
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3), FieldSpec::prime_field(5)});
        Rng rng = ctx.rng(12);
        for (const auto& spec : fields)
            for (int i = 0; i < 500; ++i) {
                std::int64_t a = rng.int_in(-1000, 1000), b = rng.int_in(-1000, 1000);
                if (!(FieldElement::from_integer(spec, a * b) ==
                      FieldElement::from_integer(spec, a) * FieldElement::from_integer(spec, b)) ||
                    !(FieldElement::from_integer(spec, a + b) ==
                      FieldElement::from_integer(spec, a) + FieldElement::from_integer(spec, b)))
                    return "from_integer is not a ring homomorphism in " + spec.to_string();
            }
        return std::string{};
    });
}

void register_partition_checks(Ctx& ctx) {
    ctx.run("partitions", "partitions-diagram-commutes", [&] {
        for (int ell = 1; ell <= 8; ++ell)
            for (int m = 1; m <= 8; ++m) {
                std::string fail;
                for_each_in_box(m, ell, [&](const Partition& lambda) {
                    if (!fail.empty()) return;
                    Partition rt = tilde_w_star(tilde_d(tilde_w(lambda, m, ell), m, ell), ell, m);
                    if (!(rt == Partition::padded(lambda.transposed(), ell)))
                        fail = "W*DW != transpose at " + lambda.to_string() + " (m=" +
                               std::to_string(m) + ", ell=" + std::to_string(ell) + ")";
                });
                if (!fail.empty()) return fail;
            }
        return std::string{};
    });

    ctx.run("partitions", "partitions-tilde-bijections", [&] {
        for (int ell = 1; ell <= 8; ++ell)
            for (int m = 1; m <= 8; ++m) {
                const int n = ell + m - 1;
                std::map<int, std::set<Partition>> w_images, d_images;
                std::size_t total = 0;
                std::string fail;
                for_each_in_box(m, ell, [&](const Partition& lambda) {
                    if (!fail.empty()) return;
                    ++total;
                    Partition w = tilde_w(lambda, m, ell);
                    if (!w.is_regular() || w.part(0) > n) { fail = "tilde_w image outside P'"; return; }
                    if (w.weight() != lambda.weight() + m * (m - 1) / 2) { fail = "tilde_w weight shift wrong"; return; }
                    w_images[lambda.weight()].insert(w);
                    Partition d = tilde_d(w, m, ell);
                    if (!d.is_regular() || d.slots() != ell || d.part(0) > n) { fail = "tilde_d image outside P'"; return; }
                    if (d.weight() != lambda.weight() + ell * (ell - 1) / 2) { fail = "tilde_d weight shift wrong"; return; }
                    d_images[lambda.weight()].insert(d);
                });
                if (!fail.empty()) return fail;
                std::size_t w_count = 0, d_count = 0;
                for (auto& [k, s] : w_images) {
                    w_count += s.size();
                    if (s.size() != enumerate_box(k + m * (m - 1) / 2, m, n, true).size())
                        return "tilde_w is not onto the regular shell at weight " + std::to_string(k);
                }
                for (auto& [k, s] : d_images) {
                    d_count += s.size();
                    if (s.size() != enumerate_box(k + ell * (ell - 1) / 2, ell, n, true).size())
                        return "tilde_d is not onto the regular shell at weight " + std::to_string(k);
                }
                if (w_count != total || d_count != total)
                    return "tilde maps are not injective in box m=" + std::to_string(m) +
                           ", ell=" + std::to_string(ell);
            }
        return std::string{};
    });

    ctx.run("partitions", "partitions-hodge-antitone", [&] {
        for (int ell = 1; ell <= 6; ++ell)
            for (int m = 1; m <= 6; ++m) {
                const int n = ell + m - 1;
                for (int k = 0; k <= m * n; ++k) {
                    auto shell = enumerate_box(k, m, n, true);
                    for (const auto& a : shell)
                        for (const auto& b : shell) {
                            if (dominance(a, b) != Dominance::Dominates) continue;
                            if (dominance(tilde_d(b, m, ell), tilde_d(a, m, ell)) != Dominance::Dominates)
                                return "tilde_d failed to reverse " + a.to_string() + " > " + b.to_string();
                        }
                }
            }
        return std::string{};
    });

    ctx.run("partitions", "partitions-unimodality", [&] {
        for (int ell = 1; ell <= 30; ++ell)
            for (int m = 1; m <= 30; ++m) {
                auto p = gaussian_binomial(ell, m);
                for (int k = 0; k <= ell * m / 2; ++k) {
                    std::int64_t prev = k == 0 ? 0 : p[static_cast<std::size_t>(k - 1)];
                    if (p[static_cast<std::size_t>(k)] - prev < 0)
                        return "b_" + std::to_string(k) + "(" + std::to_string(ell) + "," +
                               std::to_string(m) + ") < 0";
                }
            }
        return std::string{};
    });

    ctx.run("partitions", "partitions-qbinom-symmetry", [&] {
        for (int ell = 0; ell <= 12; ++ell)
            for (int m = 0; m <= 12; ++m)
                if (gaussian_binomial(ell, m) != gaussian_binomial(m, ell))
                    return "p_k(" + std::to_string(ell) + "," + std::to_string(m) + ") != transposed";
        return std::string{};
    });

    ctx.run("partitions", "partitions-transpose-involution", [&] {
        for (int ell = 1; ell <= 8; ++ell)
            for (int m = 1; m <= 8; ++m) {
                std::string fail;
                for_each_in_box(m, ell, [&](const Partition& p) {
                    if (!fail.empty()) return;
                    if (!(p.transposed().transposed() == p.trimmed()))
                        fail = "transpose is not an involution at " + p.to_string();
                });
                if (!fail.empty()) return fail;
            }
        return std::string{};
    });
}

void register_tensor_checks(Ctx& ctx) {
    ctx.run("tensor", "tensor-gl2-group-action", [&] {
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        Rng rng = ctx.rng(21);
        for (const auto& spec : fields)
            for (Shape shape : {Shape::DividedOfSym, Shape::SymOfDivided, Shape::WedgeOfSym,
                                Shape::WedgeOfDivided}) {
                int samples_left = 200;
                while (samples_left > 0) {
                    int m = 1 + static_cast<int>(rng.below(3));
                    int ell = 1 + static_cast<int>(rng.below(3));
                    SpaceDescriptor d{shape, m, ell, spec};
                    int batch = std::min(samples_left, 10);
                    std::string fail = check_group_action_on_shape(rng, d, batch);
                    if (!fail.empty()) return fail;
                    samples_left -= batch;
                }
            }
        return std::string{};
    });

    ctx.run("tensor", "tensor-divided-generator-coeffs", [&] {
        // Pinned example: shear on Sym_2; the F(2) coefficient is 2, which
        // vanishes exactly in characteristic 2.
        {
            FieldSpec q = FieldSpec::rationals();
            auto c = gl2_on_divided_generator(Gl2::from_integers(q, 1, 1, 0, 1), 1, 2);
            if (!(c[0].is_zero() && c[1].is_one() &&
                  c[2] == FieldElement::from_integer(q, 2)))
                return std::string("shear coefficients over Q are not (0,1,2)");
            FieldSpec f2 = FieldSpec::prime_field(2);
            auto c2 = gl2_on_divided_generator(Gl2::from_integers(f2, 1, 1, 0, 1), 1, 2);
            if (!(c2[0].is_zero() && c2[1].is_one() && c2[2].is_zero()))
                return std::string("shear coefficients over GF(2) are not (0,1,0)");
        }
        // Closed-form cross-check: c_{k,j} = sum_i C(j,i) C(n-j,k-i) a^i b^{j-i} c^{k-i} d^{n-j-k+i}.
        Rng rng = ctx.rng(22);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 20; ++trial) {
                int n = 1 + static_cast<int>(rng.below(5));
                int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
                Gl2 g = random_gl2(rng, spec);
                auto got = gl2_on_divided_generator(g, k, n);
                for (int j = 0; j <= n; ++j) {
                    FieldElement want = FieldElement::zero(spec);
                    for (int i = std::max(0, k - (n - j)); i <= std::min(j, k); ++i) {
                        mpz_class mult = 1;
                        for (int t = 1; t <= i; ++t) mult = mult * (j - t + 1) / t;
                        mpz_class mult2 = 1;
                        for (int t = 1; t <= k - i; ++t) mult2 = mult2 * (n - j - t + 1) / t;
                        want += FieldElement::from_integer(spec, mult * mult2) *
                                g.a.pow(static_cast<std::uint64_t>(i)) *
                                g.b.pow(static_cast<std::uint64_t>(j - i)) *
                                g.c.pow(static_cast<std::uint64_t>(k - i)) *
                                g.d.pow(static_cast<std::uint64_t>(n - j - k + i));
                    }
                    if (!(got[static_cast<std::size_t>(j)] == want))
                        return "divided generator coefficient mismatch at n=" + std::to_string(n);
                }
            }
        return std::string{};
    });

    ctx.run("tensor", "tensor-duality-gram", [&] {
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3), FieldSpec::prime_field(5)});
        for (const auto& spec : fields) {
            for (int n = 1; n <= 5; ++n) {
                SpaceDescriptor mono{Shape::DividedOfSym, 1, n, spec};
                SpaceDescriptor div{Shape::SymOfDivided, 1, n, spec};
                auto b1 = standard_basis(mono), b2 = standard_basis(div);
                for (std::size_t i = 0; i < b1.size(); ++i)
                    for (std::size_t j = 0; j < b2.size(); ++j) {
                        FieldElement got = duality_pairing(SparseVector::basis_vector(mono, b1[i]),
                                                           SparseVector::basis_vector(div, b2[j]));
                        bool want_one = b1[i] == b2[j];
                        if (got.is_one() != want_one || (!want_one && !got.is_zero()))
                            return std::string("Gram matrix is not the identity at n=") + std::to_string(n);
                    }
            }
            for (int m = 1; m <= 3; ++m)
                for (int ell = 1; ell <= 3; ++ell) {
                    SpaceDescriptor a{Shape::WedgeOfSym, m, ell, spec};
                    SpaceDescriptor b{Shape::WedgeOfDivided, ell, m, spec};
                    auto basis = standard_basis(a);
                    if (!(standard_basis(b) == basis)) return std::string("wedge dual bases disagree");
                    for (const auto& p : basis)
                        for (const auto& q : basis) {
                            FieldElement got = duality_pairing(SparseVector::basis_vector(a, p),
                                                               SparseVector::basis_vector(b, q));
                            if ((p == q) != got.is_one() || (!(p == q) && !got.is_zero()))
                                return std::string("wedge Gram matrix is not the identity");
                        }
                }
        }
        return std::string{};
    });

    ctx.run("tensor", "tensor-basis-dimensions", [&] {
        FieldSpec q = FieldSpec::rationals();
        for (int m = 1; m <= 6; ++m)
            for (int ell = 1; ell <= 6; ++ell)
                for (Shape shape : {Shape::DividedOfSym, Shape::SymOfDivided, Shape::WedgeOfSym,
                                    Shape::WedgeOfDivided}) {
                    SpaceDescriptor d{shape, m, ell, q};
                    auto basis = standard_basis(d);
                    if (basis.size() != d.dimension())
                        return "basis size disagrees with dimension for " + d.to_string();
                    std::size_t want = 1;
                    for (int i = 1; i <= std::min(m, ell); ++i)
                        want = want * static_cast<std::size_t>(m + ell - std::min(m, ell) + i) /
                               static_cast<std::size_t>(i);
                    if (basis.size() != want)
                        return "dimension is not C(m+ell, ell) for " + d.to_string();
                }
        return std::string{};
    });
}

void register_polyring_checks(Ctx& ctx) {
    ctx.run("polyring", "poly-boxtimes-well-defined", [&] {
        Rng rng = ctx.rng(31);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 40; ++trial) {
                int ell = 1 + static_cast<int>(rng.below(3));
                int d = 1 + static_cast<int>(rng.below(4));
                int mu1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
                PolyRing ring{spec, ell, RingKind::PairSlices};
                Polynomial f = random_x_monomial_poly(rng, ring, d);
                const auto& [mono, coeff] = *f.terms().begin();
                std::vector<int> word = monomial_word(mono);
                Polynomial reference = boxtimes(f, mu1, d - mu1);
                for (int shuffle = 0; shuffle < 4; ++shuffle) {
                    for (std::size_t i = word.size(); i > 1; --i)
                        std::swap(word[i - 1], word[rng.below(i)]);
                    if (!(boxtimes_word_oracle(ring, word, coeff, mu1, d - mu1) == reference))
                        return "boxtimes depends on the word order (ell=" + std::to_string(ell) +
                               ", d=" + std::to_string(d) + ")";
                }
            }
        return std::string{};
    });

    ctx.run("polyring", "poly-boxtimes-equivariant", [&] {
        Rng rng = ctx.rng(32);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 25; ++trial) {
                int ell = 1 + static_cast<int>(rng.below(3));
                int d = 1 + static_cast<int>(rng.below(4));
                int mu1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
                PolyRing ring{spec, ell, RingKind::PairSlices};
                Polynomial f = random_x_monomial_poly(rng, ring, d);
                for (int extra = 0; extra < 2; ++extra) f = f + random_x_monomial_poly(rng, ring, d);
                FieldMatrix g1 = random_sl(rng, spec, ell);
                FieldMatrix g2 = random_sl(rng, spec, ell);
                Gl2 h = random_gl2(rng, spec);
                Polynomial lhs = gl2_poly_action(h.a, h.b, h.c, h.d,
                                                 pair_action(g1, g2, boxtimes(f, mu1, d - mu1)));
                Polynomial fprime = pair_action(g1, g2, f);
                auto hcoeffs = gl2_on_divided_generator(h, mu1, d);
                Polynomial rhs = Polynomial::zero(ring);
                for (int j = 0; j <= d; ++j) {
                    if (hcoeffs[static_cast<std::size_t>(j)].is_zero()) continue;
                    rhs = rhs + boxtimes(fprime, j, d - j).scaled(hcoeffs[static_cast<std::size_t>(j)]);
                }
                if (!(lhs == rhs))
                    return "boxtimes equivariance failed (ell=" + std::to_string(ell) +
                           ", d=" + std::to_string(d) + ", field=" + spec.to_string() + ")";
            }
        return std::string{};
    });

    ctx.run("polyring", "poly-mixed-det-invariance", [&] {
        Rng rng = ctx.rng(33);
        std::vector<FieldSpec> fields = {FieldSpec::prime_field(2), FieldSpec::prime_field(3),
                                         FieldSpec::prime_field(5), FieldSpec::rationals()};
        for (const auto& spec : fields)
            for (int ell = 1; ell <= 4; ++ell) {
                std::vector<Polynomial> gens;
                for (int k = 0; k <= ell; ++k) gens.push_back(mixed_determinant(ell, k, spec));
                for (int trial = 0; trial < 25; ++trial) {
                    FieldMatrix g1 = random_sl(rng, spec, ell);
                    FieldMatrix g2 = random_sl(rng, spec, ell);
                    for (int k = 0; k <= ell; ++k)
                        if (!(pair_action(g1, g2, gens[static_cast<std::size_t>(k)]) ==
                              gens[static_cast<std::size_t>(k)]))
                            return "M_" + std::to_string(ell) + "(" + std::to_string(k) +
                                   ") moved under SLxSL over " + spec.to_string();
                }
            }
        return std::string{};
    });

    ctx.run("polyring", "poly-degree-multiple-of-ell", [&] {
        FieldSpec f2 = FieldSpec::prime_field(2);
        for (int ell = 1; ell <= 3; ++ell)
            for (int m = 1; m <= 2; ++m)
                for (const auto& p : closure_invariant_basis(ell, m, f2)) {
                    int deg = 0;
                    if (!p.is_homogeneous(&deg) || deg % ell != 0)
                        return "closure basis element of degree not divisible by ell=" +
                               std::to_string(ell);
                }
        return std::string{};
    });

    ctx.run("polyring", "poly-phi-symmetric", [&] {
        Rng rng = ctx.rng(34);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2)});
        for (const auto& spec : fields)
            for (int ell = 2; ell <= 3; ++ell)
                for (int m = 1; m <= 2; ++m)
                    for (const auto& p : closure_invariant_basis(ell, m, spec)) {
                        Polynomial q = phi_evaluate(p);
                        for (int i = 1; i < ell; ++i)
                            if (!(swap_mu(q, i) == q))
                                return "Phi image is not symmetric in mu (ell=" + std::to_string(ell) + ")";
                        (void)rng;
                    }
        return std::string{};
    });

    ctx.run("polyring", "poly-phi-multiplicative", [&] {
        Rng rng = ctx.rng(35);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 20; ++trial) {
                int ell = 1 + static_cast<int>(rng.below(3));
                PolyRing ring{spec, ell, RingKind::PairSlices};
                Polynomial p = random_x_monomial_poly(rng, ring, 1 + static_cast<int>(rng.below(3)));
                Polynomial q = random_x_monomial_poly(rng, ring, 1 + static_cast<int>(rng.below(3)));
                // Mix in some y-slice content.
                Polynomial y = Polynomial::variable(ring, ring.var_index(1, 1, 1));
                p = p * y;
                if (!(phi_evaluate(p * q) == phi_evaluate(p) * phi_evaluate(q)))
                    return std::string("Phi is not multiplicative");
            }
        return std::string{};
    });

    ctx.run("polyring", "poly-subset-formula", [&] {
        FieldSpec specs[] = {FieldSpec::rationals(), FieldSpec::prime_field(2)};
        for (const auto& spec : specs)
            for (int ell = 1; ell <= 4; ++ell)
                for (int k = 0; k <= ell; ++k) {
                    // Row-subset oracle: choose the k slice-X rows directly.
                    PolyRing ring{spec, ell, RingKind::PairSlices};
                    Polynomial oracle(ring);
                    std::vector<int> pick(static_cast<std::size_t>(ell), 0);
                    std::fill(pick.begin(), pick.begin() + k, 1);
                    std::sort(pick.begin(), pick.end());
                    do {
                        std::vector<int> perm(static_cast<std::size_t>(ell));
                        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
                        do {
                            int inversions = 0;
                            for (std::size_t i = 0; i < perm.size(); ++i)
                                for (std::size_t j = i + 1; j < perm.size(); ++j)
                                    if (perm[i] > perm[j]) ++inversions;
                            Monomial mono(static_cast<std::size_t>(ring.var_count()), 0);
                            for (int i = 0; i < ell; ++i) {
                                int slice = pick[static_cast<std::size_t>(i)] == 1 ? 0 : 1;
                                ++mono[static_cast<std::size_t>(
                                    ring.var_index(slice, i + 1, perm[static_cast<std::size_t>(i)] + 1))];
                            }
                            oracle.add_term(mono, FieldElement::from_integer(spec, inversions % 2 ? -1 : 1));
                        } while (std::next_permutation(perm.begin(), perm.end()));
                    } while (std::next_permutation(pick.begin(), pick.end()));
                    if (!(oracle == mixed_determinant(ell, k, spec)))
                        return "row-subset formula disagrees with boxtimes at ell=" +
                               std::to_string(ell) + ", k=" + std::to_string(k);
                }
        return std::string{};
    });
}

void register_iso_checks(Ctx& ctx) {
    ctx.run("iso", "iso-hermite-triangular", [&] {
        std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime_field(2),
                                         FieldSpec::prime_field(3), FieldSpec::prime_field(5)};
        for (const auto& spec : fields)
            for (int m = 1; m <= 5; ++m)
                for (int ell = 1; ell <= 5; ++ell) {
                    auto r = hermite_r(m, ell, spec);
                    auto rep = check_hermite_triangularity(r);
                    if (!rep.unit_triangular)
                        return "R(m=" + std::to_string(m) + ", ell=" + std::to_string(ell) +
                               ", " + spec.to_string() + "): " + rep.detail;
                }
        return std::string{};
    });

    ctx.run("iso", "iso-support-extremality", [&] {
        FieldSpec q = FieldSpec::rationals();
        for (int m = 1; m <= 4; ++m)
            for (int ell = 1; ell <= 4; ++ell) {
                SpaceDescriptor src{Shape::DividedOfSym, m, ell, q};
                for (const auto& lambda : standard_basis(src)) {
                    SparseVector w = wronskian(SparseVector::basis_vector(src, lambda));
                    Partition mx = tilde_w(lambda, m, ell);
                    if (w.coeff(mx).is_zero()) return "W image misses its maximum at " + lambda.to_string();
                    for (const auto& p : w.support())
                        if (!(p == mx) && dominance(mx, p) != Dominance::Dominates)
                            return "W support not dominated by the maximum at " + lambda.to_string();
                }
                SpaceDescriptor wd{Shape::WedgeOfDivided, m, ell, q};
                for (const auto& lambda : standard_basis(wd)) {
                    SparseVector w = dual_wronskian(SparseVector::basis_vector(wd, lambda));
                    Partition mn = tilde_w_star(lambda, ell, m);
                    if (w.coeff(mn).is_zero()) return "W* image misses its minimum at " + lambda.to_string();
                    for (const auto& p : w.support())
                        if (!(p == mn) && dominance(p, mn) != Dominance::Dominates)
                            return "W* support does not dominate the minimum at " + lambda.to_string();
                }
            }
        return std::string{};
    });

    ctx.run("iso", "iso-k-equivariance", [&] {
        Rng rng = ctx.rng(41);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 50; ++trial) {
                int ell = 1 + static_cast<int>(rng.below(3));
                int m = 1 + static_cast<int>(rng.below(3));
                SpaceDescriptor d{Shape::SymOfDivided, m, ell, spec};
                SparseVector v = random_vector(rng, d, standard_basis(d), 2);
                Polynomial p = k_inverse(v);
                SparseVector vf = k_forward(p, ell, m);
                Gl2 g = random_gl2(rng, spec);
                SparseVector lhs = k_forward(gl2_poly_action(g.a, g.b, g.c, g.d, p), ell, m);
                if (!(lhs == gl2_action(g, vf)))
                    return "K does not intertwine the GL2 actions (ell=" + std::to_string(ell) +
                           ", m=" + std::to_string(m) + ", " + spec.to_string() + ")";
            }
        return std::string{};
    });

    ctx.run("iso", "iso-k-roundtrip", [&] {
        Rng rng = ctx.rng(42);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 50; ++trial) {
                int ell = 1 + static_cast<int>(rng.below(3));
                int m = 1 + static_cast<int>(rng.below(3));
                SpaceDescriptor d{Shape::SymOfDivided, m, ell, spec};
                SparseVector v = random_vector(rng, d, standard_basis(d), 2);
                if (!(k_forward(k_inverse(v), ell, m) == v))
                    return "k_forward(k_inverse(v)) != v (ell=" + std::to_string(ell) +
                           ", m=" + std::to_string(m) + ")";
            }
        return std::string{};
    });

    ctx.run("iso", "iso-k-multiplicative", [&] {
        Rng rng = ctx.rng(43);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 15; ++trial) {
                int ell = 1 + static_cast<int>(rng.below(2));
                int m1 = 1 + static_cast<int>(rng.below(2));
                int m2 = 1 + static_cast<int>(rng.below(2));
                SpaceDescriptor d1{Shape::SymOfDivided, m1, ell, spec};
                SpaceDescriptor d2{Shape::SymOfDivided, m2, ell, spec};
                SparseVector v = random_vector(rng, d1, standard_basis(d1), 2);
                SparseVector w = random_vector(rng, d2, standard_basis(d2), 2);
                Polynomial prod = k_inverse(v) * k_inverse(w);
                SparseVector got = k_forward(prod, ell, m1 + m2);
                if (!(got == multiply_sym_of_divided(v, w)))
                    return std::string("K is not multiplicative");
            }
        return std::string{};
    });

    ctx.run("iso", "iso-closure-rank", [&] {
        FieldSpec specs[] = {FieldSpec::rationals(), FieldSpec::prime_field(2)};
        int cases[][2] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
        for (const auto& spec : specs)
            for (auto [ell, m] : cases) {
                // closure_invariant_basis re-verifies independence internally.
                auto basis = closure_invariant_basis(ell, m, spec);
                std::size_t want = 1;
                for (int i = 1; i <= std::min(m, ell); ++i)
                    want = want * static_cast<std::size_t>(m + ell - std::min(m, ell) + i) /
                           static_cast<std::size_t>(i);
                if (basis.size() != want)
                    return "closure basis count wrong at ell=" + std::to_string(ell) +
                           ", m=" + std::to_string(m);
            }
        return std::string{};
    });

    ctx.run("iso", "iso-i-invertible", [&] {
        auto fields = std::vector<FieldSpec>{FieldSpec::rationals(), FieldSpec::prime_field(2),
                                             FieldSpec::prime_field(3)};
        for (const auto& spec : fields)
            for (int m = 1; m <= 3; ++m)
                for (int ell = 1; ell <= 3; ++ell) {
                    auto iso = iso_i(m, ell, spec);
                    if (iso.entries.rows() != iso.entries.cols())
                        return std::string("iso_i matrix is not square");
                    if (iso.entries.determinant().is_zero())
                        return "iso_i singular at m=" + std::to_string(m) + ", ell=" + std::to_string(ell);
                }
        return std::string{};
    });

    ctx.run("iso", "iso-dual-identities", [&] {
        // Both transpose identities, with both standard bases declared
        // mutually dual and dual maps realized as matrix transposes.
        auto fields = std::vector<FieldSpec>{FieldSpec::rationals(), FieldSpec::prime_field(2),
                                             FieldSpec::prime_field(3)};
        for (const auto& spec : fields)
            for (int m = 1; m <= 4; ++m)
                for (int ell = 1; ell <= 4; ++ell) {
                    if (!(hodge_matrix(m, ell, spec).entries ==
                          hodge_matrix(ell, m, spec).entries.transposed()))
                        return "D(m,ell) != D(ell,m)^T at m=" + std::to_string(m) +
                               ", ell=" + std::to_string(ell);
                    if (!(hermite_r(m, ell, spec).entries ==
                          hermite_r(ell, m, spec).entries.transposed()))
                        return "R(m,ell) != R(ell,m)^T at m=" + std::to_string(m) +
                               ", ell=" + std::to_string(ell) + " over " + spec.to_string();
                }
        return std::string{};
    });

    ctx.run("iso", "iso-r-equivariance", [&] {
        // The legs intertwine SL_2 (each twists by a determinant power, so
        // only det-1 elements are tested); the composite R intertwines all
        // of GL_2.
        Rng rng = ctx.rng(44);
        auto fields = ctx.sampled_fields({FieldSpec::rationals(), FieldSpec::prime_field(2),
                                          FieldSpec::prime_field(3)});
        for (const auto& spec : fields)
            for (int trial = 0; trial < 30; ++trial) {
                int m = 1 + static_cast<int>(rng.below(3));
                int ell = 1 + static_cast<int>(rng.below(3));
                SpaceDescriptor src{Shape::DividedOfSym, m, ell, spec};
                auto basis = standard_basis(src);
                SparseVector v = random_vector(rng, src, basis, 2);
                Gl2 up = Gl2{FieldElement::one(spec), random_element(rng, spec),
                             FieldElement::zero(spec), FieldElement::one(spec)};
                Gl2 lo = Gl2{FieldElement::one(spec), FieldElement::zero(spec),
                             random_element(rng, spec), FieldElement::one(spec)};
                Gl2 sl = up * lo;
                if (!(wronskian(gl2_action(sl, v)) == gl2_action(sl, wronskian(v))))
                    return "W is not SL_2-equivariant (m=" + std::to_string(m) + ", ell=" +
                           std::to_string(ell) + ", " + spec.to_string() + ")";
                SparseVector wv = wronskian(v);
                if (!(hodge(gl2_action(sl, wv)) == gl2_action(sl, hodge(wv))))
                    return std::string("D is not SL_2-equivariant");
                SparseVector dv = hodge(wv);
                if (!(dual_wronskian(gl2_action(sl, dv)) == gl2_action(sl, dual_wronskian(dv))))
                    return "W* is not SL_2-equivariant (m=" + std::to_string(m) + ", ell=" +
                           std::to_string(ell) + ", " + spec.to_string() + ")";
                Gl2 g = random_gl2(rng, spec);
                auto r = [](const SparseVector& u) { return dual_wronskian(hodge(wronskian(u))); };
                if (!(r(gl2_action(g, v)) == gl2_action(g, r(v))))
                    return "R is not GL_2-equivariant (m=" + std::to_string(m) + ", ell=" +
                           std::to_string(ell) + ", " + spec.to_string() + ")";
            }
        return std::string{};
    });
}

void register_hunter_checks(Ctx& ctx) {
    ctx.run("hunter", "hunter-generator-vs-full-group", [&] {
        auto group = sl_group_closure(2, 2);
        if (group.size() != 6) return std::string("SL_2(F_2) closure has wrong order");
        for (int d = 2; d <= 6; ++d) {
            auto report = fixed_subspace(2, d, 2, SliceCount::One);
            // The group-fixed space is contained in the generator-fixed
            // space by construction; the reverse inclusion is checked
            // against all 36 pairs, so the two nullspaces coincide.
            for (const auto& v : report.fixed_basis)
                for (const auto& g1 : group)
                    for (const auto& g2 : group)
                        if (!(pair_action(g1, g2, v) == v))
                            return "generator-fixed vector moves under the full group at d=" +
                                   std::to_string(d);
        }
        return std::string{};
    });

    ctx.run("hunter", "hunter-closure-containment", [&] {
        for (std::int64_t p : {2, 3})
            for (int d : {2, 4, 6}) {
                auto report = fixed_subspace(2, d, p, SliceCount::One);
                if (report.dim_closure_span != 1)
                    return "det power span should have dimension 1 at d=" + std::to_string(d);
                FieldSpec spec = FieldSpec::prime_field(p);
                Polynomial detpow = determinant(2, Slice::X, spec).pow(d / 2);
                PolyEchelon fixed;
                for (const auto& v : report.fixed_basis) fixed.insert(v);
                if (!fixed.contains(detpow))
                    return "det^{d/2} is not inside the fixed space at p=" + std::to_string(p) +
                           ", d=" + std::to_string(d);
            }
        return std::string{};
    });

    ctx.run("hunter", "hunter-two-slice-strictness", [&] {
        for (std::int64_t p : {2, 3})
            for (int m : {2, 3}) {
                const int d = 2 * m;
                auto report = fixed_subspace(2, d, p, SliceCount::Two);
                std::size_t closure_dim = static_cast<std::size_t>((m + 1) * (m + 2) / 2);
                if (report.dim_closure_span != closure_dim)
                    return "two-slice closure span has wrong dimension at p=" + std::to_string(p) +
                           ", d=" + std::to_string(d);
                PolyEchelon fixed;
                for (const auto& v : report.fixed_basis) fixed.insert(v);
                for (const auto& c : closure_invariant_basis(2, m, FieldSpec::prime_field(p)))
                    if (!fixed.contains(c))
                        return "closure invariant escapes the fixed space at p=" + std::to_string(p);
                if (report.dim_fq_invariants <= report.dim_closure_span)
                    return "two-slice fixed space is not strictly larger at p=" + std::to_string(p) +
                           ", d=" + std::to_string(d);
            }
        return std::string{};
    });

    ctx.run("hunter", "hunter-listed-invariants", [&] {
        auto report = verify_listed_invariants();
        for (const auto& r : report.per_poly)
            if (!r.pass)
                return "listed invariant " + r.id + " failed (fixed=" +
                       std::to_string(r.fixed_ok) + ", span=" + std::to_string(r.in_span_actual) + ")";
        // Negative control: dropping one term must break fixedness.
        FieldSpec f2 = FieldSpec::prime_field(2);
        PolyRing ring{f2, 2, RingKind::PairSlices};
        Polynomial good = parse_invariant_polynomial(
            ring, "A_{2,2} A_{1,1}^2+A_{2,2}^2 A_{1,1}+A_{1,2} A_{2,1}^2+A_{1,2}^2 A_{2,1}");
        Polynomial corrupted = parse_invariant_polynomial(
            ring, "A_{2,2} A_{1,1}^2+A_{2,2}^2 A_{1,1}+A_{1,2} A_{2,1}^2");
        if (!is_fixed_by_generators(good)) return std::string("control invariant is not fixed");
        if (is_fixed_by_generators(corrupted))
            return std::string("corrupted control should not be fixed");
        return std::string{};
    });

    ctx.run("hunter", "hunter-deterministic", [&] {
        auto once = invariant_report_to_json(fixed_subspace(2, 3, 2, SliceCount::One)).dump();
        auto twice = invariant_report_to_json(fixed_subspace(2, 3, 2, SliceCount::One)).dump();
        if (once != twice) return std::string("fixed_subspace output is not deterministic");
        return std::string{};
    });

    ctx.run("hunter", "hunter-lift", [&] {
        FieldSpec f2 = FieldSpec::prime_field(2);
        if (!(lift_invariant(determinant(2, Slice::X, f2), 1) == mixed_determinant(2, 1, f2)))
            return std::string("lift of det_2 at k=1 is not M_2(1)");
        PolyRing ring{f2, 2, RingKind::PairSlices};
        Polynomial d3 = parse_invariant_polynomial(
            ring, "A_{2,2} A_{1,1}^2+A_{2,2}^2 A_{1,1}+A_{1,2} A_{2,1}^2+A_{1,2}^2 A_{2,1}");
        Polynomial lifted = lift_invariant(d3, 1); // throws if not fixed
        int deg = 0;
        if (!lifted.is_homogeneous(&deg) || deg != 3)
            return std::string("lifted invariant has wrong degree");
        return std::string{};
    });
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    Ctx ctx{options, &results};
    register_field_checks(ctx);
    register_partition_checks(ctx);
    register_tensor_checks(ctx);
    register_polyring_checks(ctx);
    register_iso_checks(ctx);
    register_hunter_checks(ctx);
    return results;
}

} // namespace hermite
