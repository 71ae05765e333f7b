// Command-line front end: exact plethysm/wedge isomorphism matrices,
// Gaussian binomials, mixed determinants, finite-field invariant searches,
// and the full property-verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hermite/invariant_hunter.hpp"
#include "hermite/isomorphisms.hpp"
#include "hermite/json_io.hpp"
#include "hermite/verify.hpp"

namespace {

using namespace hermite;

int run_qbinom(int ell, int m, bool as_json) {
    auto coeffs = gaussian_binomial(ell, m);
    if (as_json) {
        json j{{"ell", ell}, {"m", m}, {"coefficients", coeffs}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            std::cout << (i ? " " : "") << coeffs[i];
        std::cout << "\n";
    }
    return 0;
}

int run_partition_maps(int ell, int m, const std::string& lambda_text, bool as_json) {
    json arr = json::parse(lambda_text);
    Partition lambda = Partition::padded(partition_from_json(arr), m);
    Partition w = tilde_w(lambda, m, ell);
    Partition d = tilde_d(w, m, ell);
    Partition ws = tilde_w_star(d, ell, m);
    Partition expect = Partition::padded(lambda.transposed(), ell);
    bool commutes = ws == expect;
    if (as_json) {
        json j{{"lambda", partition_to_json(lambda)},
               {"tilde_w", partition_to_json(w)},
               {"tilde_d", partition_to_json(d)},
               {"tilde_w_star", partition_to_json(ws)},
               {"transpose", partition_to_json(expect)},
               {"commutes", commutes}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lambda      " << lambda.to_string() << "\n"
                  << "W~          " << w.to_string() << "\n"
                  << "D~ o W~     " << d.to_string() << "\n"
                  << "W~* o D~ o W~ " << ws.to_string() << "\n"
                  << "transpose   " << expect.to_string() << "\n"
                  << (commutes ? "diagram commutes\n" : "diagram DOES NOT commute\n");
    }
    return commutes ? 0 : 1;
}

int run_hermite_matrix(int ell, int m, const FieldSpec& field, bool as_json) {
    LinearMapMatrix r = hermite_r(m, ell, field);
    TriangularityReport rep = check_hermite_triangularity(r);
    FieldElement det = r.entries.determinant();
    json diag = json::array();
    {
        std::map<Partition, std::size_t> row_of;
        for (std::size_t i = 0; i < r.target_basis.size(); ++i) row_of.emplace(r.target_basis[i], i);
        for (std::size_t j = 0; j < r.source_basis.size(); ++j) {
            Partition lt = Partition::padded(r.source_basis[j].transposed(),
                                             r.target_basis[0].slots());
            diag.push_back(r.entries.at(row_of.at(lt), j).to_string());
        }
    }
    if (as_json) {
        json j = linear_map_to_json(r);
        j["unit_triangular"] = rep.unit_triangular;
        j["determinant"] = det.to_string();
        j["diagonal"] = diag;
        if (!rep.unit_triangular) j["violation"] = rep.detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "R(m=" << m << ", ell=" << ell << ") over " << field.to_string() << ": "
                  << r.entries.rows() << "x" << r.entries.cols() << "\n"
                  << "unit triangular: " << (rep.unit_triangular ? "yes" : "no (" + rep.detail + ")")
                  << "\n"
                  << "determinant: " << det.to_string() << "\n"
                  << "diagonal (lambda -> lambda^T positions):";
        for (const auto& d : diag) std::cout << " " << d.get<std::string>();
        std::cout << "\n";
    }
    return rep.unit_triangular ? 0 : 1;
}

int run_mixed_det(int ell, int k, const FieldSpec& field, bool as_json) {
    Polynomial p = mixed_determinant(ell, k, field);
    if (as_json)
        std::cout << polynomial_to_json(p).dump(2) << "\n";
    else
        std::cout << p.to_string() << "\n";
    return 0;
}

int run_k_map(int ell, int m, const FieldSpec& field, bool as_json) {
    LinearMapMatrix k = k_matrix(ell, m, field);
    bool is_identity = true;
    for (std::size_t i = 0; i < k.entries.rows() && is_identity; ++i)
        for (std::size_t j = 0; j < k.entries.cols() && is_identity; ++j)
            if (k.entries.at(i, j).is_one() != (i == j) ||
                (!k.entries.at(i, j).is_zero() && i != j))
                is_identity = false;
    if (as_json) {
        json j = linear_map_to_json(k);
        j["maps_generators_to_generators"] = is_identity;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "K(m=" << m << ", ell=" << ell << ") over " << field.to_string() << ": "
                  << k.entries.rows() << "x" << k.entries.cols() << "\n"
                  << "M(lambda) -> F(lambda) on the whole basis: " << (is_identity ? "yes" : "NO")
                  << "\n";
    }
    return is_identity ? 0 : 1;
}

int run_iso_i(int ell, int m, const FieldSpec& field, bool as_json) {
    LinearMapMatrix iso = iso_i(m, ell, field);
    FieldElement det = iso.entries.determinant();
    if (as_json) {
        json j = linear_map_to_json(iso);
        j["determinant"] = det.to_string();
        j["invertible"] = !det.is_zero();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "I(m=" << m << ", ell=" << ell << ") over " << field.to_string() << ": "
                  << iso.entries.rows() << "x" << iso.entries.cols()
                  << ", determinant " << det.to_string() << "\n";
    }
    return det.is_zero() ? 1 : 0;
}

int run_invariants(int ell, int degree, const FieldSpec& field, const std::string& slices,
                   std::size_t budget, bool as_json) {
    if (field.kind() != FieldKind::PrimeField)
        throw Error("invariant search needs a prime field (--field Fp:<p>)");
    HunterOptions opts;
    opts.monomial_budget = budget;
    SliceCount sc = slices == "two" ? SliceCount::Two : SliceCount::One;
    InvariantReport report = fixed_subspace(ell, degree, field.modulus(), sc, opts);
    if (as_json) {
        std::cout << invariant_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "Sym^" << degree << " over " << field.to_string() << ", ell=" << ell << ", "
                  << (sc == SliceCount::One ? "one slice" : "two slices") << "\n"
                  << "dim fixed space:   " << report.dim_fq_invariants << "\n"
                  << "dim closure span:  " << report.dim_closure_span << "\n"
                  << "extra invariants (mod closure span):\n";
        for (const auto& p : report.extra_basis) std::cout << "  " << p.to_string() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& field_text, std::uint64_t seed,
               bool as_json) {
    VerifyOptions opts;
    opts.suite = suite;
    opts.seed = seed;
    if (!field_text.empty()) opts.field_filter = FieldSpec::parse(field_text);
    auto results = run_verification(opts);

    bool all = true;
    if (as_json) {
        json rows = json::array();
        for (const auto& r : results) {
            rows.push_back(json{{"suite", r.suite},
                                {"name", r.name},
                                {"pass", r.passed},
                                {"detail", r.detail}});
            all = all && r.passed;
        }
        std::cout << json{{"seed", seed}, {"checks", rows}, {"all_pass", all}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::printf("[%s] %-34s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
            all = all && r.passed;
        }
        std::printf("%zu checks, %s\n", results.size(), all ? "all passed" : "FAILURES PRESENT");
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermite-lab: exact plethysm, Wronskian/Hodge/Hermite isomorphisms, and "
                 "finite-field tensor invariants"};
    app.require_subcommand(1);

    std::string field_text = "Q";
    std::string out_mode = "text";
    std::string slices = "one";
    std::string suite = "all";
    std::string lambda_text;
    std::string fixture_path;
    int ell = 2, m = 2, degree = 4, k = 1;
    std::uint64_t seed = 0;
    std::size_t budget = 2'000'000;

    auto add_common = [&](CLI::App* cmd, bool with_field = true) {
        cmd->add_option("--out", out_mode, "Output mode: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_field) cmd->add_option("--field", field_text, "Field: Q or Fp:<prime>");
    };

    auto* qb = app.add_subcommand("qbinom", "Gaussian binomial coefficient list");
    qb->add_option("--ell", ell)->required();
    qb->add_option("--m", m)->required();
    add_common(qb, false);

    auto* pm = app.add_subcommand("partition-maps", "Apply the staircase/complement partition maps");
    pm->add_option("--ell", ell)->required();
    pm->add_option("--m", m)->required();
    pm->add_option("--lambda", lambda_text, "Partition as JSON array, e.g. [4,2,2,1]")->required();
    add_common(pm, false);

    auto* hm = app.add_subcommand("hermite-matrix", "Hermite reciprocity matrix with triangularity verdict");
    hm->add_option("--ell", ell)->required();
    hm->add_option("--m", m)->required();
    add_common(hm);

    auto* md = app.add_subcommand("mixed-det", "Mixed determinant generator M_ell(k)");
    md->add_option("--ell", ell)->required();
    md->add_option("--k", k)->required();
    add_common(md);

    auto* km = app.add_subcommand("k-map", "Kronecker-plethysm isomorphism matrix");
    km->add_option("--ell", ell)->required();
    km->add_option("--m", m)->required();
    add_common(km);

    auto* ii = app.add_subcommand("iso-i", "Tensor-invariant isomorphism matrix");
    ii->add_option("--ell", ell)->required();
    ii->add_option("--m", m)->required();
    add_common(ii);

    auto* inv = app.add_subcommand("invariants", "Fixed subspace over a finite field");
    inv->add_option("--ell", ell)->required();
    inv->add_option("--degree", degree)->required();
    inv->add_option("--slices", slices, "one or two")->check(CLI::IsMember({"one", "two"}));
    inv->add_option("--budget", budget, "Monomial-space budget");
    add_common(inv);

    auto* ver = app.add_subcommand("verify", "Run the property-verification suite");
    ver->add_option("--suite", suite,
                    "all, field, partitions, tensor, polyring, iso, or hunter")
        ->check(CLI::IsMember({"all", "field", "partitions", "tensor", "polyring", "iso", "hunter"}));
    ver->add_option("--seed", seed, "Seed for randomized checks");
    ver->add_option("--field", field_text, "Restrict field-generic randomized checks");
    ver->add_option("--out", out_mode)->check(CLI::IsMember({"text", "json"}));

    auto* listed = app.add_subcommand("listed-invariants", "Verify the bundled low-degree invariant listings");
    listed->add_option("--fixture", fixture_path, "Fixture JSON path (default: embedded)");
    add_common(listed, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        bool as_json = out_mode == "json";
        if (qb->parsed()) return run_qbinom(ell, m, as_json);
        if (pm->parsed()) return run_partition_maps(ell, m, lambda_text, as_json);
        if (hm->parsed()) return run_hermite_matrix(ell, m, FieldSpec::parse(field_text), as_json);
        if (md->parsed()) return run_mixed_det(ell, k, FieldSpec::parse(field_text), as_json);
        if (km->parsed()) return run_k_map(ell, m, FieldSpec::parse(field_text), as_json);
        if (ii->parsed()) return run_iso_i(ell, m, FieldSpec::parse(field_text), as_json);
        if (inv->parsed())
            return run_invariants(ell, degree, FieldSpec::parse(field_text), slices, budget, as_json);
        if (ver->parsed()) {
            std::string filter = ver->count("--field") ? field_text : "";
            return run_verify(suite, filter, seed, as_json);
        }
        if (listed->parsed()) {
            ListedInvariantsReport rep;
            if (fixture_path.empty()) {
                rep = verify_listed_invariants();
            } else {
                std::ifstream in(fixture_path);
                if (!in) throw FixtureParseError("cannot open fixture " + fixture_path);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                rep = verify_listed_invariants(text);
            }
            if (as_json) {
                std::cout << listed_invariants_to_json(rep).dump(2) << "\n";
            } else {
                for (const auto& r : rep.per_poly)
                    std::printf("[%s] %-8s fixed=%d in_span=%d (expected %d)\n",
                                r.pass ? "PASS" : "FAIL", r.id.c_str(), r.fixed_ok,
                                r.in_span_actual, r.in_span_expected);
            }
            return rep.all_pass ? 0 : 1;
        }
    } catch (const hermite::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
