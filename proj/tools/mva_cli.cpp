#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mva/c2.hpp"
#include "mva/zhu.hpp"

using namespace mva;

namespace {

struct Config {
    uint32_t p = 3;
    std::string algebra = "virasoro";
    int64_t c = 0;
    int64_t level = 0;
    int64_t mu = 0;
    std::string chi;
    uint64_t max_degree = 9;
    std::string suite = "all";
    std::string output = "text";
    uint64_t seed = 0;
    std::string structure_file;
    bool chi_set = false;
    bool mu_set = false;
};

StructureConstants load_sc(const Config& cfg, const Prime& p) {
    if (cfg.structure_file.empty()) return StructureConstants::sl2(p);
    std::ifstream in(cfg.structure_file);
    if (!in) throw std::runtime_error("cannot open " + cfg.structure_file);
    nlohmann::json j;
    in >> j;
    return StructureConstants::from_json(j, /*validate=*/false);
}

FpVec parse_chi(const std::string& s, const StructureConstants& sc) {
    FpVec chi = zero_vec(sc.dim(), sc.p);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad --chi entry '" + item + "', expected name=value");
        std::string name = item.substr(0, eq);
        int64_t val = std::stoll(item.substr(eq + 1));
        bool found = false;
        for (size_t i = 0; i < sc.dim(); ++i)
            if (sc.names[i] == name) {
                chi[i] = Fp(val, sc.p);
                found = true;
            }
        if (!found) throw std::runtime_error("unknown generator '" + name + "' in --chi");
    }
    return chi;
}

// the (l+1)-dimensional irreducible sl2-module: f v_i = v_{i+1},
// h v_i = (l-2i) v_i, e v_i = i(l+1-i) v_{i-1}
std::vector<std::vector<FpVec>> sl2_irreducible_rho(const Prime& p, uint32_t l) {
    const size_t m = l + 1;
    auto zero = [&] { return std::vector<FpVec>(m, zero_vec(m, p)); };
    auto e = zero(), f = zero(), h = zero();
    for (size_t i = 0; i < m; ++i) {
        if (i > 0)
            e[i - 1][i] = Fp(static_cast<int64_t>(i) * (l + 1 - static_cast<int64_t>(i)), p);
        if (i + 1 < m) f[i + 1][i] = Fp::one(p);
        h[i][i] = Fp(static_cast<int64_t>(l) - 2 * static_cast<int64_t>(i), p);
    }
    return {e, f, h};
}

Gen random_gen(std::mt19937_64& rng, bool affine) {
    if (affine)
        return Gen::affine(static_cast<int32_t>(rng() % 3),
                           static_cast<int64_t>(rng() % 5) - 2);
    return Gen::vir(static_cast<int64_t>(rng() % 7) - 3);
}

Report structure_validation_report(const StructureConstants& sc) {
    Report rep;
    rep.suite = "structure_constants";
    rep.params = {{"p", sc.p.value()}, {"dim", sc.dim()}};
    try {
        sc.validate();
        rep.add("axioms_hold", {}, true);
    } catch (const std::exception& e) {
        rep.add("axioms_hold", {}, false, std::string(e.what()));
    }
    return rep;
}

std::vector<Report> run_suite(const std::string& suite, const Config& cfg) {
    const Prime p(cfg.p);
    const bool aff = cfg.algebra != "virasoro";
    const Fp c(cfg.c, p);
    const Fp level(cfg.level, p);
    std::vector<Report> out;

    if (suite == "appendix") {
        out.push_back(verify_appendix_identities(p, -12, 12, -12, 12, 10));
    } else if (suite == "lucas") {
        out.push_back(verify_lucas_lemma(p, 25, 25));
    } else if (suite == "restricted") {
        if (aff) {
            StructureConstants sc = load_sc(cfg, p);
            Report val = structure_validation_report(sc);
            bool valid = val.all_pass();
            out.push_back(std::move(val));
            if (valid) {
                AffineAlgebra g(sc);
                out.push_back(verify_restricted_axioms(g, 2));
                out.push_back(verify_b_module_lie(g, 2, 3));
            }
        } else {
            VirasoroAlgebra vir(p);
            out.push_back(verify_restricted_axioms(vir, 8));
            out.push_back(verify_b_module_lie(vir, 4, 3));
        }
    } else if (suite == "cmn") {
        std::mt19937_64 rng(cfg.seed);
        std::unique_ptr<LieAlgebra> alg;
        if (aff)
            alg = std::make_unique<AffineAlgebra>(load_sc(cfg, p));
        else
            alg = std::make_unique<VirasoroAlgebra>(p);
        UEA U(*alg);
        Report rep;
        rep.suite = "cmn_random";
        rep.params = {{"p", p.value()}, {"seed", cfg.seed}, {"trials", 5}};
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<UEAElement> a;
            for (uint32_t i = 0; i < p.value(); ++i)
                a.push_back(U.gen_elem(random_gen(rng, aff)));
            Report r = cmn_identity_check(U, a);
            rep.add("symmetrization_trial" + std::to_string(trial), r.params,
                    r.all_pass());
            std::vector<UEAElement> pair = {a[0], a[1]};
            std::vector<uint32_t> parts = {p.value() - 1, 1};
            Report rm = cmn_multiset_check(U, pair, parts);
            rep.add("multiset_trial" + std::to_string(trial), rm.params, rm.all_pass());
        }
        out.push_back(std::move(rep));
    } else if (suite == "pcenter-field") {
        if (aff) {
            StructureConstants sc = load_sc(cfg, p);
            AffineAlgebra g(sc);
            const uint64_t N = 2 * p.value() + 2;
            Module V = Module::vacuum(g, {N, level});
            ModeEngine E(V);
            FpVec a = zero_vec(sc.dim(), p);
            a[0] = Fp::one(p);
            out.push_back(check_power_field(E, a, 1, p.value(), 2));
        } else {
            VirasoroAlgebra vir(p);
            const uint64_t N = 3 * p.value() + 2;
            Module V = Module::vacuum(vir, {std::max(cfg.max_degree, N), c});
            ModeEngine E(V);
            out.push_back(check_virasoro_pcenter_field(E, 2, p.value(), 2));
            out.push_back(check_dnv_corollary(E, 2, p.value()));
            out.push_back(check_dnv_corollary(E, 2, 1));
        }
    } else if (suite == "zhu-vir") {
        out.push_back(verify_zhu_vir(p, c, p.value() == 3 ? 3 : 2, cfg.seed));
    } else if (suite == "zhu-affine") {
        out.push_back(verify_zhu_affine(load_sc(cfg, p), level, 2, cfg.seed));
    } else if (suite == "c2") {
        if (aff) {
            StructureConstants sc = load_sc(cfg, p);
            out.push_back(verify_c2_cofinite_affine(sc, level, p.value() + 2));
            AffineAlgebra g(sc);
            Module V = Module::vacuum(g, {5, level});
            ModeEngine E(V);
            out.push_back(verify_c2_quotient_algebra(E, 5, cfg.seed));
        } else {
            out.push_back(verify_c2_cofinite_vir(p, c,
                                                 std::max<uint64_t>(cfg.max_degree,
                                                                    2 * p.value() + 2)));
            VirasoroAlgebra vir(p);
            Module V = Module::vacuum(vir, {8, c});
            ModeEngine E(V);
            out.push_back(verify_c2_quotient_algebra(E, 8, cfg.seed));
        }
    } else if (suite == "singular") {
        for (uint64_t l = 0; l <= 2; ++l)
            out.push_back(verify_singular_vectors_sl2(p, l));
    } else if (suite == "axioms") {
        std::mt19937_64 rng(cfg.seed);
        std::unique_ptr<LieAlgebra> alg;
        if (aff)
            alg = std::make_unique<AffineAlgebra>(load_sc(cfg, p));
        else
            alg = std::make_unique<VirasoroAlgebra>(p);
        const uint64_t N = aff ? 7 : 10;
        Module V = Module::vacuum(*alg, {N, aff ? level : c});
        ModeEngine E(V);
        auto rand_vec = [&](uint64_t dmax) {
            for (;;) {
                uint64_t d = rng() % (dmax + 1);
                if (V.dim(d) == 0) continue;
                ModuleVector v;
                v.add(V.basis(d)[rng() % V.dim(d)], Fp::one(p));
                return v;
            }
        };
        for (int trial = 0; trial < 4; ++trial) {
            ModuleVector u = rand_vec(3), v = rand_vec(3), w = rand_vec(2);
            Report rs = check_skew_symmetry(E, u, v, 3);
            rs.params["trial"] = trial;
            out.push_back(std::move(rs));
            Report rj = check_jacobi_coefficient(E, u, v, w, 2);
            rj.params["trial"] = trial;
            out.push_back(std::move(rj));
        }
        out.push_back(check_conjugation(E, rand_vec(3), 2, 2, 3));
    } else {
        throw std::runtime_error("unknown suite '" + suite + "'");
    }
    return out;
}

int cmd_verify(const Config& cfg) {
    std::vector<std::string> suites;
    if (cfg.suite == "all") {
        const bool aff = cfg.algebra != "virasoro";
        suites = {"appendix", "lucas", "restricted", "cmn", "pcenter-field", "c2",
                  "axioms"};
        if (aff) {
            suites.push_back("zhu-affine");
            suites.push_back("singular");
        } else {
            suites.push_back("zhu-vir");
        }
    } else {
        suites = {cfg.suite};
    }

    std::vector<Report> reports;
    for (const auto& s : suites)
        for (auto& r : run_suite(s, cfg)) reports.push_back(std::move(r));

    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_pass();

    if (cfg.output == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(r.to_json());
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
        std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_dims(const Config& cfg) {
    const Prime p(cfg.p);
    const bool aff = cfg.algebra != "virasoro";
    const uint64_t N = cfg.max_degree;
    std::unique_ptr<LieAlgebra> alg;
    StructureConstants sc{p, {}, {}, {}, {}};
    if (aff) {
        sc = load_sc(cfg, p);
        alg = std::make_unique<AffineAlgebra>(sc);
    } else {
        alg = std::make_unique<VirasoroAlgebra>(p);
    }
    Module V = Module::vacuum(*alg, {N, Fp(aff ? cfg.level : cfg.c, p)});

    IdealDescription ideal = aff ? IdealDescription::jchi(cfg.chi_set
                                                              ? parse_chi(cfg.chi, sc)
                                                              : zero_vec(sc.dim(), p))
                                 : IdealDescription::imu(Fp(cfg.mu, p));
    const bool graded = ideal.is_graded(p);

    std::vector<size_t> vdim, idim, qdim, jdim, ldim;
    for (uint64_t d = 0; d <= N; ++d) vdim.push_back(V.dim(d));

    if (graded) {
        GradedSubspace I = ideal_graded_span(V, ideal);
        QuotientModule Q(std::move(V), I);
        GradedSubspace rad = maximal_graded_submodule(Q);
        for (uint64_t d = 0; d <= N; ++d) {
            idim.push_back(I.dim(d));
            qdim.push_back(vdim[d] - I.dim(d));
            jdim.push_back(rad.dim(d) - I.dim(d));  // radical inside V0
            ldim.push_back(vdim[d] - rad.dim(d));
        }
    } else {
        std::vector<size_t> filt = ideal_filtration_dims(V, ideal);
        for (uint64_t d = 0; d <= N; ++d) {
            size_t fd = d < filt.size() ? filt[d] : 0;
            idim.push_back(fd);
            qdim.push_back(vdim[d] - fd);
        }
    }

    if (cfg.output == "csv") {
        std::cout << "degree,V,ideal,V0,J,L\n";
        for (uint64_t d = 0; d <= N; ++d) {
            std::cout << d << "," << vdim[d] << "," << idim[d] << "," << qdim[d] << ",";
            if (graded)
                std::cout << jdim[d] << "," << ldim[d];
            else
                std::cout << "-,-";
            std::cout << "\n";
        }
    } else if (cfg.output == "json") {
        nlohmann::json j;
        j["p"] = p.value();
        j["algebra"] = cfg.algebra;
        j["max_degree"] = N;
        j["V"] = vdim;
        j["ideal"] = idim;
        j["V0"] = qdim;
        if (graded) {
            j["J"] = jdim;
            j["L"] = ldim;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "degree   V    ideal  V0    J     L\n";
        for (uint64_t d = 0; d <= N; ++d) {
            char buf[96];
            if (graded)
                std::snprintf(buf, sizeof buf, "%-8lu %-4zu %-6zu %-5zu %-5zu %zu",
                              static_cast<unsigned long>(d), vdim[d], idim[d], qdim[d],
                              jdim[d], ldim[d]);
            else
                std::snprintf(buf, sizeof buf, "%-8lu %-4zu %-6zu %-5zu -     -",
                              static_cast<unsigned long>(d), vdim[d], idim[d], qdim[d]);
            std::cout << buf << "\n";
        }
        if (!graded)
            std::cout << "(ideal not graded: dims organized by top degree; no graded "
                         "radical)\n";
    }
    return 0;
}

int cmd_classify(const Config& cfg) {
    const Prime p(cfg.p);
    nlohmann::json rows = nlohmann::json::array();
    if (cfg.algebra == "virasoro") {
        VirasoroAlgebra vir(p);
        const uint64_t N = std::min<uint64_t>(cfg.max_degree, 6);
        for (uint32_t n = 0; n < p.value(); ++n) {
            QuotientModule W =
                build_graded_module_vir(vir, {N, Fp(cfg.c, p)}, Fp(n, p));
            nlohmann::json row;
            row["module"] = "L_Vir(c," + std::to_string(n) + ")";
            row["lambda"] = n;
            std::vector<size_t> dims;
            for (uint64_t d = 0; d <= N; ++d) dims.push_back(W.dim(d));
            row["dims"] = dims;
            rows.push_back(row);
        }
    } else {
        Report r = classify_irreducibles_u_sl2(p);
        if (!r.all_pass()) {
            std::cerr << r.to_text();
            return 1;
        }
        AffineAlgebra g(StructureConstants::sl2(p));
        const uint64_t N = std::min<uint64_t>(cfg.max_degree, 4);
        for (uint32_t l = 0; l < p.value(); ++l) {
            QuotientModule W = build_graded_module_affine(
                g, {N, Fp(cfg.level, p)}, sl2_irreducible_rho(p, l));
            nlohmann::json row;
            row["module"] = "L_g(l,L(" + std::to_string(l) + "))";
            row["lambda"] = l;
            row["u_sl2_dim"] = l + 1;
            std::vector<size_t> dims;
            for (uint64_t d = 0; d <= N; ++d) dims.push_back(W.dim(d));
            row["dims"] = dims;
            rows.push_back(row);
        }
    }

    if (cfg.output == "json") {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << row["module"].get<std::string>() << "  dims (";
            const auto& dims = row["dims"];
            for (size_t i = 0; i < dims.size(); ++i)
                std::cout << dims[i].get<size_t>() << (i + 1 < dims.size() ? "," : "");
            std::cout << ")\n";
        }
        std::cout << rows.size() << " modules\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular vertex algebra toolkit: verification suites, graded "
                 "dimensions, and module classification over F_p"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "odd prime modulus")->default_val(3);
        sub->add_option("--algebra", cfg.algebra, "virasoro | sl2 | custom")
            ->default_val("virasoro");
        sub->add_option("--c", cfg.c, "central charge (virasoro)");
        sub->add_option("--level", cfg.level, "level (affine)");
        sub->add_option("--max-degree", cfg.max_degree, "truncation degree")
            ->default_val(9);
        sub->add_option("--output", cfg.output, "text | json | csv")
            ->default_val("text");
        sub->add_option("--seed", cfg.seed, "seed for randomized sampling")
            ->default_val(0);
        sub->add_option("--structure-file", cfg.structure_file,
                        "structure-constants file (custom algebra)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", cfg.suite,
                       "appendix | lucas | restricted | cmn | pcenter-field | "
                       "zhu-vir | zhu-affine | c2 | singular | axioms | all")
        ->default_val("all");

    CLI::App* dims = app.add_subcommand("dims", "graded dimensions of V, ideal, V0, J, L");
    add_common(dims);
    auto* muopt = dims->add_option("--mu", cfg.mu, "I_mu parameter (virasoro)");
    auto* chiopt = dims->add_option("--chi", cfg.chi, "J_chi assignments, e.g. e=0,h=1");

    CLI::App* classify = app.add_subcommand("classify", "list irreducible modules");
    add_common(classify);

    CLI11_PARSE(app, argc, argv);

    cfg.mu_set = muopt->count() > 0;
    cfg.chi_set = chiopt->count() > 0;

    try {
        const bool aff = cfg.algebra != "virasoro";
        if (cfg.algebra != "virasoro" && cfg.algebra != "sl2" && cfg.algebra != "custom")
            throw std::runtime_error("unknown algebra '" + cfg.algebra + "'");
        if (cfg.algebra == "custom" && cfg.structure_file.empty())
            throw std::runtime_error("--algebra custom requires --structure-file");
        if (!aff && cfg.chi_set)
            throw std::runtime_error("--chi is only meaningful for affine algebras");
        if (aff && cfg.mu_set)
            throw std::runtime_error("--mu is only meaningful for the Virasoro algebra");
        if (cfg.output != "text" && cfg.output != "json" && cfg.output != "csv")
            throw std::runtime_error("unknown output format '" + cfg.output + "'");
        if (cfg.output == "csv" && !dims->parsed())
            throw std::runtime_error("csv output is limited to the dims command");

        if (verify->parsed()) return cmd_verify(cfg);
        if (dims->parsed()) return cmd_dims(cfg);
        return cmd_classify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
        return 2;
    }
}
