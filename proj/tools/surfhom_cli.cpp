// surfhom: factorization homology of surfaces over unitary braided fusion
// categories, at desk scale. Subcommands: verify, refl, surface, reduce, gns.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "surfhom/gluing.hpp"
#include "surfhom/gns.hpp"
#include "surfhom/parallel.hpp"
#include "surfhom/reflection.hpp"

using namespace surfhom;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.3.0";

struct Options {
    std::string category_path;
    std::string builtin;
    std::string pattern;
    std::string format = "json";
    std::string state = "counit";
    std::string candidate;
    double tol = kCheckTol;
    long cap = 10000000;
};

FusionData load_from_options(const Options& opt, json& envelope) {
    FusionData fd;
    if (!opt.builtin.empty()) {
        fd = builtin_category(opt.builtin);
        envelope["category"]["name"] = opt.builtin;
    } else if (!opt.category_path.empty()) {
        fd = load_category_file(opt.category_path);
        envelope["category"]["name"] = opt.category_path;
    } else {
        throw CLI::ValidationError("--category or --builtin is required");
    }
    envelope["category"]["hash"] = fd.content_hash;
    envelope["category"]["simples"] = fd.simples;
    return fd;
}

json envelope_for(const Options& opt, const std::string& command) {
    json j;
    j["tool"] = "surfhom";
    j["version"] = kVersion;
    j["command"] = command;
    j["tolerance"] = {{"check", opt.tol}, {"entry", kEntryTol}};
    return j;
}

json report_json(const ValidationReport& rep, double tol) {
    json checks = json::array();
    bool pass = true;
    for (const auto& e : rep.entries) {
        bool p = e.residual < std::max(e.threshold, tol);
        pass = pass && p;
        checks.push_back({{"name", e.name},
                          {"residual", e.residual},
                          {"threshold", std::max(e.threshold, tol)},
                          {"pass", p}});
    }
    json out;
    out["checks"] = checks;
    out["pass"] = pass;
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    return out;
}

std::string read_pattern(const Options& opt) {
    std::ifstream in(opt.pattern);
    if (in.good()) {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return opt.pattern;
}

int emit(const json& j) {
    std::cout << j.dump(2) << "\n";
    return j.value("pass", true) ? 0 : 1;
}

json ground_table_json(const ReflectionAlgebra& F) {
    auto table = ground_multiplication_table(F);
    json rows = json::array();
    for (long x = 0; x < F.ground_dim(); ++x)
        for (long y = 0; y < F.ground_dim(); ++y) {
            json entry;
            entry["left"] = F.fd->simples[F.ground_basis[x]];
            entry["right"] = F.fd->simples[F.ground_basis[y]];
            json coeffs = json::array();
            for (long z = 0; z < F.ground_dim(); ++z) {
                cplx c = table[z](x, y);
                if (std::abs(c) > 1e-12)
                    coeffs.push_back({{"simple", F.fd->simples[F.ground_basis[z]]},
                                      {"re", c.real()},
                                      {"im", c.imag()}});
            }
            entry["coefficients"] = coeffs;
            rows.push_back(entry);
        }
    return rows;
}

int run_verify(const Options& opt) {
    json j = envelope_for(opt, "verify");
    FusionData fd = load_from_options(opt, j);
    auto rep = fd.verify(thread_budget());
    j["report"] = report_json(rep, opt.tol);
    j["qdim"] = json::object();
    for (int i = 0; i < fd.rank(); ++i) j["qdim"][fd.simples[i]] = fd.qdim[i];
    j["twist"] = json::object();
    for (int i = 0; i < fd.rank(); ++i)
        j["twist"][fd.simples[i]] = {fd.twist[i].real(), fd.twist[i].imag()};
    j["global_dim"] = fd.global_dim();
    j["pass"] = j["report"]["pass"];
    return emit(j);
}

int run_refl(const Options& opt) {
    json j = envelope_for(opt, "refl");
    FusionData fd = load_from_options(opt, j);
    ReflectionAlgebra F = build_reflection_algebra(fd);

    j["fiber_dims"] = json::object();
    for (int U = 0; U < fd.rank(); ++U) j["fiber_dims"][fd.simples[U]] = F.algebra.fibers[U];
    j["ground_basis"] = json::array();
    for (int X : F.ground_basis) j["ground_basis"].push_back(fd.simples[X]);
    j["ground_table"] = ground_table_json(F);

    auto cstar = check_cstar_algebra(F.algebra);
    auto yd = verify_yd(F.algebra, F.half_braiding);
    auto eps = counit_state_check(F);
    j["cstar"] = report_json(cstar, opt.tol);
    j["yetter_drinfeld"] = report_json(yd, opt.tol);
    j["counit"] = report_json(eps, opt.tol);

    auto norms = r_norms(F);
    j["r_norms"] = json::object();
    for (long x = 0; x < F.ground_dim(); ++x)
        j["r_norms"][fd.simples[F.ground_basis[x]]] = norms[x];

    std::vector<TwistCandidate> cands;
    if (opt.candidate.empty())
        cands = {TwistCandidate::ComponentTwist, TwistCandidate::PairTwist,
                 TwistCandidate::Monodromy};
    else
        cands = {parse_twist_candidate(opt.candidate)};
    json battery = json::array();
    for (auto c : cands) {
        auto mc = verify_mcg(F, c);
        battery.push_back({{"candidate", twist_candidate_name(c)},
                           {"fixes_ground_residual", mc.fixes_ground_residual},
                           {"fixes_ground", mc.fixes_ground()},
                           {"counit_invariance_residual", mc.counit_invariance},
                           {"automorphism_residual", mc.automorphism_residual}});
    }
    j["mcg_battery"] = battery;
    j["pass"] = cstar.pass() && yd.pass() && eps.pass();
    return emit(j);
}

int run_surface(const Options& opt) {
    json j = envelope_for(opt, "surface");
    FusionData fd = load_from_options(opt, j);
    if (opt.pattern.empty()) throw CLI::ValidationError("--pattern is required");
    GluingPattern P = parse_pattern(read_pattern(opt));

    auto dims = a_p_fiber_dims(P, fd, opt.cap);

    if (opt.format == "csv") {
        std::ostringstream out;
        out << "simple,dim\n";
        for (int U = 0; U < fd.rank(); ++U) out << fd.simples[U] << "," << dims[U] << "\n";
        std::cout << out.str();
        return 0;
    }

    j["pattern"] = {{"rank", P.rank}, {"genus", P.genus}, {"boundary", P.boundary_count}};
    json cls = json::array();
    for (int i = 1; i <= P.rank; ++i)
        for (int jj = i + 1; jj <= P.rank; ++jj)
            cls.push_back({{"i", i}, {"j", jj},
                           {"class", pair_class_name(P.classification[i - 1][jj - 1])}});
    j["classification"] = cls;
    j["fiber_dims"] = json::object();
    for (int U = 0; U < fd.rank(); ++U) j["fiber_dims"][fd.simples[U]] = dims[U];

    SurfaceAlgebra AP = build_a_p(P, fd, opt.cap);
    auto rep = check_cstar_algebra(AP.algebra);
    j["cstar"] = report_json(rep, opt.tol);

    GroundAlgebra B = ground_algebra(AP.algebra);
    j["ground_dim"] = B.dimension;
    j["pass"] = rep.pass();
    return emit(j);
}

int run_reduce(const Options& opt) {
    json j = envelope_for(opt, "reduce");
    FusionData fd = load_from_options(opt, j);
    if (opt.pattern.empty()) throw CLI::ValidationError("--pattern is required");
    GluingPattern P = parse_pattern(read_pattern(opt));

    ReflectionAlgebra F = build_reflection_algebra(fd);
    SurfaceAlgebra AP = build_a_p(P, fd, opt.cap);
    ModuleObject boundary = generated_boundary_module(AP, F);
    auto red = closed_surface_reduction(AP, F, boundary);

    j["pattern"] = {{"rank", P.rank}, {"genus", P.genus}, {"boundary", P.boundary_count}};
    j["reduction_dim"] = red.end_dim;
    j["module_residual"] = red.module_residual;
    j["quotient_dims"] = json::object();
    for (auto& [U, m] : red.quotient.mult) j["quotient_dims"][fd.simples[U]] = m;
    j["pass"] = true;
    return emit(j);
}

int run_gns(const Options& opt) {
    json j = envelope_for(opt, "gns");
    FusionData fd = load_from_options(opt, j);

    ReflectionAlgebra F = build_reflection_algebra(fd);
    AlgebraObject* A = &F.algebra;
    SurfaceAlgebra AP;
    if (!opt.pattern.empty()) {
        AP = build_a_p(parse_pattern(read_pattern(opt)), fd, opt.cap);
        A = &AP.algebra;
    }
    GroundAlgebra B = ground_algebra(*A);

    Vec omega(B.dimension);
    if (opt.state == "counit") {
        if (!opt.pattern.empty())
            throw CLI::ValidationError("the named counit state applies to the refl algebra");
        for (long i = 0; i < B.dimension; ++i)
            omega(i) = 1.0 / std::sqrt(fd.qdim[F.ground_basis[i]]);
    } else if (opt.state == "delta") {
        omega = Vec::Zero(B.dimension);
        if (!opt.pattern.empty()) {
            omega = B.unit / B.unit.squaredNorm();  // coefficient along the unit
        } else {
            for (long i = 0; i < B.dimension; ++i)
                if (F.ground_basis[i] == fd.unit) omega(i) = 1.0;
        }
    } else {
        std::stringstream ss(opt.state);
        std::string tok;
        long i = 0;
        while (std::getline(ss, tok, ',') && i < B.dimension) omega(i++) = std::stod(tok);
        if (i != B.dimension)
            throw CLI::ValidationError("state vector needs " + std::to_string(B.dimension) +
                                       " entries");
    }

    GnsResult g = gns(B, omega);
    j["gram_rank"] = g.to_gns.rows();
    j["kernel_dim"] = g.kernel_dim;
    j["faithful"] = g.state_faithful;
    j["rep_injective"] = g.rep_injective;

    // The finite realization ships for symmetric pointed categories.
    bool symmetric = true;
    for (int a = 0; a < fd.rank() && symmetric; ++a)
        for (int b = 0; b < fd.rank() && symmetric; ++b)
            for (int c = 0; c < fd.rank(); ++c) {
                if (fd.N(a, b, c) < 1) continue;
                if (std::abs(fd.R(a, b, c) * fd.R(b, a, c) - 1.0) > 1e-9) {
                    symmetric = false;
                    break;
                }
            }
    bool pointed = true;
    for (int a = 0; a < fd.rank() && pointed; ++a)
        for (int b = 0; b < fd.rank(); ++b) {
            long tot = 0;
            for (int c = 0; c < fd.rank(); ++c) tot += fd.N(a, b, c);
            if (tot != 1) {
                pointed = false;
                break;
            }
        }

    json idres = json::object();
    bool pass = true;
    if (symmetric && pointed && opt.pattern.empty()) {
        RealizationDatum H = regular_pointed_realization(fd);
        auto idrep = weighted_inner_identity_check(*A, omega, H);
        idres = report_json(idrep, opt.tol);
        pass = pass && idrep.pass();
        InclusionRealization inc = realize_inclusion(*A, omega, H);
        j["inclusion"] = {{"ambient_dim", inc.ambient_dim},
                          {"base_dim", inc.base_dim},
                          {"gram_nullity", inc.gram_nullity},
                          {"omega_faithful", inc.omega_faithful},
                          {"expectation_faithful", inc.expectation_faithful},
                          {"unital_residual", inc.unital_residual},
                          {"idempotent_residual", inc.idempotent_residual},
                          {"bimodularity_residual", inc.bimodularity_residual},
                          {"kadison_floor", inc.kadison_floor}};
    } else {
        idres["note"] =
            "realization shipped only for symmetric pointed categories; GNS data reported";
    }
    j["identity_residuals"] = idres;
    j["pass"] = pass;
    return emit(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorization homology of surfaces over braided fusion categories"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_pattern) {
        sub->add_option("--category", opt.category_path, "category description file");
        sub->add_option("--builtin", opt.builtin,
                        "trivial | fib | ising | pointed:<orders>:<bichar>");
        if (needs_pattern) sub->add_option("--pattern", opt.pattern, "gluing pattern text or file");
        sub->add_option("--format", opt.format, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tol", opt.tol, "residual tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--cap", opt.cap, "enumeration cap")->check(CLI::PositiveNumber);
        return sub;
    };

    auto* verify = add_common(app.add_subcommand("verify", "validate category data"), false);
    auto* refl =
        add_common(app.add_subcommand("refl", "reflection equation algebra report"), false);
    refl->add_option("--candidate", opt.candidate, "component-twist | pair-twist | monodromy");
    auto* surface =
        add_common(app.add_subcommand("surface", "surface algebra of a gluing pattern"), true);
    auto* reduce = add_common(
        app.add_subcommand("reduce", "closed surface quantum Hamiltonian reduction"), true);
    auto* gnscmd = add_common(app.add_subcommand("gns", "ground algebra GNS report"), true);
    gnscmd->add_option("--state", opt.state, "counit | delta | comma-separated values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(opt);
        if (refl->parsed()) return run_refl(opt);
        if (surface->parsed()) return run_surface(opt);
        if (reduce->parsed()) return run_reduce(opt);
        if (gnscmd->parsed()) return run_gns(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
