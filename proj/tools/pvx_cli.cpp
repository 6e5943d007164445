// Command-line front end. Reports go to stdout, diagnostics to stderr.
// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid parameters.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvx/pvx.hpp"

namespace {

using pvx::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

struct Args {
    int k = 1;
    int n = 2;
    long r = 1;
    long q = 2;
    std::uint64_t p = 3;
    unsigned s = 1;
    unsigned a = 1;
    unsigned smax = 2;
    long dmax = 8;
    std::optional<std::uint64_t> z0;
    std::uint64_t u = 1;
    std::uint64_t theta = 0;
    std::string format;  // empty: per-command default
    std::string route = "closed_form";
    std::string strategy = "min_degree";
    std::string convention = "signed";
    std::string family = "hypersurface";
    unsigned jobs = 0;
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_code(bool pass) { return pass ? exit_ok : exit_failed; }

pvx::EliminationStrategy parse_strategy(const std::string& s) {
    if (s == "eps") return pvx::EliminationStrategy::eps;
    if (s == "natural") return pvx::EliminationStrategy::natural;
    return pvx::EliminationStrategy::min_degree;
}

// Builds the validated model parameters; throws precondition_error on bad input.
struct Validated {
    pvx::QuiverModel model;
    pvx::OmegaParam omega;
};

Validated validate_family(const Args& a) {
    pvx::QuiverModel model(a.k, a.n);
    pvx::OmegaParam omega(a.r, a.q);
    return {model, omega};
}

void validate_prime(const Args& a, const pvx::OmegaParam& omega, unsigned s) { (void)pvx::PrimeData(a.p, s, omega); }

int cmd_quiver(const Args& a) {
    const pvx::QuiverModel model(a.k, a.n);
    ordered_json j = pvx::document("quiver");
    j.update(pvx::to_json(model));
    emit(j);
    return exit_ok;
}

int cmd_ts(const Args& a) {
    const auto v = validate_family(a);
    const pvx::PrimeData prime(a.p, a.s, v.omega);
    const auto T = pvx::compute_Ts(a.k, a.n, v.omega, prime, parse_strategy(a.strategy));
    ordered_json j = pvx::document("ts");
    j.update(pvx::to_json(T));
    emit(j);
    return exit_ok;
}

ordered_json checks_document(const char* kind, const std::vector<pvx::TheoremReport>& reports, bool& pass) {
    ordered_json j = pvx::document(kind);
    ordered_json arr = ordered_json::array();
    pass = true;
    for (const auto& r : reports) {
        arr.push_back(pvx::to_json(r));
        pass = pass && r.pass;
    }
    j["checks"] = arr;
    j["verdict"] = pass ? "pass" : "fail";
    return j;
}

int cmd_dwork(const Args& a) {
    const auto v = validate_family(a);
    if (a.smax < 1) throw pvx::precondition_error("--smax must be >= 1");
    validate_prime(a, v.omega, a.smax + 1);
    const auto Ts = pvx::compute_Ts_family(a.k, a.n, v.omega, a.p, a.smax + 1);
    const auto conv = a.convention == "unsigned" ? pvx::Convention::unsigned_T : pvx::Convention::signed_T;
    std::vector<pvx::TheoremReport> reports;
    for (unsigned s = 1; s <= a.smax; ++s) reports.push_back(pvx::dwork_check(Ts, s, conv));
    bool pass = false;
    emit(checks_document("dwork", reports, pass));
    return verdict_code(pass);
}

int cmd_ghosts(const Args& a) {
    const auto v = validate_family(a);
    if (a.smax < 1) throw pvx::precondition_error("--smax must be >= 1");
    validate_prime(a, v.omega, a.smax);
    const auto Ts = pvx::compute_Ts_family(a.k, a.n, v.omega, a.p, a.smax);
    const auto G = pvx::ghost_sequence(Ts);
    bool pass = false;
    ordered_json j = checks_document("ghosts", {pvx::ghost_reconstruction_check(Ts, G), pvx::ghost_vanishing_check(G)}, pass);
    ordered_json ghosts = ordered_json::array();
    for (const auto& g : G.G) ghosts.push_back(pvx::coeff_strings(g));
    j["ghosts"] = ghosts;
    emit(j);
    return verdict_code(pass);
}

pvx::VertexSeries rational_vertex(const Args& a, const pvx::OmegaParam& omega, long dmax) {
    if (a.route == "closed_form") {
        if (a.k != 1) throw pvx::precondition_error("the closed-form route needs k = 1");
        return pvx::vertex_closed_form_k1(a.n, omega, dmax);
    }
    if (a.route == "localization") return pvx::vertex_localization(a.k, a.n, omega, dmax);
    if (a.route == "residue") return pvx::vertex_residue(a.k, a.n, omega, dmax);
    throw pvx::precondition_error("unknown vertex route '" + a.route + "'");
}

int cmd_product(const Args& a) {
    const auto v = validate_family(a);
    validate_prime(a, v.omega, a.a);
    if (a.dmax < 0) throw pvx::precondition_error("--dmax must be nonnegative");
    Args b = a;
    if (b.k != 1 && b.route == "closed_form") b.route = "residue";
    const auto V = rational_vertex(b, v.omega, a.dmax);
    const auto Ta = pvx::compute_Ts(a.k, a.n, v.omega, pvx::PrimeData(a.p, a.a, v.omega));
    const auto Tb = a.a == 1 ? pvx::trivial_Ts(Ta.params) : pvx::compute_Ts(a.k, a.n, v.omega, pvx::PrimeData(a.p, a.a - 1, v.omega));
    const auto rep = pvx::infinite_product_check(a.a, a.dmax, pvx::reduce_vertex(V, a.p, a.a), Ta, Tb);
    bool pass = false;
    ordered_json j = checks_document("product-check", {rep}, pass);
    j["vertex_route"] = pvx::to_string(V.route);
    emit(j);
    return verdict_code(pass);
}

int cmd_vertex(const Args& a) {
    const auto v = validate_family(a);
    if (a.dmax < 0) throw pvx::precondition_error("--dmax must be nonnegative");
    ordered_json j = pvx::document("vertex");
    if (a.route == "padic") {
        validate_prime(a, v.omega, a.a);
        j.update(pvx::to_json(pvx::vertex_padic_limit(a.k, a.n, v.omega, a.p, a.a, a.dmax)));
    } else {
        j.update(pvx::to_json(rational_vertex(a, v.omega, a.dmax)));
    }
    emit(j);
    return exit_ok;
}

int cmd_continuation(const Args& a) {
    const auto v = validate_family(a);
    validate_prime(a, v.omega, a.s + 1);
    const auto Ts = pvx::compute_Ts_family(a.k, a.n, v.omega, a.p, a.s + 1);
    const auto D = pvx::domain_units(Ts[1]);
    const auto m = pvx::modular_identity_check(Ts[a.s + 1], Ts[a.s], D);
    const auto bad = pvx::unit_value_violation(Ts[a.s + 1], Ts[a.s], D);
    ordered_json j = pvx::document("continuation");
    j["domain_units"] = D.units;
    j["modular_identity"] = pvx::to_json(m);
    j["unit_values"] = {{"verdict", bad ? "fail" : "pass"}, {"witness", bad ? ordered_json(bad->get_str()) : ordered_json(nullptr)}};
    const bool pass = m.report.pass && !bad;
    j["verdict"] = pass ? "pass" : "fail";
    emit(j);
    return verdict_code(pass);
}

int cmd_points(Args a) {
    if (a.format.empty()) a.format = "json";
    if (a.format != "json" && a.format != "csv") throw pvx::precondition_error("points supports --format json or csv");
    std::vector<pvx::PointCountReport> reports;
    if (a.family == "hypersurface") {
        if (a.r != 1 || a.q != 2) throw pvx::precondition_error("the hypersurface family is defined for omega = 1/2 only");
        validate_prime(a, pvx::OmegaParam(1, 2), 1);
        if (a.z0) reports.push_back(pvx::count_hypersurface(a.n, a.p, *a.z0));
        else
            for (std::uint64_t z = 0; z < a.p; ++z) reports.push_back(pvx::count_hypersurface(a.n, a.p, z));
    } else if (a.family == "curve") {
        if (a.z0) reports.push_back(pvx::count_curve(a.r, a.q, a.p, *a.z0, a.theta));
        else
            for (std::uint64_t z = 2; z < a.p; ++z) reports.push_back(pvx::count_curve(a.r, a.q, a.p, z, a.theta));
    } else {
        throw pvx::precondition_error("--family must be hypersurface or curve");
    }
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    if (a.format == "csv") {
        std::cout << "family,p,params,z0,N,T1_mod_p,M,A,verdict\n";
        for (const auto& r : reports) {
            std::string params, A;
            for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
            for (const auto& x : r.A) A += (A.empty() ? "" : ";") + x.get_str();
            std::cout << r.family << ',' << r.p << ',' << params << ',' << r.z0 << ',' << r.N.get_str() << ','
                      << r.T1_mod_p.get_str() << ',' << (r.M ? r.M->get_str() : "") << ',' << A << ','
                      << (r.pass() ? "pass" : "fail") << "\n";
        }
    } else {
        ordered_json j = pvx::document("points");
        ordered_json rows = ordered_json::array();
        for (const auto& r : reports) rows.push_back(pvx::to_json(r));
        j["rows"] = rows;
        j["verdict"] = pass ? "pass" : "fail";
        emit(j);
    }
    return verdict_code(pass);
}

int cmd_teichmuller(const Args& a) {
    if (a.p < 3 || !pvx::is_prime(a.p)) throw pvx::precondition_error("p must be an odd prime");
    const auto t = pvx::teichmuller_lift(a.u, a.p, a.s);
    ordered_json j = pvx::document("teichmuller");
    j["u"] = a.u;
    j["p"] = a.p;
    j["s"] = a.s;
    j["value"] = t.value().get_str();
    emit(j);
    return exit_ok;
}

int cmd_selftest(const Args& a) {
    if (!a.format.empty() && a.format != "json" && a.format != "text")
        throw pvx::precondition_error("selftest supports --format text or json");
    bool pass = true;
    std::vector<pvx::CriterionResult> results;
    for (const auto& c : pvx::criteria()) {
        results.push_back(c());
        pass = pass && results.back().pass;
    }
    if (a.format == "json") {
        ordered_json j = pvx::document("selftest");
        ordered_json arr = ordered_json::array();
        for (const auto& r : results)
            arr.push_back({{"criterion", r.id}, {"title", r.title}, {"verdict", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
        j["criteria"] = arr;
        j["verdict"] = pass ? "pass" : "fail";
        emit(j);
    } else {
        for (const auto& r : results) std::cout << pvx::format_line(r) << "\n";
    }
    return verdict_code(pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic vertex functions, T_s polynomials and their congruences"};
    app.require_subcommand(1);
    Args a;
    app.add_option("--jobs", a.jobs, "worker threads (default: PVX_JOBS or all cores)");

    auto family_opts = [&a](CLI::App* c) {
        c->add_option("--k", a.k, "rank k");
        c->add_option("--n", a.n, "number of framing directions n");
        c->add_option("--r", a.r, "numerator of omega = r/q");
        c->add_option("--q", a.q, "denominator of omega = r/q");
    };
    auto prime_opt = [&a](CLI::App* c) { c->add_option("--p", a.p, "odd prime with p = 1 mod q"); };

    auto* quiver = app.add_subcommand("quiver", "quiver data");
    auto* show = quiver->add_subcommand("show", "dimensions and variable order");
    quiver->require_subcommand(1);
    show->add_option("--k", a.k, "rank k");
    show->add_option("--n", a.n, "number of framing directions n");

    auto* ts = app.add_subcommand("ts", "compute T_s");
    family_opts(ts);
    prime_opt(ts);
    ts->add_option("--s", a.s, "level s");
    ts->add_option("--strategy", a.strategy, "elimination order")->check(CLI::IsMember({"min_degree", "eps", "natural"}));

    auto* dwork = app.add_subcommand("dwork", "Dwork congruences for s = 1 .. smax");
    family_opts(dwork);
    prime_opt(dwork);
    dwork->add_option("--smax", a.smax, "highest level");
    dwork->add_option("--convention", a.convention, "sign convention")->check(CLI::IsMember({"signed", "unsigned"}));

    auto* ghosts = app.add_subcommand("ghosts", "ghost sequence G_1 .. G_smax and its checks");
    family_opts(ghosts);
    prime_opt(ghosts);
    ghosts->add_option("--smax", a.smax, "highest level");

    auto* product = app.add_subcommand("product-check", "vertex function against the product of T_a mod p^a");
    family_opts(product);
    prime_opt(product);
    product->add_option("--a", a.a, "precision exponent a");
    product->add_option("--dmax", a.dmax, "highest degree");
    product->add_option("--route", a.route, "vertex route")->check(CLI::IsMember({"closed_form", "localization", "residue"}));

    auto* vertex = app.add_subcommand("vertex", "vertex function coefficients");
    family_opts(vertex);
    prime_opt(vertex);
    vertex->add_option("--dmax", a.dmax, "highest degree");
    vertex->add_option("--a", a.a, "precision exponent for the padic route");
    vertex->add_option("--route", a.route, "closed_form | localization | residue | padic")
        ->check(CLI::IsMember({"closed_form", "localization", "residue", "padic"}));

    auto* cont = app.add_subcommand("continuation", "modular identity and unit values of I_s");
    family_opts(cont);
    prime_opt(cont);
    cont->add_option("--s", a.s, "level s");

    auto* points = app.add_subcommand("points", "point counts tied to T_1");
    points->add_option("--family", a.family, "hypersurface | curve")->check(CLI::IsMember({"hypersurface", "curve"}));
    points->add_option("--n", a.n, "hypersurface dimension parameter");
    points->add_option("--r", a.r, "curve exponent r");
    points->add_option("--q", a.q, "curve exponent q");
    prime_opt(points);
    points->add_option("--z0", a.z0, "single value of z (default: all)");
    points->add_option("--theta", a.theta, "generator of F_p^x (default: smallest)");
    points->add_option("--format", a.format, "json | csv");

    auto* teich = app.add_subcommand("teichmuller", "Teichmuller lift of u mod p^s");
    teich->add_option("--u", a.u, "residue in [0, p)");
    prime_opt(teich);
    teich->add_option("--s", a.s, "precision exponent");

    auto* self = app.add_subcommand("selftest", "run the acceptance grid");
    self->add_option("--format", a.format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    if (a.jobs > 0) pvx::set_jobs(a.jobs);

    try {
        if (*quiver) return cmd_quiver(a);
        if (*ts) return cmd_ts(a);
        if (*dwork) return cmd_dwork(a);
        if (*ghosts) return cmd_ghosts(a);
        if (*product) return cmd_product(a);
        if (*vertex) return cmd_vertex(a);
        if (*cont) return cmd_continuation(a);
        if (*points) return cmd_points(a);
        if (*teich) return cmd_teichmuller(a);
        if (*self) return cmd_selftest(a);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_invalid;
}
