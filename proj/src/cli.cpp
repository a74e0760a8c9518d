#include "kmoduli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "kmoduli/diagonal.hpp"
#include "kmoduli/errors.hpp"
#include "kmoduli/spectral.hpp"
#include "kmoduli/verify.hpp"

namespace kmoduli::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson int_json(const Int& n) {
    if (n.fits_slong_p()) return ojson(n.get_si());
    return ojson(n.get_str());
}

ojson vec_json(const std::vector<Int>& v) {
    ojson out = ojson::array();
    for (const auto& x : v) out.push_back(int_json(x));
    return out;
}

ojson mat_json(const IntMat& m) {
    ojson out = ojson::array();
    for (const auto& row : m) out.push_back(vec_json(row));
    return out;
}

Int json_to_int(const ojson& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw validation_error(what + " must be an integer");
}

std::vector<Int> json_to_vec(const ojson& j, const std::string& what) {
    if (!j.is_array()) throw validation_error(what + " must be an array");
    std::vector<Int> out;
    for (const auto& x : j) out.push_back(json_to_int(x, what));
    return out;
}

ojson kclass_json(const SurfaceModel& s, const KClass& v) {
    ojson out;
    if (v.parity == Parity::even) {
        out["parity"] = "even";
        out["r"] = int_json(v.r);
        out["c1"] = vec_json(v.c1);
        out["c2"] = int_json(v.c2(s));
    } else {
        out["parity"] = "odd";
        out["h1"] = vec_json(v.h1);
        out["h3"] = vec_json(v.h3);
    }
    return out;
}

KClass kclass_from_json(const SurfaceModel& s, const ojson& j) {
    if (!j.is_object() || !j.contains("parity")) throw validation_error("K-class object needs a 'parity'");
    std::string parity = j["parity"].get<std::string>();
    if (parity == "even") {
        for (const char* f : {"r", "c1", "c2"})
            if (!j.contains(f)) throw validation_error(std::string("even K-class needs '") + f + "'");
        return KClass::even_from_chern(s, json_to_int(j["r"], "r"), json_to_vec(j["c1"], "c1"),
                                       json_to_int(j["c2"], "c2"));
    }
    if (parity == "odd") {
        for (const char* f : {"h1", "h3"})
            if (!j.contains(f)) throw validation_error(std::string("odd K-class needs '") + f + "'");
        return KClass::odd_from_ch(s, json_to_vec(j["h1"], "h1"), json_to_vec(j["h3"], "h3"));
    }
    throw validation_error("parity must be 'even' or 'odd'");
}

// "r,c1...,ch2" with exact rational entries; a single middle entry is
// accepted for any surface when it is 0 (the zero H^2 vector) or when
// h2_rank = 1.
KClass parse_class_flag(const SurfaceModel& s, const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() < 3) throw validation_error("class '" + text + "' needs at least r,c1,ch2");
    Rat r = parse_rat(parts.front());
    Rat ch2 = parse_rat(parts.back());
    if (!is_integer(r)) throw validation_error("rank must be an integer");
    std::size_t mid = parts.size() - 2;
    std::vector<Int> c1(static_cast<std::size_t>(s.h2_rank), 0);
    if (mid == static_cast<std::size_t>(s.h2_rank)) {
        for (std::size_t i = 0; i < mid; ++i) {
            Rat q = parse_rat(parts[i + 1]);
            if (!is_integer(q)) throw validation_error("c1 entries must be integers");
            c1[i] = q.get_num();
        }
    } else if (mid == 1 && parse_rat(parts[1]) == 0) {
        // zero vector shorthand
    } else
        throw validation_error("class '" + text + "' has " + std::to_string(mid) + " c1 entries; surface '" +
                               s.name + "' needs " + std::to_string(s.h2_rank) + " (or a single 0)");
    return KClass::even_from_ch(s, r.get_num(), std::move(c1), ch2);
}

std::vector<Int> parse_h2_flag(const SurfaceModel& s, const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (out.size() != static_cast<std::size_t>(s.h2_rank))
        throw validation_error("H^2 vector needs " + std::to_string(s.h2_rank) + " entries");
    return out;
}

ojson surface_json(const SurfaceModel& s) {
    ojson out;
    out["name"] = s.name;
    out["b1"] = s.b1;
    out["h2_rank"] = s.h2_rank;
    out["intersection_form"] = mat_json(s.intersection_form);
    out["odd_pairing"] = mat_json(s.odd_pairing);
    out["canonical_class"] = vec_json(s.canonical_class);
    out["euler_number"] = int_json(s.euler_number);
    return out;
}

ojson surface_report(const SurfaceModel& s) {
    ojson out = surface_json(s);
    ojson todd1 = ojson::array();
    for (const auto& q : s.todd1) todd1.push_back(rat_str(q));
    out["todd1"] = todd1;
    out["todd2"] = rat_str(s.todd2);
    out["chi_O"] = rat_str(s.chi_structure_sheaf());
    out["K_square"] = int_json(s.k_square());
    out["det_intersection_form"] = int_json(det(s.intersection_form));
    if (s.b1 > 0) out["det_odd_pairing"] = int_json(det(s.odd_pairing));
    return out;
}

ojson decomposition_json(const SurfaceModel& s, const DiagonalDecomposition& dec) {
    ojson pairs = ojson::array();
    for (const auto& p : dec.pairs) {
        ojson pair;
        pair["coeff"] = int_json(p.coeff);
        pair["x"] = kclass_json(s, p.x);
        pair["y"] = kclass_json(s, p.y);
        pairs.push_back(pair);
    }
    return pairs;
}

ojson dual_check_json(const DualCheck& check) {
    ojson out;
    out["ok"] = check.ok;
    out["chi_matrix"] = mat_json(check.chi_matrix);
    out["weighted_matrix"] = mat_json(check.weighted_matrix);
    return out;
}

ojson read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot read '" + path + "'");
    try {
        return ojson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error("'" + path + "' is not valid JSON: " + std::string(e.what()));
    }
}

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw validation_error("parity must be 'even' or 'odd'");
}

// ---- subcommand handlers ---------------------------------------------------

ojson cmd_surface(const std::string& spec) {
    ojson out;
    out["command"] = "surface";
    out["surface"] = surface_report(build_surface(spec));
    return out;
}

ojson cmd_chi(const std::string& surface, const std::string& vflag) {
    SurfaceModel s = build_surface(surface);
    KClass v = parse_class_flag(s, vflag);
    ojson out;
    out["command"] = "chi";
    out["surface"] = s.name;
    out["v"] = kclass_json(s, v);
    out["chi"] = int_json(euler_chi(s, v));
    return out;
}

ojson cmd_mukai(const std::string& surface, const std::string& xflag, const std::string& yflag) {
    SurfaceModel s = build_surface(surface);
    KClass x = parse_class_flag(s, xflag), y = parse_class_flag(s, yflag);
    ojson out;
    out["command"] = "mukai";
    out["surface"] = s.name;
    out["x"] = kclass_json(s, x);
    out["y"] = kclass_json(s, y);
    out["mukai"] = int_json(mukai_pair(s, x, y));
    return out;
}

ojson cmd_dualbasis(const std::string& surface, const std::string& basis_file) {
    SurfaceModel s = build_surface(surface);
    std::vector<KClass> basis;
    if (!basis_file.empty()) {
        ojson j = read_json_file(basis_file);
        if (!j.is_array()) throw validation_error("basis file must hold a JSON array of K-classes");
        for (const auto& e : j) basis.push_back(kclass_from_json(s, e));
    } else if (s.name == "P2") {
        for (Int k = 1; k <= 3; ++k) basis.push_back(KClass::line_bundle(s, {-k}));
    } else
        basis = standard_even_basis(s);
    DualBasisResult res = gram_and_dual_basis(s, basis);
    ojson out;
    out["command"] = "dualbasis";
    out["surface"] = s.name;
    ojson bj = ojson::array();
    for (const auto& b : basis) bj.push_back(kclass_json(s, b));
    out["basis"] = bj;
    out["gram"] = mat_json(res.gram);
    ojson dj = ojson::array();
    for (const auto& d : res.dual) dj.push_back(kclass_json(s, d));
    out["dual"] = dj;
    out["dual_coefficients"] = mat_json(res.dual_coefficients);
    return out;
}

ojson cmd_dim(const std::string& surface, const std::string& vflag, int epsilon) {
    SurfaceModel s = build_surface(surface);
    KClass v = parse_class_flag(s, vflag);
    ojson out;
    out["command"] = "dim";
    out["surface"] = s.name;
    out["v"] = kclass_json(s, v);
    out["epsilon"] = epsilon;
    out["chi_v_dual_v"] = int_json(euler_chi(s, kcup(s, dual(v), v)));
    out["expected_dim"] = int_json(expected_dim(s, v, epsilon));
    bool prim = !v.is_zero() && primitive(s, v);
    out["primitive"] = prim;
    if (!prim) out["warning"] = "class is not primitive; the dimension formula assumes primitivity";
    return out;
}

ojson cmd_obstruction(const std::string& surface, const std::string& vflag) {
    SurfaceModel s = build_surface(surface);
    KClass v = parse_class_flag(s, vflag);
    Int n = universal_obstruction(s, v);
    ojson out;
    out["command"] = "obstruction";
    out["surface"] = s.name;
    out["v"] = kclass_json(s, v);
    out["n"] = int_json(n);
    out["universal_sheaf"] = n == 1 ? "exists" : "obstructed";
    return out;
}

ojson cmd_hilbert(const std::string& surface, const std::string& vflag, const std::string& hflag) {
    SurfaceModel s = build_surface(surface);
    KClass v = parse_class_flag(s, vflag);
    std::vector<Int> ample =
        hflag.empty() && s.h2_rank == 1 ? std::vector<Int>{1} : parse_h2_flag(s, hflag);
    HilbertPoly p = hilbert_poly(s, v, ample);
    ojson out;
    out["command"] = "hilbert";
    out["surface"] = s.name;
    out["v"] = kclass_json(s, v);
    out["H"] = vec_json(ample);
    out["coefficients"] = ojson{{"n2", rat_str(p.a2)}, {"n1", rat_str(p.a1)}, {"n0", rat_str(p.a0)}};
    out["support_dim"] = p.d;
    out["l0"] = int_json(p.l0);
    return out;
}

ojson cmd_stability(const std::string& surface, const std::string& pflag, const std::string& qflag,
                    const std::string& hflag) {
    SurfaceModel s = build_surface(surface);
    KClass pv = parse_class_flag(s, pflag), qv = parse_class_flag(s, qflag);
    std::vector<Int> ample =
        hflag.empty() && s.h2_rank == 1 ? std::vector<Int>{1} : parse_h2_flag(s, hflag);
    HilbertPoly p = hilbert_poly(s, pv, ample), q = hilbert_poly(s, qv, ample);
    ojson out;
    out["command"] = "stability";
    out["surface"] = s.name;
    out["p"] = ojson{{"n2", rat_str(p.a2)}, {"n1", rat_str(p.a1)}, {"n0", rat_str(p.a0)}, {"l0", int_json(p.l0)}};
    out["q"] = ojson{{"n2", rat_str(q.a2)}, {"n1", rat_str(q.a1)}, {"n0", rat_str(q.a0)}, {"l0", int_json(q.l0)}};
    out["order"] = to_string(stability_compare(p, q));
    return out;
}

ojson cmd_blowup(const std::string& surface, int steps, const std::string& verify_file) {
    ojson out;
    out["command"] = "blowup";
    if (!verify_file.empty()) {
        ojson j = read_json_file(verify_file);
        if (!j.contains("surface_spec") || !j.contains("pairs"))
            throw validation_error("decomposition file needs 'surface_spec' and 'pairs'");
        SurfaceModel s = surface_from_json_text(j["surface_spec"].dump());
        DiagonalDecomposition dec;
        for (const auto& pj : j["pairs"])
            dec.pairs.push_back({json_to_int(pj.at("coeff"), "coeff"), kclass_from_json(s, pj.at("x")),
                                 kclass_from_json(s, pj.at("y"))});
        out["surface"] = s.name;
        out["reverified"] = true;
        out["verify"] = dual_check_json(verify_dual(s, dec));
        return out;
    }
    if (steps < 0) throw validation_error("steps must be >= 0");
    SurfaceModel s = build_surface(surface);
    DiagonalDecomposition dec = base_diagonal_decomposition(s);
    for (int k = 0; k < steps; ++k) {
        BlowUpResult b = blow_up(s);
        dec = blowup_diagonal_step(dec, b);
        s = b.surface;
    }
    out["surface"] = s.name;
    out["steps"] = steps;
    out["surface_spec"] = surface_json(s);
    out["pairs"] = decomposition_json(s, dec);
    out["verify"] = dual_check_json(verify_dual(s, dec));
    return out;
}

KunnethContext context_from_spec(const ojson& spec, int m_override) {
    int m = m_override;
    if (m <= 0) {
        if (!spec.contains("m") && !spec.contains("surface"))
            throw validation_error("factor spec needs 'm' (or a surface with 'epsilon')");
        if (spec.contains("m")) m = spec["m"].get<int>();
    }

    if (spec.contains("surface")) {
        SurfaceModel s = spec["surface"].is_string() ? build_surface(spec["surface"].get<std::string>())
                                                     : surface_from_json_text(spec["surface"].dump());
        if (!spec.contains("v")) throw validation_error("surface-linked factor spec needs 'v'");
        KClass v = kclass_from_json(s, spec["v"]);
        int epsilon = spec.value("epsilon", 2);
        std::string pairing = spec.value("pairing", "mukai");
        std::vector<KClass> basis;
        if (spec.contains("basis"))
            for (const auto& e : spec["basis"]) basis.push_back(kclass_from_json(s, e));
        else
            basis = standard_even_basis(s);
        std::vector<Int> ranks(basis.size(), 0), ranks_left;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].parity == Parity::even) ranks[i] = 1;
        if (spec.contains("ranks")) ranks = json_to_vec(spec["ranks"], "ranks");
        ranks_left = spec.contains("ranks_left") ? json_to_vec(spec["ranks_left"], "ranks_left") : ranks;
        return moduli_context(s, v, epsilon, pairing == "plain" ? PairingKind::plain : PairingKind::mukai,
                              basis, ranks, ranks_left);
    }

    if (!spec.contains("factors") || !spec.contains("gram"))
        throw validation_error("explicit factor spec needs 'factors' and 'gram'");
    std::vector<FactorSpec> left, right;
    for (const auto& f : spec["factors"]) {
        FactorSpec fs;
        fs.name = f.at("name").get<std::string>();
        fs.parity = parse_parity(f.at("parity").get<std::string>());
        fs.rank = f.contains("rank") ? json_to_int(f["rank"], "rank") : Int(0);
        Int rank_left = f.contains("rank_left") ? json_to_int(f["rank_left"], "rank_left") : fs.rank;
        right.push_back(fs);
        fs.rank = rank_left;
        left.push_back(fs);
    }
    IntMat gram;
    for (const auto& row : spec["gram"]) gram.push_back(json_to_vec(row, "gram"));
    return explicit_context(std::move(left), std::move(right), std::move(gram), m);
}

ojson cmd_diagonal(const std::string& factors_file, int m_override) {
    ojson spec = read_json_file(factors_file);
    KunnethContext ctx = context_from_spec(spec, m_override);
    DiagonalExpansion exp = top_chern_expand(ctx);

    ojson out;
    out["command"] = "diagonal";
    out["m"] = ctx.m;
    out["pairing"] = ctx.pairing;
    out["gram"] = mat_json(ctx.gram);
    out["rank"] = int_json(assembled_rank(ctx));
    if (ctx.expected_rank) {
        out["expected_rank"] = int_json(*ctx.expected_rank);
        out["rank_consistent"] = assembled_rank(ctx) == *ctx.expected_rank;
    }
    ojson terms = ojson::array();
    for (const auto& t : exp.terms) {
        ojson tj;
        tj["coeff"] = int_json(t.coeff);
        tj["alpha"] = monomial_str(ctx.algebra, t.alpha);
        tj["beta"] = monomial_str(ctx.algebra, t.beta);
        tj["bidegree"] = ojson::array({t.deg_alpha, t.deg_beta});
        terms.push_back(tj);
    }
    out["terms"] = terms;
    out["c_m"] = exp.c_m.str();
    // observable but never asserted: for symplectic surfaces this class
    // vanishes on the actual moduli square
    if (ctx.m >= 2) out["c_m_minus_1"] = assembled_chern(ctx, ctx.m - 1).str();
    ojson gens = ojson::array();
    for (const auto& g : generator_report(ctx, exp)) {
        ojson gj;
        gj["alpha"] = g.alpha;
        gj["degree"] = g.degree;
        ojson betas = ojson::array();
        for (const auto& [coeff, beta] : g.betas) betas.push_back(ojson::array({int_json(coeff), beta}));
        gj["betas"] = betas;
        gens.push_back(gj);
    }
    out["generators"] = gens;
    return out;
}

ojson curve_class_json(const CurveKClass& c) {
    return ojson{{"rank", int_json(c.rank)}, {"degree", int_json(c.degree)}};
}

CurveKClass parse_curve_flag(const std::string& text) {
    std::stringstream ss(text);
    std::string r, d;
    if (!std::getline(ss, r, ',') || !std::getline(ss, d, ','))
        throw validation_error("curve class '" + text + "' must be 'rank,degree'");
    return CurveKClass::even(parse_int(r), parse_int(d));
}

ojson cmd_spectral(long g, long delta, const std::string& xflag, const std::string& aflag,
                   const std::string& cflag) {
    RulingGeometry geom = RulingGeometry::make(g, delta);
    ojson out;
    out["command"] = "spectral";
    out["g"] = g;
    out["delta"] = delta;
    out["twist_degree"] = geom.twist_degree();
    out["surface"] = geom.surface.name;

    RuledClass one = RuledClass::even(CurveKClass::even(1, 0), CurveKClass::even(0, 0));
    RuledClass h = RuledClass::even(CurveKClass::even(0, 0), CurveKClass::even(1, 0));
    out["pushforward_of_one"] = curve_class_json(ruling_pushforward(geom, one));
    out["pushforward_of_h"] = curve_class_json(ruling_pushforward(geom, h));
    RuledClass h2 = ruled_mul(geom, h, h);
    out["h_squared"] = ojson{{"a", curve_class_json(h2.a)}, {"c", curve_class_json(h2.c)}};

    if (!aflag.empty() || !cflag.empty()) {
        CurveKClass a = aflag.empty() ? CurveKClass::even(0, 0) : parse_curve_flag(aflag);
        CurveKClass c = cflag.empty() ? CurveKClass::even(0, 0) : parse_curve_flag(cflag);
        RuledClass w = RuledClass::even(a, c);
        ojson wj;
        wj["a"] = curve_class_json(w.a);
        wj["c"] = curve_class_json(w.c);
        wj["pushforward"] = curve_class_json(ruling_pushforward(geom, w));
        wj["surface_class"] = kclass_json(geom.surface, ruled_to_surface(geom, w));
        wj["chi_surface"] = int_json(euler_chi(geom.surface, ruled_to_surface(geom, w)));
        wj["chi_curve_of_pushforward"] = int_json(curve_chi(g, ruling_pushforward(geom, w)));
        out["w"] = wj;
        if (!xflag.empty()) {
            CurveKClass x = parse_curve_flag(xflag);
            out["x"] = curve_class_json(x);
            out["projection_formula"] = projection_formula_check(geom, x, w);
        }
    }
    return out;
}

ojson cmd_verify(const std::string& suite) {
    auto results = verify::run_suite(suite);
    ojson out;
    out["command"] = "verify";
    out["suite"] = suite;
    ojson checks = ojson::array();
    bool all = true;
    for (const auto& r : results) {
        ojson cj;
        cj["suite"] = r.suite;
        cj["criterion"] = r.criterion;
        cj["pass"] = r.pass;
        cj["detail"] = r.detail;
        checks.push_back(cj);
        all = all && r.pass;
    }
    out["checks"] = checks;
    out["all_pass"] = all;
    return out;
}

} // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"kmoduli: exact cohomology, K-theory and diagonal decompositions for Poisson surfaces"};
    app.require_subcommand(1);

    std::string surface_arg, v_arg, x_arg, y_arg, h_arg, basis_file, factors_file, verify_file, suite = "all";
    std::string a_arg, c_arg;
    int epsilon = 2, steps = 1, m_override = 0;
    long g = 0, delta = 0;

    auto* sc_surface = app.add_subcommand("surface", "Describe a builtin surface model or a JSON spec file");
    sc_surface->add_option("spec", surface_arg,
                           "builtin (P2, P1xP1, F<n>, K3, Abelian, Ruled(g,delta)) or spec-file path")
        ->required();

    auto add_surface_opt = [&](CLI::App* sc) {
        sc->add_option("--surface", surface_arg, "surface model")->required();
    };
    const char* class_help = "even class as r,c1...,ch2 (exact rationals; a single 0 is the zero H^2 vector)";

    auto* sc_chi = app.add_subcommand("chi", "Euler characteristic of a class");
    add_surface_opt(sc_chi);
    sc_chi->add_option("--v", v_arg, class_help)->required();

    auto* sc_mukai = app.add_subcommand("mukai", "Mukai pairing -chi(x^dual u y)");
    add_surface_opt(sc_mukai);
    sc_mukai->add_option("--x", x_arg, class_help)->required();
    sc_mukai->add_option("--y", y_arg, class_help)->required();

    auto* sc_dual = app.add_subcommand("dualbasis", "chi-Gram matrix and dual basis of the even lattice");
    add_surface_opt(sc_dual);
    sc_dual->add_option("--basis", basis_file, "JSON array of K-classes (default: a standard basis)");

    auto* sc_dim = app.add_subcommand("dim", "Expected moduli dimension epsilon - chi(v^dual u v)");
    add_surface_opt(sc_dim);
    sc_dim->add_option("--v", v_arg, class_help)->required();
    sc_dim->add_option("--epsilon", epsilon, "2 for symplectic, 1 for non-symplectic Poisson")
        ->required()
        ->check(CLI::Range(1, 2));

    auto* sc_obs = app.add_subcommand("obstruction", "gcd of chi(v u w) over the even lattice");
    add_surface_opt(sc_obs);
    sc_obs->add_option("--v", v_arg, class_help)->required();

    auto* sc_hilb = app.add_subcommand("hilbert", "Hilbert polynomial of a class");
    add_surface_opt(sc_hilb);
    sc_hilb->add_option("--v", v_arg, class_help)->required();
    sc_hilb->add_option("--H", h_arg, "polarization as integer H^2 coordinates (default h when rank 1)");

    auto* sc_stab = app.add_subcommand("stability", "Reduced Hilbert-polynomial comparison");
    add_surface_opt(sc_stab);
    sc_stab->add_option("--p", x_arg, class_help)->required();
    sc_stab->add_option("--q", y_arg, class_help)->required();
    sc_stab->add_option("--H", h_arg, "polarization (default h when rank 1)");

    auto* sc_blow = app.add_subcommand("blowup", "Diagonal decomposition with blow-up steps");
    sc_blow->add_option("--surface", surface_arg, "rational builtin to start from");
    sc_blow->add_option("--steps", steps, "number of blow-up steps (default 1)");
    sc_blow->add_option("--verify-file", verify_file, "re-verify a decomposition report instead");

    auto* sc_diag = app.add_subcommand("diagonal", "Expand the diagonal class into Kunneth pairs");
    sc_diag->add_option("--factors", factors_file, "JSON factor spec")->required();
    sc_diag->add_option("--m", m_override, "override the expansion degree");

    auto* sc_spec = app.add_subcommand("spectral", "Curve K-theory along the ruling of P(K(D)+O)");
    sc_spec->add_option("--g", g, "genus of the base curve")->required();
    sc_spec->add_option("--delta", delta, "degree of the pole divisor D")->required();
    sc_spec->add_option("--x", x_arg, "curve class 'rank,degree'");
    sc_spec->add_option("--a", a_arg, "module coordinate of 1 as 'rank,degree'");
    sc_spec->add_option("--c", c_arg, "module coordinate of h as 'rank,degree'");

    auto* sc_verify = app.add_subcommand("verify", "Run bundled verification suites");
    std::string suite_help = "'all' or one of:";
    for (const auto& name : verify::suite_names()) suite_help += " " + name;
    sc_verify->add_option("--suite", suite, suite_help);

    std::vector<const char*> argv;
    argv.push_back("kmoduli");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::stringstream out;
        out << app.help();
        return {0, out.str()};
    } catch (const CLI::ParseError& e) {
        ojson err;
        err["error"] = e.what();
        return {1, err.dump(2) + "\n"};
    }

    try {
        ojson out;
        if (sc_surface->parsed()) out = cmd_surface(surface_arg);
        else if (sc_chi->parsed()) out = cmd_chi(surface_arg, v_arg);
        else if (sc_mukai->parsed()) out = cmd_mukai(surface_arg, x_arg, y_arg);
        else if (sc_dual->parsed()) out = cmd_dualbasis(surface_arg, basis_file);
        else if (sc_dim->parsed()) out = cmd_dim(surface_arg, v_arg, epsilon);
        else if (sc_obs->parsed()) out = cmd_obstruction(surface_arg, v_arg);
        else if (sc_hilb->parsed()) out = cmd_hilbert(surface_arg, v_arg, h_arg);
        else if (sc_stab->parsed()) out = cmd_stability(surface_arg, x_arg, y_arg, h_arg);
        else if (sc_blow->parsed()) {
            if (verify_file.empty() && surface_arg.empty())
                throw validation_error("blowup needs --surface (or --verify-file)");
            out = cmd_blowup(surface_arg, steps, verify_file);
        } else if (sc_diag->parsed()) out = cmd_diagonal(factors_file, m_override);
        else if (sc_spec->parsed()) out = cmd_spectral(g, delta, x_arg, a_arg, c_arg);
        else if (sc_verify->parsed()) {
            out = cmd_verify(suite);
            return {out["all_pass"].get<bool>() ? 0 : 1, out.dump(2) + "\n"};
        }
        return {0, out.dump(2) + "\n"};
    } catch (const invariant_breach& e) {
        ojson err;
        err["error"] = e.what();
        err["kind"] = "invariant breach";
        return {2, err.dump(2) + "\n"};
    } catch (const validation_error& e) {
        ojson err;
        err["error"] = e.what();
        return {1, err.dump(2) + "\n"};
    }
}

} // namespace kmoduli::cli
