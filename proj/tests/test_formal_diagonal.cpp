#include <doctest.h>

#include <random>

#include "kmoduli/diagonal.hpp"
#include "kmoduli/errors.hpp"

using namespace kmoduli;

namespace {

// elementary symmetric polynomials of a root list, in the roots' algebra
std::vector<Poly> elementary(const VarTablePtr& t, const std::vector<Poly>& roots) {
    std::vector<Poly> e(roots.size() + 1, Poly::constant(t, 0));
    e[0] = Poly::constant(t, 1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t k = std::min(i + 1, roots.size()); k >= 1; --k) e[k] += e[k - 1] * roots[i];
    return e;
}

} // namespace

TEST_CASE("context construction") {
    FormalContext fc = FormalContext::single({{"e1", Parity::even, 1}, {"e2", Parity::even, 2}}, 2);
    CHECK(!fc.chern_var(0, 0, 2).is_zero());  // c_1(e1)
    CHECK(!fc.chern_var(0, 0, 4).is_zero());  // c_2(e1)
    CHECK(fc.chern_var(0, 0, 6).is_zero());   // beyond the cap
    CHECK(fc.chern_var(0, 0, 1).is_zero());   // wrong parity

    FormalContext fo = FormalContext::single({{"z", Parity::odd, 0}}, 2);
    CHECK(!fo.chern_var(0, 0, 1).is_zero()); // c_{1/2}
    CHECK(!fo.chern_var(0, 0, 3).is_zero()); // c_{3/2}
    CHECK(fo.chern_var(0, 0, 2).is_zero());

    CHECK_THROWS_AS(FormalContext::single({{"e", Parity::even, 1}}, 0), validation_error);
    CHECK_THROWS_AS(FormalContext::single({{"z", Parity::odd, 3}}, 2), validation_error);
    CHECK_THROWS_AS(FormalContext::single({{"e", Parity::even, 1}, {"e", Parity::even, 1}}, 2), validation_error);
}

TEST_CASE("bigraded Koszul rule and truncation") {
    FormalContext fc =
        FormalContext::bigraded({{"a", Parity::odd, 0}}, {{"b", Parity::odd, 0}}, 2);
    Poly left = fc.chern_var(0, 0, 1);  // c_{1/2}(a') (x) 1
    Poly right = fc.chern_var(1, 0, 1); // 1 (x) c_{1/2}(b)
    CHECK(left * right + right * left == fc.zero());
    CHECK((left * right).is_homogeneous(2));
    auto bd = fc.bidegree(left.terms().begin()->first);
    CHECK(bd.first == 1);
    CHECK(bd.second == 0);

    // degree-2 times degree-2 with cap 2m = 2 dies
    FormalContext f1 = FormalContext::bigraded({{"a", Parity::even, 1}}, {{"b", Parity::even, 1}}, 1);
    CHECK((f1.chern_var(0, 0, 2) * f1.chern_var(1, 0, 2)).is_zero());
}

TEST_CASE("formal characters of factors") {
    FormalContext fc = FormalContext::bigraded({{"a", Parity::even, 3}}, {{"b", Parity::odd, 0}}, 2);
    CHECK(fc.formal_ch(0, 0, 0) == Poly::constant(fc.table(), 3));
    CHECK(fc.formal_ch(0, 0, 2) == fc.chern_var(0, 0, 2));
    Poly c1 = fc.chern_var(0, 0, 2), c2 = fc.chern_var(0, 0, 4);
    CHECK(fc.formal_ch(0, 0, 4) == (c1 * c1 - c2 * Rat(2)) * ratio(1, 2));
    // odd factor: ch_{1/2} = c_{1/2}, ch_{3/2} = -c_{3/2}
    CHECK(fc.formal_ch(1, 0, 0).is_zero());
    CHECK(fc.formal_ch(1, 0, 1) == fc.chern_var(1, 0, 1));
    CHECK(fc.formal_ch(1, 0, 3) == -fc.chern_var(1, 0, 3));
}

TEST_CASE("assembled rank bookkeeping") {
    KunnethContext ctx = explicit_context({{"a", Parity::even, 2}, {"z", Parity::odd, 0}},
                                          {{"a", Parity::even, 3}, {"z", Parity::odd, 0}},
                                          {{1, 0}, {0, 1}}, 2);
    CHECK(assembled_rank(ctx) == 6);
    // parity-mixing Gram entries are rejected
    CHECK_THROWS_AS(explicit_context({{"a", Parity::even, 1}, {"z", Parity::odd, 0}},
                                     {{"a", Parity::even, 1}, {"z", Parity::odd, 0}},
                                     {{1, 1}, {0, 1}}, 2),
                    validation_error);
}

TEST_CASE("single even term, m = 1") {
    KunnethContext ctx =
        explicit_context({{"a", Parity::even, 2}}, {{"b", Parity::even, 5}}, {{1}}, 1);
    DiagonalExpansion exp = top_chern_expand(ctx);
    // c_1 = r_b c_1(a') (x) 1 + r_a 1 (x) c_1(b)
    Poly expect = ctx.algebra.chern_var(0, 0, 2) * Rat(5) + ctx.algebra.chern_var(1, 0, 2) * Rat(2);
    CHECK(exp.c_m == expect);
    auto gens = generator_report(ctx, exp);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].alpha == "1");
    CHECK(gens[1].alpha == "c_1(a')");
}

TEST_CASE("single odd term, m = 1") {
    KunnethContext ctx = explicit_context({{"a", Parity::odd, 0}}, {{"b", Parity::odd, 0}}, {{1}}, 1);
    DiagonalExpansion exp = top_chern_expand(ctx);
    CHECK(exp.c_m == ctx.algebra.chern_var(0, 0, 1) * ctx.algebra.chern_var(1, 0, 1));
    auto gens = generator_report(ctx, exp);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].alpha == "1");
    CHECK(gens[1].alpha == "c_{1/2}(a')");

    // zero class: empty generator list
    KunnethContext zctx = explicit_context({{"a", Parity::odd, 0}}, {{"b", Parity::odd, 0}}, {{0}}, 1);
    DiagonalExpansion zexp = top_chern_expand(zctx);
    CHECK(zexp.c_m.is_zero());
    CHECK(generator_report(zctx, zexp).empty());
}

TEST_CASE("cross terms from an off-diagonal Gram") {
    KunnethContext ctx = explicit_context({{"e1", Parity::even, 1}, {"e2", Parity::even, 1}},
                                          {{"e1", Parity::even, 1}, {"e2", Parity::even, 1}},
                                          {{0, 1}, {1, 0}}, 1);
    Poly c1 = assembled_ch(ctx, 1);
    Poly expect = ctx.algebra.chern_var(0, 0, 2) + ctx.algebra.chern_var(0, 1, 2) +
                  ctx.algebra.chern_var(1, 0, 2) + ctx.algebra.chern_var(1, 1, 2);
    CHECK(c1 == expect);
}

TEST_CASE("expansion coefficients are integers in mixed-parity contexts") {
    std::vector<std::pair<std::vector<FactorSpec>, IntMat>> configs = {
        {{{"a", Parity::even, 1}, {"z", Parity::odd, 0}}, {{2, 0}, {0, 3}}},
        {{{"a", Parity::even, 2}, {"b", Parity::even, 1}, {"z", Parity::odd, 0}},
         {{1, -1, 0}, {-1, 0, 0}, {0, 0, 1}}},
        {{{"z", Parity::odd, 0}, {"w", Parity::odd, 0}}, {{0, 1}, {1, 0}}},
    };
    for (const auto& [factors, gram] : configs)
        for (int m = 1; m <= 3; ++m) {
            KunnethContext ctx = explicit_context(factors, factors, gram, m);
            DiagonalExpansion exp = top_chern_expand(ctx);
            CHECK(exp.c_m.is_integral());
            for (const auto& t : exp.terms) CHECK(t.deg_alpha + t.deg_beta == 2 * m);
        }
}

TEST_CASE("single even class agrees with the splitting-oracle route") {
    // Substitute honest Chern roots for the factor classes and compare the
    // direct expansion of prod (1 + (alpha_i + beta_j) t) with the
    // character route.
    for (int ra = 1; ra <= 3; ++ra)
        for (int rb = 1; rb <= 3; ++rb)
            for (int m = 1; m <= 3; ++m) {
                KunnethContext ctx = explicit_context({{"a", Parity::even, Int(ra)}},
                                                      {{"b", Parity::even, Int(rb)}}, {{1}}, m);
                Poly route_a = assembled_chern(ctx, m);

                std::vector<VarInfo> rv;
                for (int i = 0; i < ra; ++i) rv.push_back({"x" + std::to_string(i), 2, -1});
                for (int j = 0; j < rb; ++j) rv.push_back({"y" + std::to_string(j), 2, -1});
                auto rt = make_table(rv, 0);
                std::vector<Poly> alphas, betas;
                for (int i = 0; i < ra; ++i) alphas.push_back(Poly::variable(rt, i));
                for (int j = 0; j < rb; ++j) betas.push_back(Poly::variable(rt, ra + j));

                // images of the context variables under c_k -> e_k(roots)
                auto ea = elementary(rt, alphas), eb = elementary(rt, betas);
                std::vector<Poly> images(static_cast<std::size_t>(ctx.algebra.table()->size()),
                                         Poly::constant(rt, 0));
                for (int k = 1; k <= m; ++k) {
                    Poly va = ctx.algebra.chern_var(0, 0, 2 * k);
                    if (!va.is_zero())
                        images[static_cast<std::size_t>(va.terms().begin()->first.powers[0].first)] =
                            k <= ra ? ea[static_cast<std::size_t>(k)] : Poly::constant(rt, 0);
                    Poly vb = ctx.algebra.chern_var(1, 0, 2 * k);
                    if (!vb.is_zero())
                        images[static_cast<std::size_t>(vb.terms().begin()->first.powers[0].first)] =
                            k <= rb ? eb[static_cast<std::size_t>(k)] : Poly::constant(rt, 0);
                }
                Poly substituted = substitute(route_a, images);

                // direct route: e_m of the pairwise sums
                std::vector<Poly> sums;
                for (const auto& al : alphas)
                    for (const auto& be : betas) sums.push_back(al + be);
                auto esums = elementary(rt, sums);
                Poly route_b = static_cast<std::size_t>(m) < esums.size() ? esums[static_cast<std::size_t>(m)]
                                                                          : Poly::constant(rt, 0);
                CHECK(substituted == route_b);
            }
}

TEST_CASE("line twist leaves the degree-(rank+1) term class invariant") {
    for (int ra = 1; ra <= 2; ++ra)
        for (int rb = 1; rb <= 2; ++rb) {
            int rho = ra * rb;
            FormalContext fc = FormalContext::bigraded({{"a", Parity::even, Int(ra)}},
                                                       {{"b", Parity::even, Int(rb)}}, rho + 2, true);
            Poly plain = term_chern(fc, 0, 0, rho + 1, false);
            Poly twisted = term_chern(fc, 0, 0, rho + 1, true);
            CHECK(!plain.is_zero());
            CHECK(plain == twisted);

            // one degree higher the twist enters linearly through c_{rho+1}
            Poly p2 = term_chern(fc, 0, 0, rho + 2, false);
            Poly t2 = term_chern(fc, 0, 0, rho + 2, true);
            CHECK(t2 == p2 - plain * fc.line_twist());
        }
}

TEST_CASE("moduli context from a surface") {
    SurfaceModel k3 = build_surface("K3");
    KClass v = KClass::even_from_ch(k3, 1, std::vector<Int>(22, 0), Rat(-1));
    std::vector<KClass> basis = standard_even_basis(k3);
    std::vector<Int> ranks(basis.size(), 1);
    KunnethContext ctx = moduli_context(k3, v, 2, PairingKind::mukai, basis, ranks, ranks);
    CHECK(ctx.m == 2);
    CHECK(ctx.expected_rank.value() == 0);
    CHECK(ctx.pairing == "mukai");
    DiagonalExpansion exp = top_chern_expand(ctx);
    CHECK(exp.c_m.is_integral());
    for (const auto& t : exp.terms) CHECK(t.deg_alpha + t.deg_beta == 4);

    // plain pairing on the abelian surface accepts odd basis classes
    SurfaceModel ab = build_surface("Abelian");
    std::vector<KClass> abasis = standard_even_basis(ab);
    for (int i = 0; i < 4; ++i) {
        std::vector<Int> h1(4, 0), h3(4, 0);
        h1[static_cast<std::size_t>(i)] = 1;
        abasis.push_back(KClass::odd_from_ch(ab, h1, std::vector<Int>(4, 0)));
        h3[static_cast<std::size_t>(i)] = 1;
        abasis.push_back(KClass::odd_from_ch(ab, std::vector<Int>(4, 0), h3));
    }
    KClass va = KClass::even_from_ch(ab, 1, std::vector<Int>(6, 0), Rat(-1));
    std::vector<Int> aranks(abasis.size(), 0);
    for (std::size_t i = 0; i < standard_even_basis(ab).size(); ++i) aranks[i] = 1;
    KunnethContext actx = moduli_context(ab, va, 2, PairingKind::plain, abasis, aranks, aranks);
    DiagonalExpansion aexp = top_chern_expand(actx);
    CHECK(aexp.c_m.is_integral());

    // mukai pairing rejects odd basis entries
    CHECK_THROWS_AS(moduli_context(ab, va, 2, PairingKind::mukai, abasis, aranks, aranks), validation_error);
}

TEST_CASE("surface-level diagonal decomposition") {
    SurfaceModel p2 = build_surface("P2");
    DiagonalDecomposition dec = base_diagonal_decomposition(p2);
    CHECK(dec.pairs.size() == 3);
    DualCheck check = verify_dual(p2, dec);
    CHECK(check.ok);
    CHECK(check.weighted_matrix == int_identity(3));

    SurfaceModel q = build_surface("P1xP1");
    DiagonalDecomposition dq = base_diagonal_decomposition(q);
    CHECK(dq.pairs.size() == 4);
    CHECK(verify_dual(q, dq).ok);

    // K3 is not rational: rejected
    CHECK_THROWS_AS(base_diagonal_decomposition(build_surface("K3")), validation_error);

    // dropping a pair breaks duality
    DiagonalDecomposition broken = dec;
    broken.pairs.pop_back();
    CHECK(!verify_dual(p2, broken).ok);
}

TEST_CASE("blow-up recursion") {
    for (const char* name : {"P2", "P1xP1"}) {
        SurfaceModel s = build_surface(name);
        DiagonalDecomposition dec = base_diagonal_decomposition(s);
        std::size_t base = dec.pairs.size();
        for (int step = 1; step <= 5; ++step) {
            BlowUpResult b = blow_up(s);
            dec = blowup_diagonal_step(dec, b);
            s = b.surface;
            CHECK(dec.pairs.size() == base + static_cast<std::size_t>(step));
            DualCheck check = verify_dual(s, dec);
            CHECK(check.ok);
            CHECK(check.weighted_matrix == int_identity(dec.pairs.size()));
        }
    }
}

TEST_CASE("exceptional pairing values") {
    SurfaceModel p2 = build_surface("P2");
    BlowUpResult b = blow_up(p2);
    const SurfaceModel& s = b.surface;
    // chi(O(kE)) = 1 + k/2 - k^2/2
    for (long k = 0; k <= 4; ++k) {
        KClass oke = KClass::line_bundle(s, {0, Int(k)});
        CHECK(euler_chi(s, oke) == Int(1 + (k - k * k) / 2));
    }
    KClass t = exceptional_difference(s, b.exceptional_index);
    CHECK(euler_chi(s, kcup(s, t, t)) == -1);
    // cross pairings with pulled-back classes vanish
    for (long a = -2; a <= 2; ++a) {
        KClass pulled = pullback(b, KClass::line_bundle(p2, {Int(a)}));
        CHECK(euler_chi(s, kcup(s, pulled, t)) == 0);
        CHECK(euler_chi(s, kcup(s, t, pulled)) == 0);
    }
}
