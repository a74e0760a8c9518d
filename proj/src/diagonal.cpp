#include "kmoduli/diagonal.hpp"

#include <algorithm>
#include <map>

#include "kmoduli/errors.hpp"

namespace kmoduli {

namespace {

void validate_gram_parities(const std::vector<FactorSpec>& left, const std::vector<FactorSpec>& right,
                            const IntMat& gram) {
    if (gram.size() != left.size())
        throw validation_error("Gram matrix size does not match the factor count");
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (gram[i].size() != right.size())
            throw validation_error("Gram matrix size does not match the factor count");
        for (std::size_t j = 0; j < gram[i].size(); ++j)
            if (gram[i][j] != 0 && left[i].parity != right[j].parity)
                throw validation_error("Gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") pairs factors of different parity");
    }
}

} // namespace

KunnethContext moduli_context(const SurfaceModel& s, const KClass& v, int epsilon, PairingKind pairing,
                              const std::vector<KClass>& basis, const std::vector<Int>& ranks_right,
                              const std::vector<Int>& ranks_left) {
    if (basis.empty()) throw validation_error("empty K-basis");
    if (ranks_right.size() != basis.size() || ranks_left.size() != basis.size())
        throw validation_error("one declared rank per basis class required (both legs)");
    Int chi_vv = euler_chi(s, kcup(s, dual(v), v));
    Int m_int = Int(epsilon) - chi_vv;
    if (m_int < 0) throw validation_error("negative expected dimension " + m_int.get_str());
    if (m_int == 0) throw validation_error("zero-dimensional moduli space: nothing to expand");
    int m = static_cast<int>(m_int.get_si());

    std::size_t n = basis.size();
    IntMat gram(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram[i][j] = pairing == PairingKind::mukai ? mukai_pair(s, basis[i], basis[j])
                                                       : plain_pair(s, basis[i], basis[j]);
    Int d = det(gram);
    if (d != 1 && d != -1)
        throw validation_error("K-basis is not unimodular under the chosen pairing (det = " + d.get_str() + ")");

    std::vector<FactorSpec> left, right;
    for (std::size_t i = 0; i < n; ++i) {
        Parity p = basis[i].parity;
        if (p == Parity::odd && (ranks_right[i] != 0 || ranks_left[i] != 0))
            throw validation_error("odd factor cannot declare a rank");
        std::string nm = "e" + std::to_string(i + 1);
        left.push_back({nm, p, ranks_left[i]});
        right.push_back({nm, p, ranks_right[i]});
    }
    validate_gram_parities(left, right, gram);

    KunnethContext ctx{FormalContext::bigraded(std::move(left), std::move(right), m), std::move(gram), m,
                       pairing == PairingKind::mukai ? "mukai" : "plain", -chi_vv};
    return ctx;
}

KunnethContext explicit_context(std::vector<FactorSpec> left, std::vector<FactorSpec> right, IntMat gram,
                                int m) {
    if (left.size() != right.size())
        throw validation_error("left and right factor lists must pair up");
    validate_gram_parities(left, right, gram);
    return KunnethContext{FormalContext::bigraded(std::move(left), std::move(right), m), std::move(gram), m,
                          "explicit", std::nullopt};
}

Int assembled_rank(const KunnethContext& ctx) {
    Int r = 0;
    const auto& left = ctx.algebra.factors(0);
    const auto& right = ctx.algebra.factors(1);
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (left[i].parity == Parity::even && right[j].parity == Parity::even)
                r += ctx.gram[i][j] * left[i].rank * right[j].rank;
    return r;
}

Poly assembled_ch(const KunnethContext& ctx, int k) {
    Poly acc = ctx.algebra.zero();
    for (std::size_t i = 0; i < ctx.gram.size(); ++i)
        for (std::size_t j = 0; j < ctx.gram[i].size(); ++j) {
            if (ctx.gram[i][j] == 0) continue;
            Poly term = ctx.algebra.zero();
            for (int a = 0; a <= 2 * k; ++a) {
                Poly l = ctx.algebra.formal_ch(0, static_cast<int>(i), a);
                if (l.is_zero()) continue;
                term += l * ctx.algebra.formal_ch(1, static_cast<int>(j), 2 * k - a);
            }
            acc += term * Rat(ctx.gram[i][j]);
        }
    return acc;
}

Poly assembled_chern(const KunnethContext& ctx, int k) {
    if (k < 0 || k > ctx.m) throw validation_error("Chern index out of range");
    std::vector<Poly> ch(static_cast<std::size_t>(k) + 1, ctx.algebra.zero());
    for (int i = 1; i <= k; ++i) ch[static_cast<std::size_t>(i)] = assembled_ch(ctx, i);
    Poly c = chern_from_ch(ch, k, ctx.algebra.table());
    if (!c.is_integral())
        throw invariant_breach("c_" + std::to_string(k) + " of the assembled class has a non-integer coefficient");
    return c;
}

DiagonalExpansion top_chern_expand(const KunnethContext& ctx) {
    DiagonalExpansion out;
    out.c_m = assembled_chern(ctx, ctx.m);
    out.terms = split_terms(ctx.algebra, out.c_m);
    for (const auto& t : out.terms)
        if (t.deg_alpha + t.deg_beta != 2 * ctx.m)
            throw invariant_breach("expansion term of bidegree (" + std::to_string(t.deg_alpha) + "," +
                                   std::to_string(t.deg_beta) + ") in a degree-" + std::to_string(2 * ctx.m) +
                                   " class");
    return out;
}

std::vector<GeneratorEntry> generator_report(const KunnethContext& ctx, const DiagonalExpansion& exp) {
    std::vector<GeneratorEntry> out;
    if (exp.terms.empty()) return out;

    std::map<Monomial, GeneratorEntry> by_alpha;
    by_alpha[Monomial{}] = GeneratorEntry{"1", 0, {}}; // the unit is always a generator
    for (const auto& t : exp.terms) {
        auto [it, fresh] = by_alpha.try_emplace(t.alpha);
        if (fresh) {
            it->second.alpha = monomial_str(ctx.algebra, t.alpha);
            it->second.degree = t.deg_alpha;
        }
        it->second.betas.emplace_back(t.coeff, monomial_str(ctx.algebra, t.beta));
    }
    for (auto& [mono, entry] : by_alpha) out.push_back(std::move(entry));
    std::stable_sort(out.begin(), out.end(),
                     [](const GeneratorEntry& a, const GeneratorEntry& b) { return a.degree < b.degree; });
    return out;
}

Poly term_chern(const FormalContext& fc, int i, int j, int idx, bool twisted) {
    if (idx < 1) throw validation_error("Chern index >= 1 required");
    const FactorSpec& fl = fc.factors(0).at(static_cast<std::size_t>(i));
    const FactorSpec& fr = fc.factors(1).at(static_cast<std::size_t>(j));

    std::vector<Poly> ch(static_cast<std::size_t>(idx) + 1, fc.zero());
    for (int k = 1; k <= idx; ++k)
        for (int a = 0; a <= 2 * k; ++a) {
            Poly l = fc.formal_ch(0, i, a);
            if (l.is_zero()) continue;
            ch[static_cast<std::size_t>(k)] += l * fc.formal_ch(1, j, 2 * k - a);
        }
    if (twisted) {
        // ch(T u p2 L) = ch(T) . exp(l) on the right leg
        Poly ell = fc.line_twist();
        Rat rank0 = fl.parity == Parity::even && fr.parity == Parity::even ? Rat(fl.rank * fr.rank) : Rat(0);
        std::vector<Poly> twisted_ch = ch;
        for (int k = 1; k <= idx; ++k) {
            Poly acc = fc.zero();
            Poly ell_pow = fc.one();
            for (int t = 0; t <= k; ++t) {
                Poly base = t == k ? Poly::constant(fc.table(), rank0) : ch[static_cast<std::size_t>(k - t)];
                acc += base * ell_pow * ratio(1, factorial(static_cast<unsigned>(t)));
                ell_pow = ell_pow * ell;
            }
            twisted_ch[static_cast<std::size_t>(k)] = acc;
        }
        ch = std::move(twisted_ch);
    }
    return chern_from_ch(ch, idx, fc.table());
}

DiagonalDecomposition base_diagonal_decomposition(const SurfaceModel& s) {
    std::vector<KClass> basis;
    if (s.name == "P2") {
        for (Int k = 1; k <= 3; ++k) basis.push_back(KClass::line_bundle(s, {-k}));
    } else basis = standard_even_basis(s);
    return base_diagonal_decomposition(s, basis);
}

DiagonalDecomposition base_diagonal_decomposition(const SurfaceModel& s, const std::vector<KClass>& basis) {
    if (s.b1 != 0 || s.chi_structure_sheaf() != 1)
        throw validation_error("diagonal decomposition by dual bases needs a rational model "
                               "(b1 = 0 and chi(O) = 1); '" + s.name + "' does not qualify");
    DualBasisResult db = gram_and_dual_basis(s, basis);
    DiagonalDecomposition dec;
    for (std::size_t i = 0; i < basis.size(); ++i) dec.pairs.push_back({1, db.dual[i], basis[i]});
    return dec;
}

KClass pullback(const BlowUpResult& blowup, const KClass& v) {
    const SurfaceModel& t = blowup.surface;
    if (v.parity == Parity::odd) return KClass::odd_from_ch(t, v.h1, v.h3);
    std::vector<Int> c1 = v.c1;
    c1.insert(c1.begin() + blowup.exceptional_index, 0);
    return KClass::even_from_ch(t, v.r, std::move(c1), v.ch2);
}

KClass exceptional_difference(const SurfaceModel& blown_up, int exceptional_index) {
    std::vector<Int> e(static_cast<std::size_t>(blown_up.h2_rank), 0);
    e[static_cast<std::size_t>(exceptional_index)] = 1;
    // [O(E)] - [O]: rank 0, c1 = E, ch2 = E^2/2 = -1/2
    return KClass::even_from_ch(blown_up, 0, std::move(e), ratio(-1, 2));
}

DiagonalDecomposition blowup_diagonal_step(const DiagonalDecomposition& dec, const BlowUpResult& blowup) {
    DiagonalDecomposition out;
    for (const auto& p : dec.pairs) out.pairs.push_back({p.coeff, pullback(blowup, p.x), pullback(blowup, p.y)});
    KClass t = exceptional_difference(blowup.surface, blowup.exceptional_index);
    out.pairs.push_back({Int(-1), t, t});
    return out;
}

DualCheck verify_dual(const SurfaceModel& s, const DiagonalDecomposition& dec) {
    std::size_t n = dec.pairs.size();
    DualCheck res;
    res.chi_matrix.assign(n, IntVec(n, 0));
    res.weighted_matrix.assign(n, IntVec(n, 0));
    // the x_i must span the even lattice, so a decomposition is one pair
    // per lattice generator
    res.ok = n == static_cast<std::size_t>(s.h2_rank) + 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            KClass prod = kcup(s, dec.pairs[i].x, dec.pairs[j].y);
            Int chi = prod.parity == Parity::odd ? Int(0) : euler_chi(s, prod);
            res.chi_matrix[i][j] = chi;
            res.weighted_matrix[i][j] = chi * dec.pairs[j].coeff;
            if (res.weighted_matrix[i][j] != (i == j ? 1 : 0)) res.ok = false;
        }
    return res;
}

} // namespace kmoduli
