#include "kmoduli/chern.hpp"

#include "kmoduli/errors.hpp"
#include "kmoduli/partitions.hpp"

namespace kmoduli {

Poly ChernVector::chern(int idx2, const VarTablePtr& table) const {
    if (parity == Parity::even) {
        if (idx2 % 2 != 0 || idx2 < 0) return Poly::constant(table, 0);
        if (idx2 == 0) return Poly::constant(table, 1);
        std::size_t j = static_cast<std::size_t>(idx2 / 2 - 1);
        if (j >= classes.size()) return Poly::constant(table, 0);
        return classes[j];
    }
    if (idx2 % 2 == 0 || idx2 < 1) return Poly::constant(table, 0);
    std::size_t j = static_cast<std::size_t>((idx2 - 1) / 2);
    if (j >= classes.size()) return Poly::constant(table, 0);
    return classes[j];
}

Poly ch_from_chern(const ChernVector& x, int k, const VarTablePtr& table) {
    if (x.parity != Parity::even) throw validation_error("ch_from_chern: even class required");
    if (k == 0) return Poly::constant(table, Rat(x.rank));
    // (-1)^k (k-1)! ch_k = sum over partitions of k of
    //   (-1)^len (len-1)!/(prod m_i!) c_1^{m_1} ... c_k^{m_k}
    Poly acc = Poly::constant(table, 0);
    for (const Partition& lam : partitions_of(k)) {
        auto m = lam.multiplicities(k);
        int len = lam.length();
        Rat coef = ratio((len % 2 == 0 ? Int(1) : Int(-1)) * factorial(static_cast<unsigned>(len - 1)), 1);
        Poly term = Poly::constant(table, coef);
        for (int i = 1; i <= k; ++i) {
            if (m[static_cast<std::size_t>(i)] == 0) continue;
            coef = ratio(1, factorial(static_cast<unsigned>(m[static_cast<std::size_t>(i)])));
            term *= coef;
            term = term * x.chern(2 * i, table).pow(static_cast<unsigned>(m[static_cast<std::size_t>(i)]));
            if (term.is_zero()) break;
        }
        acc += term;
    }
    Rat norm = ratio(k % 2 == 0 ? Int(1) : Int(-1), factorial(static_cast<unsigned>(k - 1)));
    return acc * norm;
}

Poly chern_from_ch(const std::vector<Poly>& ch, int k, const VarTablePtr& table) {
    if (k == 0) return Poly::constant(table, 1);
    if (static_cast<int>(ch.size()) <= k) throw validation_error("chern_from_ch: missing ch components");
    Poly acc = Poly::constant(table, 0);
    for (const Partition& lam : partitions_of(k)) {
        auto m = lam.multiplicities(k);
        int len = lam.length();
        Poly term = Poly::constant(table, (k - len) % 2 == 0 ? Rat(1) : Rat(-1));
        for (int i = 1; i <= k; ++i) {
            int mi = m[static_cast<std::size_t>(i)];
            if (mi == 0) continue;
            Poly base = ch[static_cast<std::size_t>(i)] * Rat(factorial(static_cast<unsigned>(i - 1)));
            term = term * base.pow(static_cast<unsigned>(mi));
            if (term.is_zero()) break;
            term *= ratio(1, factorial(static_cast<unsigned>(mi)));
        }
        acc += term;
    }
    return acc;
}

Poly odd_ch(const ChernVector& z, int k, const VarTablePtr& table) {
    if (z.parity != Parity::odd) throw validation_error("odd_ch: odd class required");
    if (k < 1) throw validation_error("odd_ch: k >= 1 required");
    Rat coef = ratio(k % 2 == 0 ? Int(-1) : Int(1), factorial(static_cast<unsigned>(k - 1)));
    return z.chern(2 * k - 1, table) * coef;
}

Poly ch_component(const ChernVector& x, int idx2, const VarTablePtr& table) {
    if (x.parity == Parity::even) {
        if (idx2 % 2 != 0) return Poly::constant(table, 0);
        return ch_from_chern(x, idx2 / 2, table);
    }
    if (idx2 % 2 == 0) return Poly::constant(table, 0);
    return odd_ch(x, (idx2 + 1) / 2, table);
}

Poly tensor_by_line(const ChernVector& x, const Poly& ell, int n) {
    if (x.parity != Parity::even) throw validation_error("tensor_by_line: even class required");
    if (n < 1) throw validation_error("tensor_by_line: n >= 1 required");
    const VarTablePtr& table = ell.table();
    long r = x.rank.get_si();
    Poly acc = Poly::constant(table, 0);
    Poly ell_pow = Poly::constant(table, 1);
    for (int dd = 0; dd <= n - 1; ++dd) {
        Rat coef = Rat(binomial(static_cast<unsigned long>(n - 1), dd));
        if (dd % 2 != 0) coef = -coef;
        int idx2 = 2 * (static_cast<int>(r) + n - dd);
        acc += x.chern(idx2, table) * ell_pow * coef;
        ell_pow = ell_pow * ell;
    }
    return acc;
}

std::vector<Poly> splitting_total_chern(const std::vector<Poly>& roots_num,
                                        const std::vector<Poly>& roots_den,
                                        const Poly& ell, int top) {
    if (top < 0) throw validation_error("splitting_total_chern: negative truncation");
    VarTablePtr table = ell.table();
    if (!table) {
        if (!roots_num.empty()) table = roots_num.front().table();
        else if (!roots_den.empty()) table = roots_den.front().table();
    }
    if (!table) throw validation_error("splitting_total_chern: no ambient algebra");

    auto nt = static_cast<std::size_t>(top);
    std::vector<Poly> series(nt + 1, Poly::constant(table, 0));
    series[0] = Poly::constant(table, 1);

    // multiply by (1 + (root + ell) t)
    auto mul_linear = [&](const Poly& root) {
        Poly lin = root + ell;
        for (std::size_t k = nt; k >= 1; --k) series[k] += series[k - 1] * lin;
    };
    // divide by (1 + (root + ell) t): series division, lowest degree first
    auto div_linear = [&](const Poly& root) {
        Poly lin = root + ell;
        for (std::size_t k = 1; k <= nt; ++k) series[k] -= series[k - 1] * lin;
    };

    for (const Poly& a : roots_num) mul_linear(a);
    for (const Poly& b : roots_den) div_linear(b);
    return series;
}

OddPairAlgebra::OddPairAlgebra(int dd) : d(dd) {
    if (d < 1) throw validation_error("OddPairAlgebra: d >= 1 required");
    std::vector<VarInfo> vars;
    for (int k = 0; k < d; ++k)
        vars.push_back({"c_{" + std::to_string(2 * k + 1) + "/2}(x)", 2 * k + 1, -1});
    for (int k = 0; k < d; ++k)
        vars.push_back({"c_{" + std::to_string(2 * k + 1) + "/2}(y)", 2 * k + 1, -1});
    table = make_table(std::move(vars), 2 * d);
}

Poly OddPairAlgebra::cx(int k) const { return Poly::variable(table, k); }
Poly OddPairAlgebra::cy(int k) const { return Poly::variable(table, d + k); }

Poly OddPairAlgebra::ch_product(int k) const {
    ChernVector x{Parity::odd, 0, {}}, y{Parity::odd, 0, {}};
    for (int i = 0; i < d; ++i) {
        x.classes.push_back(cx(i));
        y.classes.push_back(cy(i));
    }
    // ch_k(x u y) = sum_{i+j = 2k, i,j odd} ch_{i/2}(x) ch_{j/2}(y)
    Poly acc = Poly::constant(table, 0);
    for (int i = 1; i <= 2 * k - 1; i += 2)
        acc += ch_component(x, i, table) * ch_component(y, 2 * k - i, table);
    return acc;
}

Poly OddPairAlgebra::chern_product(int k) const {
    std::vector<Poly> ch(static_cast<std::size_t>(k) + 1, Poly::constant(table, 0));
    for (int i = 1; i <= k; ++i) ch[static_cast<std::size_t>(i)] = ch_product(i);
    Poly c = chern_from_ch(ch, k, table);
    if (!c.is_integral())
        throw invariant_breach("c_" + std::to_string(k) + "(x u y) has a non-integer coefficient: " + c.str());
    return c;
}

Poly odd_pair_chern(int d) {
    OddPairAlgebra alg(d);
    return alg.chern_product(d);
}

} // namespace kmoduli
