#include "kmoduli/formal.hpp"

#include <set>

#include "kmoduli/errors.hpp"

namespace kmoduli {

namespace {

std::string chern_name(int idx2, const std::string& factor) {
    if (idx2 % 2 == 0) return "c_" + std::to_string(idx2 / 2) + "(" + factor + ")";
    return "c_{" + std::to_string(idx2) + "/2}(" + factor + ")";
}

void validate_factors(const std::vector<FactorSpec>& factors) {
    std::set<std::string> names;
    for (const auto& f : factors) {
        if (f.name.empty()) throw validation_error("factor without a name");
        if (!names.insert(f.name).second) throw validation_error("duplicate factor name '" + f.name + "'");
        if (f.parity == Parity::odd && f.rank != 0)
            throw validation_error("odd factor '" + f.name + "' cannot declare a rank");
    }
}

} // namespace

FormalContext FormalContext::single(std::vector<FactorSpec> factors, int m) {
    if (m < 1) throw validation_error("truncation degree m >= 1 required");
    validate_factors(factors);
    FormalContext fc;
    fc.m_ = m;
    fc.factors_.push_back(std::move(factors));

    std::vector<VarInfo> vars;
    fc.var_ids_.resize(1);
    auto& ids = fc.var_ids_[0];
    for (const auto& f : fc.factors_[0]) {
        std::vector<int> per_idx(static_cast<std::size_t>(2 * m) + 1, -1);
        int start = f.parity == Parity::even ? 2 : 1;
        int step = 2;
        for (int idx2 = start; idx2 <= 2 * m; idx2 += step) {
            per_idx[static_cast<std::size_t>(idx2)] = static_cast<int>(vars.size());
            vars.push_back({chern_name(idx2, f.name), idx2, 0});
        }
        ids.push_back(std::move(per_idx));
    }
    fc.table_ = make_table(std::move(vars), 2 * m);
    return fc;
}

FormalContext FormalContext::bigraded(std::vector<FactorSpec> left, std::vector<FactorSpec> right, int m,
                                      bool with_line_twist) {
    if (m < 1) throw validation_error("truncation degree m >= 1 required");
    validate_factors(left);
    validate_factors(right);
    FormalContext fc;
    fc.m_ = m;
    fc.factors_.push_back(std::move(left));
    fc.factors_.push_back(std::move(right));

    std::vector<VarInfo> vars;
    fc.var_ids_.resize(2);
    for (int side = 0; side < 2; ++side) {
        for (const auto& f : fc.factors_[static_cast<std::size_t>(side)]) {
            std::vector<int> per_idx(static_cast<std::size_t>(2 * m) + 1, -1);
            int start = f.parity == Parity::even ? 2 : 1;
            for (int idx2 = start; idx2 <= 2 * m; idx2 += 2) {
                per_idx[static_cast<std::size_t>(idx2)] = static_cast<int>(vars.size());
                std::string display = side == 0 ? f.name + "'" : f.name;
                vars.push_back({chern_name(idx2, display), idx2, side});
            }
            fc.var_ids_[static_cast<std::size_t>(side)].push_back(std::move(per_idx));
        }
    }
    if (with_line_twist) {
        fc.twist_id_ = static_cast<int>(vars.size());
        vars.push_back({"l", 2, 1});
    }
    fc.table_ = make_table(std::move(vars), 2 * m);
    return fc;
}

const std::vector<FactorSpec>& FormalContext::factors(int side) const {
    return factors_.at(static_cast<std::size_t>(side));
}

Poly FormalContext::chern_var(int side, int factor, int idx2) const {
    const auto& ids = var_ids_.at(static_cast<std::size_t>(side)).at(static_cast<std::size_t>(factor));
    if (idx2 < 0 || idx2 >= static_cast<int>(ids.size()) || ids[static_cast<std::size_t>(idx2)] < 0)
        return zero();
    return Poly::variable(table_, ids[static_cast<std::size_t>(idx2)]);
}

ChernVector FormalContext::chern_vector(int side, int factor) const {
    const FactorSpec& f = factors(side).at(static_cast<std::size_t>(factor));
    ChernVector cv;
    cv.parity = f.parity;
    cv.rank = f.rank;
    int start = f.parity == Parity::even ? 2 : 1;
    for (int idx2 = start; idx2 <= 2 * m_; idx2 += 2) cv.classes.push_back(chern_var(side, factor, idx2));
    return cv;
}

Poly FormalContext::formal_ch(int side, int factor, int idx2) const {
    const FactorSpec& f = factors(side).at(static_cast<std::size_t>(factor));
    if (idx2 == 0) return f.parity == Parity::even ? Poly::constant(table_, Rat(f.rank)) : zero();
    if (idx2 < 0 || (idx2 % 2 == 0) != (f.parity == Parity::even)) return zero();
    return ch_component(chern_vector(side, factor), idx2, table_);
}

Poly FormalContext::line_twist() const {
    if (twist_id_ < 0) throw validation_error("context has no line-twist variable");
    return Poly::variable(table_, twist_id_);
}

std::pair<int, int> FormalContext::bidegree(const Monomial& mono) const {
    int dl = 0, dr = 0;
    for (auto [v, e] : mono.powers) {
        const VarInfo& info = table_->var(v);
        (info.side == 0 ? dl : dr) += info.degree * e;
    }
    return {dl, dr};
}

std::vector<BigradedTerm> split_terms(const FormalContext& fc, const Poly& p) {
    std::vector<BigradedTerm> out;
    for (const auto& [mono, coeff] : p.terms()) {
        BigradedTerm t;
        t.coeff = to_integer(coeff, "bigraded term coefficient");
        for (auto [v, e] : mono.powers) {
            const VarInfo& info = fc.table()->var(v);
            auto& part = info.side == 0 ? t.alpha : t.beta;
            part.powers.emplace_back(v, e);
            (info.side == 0 ? t.deg_alpha : t.deg_beta) += info.degree * e;
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::string monomial_str(const FormalContext& fc, const Monomial& m) { return m.str(*fc.table()); }

} // namespace kmoduli
