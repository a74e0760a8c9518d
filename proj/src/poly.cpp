#include "kmoduli/poly.hpp"

#include <algorithm>
#include <sstream>

#include "kmoduli/errors.hpp"

namespace kmoduli {

VarTable::VarTable(std::vector<VarInfo> vars, int degree_cap)
    : vars_(std::move(vars)), cap_(degree_cap) {
    for (const auto& v : vars_)
        if (v.degree <= 0) throw validation_error("variable '" + v.name + "' must have positive degree");
}

VarTablePtr make_table(std::vector<VarInfo> vars, int degree_cap) {
    return std::make_shared<const VarTable>(std::move(vars), degree_cap);
}

int Monomial::degree(const VarTable& t) const {
    int d = 0;
    for (auto [v, e] : powers) d += t.var(v).degree * e;
    return d;
}

std::string Monomial::str(const VarTable& t) const {
    if (powers.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [v, e] : powers) {
        if (!first) os << "*";
        first = false;
        os << t.var(v).name;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::optional<std::pair<Monomial, int>> mul(const Monomial& a, const Monomial& b, const VarTable& t) {
    Monomial out;
    out.powers.reserve(a.powers.size() + b.powers.size());
    int sign = 1;

    // Count of odd variables not yet consumed from a; each one that a
    // b-variable jumps over flips the sign when that b-variable is odd.
    int odd_left_in_a = 0;
    for (auto [v, e] : a.powers)
        if (t.var(v).odd()) ++odd_left_in_a;

    std::size_t ia = 0, ib = 0;
    while (ia < a.powers.size() || ib < b.powers.size()) {
        bool take_a;
        if (ia == a.powers.size()) take_a = false;
        else if (ib == b.powers.size()) take_a = true;
        else if (a.powers[ia].first == b.powers[ib].first) {
            // shared variable: odd squares vanish, even exponents add
            if (t.var(a.powers[ia].first).odd()) return std::nullopt;
            out.powers.emplace_back(a.powers[ia].first, a.powers[ia].second + b.powers[ib].second);
            ++ia;
            ++ib;
            continue;
        } else take_a = a.powers[ia].first < b.powers[ib].first;

        if (take_a) {
            if (t.var(a.powers[ia].first).odd()) --odd_left_in_a;
            out.powers.push_back(a.powers[ia]);
            ++ia;
        } else {
            if (t.var(b.powers[ib].first).odd() && (odd_left_in_a % 2 != 0)) sign = -sign;
            out.powers.push_back(b.powers[ib]);
            ++ib;
        }
    }
    return std::make_pair(std::move(out), sign);
}

Poly Poly::constant(VarTablePtr table, const Rat& c) {
    Poly p(std::move(table));
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

Poly Poly::variable(VarTablePtr table, int id) {
    if (id < 0 || id >= table->size()) throw validation_error("variable id out of range");
    Poly p(table);
    Monomial m;
    m.powers.emplace_back(id, 1);
    if (table->cap() == 0 || table->var(id).degree <= table->cap()) p.terms_[m] = 1;
    return p;
}

bool Poly::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

Rat Poly::constant_term() const { return coeff(Monomial{}); }

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool Poly::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (m.degree(*table_) != degree) return false;
    return true;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (table_ && table_->cap() > 0 && m.degree(*table_) > table_->cap()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_table(const Poly& o) const {
    if (table_ && o.table_ && table_ != o.table_)
        throw validation_error("polynomials belong to different algebras");
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_table(o);
    if (!table_) table_ = o.table_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_table(o);
    if (!table_) table_ = o.table_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) terms_.clear();
    else
        for (auto& [m, q] : terms_) q *= c;
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_table(o);
    Poly out(table_ ? table_ : o.table_);
    if (!out.table_) throw validation_error("product of polynomials without an algebra");
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = mul(ma, mb, *out.table_);
            if (!prod) continue;
            out.add_term(prod->first, ca * cb * Rat(prod->second));
        }
    return out;
}

Poly Poly::pow(unsigned e) const {
    if (!table_) throw validation_error("pow of polynomial without an algebra");
    Poly out = Poly::constant(table_, 1);
    for (unsigned i = 0; i < e; ++i) {
        out = out * (*this);
        if (out.is_zero()) break;
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // print by (degree, id-lex) so truncated series read low degree first
    std::vector<const std::pair<const Monomial, Rat>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        int da = a->first.degree(*table_), db = b->first.degree(*table_);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const Rat& c = t->second;
        if (first) {
            if (c < 0) os << "-";
        } else os << (c < 0 ? " - " : " + ");
        first = false;
        Rat ac = abs(c);
        bool unit_mono = t->first.powers.empty();
        if (ac != 1 || unit_mono) {
            os << rat_str(ac);
            if (!unit_mono) os << "*";
        }
        if (!unit_mono) os << t->first.str(*table_);
    }
    return os.str();
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
    if (!p.table()) throw validation_error("substitute: polynomial without an algebra");
    const VarTable& t = *p.table();
    Poly out;
    bool out_set = false;
    for (const auto& [m, c] : p.terms()) {
        Poly term;
        bool term_set = false;
        for (auto [v, e] : m.powers) {
            if (t.var(v).odd()) throw validation_error("substitute: odd variables unsupported");
            const Poly& img = images.at(static_cast<std::size_t>(v));
            Poly factor = img.pow(static_cast<unsigned>(e));
            term = term_set ? term * factor : factor;
            term_set = true;
        }
        if (!term_set) {
            // constant monomial: need a target table; take it from any image
            term = Poly::constant(images.empty() ? nullptr : images.front().table(), 1);
        }
        term *= c;
        if (!out_set) {
            out = term;
            out_set = true;
        } else out += term;
    }
    if (!out_set) out = Poly::constant(images.empty() ? nullptr : images.front().table(), 0);
    return out;
}

} // namespace kmoduli
