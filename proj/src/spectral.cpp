#include "kmoduli/spectral.hpp"

#include "kmoduli/errors.hpp"

namespace kmoduli {

CurveKClass CurveKClass::even(Int rank, Int degree) {
    CurveKClass v;
    v.parity = Parity::even;
    v.rank = std::move(rank);
    v.degree = std::move(degree);
    return v;
}

CurveKClass CurveKClass::odd_class(std::vector<Int> components) {
    CurveKClass v;
    v.parity = Parity::odd;
    v.rank = 0;
    v.degree = 0;
    v.odd = std::move(components);
    return v;
}

bool CurveKClass::is_zero() const {
    if (parity == Parity::even) return rank == 0 && degree == 0;
    for (const auto& x : odd)
        if (x != 0) return false;
    return true;
}

CurveKClass& CurveKClass::operator+=(const CurveKClass& o) {
    if (parity != o.parity || odd.size() != o.odd.size())
        throw validation_error("cannot add curve classes of different parity");
    rank += o.rank;
    degree += o.degree;
    for (std::size_t i = 0; i < odd.size(); ++i) odd[i] += o.odd[i];
    return *this;
}

bool CurveKClass::operator==(const CurveKClass& o) const {
    return parity == o.parity && rank == o.rank && degree == o.degree && odd == o.odd;
}

Int curve_chi(long g, const CurveKClass& v) {
    if (v.parity != Parity::even) throw validation_error("curve_chi: even class required");
    return v.degree + v.rank * Int(1 - g);
}

CurveKClass curve_mul(const CurveKClass& x, const CurveKClass& y) {
    if (x.parity != Parity::even || y.parity != Parity::even)
        throw validation_error("curve products with odd classes are out of scope");
    return CurveKClass::even(x.rank * y.rank, x.rank * y.degree + y.rank * x.degree);
}

RulingGeometry RulingGeometry::make(long g, long delta) {
    return RulingGeometry{g, delta, builtin_surface("Ruled(" + std::to_string(g) + "," + std::to_string(delta) + ")")};
}

RuledClass RuledClass::even(CurveKClass a, CurveKClass c) {
    if (a.parity != Parity::even || c.parity != Parity::even)
        throw validation_error("RuledClass::even: even components required");
    return RuledClass{std::move(a), std::move(c)};
}

RuledClass ruling_pullback(const CurveKClass& x) {
    CurveKClass zero = x.parity == Parity::even
                           ? CurveKClass::even(0, 0)
                           : CurveKClass::odd_class(std::vector<Int>(x.odd.size(), 0));
    return RuledClass{x, zero};
}

CurveKClass ruling_pushforward(const RulingGeometry& geom, const RuledClass& w) {
    if (w.a.parity != w.c.parity)
        throw validation_error("module components of mixed parity");
    if (w.is_even()) {
        Int surface_chi = euler_chi(geom.surface, ruled_to_surface(geom, w));
        Int curve_side = curve_chi(geom.g, w.a);
        if (surface_chi != curve_side)
            throw invariant_breach("pushforward disagrees with the Riemann-Roch route: " +
                                   surface_chi.get_str() + " vs " + curve_side.get_str());
    }
    return w.a;
}

RuledClass ruled_mul(const RulingGeometry& geom, const RuledClass& x, const RuledClass& y) {
    if (!x.is_even() || !y.is_even())
        throw validation_error("module products with odd components are out of scope");
    Int w = Int(geom.twist_degree());
    // h^2 = (-1, w).1 + (2, -w).h
    CurveKClass cc = curve_mul(x.c, y.c);
    CurveKClass one_part = curve_mul(x.a, y.a) + curve_mul(cc, CurveKClass::even(-1, w));
    CurveKClass h_part = curve_mul(x.a, y.c) + curve_mul(x.c, y.a) + curve_mul(cc, CurveKClass::even(2, -w));
    return RuledClass{one_part, h_part};
}

KClass ruled_to_surface(const RulingGeometry& geom, const RuledClass& w) {
    if (!w.is_even()) throw validation_error("only even module classes map to (r, c1, ch2) data");
    Int tw = Int(geom.twist_degree());
    Int r = w.a.rank + w.c.rank;
    std::vector<Int> c1 = {-w.c.rank, w.a.degree + w.c.degree};
    Rat ch2 = Rat(-w.c.degree) + ratio(w.c.rank * tw, 2);
    return KClass::even_from_ch(geom.surface, std::move(r), std::move(c1), ch2);
}

RuledClass module_coordinates(const RulingGeometry& geom, const KClass& v) {
    if (v.parity != Parity::even) throw validation_error("module_coordinates: even class required");
    check_on_surface(geom.surface, v);
    Int tw = Int(geom.twist_degree());
    Int rc = -v.c1[0];
    Int ra = v.r - rc;
    Rat dc = ratio(rc * tw, 2) - v.ch2;
    Int dci = to_integer(dc, "module coordinate");
    Int da = v.c1[1] - dci;
    return RuledClass{CurveKClass::even(ra, da), CurveKClass::even(rc, dci)};
}

bool projection_formula_check(const RulingGeometry& geom, const CurveKClass& x, const RuledClass& w) {
    if (x.parity != Parity::even || !w.is_even())
        throw validation_error("projection_formula_check: even data required");
    RuledClass lhs_class = ruled_mul(geom, ruling_pullback(x), w);
    Int lhs = euler_chi(geom.surface, ruled_to_surface(geom, lhs_class));
    Int rhs = curve_chi(geom.g, curve_mul(x, ruling_pushforward(geom, w)));
    return lhs == rhs;
}

} // namespace kmoduli
