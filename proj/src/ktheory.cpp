#include "kmoduli/ktheory.hpp"

#include "kmoduli/errors.hpp"

namespace kmoduli {

namespace {

Rat form_pair(const SurfaceModel& s, const std::vector<Int>& a, const std::vector<Int>& b, const Rat& scale_b) {
    return Rat(bilinear(s.intersection_form, a, b)) * scale_b;
}

std::vector<Int> add_vec(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<Int> scale_vec(const std::vector<Int>& a, const Int& n) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * n;
    return out;
}

} // namespace

KClass KClass::even_from_ch(const SurfaceModel& s, Int r, std::vector<Int> c1, Rat ch2) {
    if (c1.size() != static_cast<std::size_t>(s.h2_rank))
        throw validation_error("c1 has wrong length for surface '" + s.name + "'");
    KClass v;
    v.parity = Parity::even;
    v.r = std::move(r);
    v.c1 = std::move(c1);
    v.ch2 = std::move(ch2);
    v.h1.assign(static_cast<std::size_t>(s.b1), 0);
    v.h3.assign(static_cast<std::size_t>(s.b1), 0);
    Rat c2 = (Rat(bilinear(s.intersection_form, v.c1, v.c1)) - 2 * v.ch2) / 2;
    if (!is_integer(c2))
        throw validation_error("class has non-integral c2 = " + rat_str(c2));
    return v;
}

KClass KClass::even_from_chern(const SurfaceModel& s, Int r, std::vector<Int> c1, Int c2) {
    Rat ch2 = ratio(bilinear(s.intersection_form, c1, c1) - 2 * c2, 2);
    return even_from_ch(s, std::move(r), std::move(c1), ch2);
}

KClass KClass::odd_from_ch(const SurfaceModel& s, std::vector<Int> h1, std::vector<Int> h3) {
    if (h1.size() != static_cast<std::size_t>(s.b1) || h3.size() != static_cast<std::size_t>(s.b1))
        throw validation_error("odd class has wrong length for surface '" + s.name + "'");
    KClass v;
    v.parity = Parity::odd;
    v.r = 0;
    v.ch2 = 0;
    v.c1.assign(static_cast<std::size_t>(s.h2_rank), 0);
    v.h1 = std::move(h1);
    v.h3 = std::move(h3);
    return v;
}

KClass KClass::zero(const SurfaceModel& s) {
    return even_from_ch(s, 0, std::vector<Int>(static_cast<std::size_t>(s.h2_rank), 0), 0);
}

KClass KClass::structure_sheaf(const SurfaceModel& s) {
    return even_from_ch(s, 1, std::vector<Int>(static_cast<std::size_t>(s.h2_rank), 0), 0);
}

KClass KClass::skyscraper(const SurfaceModel& s) {
    return even_from_ch(s, 0, std::vector<Int>(static_cast<std::size_t>(s.h2_rank), 0), 1);
}

KClass KClass::line_bundle(const SurfaceModel& s, std::vector<Int> c1) {
    Rat half_sq = ratio(bilinear(s.intersection_form, c1, c1), 2);
    return even_from_ch(s, 1, std::move(c1), half_sq);
}

Int KClass::c2(const SurfaceModel& s) const {
    if (parity != Parity::even) throw validation_error("c2 of an odd class");
    Rat c = (Rat(bilinear(s.intersection_form, c1, c1)) - 2 * ch2) / 2;
    return to_integer(c, "c2");
}

bool KClass::is_zero() const {
    auto zv = [](const std::vector<Int>& v) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    };
    if (parity == Parity::even) return r == 0 && ch2 == 0 && zv(c1);
    return zv(h1) && zv(h3);
}

bool KClass::operator==(const KClass& o) const {
    return parity == o.parity && r == o.r && c1 == o.c1 && ch2 == o.ch2 && h1 == o.h1 && h3 == o.h3;
}

KClass& KClass::operator+=(const KClass& o) {
    if (parity != o.parity) throw validation_error("cannot add classes of different parity");
    if (c1.size() != o.c1.size() || h1.size() != o.h1.size())
        throw validation_error("cannot add classes on different surfaces");
    r += o.r;
    ch2 += o.ch2;
    c1 = add_vec(c1, o.c1);
    h1 = add_vec(h1, o.h1);
    h3 = add_vec(h3, o.h3);
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    KClass n = o;
    n *= Int(-1);
    return *this += n;
}

KClass& KClass::operator*=(const Int& n) {
    r *= n;
    ch2 *= Rat(n);
    c1 = scale_vec(c1, n);
    h1 = scale_vec(h1, n);
    h3 = scale_vec(h3, n);
    return *this;
}

void check_on_surface(const SurfaceModel& s, const KClass& v) {
    if (v.c1.size() != static_cast<std::size_t>(s.h2_rank) || v.h1.size() != static_cast<std::size_t>(s.b1))
        throw validation_error("K-class does not live on surface '" + s.name + "'");
    if (v.parity == Parity::even) v.c2(s); // revalidates integrality
}

KClass dual(const KClass& v) {
    if (v.parity != Parity::even)
        throw validation_error("dual of an odd class is not defined here");
    KClass d = v;
    for (auto& x : d.c1) x = -x;
    return d;
}

KClass kcup(const SurfaceModel& s, const KClass& x, const KClass& y) {
    check_on_surface(s, x);
    check_on_surface(s, y);
    if (x.parity == Parity::even && y.parity == Parity::even) {
        KClass out;
        out.parity = Parity::even;
        out.r = x.r * y.r;
        out.c1 = add_vec(scale_vec(y.c1, x.r), scale_vec(x.c1, y.r));
        out.ch2 = Rat(x.r) * y.ch2 + form_pair(s, x.c1, y.c1, 1) + Rat(y.r) * x.ch2;
        out.h1.assign(static_cast<std::size_t>(s.b1), 0);
        out.h3.assign(static_cast<std::size_t>(s.b1), 0);
        return out;
    }
    if (x.parity != y.parity) {
        const KClass& ev = x.parity == Parity::even ? x : y;
        const KClass& od = x.parity == Parity::odd ? x : y;
        // ch = r.h1 + (r.h3 + c1 ^ h1)
        std::vector<Int> h1 = scale_vec(od.h1, ev.r);
        std::vector<Int> h3 = scale_vec(od.h3, ev.r);
        if (s.has_odd_products()) {
            for (std::size_t i = 0; i < od.h1.size(); ++i)
                for (std::size_t k = 0; k < ev.c1.size(); ++k) {
                    Int c = od.h1[i] * ev.c1[k];
                    if (c == 0) continue;
                    for (std::size_t l = 0; l < h3.size(); ++l) h3[l] += c * s.wedge13[i][k][l];
                }
        }
        return KClass::odd_from_ch(s, std::move(h1), std::move(h3));
    }
    // odd x odd: rank 0, c1 = h1 ^ h1', ch2 from the odd pairing
    std::vector<Int> c1(static_cast<std::size_t>(s.h2_rank), 0);
    if (s.has_odd_products()) {
        for (std::size_t i = 0; i < x.h1.size(); ++i)
            for (std::size_t j = 0; j < y.h1.size(); ++j) {
                Int c = x.h1[i] * y.h1[j];
                if (c == 0) continue;
                for (std::size_t k = 0; k < c1.size(); ++k) c1[k] += c * s.wedge11[i][j][k];
            }
    }
    Int ch2 = 0;
    if (s.b1 > 0) {
        ch2 += bilinear(s.odd_pairing, x.h1, y.h3);
        ch2 -= bilinear(s.odd_pairing, y.h1, x.h3);
    }
    return KClass::even_from_ch(s, 0, std::move(c1), Rat(ch2));
}

CohClass ch_class(const SurfaceModel& s, const KClass& v) {
    check_on_surface(s, v);
    CohClass c = CohClass::zero(s);
    if (v.parity == Parity::even) {
        c.d0 = Rat(v.r);
        c.d2.assign(v.c1.begin(), v.c1.end());
        c.d4 = v.ch2;
    } else {
        c.d1.assign(v.h1.begin(), v.h1.end());
        c.d3.assign(v.h3.begin(), v.h3.end());
    }
    return c;
}

Int euler_chi(const SurfaceModel& s, const KClass& v) {
    if (v.parity != Parity::even) throw validation_error("euler_chi: even class required");
    Rat chi = integrate(s, cup(s, ch_class(s, v), todd(s)));
    return to_integer(chi, "euler characteristic");
}

Int mukai_pair(const SurfaceModel& s, const KClass& x, const KClass& y) {
    if (x.parity != Parity::even || y.parity != Parity::even)
        throw validation_error("mukai_pair: even classes required");
    return -euler_chi(s, kcup(s, dual(x), y));
}

Int plain_pair(const SurfaceModel& s, const KClass& x, const KClass& y) {
    KClass p = kcup(s, x, y);
    if (p.parity == Parity::odd) return 0;
    return -euler_chi(s, p);
}

std::vector<KClass> standard_even_basis(const SurfaceModel& s) {
    std::vector<KClass> basis;
    basis.push_back(KClass::structure_sheaf(s));
    for (int i = 0; i < s.h2_rank; ++i) {
        std::vector<Int> e(static_cast<std::size_t>(s.h2_rank), 0);
        e[static_cast<std::size_t>(i)] = 1;
        basis.push_back(KClass::even_from_chern(s, 0, std::move(e), 0));
    }
    basis.push_back(KClass::skyscraper(s));
    return basis;
}

DualBasisResult gram_and_dual_basis(const SurfaceModel& s, const std::vector<KClass>& basis) {
    std::size_t n = basis.size();
    if (n != static_cast<std::size_t>(s.h2_rank) + 2)
        throw validation_error("basis must have 2 + h2_rank = " + std::to_string(s.h2_rank + 2) + " classes");
    for (const auto& b : basis)
        if (b.parity != Parity::even) throw validation_error("basis of the even lattice required");

    DualBasisResult res;
    res.gram.assign(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) res.gram[i][j] = euler_chi(s, kcup(s, basis[i], basis[j]));

    Int d = det(res.gram);
    if (d != 1 && d != -1)
        throw validation_error("basis is not unimodular under the chi-pairing (Gram det = " + d.get_str() + ")");
    res.dual_coefficients = inverse_unimodular(res.gram);
    for (std::size_t i = 0; i < n; ++i) {
        KClass di = KClass::zero(s);
        for (std::size_t j = 0; j < n; ++j) {
            KClass t = basis[j];
            t *= res.dual_coefficients[i][j];
            di += t;
        }
        res.dual.push_back(di);
    }
    return res;
}

bool primitive(const SurfaceModel& s, const KClass& v) {
    if (v.parity != Parity::even || v.is_zero())
        throw validation_error("primitive: nonzero even class required");
    std::vector<Int> coords = v.c1;
    coords.push_back(v.r);
    coords.push_back(v.c2(s));
    return gcd_all(coords) == 1;
}

Int universal_obstruction(const SurfaceModel& s, const KClass& v) {
    if (v.parity != Parity::even || v.is_zero())
        throw validation_error("universal_obstruction: nonzero even class required");
    std::vector<Int> values;
    for (const auto& w : standard_even_basis(s)) values.push_back(euler_chi(s, kcup(s, v, w)));
    Int g = gcd_all(values);
    if (g == 0) throw invariant_breach("chi(v u -) vanished on a full basis for a nonzero class");
    return g;
}

Int expected_dim(const SurfaceModel& s, const KClass& v, int epsilon) {
    if (epsilon != 1 && epsilon != 2) throw validation_error("epsilon must be 1 or 2");
    if (v.parity != Parity::even) throw validation_error("expected_dim: even class required");
    return Int(epsilon) - euler_chi(s, kcup(s, dual(v), v));
}

HilbertPoly hilbert_poly(const SurfaceModel& s, const KClass& v, const std::vector<Int>& ample) {
    if (v.parity != Parity::even) throw validation_error("hilbert_poly: even class required");
    check_on_surface(s, v);
    if (ample.size() != static_cast<std::size_t>(s.h2_rank))
        throw validation_error("ample class has wrong length");
    Int h2 = bilinear(s.intersection_form, ample, ample);
    if (h2 <= 0) throw validation_error("polarization must have positive self-intersection");
    if (v.r < 0) throw validation_error("hilbert_poly: negative rank");

    Int h_c1 = bilinear(s.intersection_form, ample, v.c1);
    Int h_k = bilinear(s.intersection_form, ample, s.canonical_class);
    Rat chi_o = s.chi_structure_sheaf();
    Int c1_k = bilinear(s.intersection_form, v.c1, s.canonical_class);

    HilbertPoly p;
    p.a2 = ratio(v.r * h2, 2);
    p.a1 = Rat(h_c1) - ratio(v.r * h_k, 2);
    p.a0 = v.ch2 - ratio(c1_k, 2) + Rat(v.r) * chi_o; // = chi(v)

    bool c1_zero = true;
    for (const auto& x : v.c1)
        if (x != 0) c1_zero = false;

    if (v.r > 0) {
        p.d = 2;
        p.l0 = v.r * h2;
    } else if (!c1_zero) {
        p.d = 1;
        p.l0 = h_c1;
        if (p.l0 <= 0)
            throw validation_error("rank-0 class with h.c1 = " + p.l0.get_str() + " has no positive l0");
    } else {
        p.d = 0;
        p.l0 = -v.c2(s); // = ch2 here
        if (p.l0 <= 0)
            throw validation_error("rank-0 class with c1 = 0 and c2 = " + v.c2(s).get_str() + " has no positive l0");
    }
    return p;
}

StabilityOrder stability_compare(const HilbertPoly& p, const HilbertPoly& q) {
    Rat lp = ratio(1, p.l0), lq = ratio(1, q.l0);
    const Rat diffs[3] = {Rat(p.a2 * lp - q.a2 * lq), Rat(p.a1 * lp - q.a1 * lq), Rat(p.a0 * lp - q.a0 * lq)};
    for (const Rat& diff : diffs) {
        if (diff > 0) return StabilityOrder::greater;
        if (diff < 0) return StabilityOrder::less;
    }
    return StabilityOrder::equal;
}

std::string to_string(StabilityOrder o) {
    switch (o) {
        case StabilityOrder::less: return "<";
        case StabilityOrder::greater: return ">";
        default: return "=";
    }
}

} // namespace kmoduli
