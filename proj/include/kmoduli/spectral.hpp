#ifndef KMODULI_SPECTRAL_HPP
#define KMODULI_SPECTRAL_HPP

#include "kmoduli/ktheory.hpp"

namespace kmoduli {

// K-theory class on a smooth curve of genus g: even = (rank, degree),
// odd = a vector of rank 2g (carried structurally; no pairing values).
struct CurveKClass {
    Parity parity = Parity::even;
    Int rank, degree;
    std::vector<Int> odd;

    static CurveKClass even(Int rank, Int degree);
    static CurveKClass odd_class(std::vector<Int> components);
    bool is_zero() const;

    CurveKClass& operator+=(const CurveKClass& o);
    friend CurveKClass operator+(CurveKClass a, const CurveKClass& b) { return a += b; }
    bool operator==(const CurveKClass& o) const;
};

// deg + r(1-g); odd input rejected.
Int curve_chi(long g, const CurveKClass& v);

// Product in K(Sigma); even classes only.
CurveKClass curve_mul(const CurveKClass& x, const CurveKClass& y);

// The ruled surface P(K_Sigma(D) + O) -> Sigma over a genus-g curve with
// deg D = delta; K(S) is a free K(Sigma)-module with basis {1, h}, where h
// is the class of O_S(-1).  The chosen H^2 basis is (xi, f) with
// xi = c_1(O_S(1)) and f the fiber class.
struct RulingGeometry {
    long g = 0;
    long delta = 0;
    SurfaceModel surface;

    static RulingGeometry make(long g, long delta);
    long twist_degree() const { return 2 * g - 2 + delta; } // deg K_Sigma(D)
};

// a.1 + c.h in module coordinates; both components of equal parity.
struct RuledClass {
    CurveKClass a, c;

    static RuledClass even(CurveKClass a, CurveKClass c);
    bool is_even() const { return a.parity == Parity::even && c.parity == Parity::even; }
};

// b^!(x) = x.1
RuledClass ruling_pullback(const CurveKClass& x);

// b_!(a.1 + c.h) = a, from b_!(1) = [O_Sigma] and b_!(h) = 0 extended by
// the module structure.  Even inputs are cross-checked against the
// Riemann-Roch route on the surface model (invariant_breach on mismatch).
CurveKClass ruling_pushforward(const RulingGeometry& geom, const RuledClass& w);

// Module product; uses h^2 = (-1, w).1 + (2, -w).h with w = deg K_Sigma(D).
RuledClass ruled_mul(const RulingGeometry& geom, const RuledClass& x, const RuledClass& y);

// Chern-character translation of a.1 + c.h into a surface K-class.
KClass ruled_to_surface(const RulingGeometry& geom, const RuledClass& w);

// Inverse of ruled_to_surface; every even class on the model is expressible.
RuledClass module_coordinates(const RulingGeometry& geom, const KClass& v);

// chi_S(b^! x u w) = chi_Sigma(x u b_! w), evaluated through two
// independent routes (surface Riemann-Roch vs curve Riemann-Roch).
bool projection_formula_check(const RulingGeometry& geom, const CurveKClass& x, const RuledClass& w);

} // namespace kmoduli

#endif
