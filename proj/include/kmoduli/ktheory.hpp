#ifndef KMODULI_KTHEORY_HPP
#define KMODULI_KTHEORY_HPP

#include <string>
#include <vector>

#include "kmoduli/chern.hpp"
#include "kmoduli/surface.hpp"

namespace kmoduli {

// A topological K-theory class on a surface, coordinatized by its Chern
// character.  Even: (r, c1, ch2) with r, c1 and c2 = (c1^2 - 2 ch2)/2
// integral.  Odd: integral character components in H^1 and H^3.
struct KClass {
    Parity parity = Parity::even;
    Int r;
    std::vector<Int> c1;
    Rat ch2;
    std::vector<Int> h1, h3;

    static KClass even_from_ch(const SurfaceModel& s, Int r, std::vector<Int> c1, Rat ch2);
    static KClass even_from_chern(const SurfaceModel& s, Int r, std::vector<Int> c1, Int c2);
    static KClass odd_from_ch(const SurfaceModel& s, std::vector<Int> h1, std::vector<Int> h3);
    static KClass zero(const SurfaceModel& s);
    static KClass structure_sheaf(const SurfaceModel& s);
    // [O_pt]: rank 0, c1 = 0, ch2 = 1 (c2 = -1)
    static KClass skyscraper(const SurfaceModel& s);
    // rank-1 class with first Chern class c1
    static KClass line_bundle(const SurfaceModel& s, std::vector<Int> c1);

    Int c2(const SurfaceModel& s) const;
    bool is_zero() const;
    bool is_even() const { return parity == Parity::even; }

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass& operator*=(const Int& n);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(const Int& n, KClass a) { return a *= n; }

    bool operator==(const KClass& o) const;
};

void check_on_surface(const SurfaceModel& s, const KClass& v);

// ch(v^dual) = (r, -c1, ch2); odd input rejected.
KClass dual(const KClass& v);

// Product in K-theory, multiplicative on Chern characters.  Odd x odd lands
// in the even part (rank 0); products inside the odd part use the surface's
// wedge tensors and vanish on models without them.
KClass kcup(const SurfaceModel& s, const KClass& x, const KClass& y);

// integral of ch(v) td(S); certified integer (invariant_breach otherwise).
Int euler_chi(const SurfaceModel& s, const KClass& v);

// ch(v) as a cohomology class (r, c1, ch2) resp. (h1, h3).
CohClass ch_class(const SurfaceModel& s, const KClass& v);

// (x, y) = -chi(x^dual u y); even classes only.
Int mukai_pair(const SurfaceModel& s, const KClass& x, const KClass& y);

// (x, y) = -chi(x u y) for arbitrary parities; chi of an odd class is 0.
Int plain_pair(const SurfaceModel& s, const KClass& x, const KClass& y);

// {O_S, [O_{e_i}-flavoured classes], [O_pt]}: a basis of the even lattice.
std::vector<KClass> standard_even_basis(const SurfaceModel& s);

struct DualBasisResult {
    IntMat gram;                 // chi(b_i u b_j)
    std::vector<KClass> dual;    // chi(dual_i u b_j) = delta_ij
    IntMat dual_coefficients;    // dual_i = sum_j coeff[i][j] b_j
};

// Exact unimodular solve of the chi-Gram system; the basis must span the
// even lattice (2 + h2_rank classes, Gram determinant +-1).
DualBasisResult gram_and_dual_basis(const SurfaceModel& s, const std::vector<KClass>& basis);

// gcd(r, c1, c2) = 1; zero class rejected.
bool primitive(const SurfaceModel& s, const KClass& v);

// gcd of |chi(v u w)| over a basis {w} of the even lattice; 1 certifies the
// existence of an untwisted universal sheaf.
Int universal_obstruction(const SurfaceModel& s, const KClass& v);

// epsilon - chi(v^dual u v); epsilon = 2 for symplectic surfaces, 1 for
// non-symplectic Poisson surfaces.
Int expected_dim(const SurfaceModel& s, const KClass& v, int epsilon);

// chi(F (x) H^n) as a polynomial in n, with support dimension and
// normalized leading coefficient l0/d!.
struct HilbertPoly {
    Rat a2, a1, a0; // P(n) = a2 n^2 + a1 n + a0
    Int l0;
    int d = 0;

    Rat eval(const Rat& n) const { return (a2 * n + a1) * n + a0; }
};

HilbertPoly hilbert_poly(const SurfaceModel& s, const KClass& v, const std::vector<Int>& ample);

enum class StabilityOrder { less, equal, greater };

// Compares p/l0(p) against q/l0(q) for large arguments, coefficient by
// coefficient from the top.
StabilityOrder stability_compare(const HilbertPoly& p, const HilbertPoly& q);

std::string to_string(StabilityOrder o);

} // namespace kmoduli

#endif
