#ifndef KMODULI_SURFACE_HPP
#define KMODULI_SURFACE_HPP

#include <string>
#include <vector>

#include "kmoduli/matrix.hpp"

namespace kmoduli {

// Finite presentation of the integral cohomology ring of a surface:
// free modules in degrees 0..4 with a unimodular intersection form on H^2,
// a unimodular pairing H^1 x H^3 -> H^4, canonical class and Todd data.
// Values are immutable after construction and safe to share across threads.
struct SurfaceModel {
    std::string name;
    int b1 = 0;      // rank of H^1 and of H^3
    int h2_rank = 0; // rank of H^2
    IntMat intersection_form;
    IntMat odd_pairing;            // b1 x b1; empty when b1 = 0
    std::vector<Int> canonical_class; // c_1 of the cotangent bundle, in H^2 coordinates
    Int euler_number;
    std::vector<Rat> todd1; // -K/2
    Rat todd2;              // (K^2 + e)/12

    // Odd multiplication tensors; populated only for models carrying the
    // full exterior-algebra structure (the abelian surface).
    // wedge11[i][j] = a_i ^ a_j in H^2 coordinates,
    // wedge13[i][k] = a_i ^ e_k in H^3 coordinates.
    std::vector<std::vector<IntVec>> wedge11;
    std::vector<std::vector<IntVec>> wedge13;

    bool has_odd_products() const { return !wedge11.empty(); }
    Int k_square() const;
    Rat chi_structure_sheaf() const { return todd2; } // by Noether's formula

    // throws validation_error when the presentation is inconsistent
    void validate() const;
};

// A cohomology class: exact rational coordinates in degrees 0..4.
struct CohClass {
    Rat d0;
    RatVec d1, d2, d3;
    Rat d4;

    static CohClass zero(const SurfaceModel& s);
    bool is_integral() const;
    bool is_zero() const;

    CohClass& operator+=(const CohClass& o);
    CohClass& operator*=(const Rat& c);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator*(CohClass a, const Rat& c) { return a *= c; }
};

// Builtins: "P2", "P1xP1", "F<n>" (Hirzebruch), "K3", "Abelian",
// "Ruled(g,delta)".  Anything else is treated as a path to a JSON spec file.
SurfaceModel build_surface(const std::string& spec);
SurfaceModel builtin_surface(const std::string& name);
SurfaceModel surface_from_json_text(const std::string& text);

struct BlowUpResult {
    SurfaceModel surface;
    int exceptional_index; // position of E in the new H^2 basis
};

// Adds an exceptional class E with E.E = -1 orthogonal to the pulled back
// H^2; K' = K + E, e' = e + 1.
BlowUpResult blow_up(const SurfaceModel& s);

// Graded-commutative cup product; uses the intersection form on H^2 x H^2,
// the odd pairing on H^1 x H^3, and the wedge tensors when present.
CohClass cup(const SurfaceModel& s, const CohClass& a, const CohClass& b);

// Degree-4 coordinate.
Rat integrate(const SurfaceModel& s, const CohClass& a);

// 1 + todd1 + todd2 [pt].
CohClass todd(const SurfaceModel& s);

void check_on_surface(const SurfaceModel& s, const CohClass& a);

} // namespace kmoduli

#endif
