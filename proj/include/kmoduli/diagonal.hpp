#ifndef KMODULI_DIAGONAL_HPP
#define KMODULI_DIAGONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "kmoduli/formal.hpp"
#include "kmoduli/ktheory.hpp"

namespace kmoduli {

// The data from which the diagonal class of a moduli-space square is
// assembled: a Gram matrix (x_i, x_j) on a chosen K-basis of the surface
// and formal Kunneth factors e_i' (left leg, for the dual family) and e_j
// (right leg), with the dimension m of the moduli space as the target
// Chern degree.
struct KunnethContext {
    FormalContext algebra; // bigraded
    IntMat gram;
    int m = 0;
    std::string pairing;               // "mukai", "plain" or "explicit"
    std::optional<Int> expected_rank;  // -chi(v^dual u v) when surface-linked
};

enum class PairingKind { mukai, plain };

// Builds the context from a surface, a Mukai vector and a K-basis.
// m = epsilon - chi(v^dual u v).  The Mukai pairing -chi(x^dual u y) needs
// an all-even basis; the plain pairing -chi(x u y) accepts both parities.
// ranks_right[i]/ranks_left[i] declare the ranks of e_i and e_i' (must be
// zero at odd basis entries).
KunnethContext moduli_context(const SurfaceModel& s, const KClass& v, int epsilon, PairingKind pairing,
                              const std::vector<KClass>& basis, const std::vector<Int>& ranks_right,
                              const std::vector<Int>& ranks_left);

// Desk-scale context with an explicit Gram matrix.  Entries pairing factors
// of different parity must vanish (the corresponding product is odd and
// cannot enter a class of K^0).
KunnethContext explicit_context(std::vector<FactorSpec> left, std::vector<FactorSpec> right, IntMat gram,
                                int m);

// rank of sum_{ij} gram[i][j] p1(e_i') p2(e_j)
Int assembled_rank(const KunnethContext& ctx);

// ch_k of the assembled class, k >= 1
Poly assembled_ch(const KunnethContext& ctx, int k);

// c_k of the assembled class via the partition formula; every coefficient
// is certified integral (invariant_breach otherwise).
Poly assembled_chern(const KunnethContext& ctx, int k);

struct DiagonalExpansion {
    Poly c_m;
    std::vector<BigradedTerm> terms;
};

// c_m of the assembled class as an explicit (alpha_j, beta_j) list; each
// term's bidegree sums to 2m.
DiagonalExpansion top_chern_expand(const KunnethContext& ctx);

struct GeneratorEntry {
    std::string alpha;
    int degree = 0;
    std::vector<std::pair<Int, std::string>> betas; // (coefficient, partner)
};

// Deduplicated alpha_j list; every class of the moduli space is an integral
// combination of these polynomials in the c_j(e_i).
std::vector<GeneratorEntry> generator_report(const KunnethContext& ctx, const DiagonalExpansion& exp);

// c_idx of the single term p1(e_i') u p2(e_j), optionally twisted by the
// formal line class on the right leg.  The context must carry the twist
// variable and have cap >= 2*idx.
Poly term_chern(const FormalContext& fc, int i, int j, int idx, bool twisted);

// ---- diagonal decompositions on the surface itself ----

struct WeightedPair {
    Int coeff;
    KClass x, y;
};

// [O_Delta] = sum coeff_k x_k (x) y_k in K(S x S).
struct DiagonalDecomposition {
    std::vector<WeightedPair> pairs;
};

// Decomposition built from a chi-dual basis; available for the rational
// models (b1 = 0, chi(O_S) = 1).  The default basis is O(-1),O(-2),O(-3)
// on P2 and the standard even basis elsewhere.
DiagonalDecomposition base_diagonal_decomposition(const SurfaceModel& s);
DiagonalDecomposition base_diagonal_decomposition(const SurfaceModel& s, const std::vector<KClass>& basis);

// Transport of a class through a blow-up (H^2 gains the exceptional class).
KClass pullback(const BlowUpResult& blowup, const KClass& v);

// [O(E)] - [O] on the blown-up surface.
KClass exceptional_difference(const SurfaceModel& blown_up, int exceptional_index);

// Pulls every pair back and appends the pair (-1, O(E)-O, O(E)-O).
DiagonalDecomposition blowup_diagonal_step(const DiagonalDecomposition& dec, const BlowUpResult& blowup);

struct DualCheck {
    bool ok = false;
    IntMat chi_matrix;      // chi(x_i u y_j)
    IntMat weighted_matrix; // chi(x_i u y_j) coeff_j; identity iff ok
};

DualCheck verify_dual(const SurfaceModel& s, const DiagonalDecomposition& dec);

} // namespace kmoduli

#endif
