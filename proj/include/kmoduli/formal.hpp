#ifndef KMODULI_FORMAL_HPP
#define KMODULI_FORMAL_HPP

#include <string>
#include <vector>

#include "kmoduli/chern.hpp"

namespace kmoduli {

// One Kunneth factor: a formal K-theory class of known parity.  Even
// factors carry a declared integer rank (the rank of a Kunneth factor is
// not determined by the surface data and is supplied by the caller).
struct FactorSpec {
    std::string name;
    Parity parity = Parity::even;
    Int rank = 0;
};

// Graded-commutative polynomial algebra on the formal Chern classes of a
// list of factors, truncated in cohomological degree at 2m.  Even factors
// contribute c_1(e)..c_m(e); odd factors contribute the half-integer
// classes c_{1/2}(e), c_{3/2}(e), ... in odd degrees.
//
// A bigraded context carries two factor lists (the two legs of a product
// of moduli spaces); left variables sort before right variables and the
// Koszul rule supplies the sign when legs are swapped.
class FormalContext {
  public:
    static FormalContext single(std::vector<FactorSpec> factors, int m);
    static FormalContext bigraded(std::vector<FactorSpec> left, std::vector<FactorSpec> right, int m,
                                  bool with_line_twist = false);

    int m() const { return m_; }
    int degree_cap() const { return 2 * m_; }
    int sides() const { return static_cast<int>(factors_.size()); }
    const std::vector<FactorSpec>& factors(int side) const;
    const VarTablePtr& table() const { return table_; }

    Poly zero() const { return Poly::constant(table_, 0); }
    Poly one() const { return Poly::constant(table_, 1); }

    // c_{idx2/2}(e_factor); zero beyond the truncation degree
    Poly chern_var(int side, int factor, int idx2) const;

    // the factor's Chern data as a ChernVector over this algebra
    ChernVector chern_vector(int side, int factor) const;

    // ch_{idx2/2}(e_factor); idx2 = 0 gives the declared rank (even
    // factors) or 0 (odd factors)
    Poly formal_ch(int side, int factor, int idx2) const;

    bool has_line_twist() const { return twist_id_ >= 0; }
    Poly line_twist() const; // c_1 of the formal line bundle on the right leg

    // (left, right) cohomological degrees of a monomial
    std::pair<int, int> bidegree(const Monomial& mono) const;

  private:
    FormalContext() = default;

    std::vector<std::vector<FactorSpec>> factors_;
    // var_ids_[side][factor][idx2] = variable id, or -1 when absent
    std::vector<std::vector<std::vector<int>>> var_ids_;
    int m_ = 0;
    int twist_id_ = -1;
    VarTablePtr table_;
};

// A term of a class on the product, written alpha (x) beta.
struct BigradedTerm {
    Int coeff;
    Monomial alpha, beta;
    int deg_alpha = 0, deg_beta = 0;
};

// Splits an integer-coefficient bigraded class into its (alpha, beta) term
// list; invariant_breach when a coefficient is not an integer.
std::vector<BigradedTerm> split_terms(const FormalContext& fc, const Poly& p);

std::string monomial_str(const FormalContext& fc, const Monomial& m);

} // namespace kmoduli

#endif
