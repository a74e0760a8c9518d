#ifndef KMODULI_CHERN_HPP
#define KMODULI_CHERN_HPP

#include <string>
#include <vector>

#include "kmoduli/poly.hpp"

namespace kmoduli {

enum class Parity { even, odd };

// Chern-class data of a K-theory class with values in a graded ring.
// Even: rank r and classes c_1..c_N (classes[j] = c_{j+1}).
// Odd:  classes c_{1/2}, c_{3/2}, ... (classes[j] = c_{j+1/2}); no rank.
// Indices are handled as idx2 = twice the Chern index, which equals the
// cohomological degree of the class.
struct ChernVector {
    Parity parity = Parity::even;
    Int rank = 0;
    std::vector<Poly> classes;

    // c_{idx2/2}; idx2 = 0 gives 1 for even vectors; indices beyond the
    // stored range are zero.
    Poly chern(int idx2, const VarTablePtr& table) const;
};

// ch_k of an even class from c_1..c_k via the signed multinomial (Girard)
// formula; k = 0 gives the rank.
Poly ch_from_chern(const ChernVector& x, int k, const VarTablePtr& table);

// c_k from ch_1..ch_k via the partition sum
//   c_k = sum over partitions of k of (-1)^(k-len) prod [(i-1)! ch_i]^{m_i} / m_i!
// ch[i] must hold ch_i for 1 <= i <= k (ch[0] is ignored).
Poly chern_from_ch(const std::vector<Poly>& ch, int k, const VarTablePtr& table);

// ch_{k-1/2} of an odd class: ((-1)^(k-1)/(k-1)!) * c_{k-1/2}, k >= 1.
Poly odd_ch(const ChernVector& z, int k, const VarTablePtr& table);

// All half-integer Chern-character components of either parity:
// ch_{idx2/2}.  For even vectors idx2 must be even, for odd vectors odd.
Poly ch_component(const ChernVector& x, int idx2, const VarTablePtr& table);

// c_{r+n}(x (x) L) for an even class x of rank r and a line class with
// c_1(L) = ell:
//   c_{r+n}(x u L) = sum_{d=0}^{n-1} (-1)^d C(n-1,d) c_{r+n-d}(x) ell^d.
Poly tensor_by_line(const ChernVector& x, const Poly& ell, int n);

// Brute-force route through Chern roots: expands
//   prod_i (1 + (alpha_i + ell) t) / prod_j (1 + (beta_j + ell) t)
// as a truncated series and returns total Chern classes c_0..c_top.
std::vector<Poly> splitting_total_chern(const std::vector<Poly>& roots_num,
                                        const std::vector<Poly>& roots_den,
                                        const Poly& ell, int top);

// Formal algebra of two odd classes x, y with generators c_{i+1/2}(x),
// c_{j+1/2}(y) for 0 <= i,j < d, truncated at degree 2d.
struct OddPairAlgebra {
    explicit OddPairAlgebra(int d);

    int d;
    VarTablePtr table;

    Poly cx(int k) const; // c_{k+1/2}(x), 0 <= k < d
    Poly cy(int k) const; // c_{k+1/2}(y)

    // ch_k(x u y) for 1 <= k <= d, assembled from the half-integer
    // characters of the factors.
    Poly ch_product(int k) const;

    // c_k(x u y), certified to have integer coefficients
    // (invariant_breach otherwise).
    Poly chern_product(int k) const;
};

// c_d(x u y) for odd formal classes; integer coefficients certified.
Poly odd_pair_chern(int d);

} // namespace kmoduli

#endif
