#ifndef KMODULI_ARITH_HPP
#define KMODULI_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kmoduli {

using Int = mpz_class;
using Rat = mpq_class;

// num/den as a canonical rational; den must be nonzero.
Rat ratio(const Int& num, const Int& den);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Throws invariant_breach when q is not an integer.
Int to_integer(const Rat& q, const char* what);

Int factorial(unsigned n);

// C(n, k) for n >= 0; 0 when k > n or k < 0.
Int binomial(unsigned long n, long k);

// Generalized C(a, k) = a(a-1)...(a-k+1)/k!, valid for any integer a.
Rat falling_binomial(long a, long k);

Int gcd_all(const std::vector<Int>& xs);

// Accepts "p", "-p", or "p/q".
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

std::string rat_str(const Rat& q);

} // namespace kmoduli

#endif
