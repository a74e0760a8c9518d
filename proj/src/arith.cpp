#include "kmoduli/arith.hpp"

#include "kmoduli/errors.hpp"

namespace kmoduli {

Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw validation_error("ratio: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int to_integer(const Rat& q, const char* what) {
    if (!is_integer(q)) throw invariant_breach(std::string(what) + ": expected an integer, got " + rat_str(q));
    return q.get_num();
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

Rat falling_binomial(long a, long k) {
    if (k < 0) return Rat(0);
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= Int(a - i);
    return ratio(num, factorial(static_cast<unsigned>(k)));
}

Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const auto& x : xs) {
        Int ax = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    return g;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw validation_error("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return ratio(num, den);
    } catch (const std::invalid_argument&) {
        throw validation_error("malformed rational literal: '" + s + "'");
    }
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw validation_error("malformed integer literal: '" + s + "'");
    }
}

std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace kmoduli
