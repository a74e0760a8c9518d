#ifndef KMODULI_POLY_HPP
#define KMODULI_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmoduli/arith.hpp"

namespace kmoduli {

// A formal variable of a graded-commutative algebra.  Odd-degree variables
// anticommute and square to zero; even-degree variables are central.
// `side` distinguishes the two tensor legs of a bigraded algebra
// (0 = left, 1 = right, -1 = unsided).
struct VarInfo {
    std::string name;
    int degree = 0;
    int side = -1;

    bool odd() const { return degree % 2 != 0; }
};

// Immutable variable registry shared by all elements of one algebra.
// Variable ids are positions; the canonical monomial order is by id, so
// callers register variables in the order they want them printed
// (side, factor index, Chern index).
class VarTable {
  public:
    // degree_cap 0 = no truncation; otherwise monomials of total degree
    // > degree_cap are identified with zero.
    explicit VarTable(std::vector<VarInfo> vars, int degree_cap = 0);

    const VarInfo& var(int id) const { return vars_.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(vars_.size()); }
    int cap() const { return cap_; }

  private:
    std::vector<VarInfo> vars_;
    int cap_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<VarInfo> vars, int degree_cap = 0);

// Product of variable powers, sorted by variable id.  Exponents >= 1.
struct Monomial {
    std::vector<std::pair<int, int>> powers; // (var id, exponent)

    int degree(const VarTable& t) const;
    bool operator==(const Monomial& o) const { return powers == o.powers; }
    bool operator<(const Monomial& o) const { return powers < o.powers; }
    std::string str(const VarTable& t) const;
};

// Koszul-signed product; nullopt when the product vanishes (an odd variable
// squared).  sign is +-1.
std::optional<std::pair<Monomial, int>> mul(const Monomial& a, const Monomial& b, const VarTable& t);

// Sparse polynomial with exact rational coefficients over a VarTable.
class Poly {
  public:
    Poly() = default;
    explicit Poly(VarTablePtr table) : table_(std::move(table)) {}

    static Poly constant(VarTablePtr table, const Rat& c);
    static Poly variable(VarTablePtr table, int id);

    const VarTablePtr& table() const { return table_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;
    Rat constant_term() const;
    Rat coeff(const Monomial& m) const;

    // true when every term is homogeneous of the given total degree
    bool is_homogeneous(int degree) const;

    void add_term(const Monomial& m, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly operator*(const Poly& o) const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void check_same_table(const Poly& o) const;

    VarTablePtr table_;
    std::map<Monomial, Rat> terms_;
};

// Substitutes images[id] for each variable; all source variables must be
// even (no sign bookkeeping is attempted).  Used by oracle cross-checks.
Poly substitute(const Poly& p, const std::vector<Poly>& images);

} // namespace kmoduli

#endif
