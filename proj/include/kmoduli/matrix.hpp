#ifndef KMODULI_MATRIX_HPP
#define KMODULI_MATRIX_HPP

#include <optional>
#include <vector>

#include "kmoduli/arith.hpp"

namespace kmoduli {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

bool is_square(const IntMat& m);
bool is_symmetric(const IntMat& m);

IntMat int_identity(std::size_t n);

Rat det(const RatMat& m);
Int det(const IntMat& m);

// Gauss-Jordan; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);

// Exact inverse of a matrix with det = +-1; throws validation_error otherwise.
IntMat inverse_unimodular(const IntMat& m);

// Solves m * x = rhs exactly; nullopt when m is singular.
std::optional<RatVec> solve(const RatMat& m, const RatVec& rhs);

RatMat to_rat(const IntMat& m);

// v^T * m * w
Rat bilinear(const IntMat& m, const RatVec& v, const RatVec& w);
Int bilinear(const IntMat& m, const IntVec& v, const IntVec& w);

} // namespace kmoduli

#endif
