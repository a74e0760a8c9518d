#include "kmoduli/matrix.hpp"

#include "kmoduli/errors.hpp"

namespace kmoduli {

bool is_square(const IntMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

bool is_symmetric(const IntMat& m) {
    if (!is_square(m)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

IntMat int_identity(std::size_t n) {
    IntMat id(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

RatMat to_rat(const IntMat& m) {
    RatMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        r[i].assign(m[i].begin(), m[i].end());
    return r;
}

Rat det(const RatMat& m) {
    std::size_t n = m.size();
    RatMat a = m;
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            d = -d;
        }
        d *= a[col][col];
        Rat inv = 1 / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

Int det(const IntMat& m) {
    Rat d = det(to_rat(m));
    return to_integer(d, "integer determinant");
}

std::optional<RatMat> inverse(const RatMat& m) {
    std::size_t n = m.size();
    RatMat a = m;
    RatMat inv(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
        }
        Rat p = 1 / a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] *= p;
            inv[col][c] *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
    Int d = det(m);
    if (d != 1 && d != -1)
        throw validation_error("matrix is not unimodular (det = " + d.get_str() + ")");
    auto inv = inverse(to_rat(m));
    IntMat out(m.size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out[i][j] = to_integer((*inv)[i][j], "unimodular inverse entry");
    return out;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& rhs) {
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    std::size_t n = m.size();
    RatVec x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += (*inv)[i][j] * rhs[j];
    return x;
}

Rat bilinear(const IntMat& m, const RatVec& v, const RatVec& w) {
    Rat s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (w[j] != 0) s += v[i] * Rat(m[i][j]) * w[j];
    }
    return s;
}

Int bilinear(const IntMat& m, const IntVec& v, const IntVec& w) {
    Int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (w[j] != 0) s += v[i] * m[i][j] * w[j];
    }
    return s;
}

} // namespace kmoduli
