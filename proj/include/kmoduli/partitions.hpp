#ifndef KMODULI_PARTITIONS_HPP
#define KMODULI_PARTITIONS_HPP

#include <vector>

namespace kmoduli {

// A descending partition of n.
struct Partition {
    std::vector<int> parts; // weakly decreasing, all >= 1

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    // multiplicities[i] = number of parts equal to i, for 1 <= i <= n.
    std::vector<int> multiplicities(int n) const;
};

// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ...,
// [1,...,1].  partitions_of(0) = { [] }.  Deterministic, so every polynomial
// assembled by summing over partitions is reproducible bit for bit.
std::vector<Partition> partitions_of(int n);

} // namespace kmoduli

#endif
