#include "kmoduli/partitions.hpp"

#include "kmoduli/errors.hpp"

namespace kmoduli {

int Partition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::vector<int> Partition::multiplicities(int n) const {
    std::vector<int> m(static_cast<std::size_t>(n) + 1, 0);
    for (int p : parts) ++m[static_cast<std::size_t>(p)];
    return m;
}

namespace {

void gen(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw validation_error("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return out;
}

} // namespace kmoduli
