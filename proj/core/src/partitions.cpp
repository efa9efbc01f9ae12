#include "cobinv/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cobinv {

std::vector<Partition> partitions_of(int n) { return partitions_of(n, 1); }

std::vector<Partition> partitions_of(int n, int min_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= min_part; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition merge_partitions(const Partition& a, const Partition& b) {
    Partition r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end(), std::greater<int>());
    return r;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

std::vector<std::pair<Partition, Partition>> splittings(const Partition& alpha) {
    std::vector<std::pair<Partition, Partition>> out;
    std::size_t m = alpha.size();
    std::vector<std::pair<Partition, Partition>> seen;
    for (std::size_t mask = 0; mask < (1u << m); ++mask) {
        Partition a, b;
        for (std::size_t i = 0; i < m; ++i)
            ((mask >> i) & 1 ? a : b).push_back(alpha[i]);
        std::sort(a.begin(), a.end(), std::greater<int>());
        std::sort(b.begin(), b.end(), std::greater<int>());
        bool dup = false;
        for (auto& [x, y] : out)
            if (x == a && y == b) { dup = true; break; }
        if (!dup) out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

}  // namespace cobinv
