#ifndef COBINV_PARTITIONS_HPP
#define COBINV_PARTITIONS_HPP

#include <string>
#include <vector>

namespace cobinv {

// Parts in weakly decreasing order; empty = the empty partition.
using Partition = std::vector<int>;

inline int weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

inline int fdeg_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x / 2;
    return w;
}

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of(int n, int min_part);
Partition merge_partitions(const Partition& a, const Partition& b);
std::string partition_to_string(const Partition& p);

// All ordered splittings alpha = alpha' cup alpha'' (as multisets).
std::vector<std::pair<Partition, Partition>> splittings(const Partition& alpha);

}  // namespace cobinv

#endif
