#pragma once

#include "cylschur/common.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cylschur {

using IntVec = std::vector<long long>;

// Weakly decreasing positive parts; trailing zeros stripped at construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Sorts an arbitrary multiset of non-negative parts.
    static Partition sorted(std::vector<int> parts);
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    // 0 beyond the last part.
    int operator[](int i) const {
        return i >= 0 && i < length() ? parts_[i] : 0;
    }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

// Strictly positive parts in the given order.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    int operator[](int i) const { return parts_[i]; }

    Partition sort() const { return Partition::sorted(parts_); }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

long long z_of(const Partition& lambda);

// Every coarsening beta >= alpha with pi(alpha, beta), the blockwise
// partial-sum product. 2^(l-1) entries; alpha itself comes first.
std::vector<std::pair<Composition, long long>> coarsenings_with_pi(const Composition& alpha);

// delta = (n-1, ..., 1, 0); rho is stored doubled: (n-1, n-3, ..., 1-n).
std::pair<IntVec, IntVec> special_vectors(int n);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of_bounded(int n, int maxParts, int maxPart);
std::vector<Composition> compositions_of(int n);

std::vector<int> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<int>& v);

// Floor division, rounding toward minus infinity.
long long floor_div(long long a, long long b);

// Calls fn(perm, sign) for every permutation of {0, ..., n-1} in
// lexicographic order. Guarded by config().maxPermSize.
void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& fn);

}
