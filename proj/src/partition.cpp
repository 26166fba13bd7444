#include "cylschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cylschur {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw input_error("partition parts must be non-negative with zeros trailing");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw input_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    return Partition(parse_int_list(text));
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Partition::str() const {
    return "(" + join_ints(parts_) + ")";
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw input_error("composition parts must be positive");
}

Composition Composition::parse(const std::string& text) {
    return Composition(parse_int_list(text));
}

long long Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Composition::str() const {
    return "(" + join_ints(parts_) + ")";
}

long long z_of(const Partition& lambda) {
    long long z = 1;
    int run = 0;
    int prev = -1;
    for (int p : lambda.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= static_cast<long long>(p) * run;
    }
    return z;
}

std::vector<std::pair<Composition, long long>> coarsenings_with_pi(const Composition& alpha) {
    const int l = alpha.length();
    std::vector<std::pair<Composition, long long>> out;
    if (l == 0) {
        out.emplace_back(Composition(), 1);
        return out;
    }
    // Bit b of mask set merges positions b and b+1 into one block.
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        std::vector<int> beta;
        long long pi = 1;
        long long block = 0;
        for (int i = 0; i < l; ++i) {
            block += alpha[i];
            pi *= block;
            const bool mergeNext = i + 1 < l && (mask >> i & 1);
            if (!mergeNext) {
                beta.push_back(static_cast<int>(block));
                block = 0;
            }
        }
        out.emplace_back(Composition(std::move(beta)), pi);
    }
    return out;
}

std::pair<IntVec, IntVec> special_vectors(int n) {
    if (n < 1) throw input_error("special_vectors needs n >= 1");
    IntVec delta(n), rho(n);
    for (int i = 0; i < n; ++i) {
        delta[i] = n - 1 - i;
        rho[i] = n - 1 - 2 * i;
    }
    return {delta, rho};
}

std::vector<Partition> partitions_of(int n) {
    return partitions_of_bounded(n, n, n);
}

std::vector<Partition> partitions_of_bounded(int n, int maxParts, int maxPart) {
    if (n < 0) throw input_error("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= maxParts) return;
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, maxPart);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw input_error("compositions_of needs n >= 0");
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            rec(rem - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw input_error("bad integer '" + tok + "'");
        }
        if (used != tok.size() || tok.empty())
            throw input_error("bad integer '" + tok + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_int_list(const std::vector<int>& v) {
    return join_ints(v);
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    if (n > config().maxPermSize)
        throw cost_guard_error("permutation size " + std::to_string(n) + " exceeds limit " +
                               std::to_string(config().maxPermSize));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        fn(perm, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}
