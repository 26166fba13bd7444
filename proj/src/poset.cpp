#include "cylschur/poset.hpp"

#include "cylschur/common.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cylschur {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    // Smaller root wins so representatives are deterministic.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

OrientedPoset OrientedPoset::from_covers(int n, const EdgeList& covers) {
    if (n < 0) throw input_error("poset size must be non-negative");
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw input_error("bad cover pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        adj[a].push_back(b);
    }
    // DFS closure; a cycle shows up as a <_P a.
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack = adj[s];
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == s) throw input_error("covers contain a cycle");
            if (less[s][v]) continue;
            less[s][v] = true;
            for (int w : adj[v]) stack.push_back(w);
        }
        if (less[s][s]) throw input_error("covers contain a cycle");
    }
    OrientedPoset p = from_relation(n, less);
    return p;
}

OrientedPoset OrientedPoset::from_relation(int n, const std::vector<std::vector<bool>>& less) {
    OrientedPoset p;
    p.n_ = n;
    p.less_ = less;
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (p.less_[a][k])
                for (int b = 0; b < n; ++b)
                    if (p.less_[k][b]) p.less_[a][b] = true;
    for (int a = 0; a < n; ++a) {
        if (p.less_[a][a]) throw input_error("relation is not irreflexive");
        for (int b = 0; b < n; ++b)
            if (a != b && p.less_[a][b] && p.less_[b][a])
                throw input_error("relation is not antisymmetric");
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!p.less_[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (p.less_[a][c] && p.less_[c][b]) cover = false;
            if (cover) p.covers_.emplace_back(a, b);
        }
    }
    return p;
}

EdgeList OrientedPoset::relation_pairs() const {
    EdgeList out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (less_[a][b]) out.emplace_back(a, b);
    return out;
}

std::vector<int> OrientedPoset::topological_order() const {
    std::vector<int> indeg(n_, 0);
    for (const auto& [a, b] : covers_) ++indeg[b];
    std::vector<int> order;
    std::vector<bool> done(n_, false);
    for (int step = 0; step < n_; ++step) {
        int pick = -1;
        for (int v = 0; v < n_; ++v)
            if (!done[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) throw input_error("poset order is cyclic");
        done[pick] = true;
        order.push_back(pick);
        for (const auto& [a, b] : covers_)
            if (a == pick) --indeg[b];
    }
    return order;
}

OrientedPoset OrientedPoset::induced(const std::vector<int>& keep) const {
    const int k = static_cast<int>(keep.size());
    std::vector<std::vector<bool>> less(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) less[i][j] = less_[keep[i]][keep[j]];
    return from_relation(k, less);
}

EdgeList OrientedPoset::restrict_edges(const EdgeList& S, const std::vector<int>& keep) {
    std::vector<int> newIndex;
    int maxEl = -1;
    for (int v : keep) maxEl = std::max(maxEl, v);
    newIndex.assign(maxEl + 1, -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) newIndex[keep[i]] = i;
    EdgeList out;
    for (const auto& [a, b] : S) {
        if (a > maxEl || b > maxEl || newIndex[a] < 0 || newIndex[b] < 0) continue;
        out.emplace_back(newIndex[a], newIndex[b]);
    }
    return out;
}

void OrientedPoset::validate_edges(const EdgeList& S) const {
    for (const auto& [a, b] : S)
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || !less_[a][b])
            throw input_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") is not a strict relation pair");
}

ChainCongruence chain_congruence_closure(const OrientedPoset& P, const EdgeList& S) {
    P.validate_edges(S);
    const int n = P.size();
    UnionFind uf(n);
    for (const auto& [a, b] : S) uf.unite(a, b);

    bool changed = true;
    while (changed) {
        changed = false;
        // Sandwich: a ~ c with a < b < c forces b into the class.
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                if (!P.less(a, c) || uf.find(a) != uf.find(c)) continue;
                for (int b = 0; b < n; ++b)
                    if (P.less(a, b) && P.less(b, c) && uf.unite(a, b)) changed = true;
            }
        // Cycles between classes in the projected relation collapse.
        std::vector<int> roots;
        for (int v = 0; v < n; ++v)
            if (uf.find(v) == v) roots.push_back(v);
        const int k = static_cast<int>(roots.size());
        std::vector<int> rootIndex(n, -1);
        for (int i = 0; i < k; ++i) rootIndex[roots[i]] = i;
        std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (P.less(a, b)) reach[rootIndex[uf.find(a)]][rootIndex[uf.find(b)]] = true;
        for (int m = 0; m < k; ++m)
            for (int i = 0; i < k; ++i)
                if (reach[i][m])
                    for (int j = 0; j < k; ++j)
                        if (reach[m][j]) reach[i][j] = true;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (reach[i][j] && reach[j][i] && uf.unite(roots[i], roots[j])) changed = true;
    }

    ChainCongruence cc;
    cc.classOf.assign(n, -1);
    std::vector<int> rootToClass(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (rootToClass[r] < 0) {
            rootToClass[r] = static_cast<int>(cc.classes.size());
            cc.classes.emplace_back();
        }
        cc.classOf[v] = rootToClass[r];
        cc.classes[rootToClass[r]].push_back(v);
    }
    const int k = static_cast<int>(cc.classes.size());
    std::vector<std::vector<bool>> qless(k, std::vector<bool>(k, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (P.less(a, b) && cc.classOf[a] != cc.classOf[b]) qless[cc.classOf[a]][cc.classOf[b]] = true;
    cc.quotient = OrientedPoset::from_relation(k, qless);
    for (const auto& [a, b] : P.relation_pairs())
        if (cc.classOf[a] == cc.classOf[b]) cc.closedEdges.emplace_back(a, b);
    return cc;
}

long long m_E(const OrientedPoset& P, const EdgeList& S) {
    if (P.size() == 0) return 1;
    const ChainCongruence cc = chain_congruence_closure(P, S);
    const int k = cc.quotient.size();
    int minimal = -1;
    for (int x = 0; x < k; ++x) {
        bool isMin = true;
        for (int y = 0; y < k && isMin; ++y)
            if (cc.quotient.less(y, x)) isMin = false;
        if (!isMin) continue;
        if (minimal >= 0) return 0;
        minimal = x;
    }
    return static_cast<long long>(cc.classes[minimal].size());
}

std::vector<OrderSurjection> enumerate_surjections(const OrientedPoset& P, const EdgeList& S,
                                                   const Composition& alpha) {
    const int n = P.size();
    if (alpha.weight() != n)
        throw input_error("block sizes must sum to the poset size");
    P.validate_edges(S);
    const int l = alpha.length();
    std::vector<OrderSurjection> out;
    std::vector<int> f(n, 0);
    std::vector<int> cap(l + 1, 0);
    for (int i = 0; i < l; ++i) cap[i + 1] = alpha[i];

    std::function<void(int)> rec = [&](int e) {
        if (e == n) {
            out.push_back({f, alpha});
            return;
        }
        int lo = 1;
        int hi = l;
        for (int p = 0; p < e; ++p) {
            if (P.less(p, e)) lo = std::max(lo, f[p]);
            if (P.less(e, p)) hi = std::min(hi, f[p]);
        }
        int forced = 0;
        for (const auto& [a, b] : S) {
            int partner = -1;
            if (a == e && b < e) partner = b;
            else if (b == e && a < e) partner = a;
            else continue;
            if (forced == 0) forced = f[partner];
            else if (f[partner] != forced) return;
        }
        for (int v = lo; v <= hi; ++v) {
            if (forced && v != forced) continue;
            if (cap[v] == 0) continue;
            --cap[v];
            f[e] = v;
            rec(e + 1);
            f[e] = 0;
            ++cap[v];
        }
    };
    rec(0);
    return out;
}

SparsePolynomial K_generating(const OrientedPoset& P, const EdgeList& S, KMode mode, int nvars) {
    if (nvars < 1) throw input_error("K_generating needs nvars >= 1");
    P.validate_edges(S);
    const int n = P.size();
    SparsePolynomial out(nvars);
    if (n == 0) return SparsePolynomial(nvars, Rational(1));

    const std::vector<int> topo = P.topological_order();
    UnionFind classes(n);
    if (mode == KMode::Equal)
        for (const auto& [a, b] : S) classes.unite(a, b);

    std::vector<int> f(n, 0);
    std::vector<int> classValue(n, 0);
    std::vector<int> exps(nvars, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.add_term(exps, 1);
            return;
        }
        const int e = topo[k];
        int lo = 1;
        for (int p = 0; p < n; ++p)
            if (P.less(p, e) && f[p] > 0) lo = std::max(lo, f[p]);
        if (mode == KMode::Strict)
            for (const auto& [a, b] : S)
                if (b == e && f[a] > 0) lo = std::max(lo, f[a] + 1);
        int forced = 0;
        if (mode == KMode::Equal) {
            const int r = classes.find(e);
            if (classValue[r] > 0) forced = classValue[r];
        }
        for (int v = lo; v <= nvars; ++v) {
            if (forced && v != forced) continue;
            f[e] = v;
            int saved = 0;
            if (mode == KMode::Equal) {
                const int r = classes.find(e);
                saved = classValue[r];
                classValue[r] = v;
            }
            ++exps[v - 1];
            rec(k + 1);
            --exps[v - 1];
            f[e] = 0;
            if (mode == KMode::Equal) classValue[classes.find(e)] = saved;
        }
    };
    rec(0);
    return out;
}

BasisExpansion psi_AS(const OrientedPoset& P, const EdgeList& E) {
    EdgeList sorted = E;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const ChainCongruence cc = chain_congruence_closure(P, E);
    if (sorted != cc.closedEdges)
        throw input_error("E is not a chain congruence: closure adds or removes pairs");

    BasisExpansion out;
    out.basis = Basis::QPsi;
    const int n = P.size();
    for (const Composition& alpha : compositions_of(n)) {
        long long total = 0;
        for (const OrderSurjection& f : enumerate_surjections(P, E, alpha)) {
            long long prod = 1;
            for (int j = 1; j <= alpha.length() && prod != 0; ++j) {
                std::vector<int> block;
                for (int e = 0; e < n; ++e)
                    if (f.assignment[e] == j) block.push_back(e);
                prod *= m_E(P.induced(block), OrientedPoset::restrict_edges(E, block));
            }
            total += prod;
        }
        if (total != 0) out.byComposition[alpha] = Rational(total) / z_of(alpha.sort());
    }
    if (n == 0) out.byComposition[Composition()] = 1;
    return out;
}

BasisExpansion psi_strict(const OrientedPoset& P, const EdgeList& E) {
    P.validate_edges(E);
    BasisExpansion out;
    out.basis = Basis::QPsi;
    const int n = P.size();
    for (const Composition& alpha : compositions_of(n)) {
        long long total = 0;
        for (const OrderSurjection& f : enumerate_surjections(P, {}, alpha)) {
            long long prod = 1;
            for (int j = 1; j <= alpha.length() && prod != 0; ++j) {
                std::vector<int> block;
                for (int e = 0; e < n; ++e)
                    if (f.assignment[e] == j) block.push_back(e);
                prod *= signed_mE_sum(P.induced(block), OrientedPoset::restrict_edges(E, block));
            }
            total += prod;
        }
        if (total != 0) out.byComposition[alpha] = Rational(total) / z_of(alpha.sort());
    }
    if (n == 0) out.byComposition[Composition()] = 1;
    return out;
}

long long signed_mE_sum(const OrientedPoset& P, const EdgeList& E) {
    P.validate_edges(E);
    const int k = static_cast<int>(E.size());
    if (k > config().maxSubsetEdges)
        throw cost_guard_error("strict edge set of size " + std::to_string(k) + " exceeds limit " +
                               std::to_string(config().maxSubsetEdges));
    long long total = 0;
    for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
        EdgeList S;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) S.push_back(E[i]);
        const long long m = m_E(P, S);
        total += (S.size() % 2 == 0) ? m : -m;
    }
    return total;
}

}
