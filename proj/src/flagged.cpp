#include "cylschur/flagged.hpp"

#include "cylschur/common.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace cylschur {

FlagPair FlagPair::trivial(int rows, int maxEntry) {
    FlagPair f;
    f.a.assign(rows, 1);
    f.b.assign(rows, maxEntry);
    return f;
}

void validate_flagged_shape(const std::vector<int>& lambda, const std::vector<int>& mu,
                            const FlagPair& flags) {
    int rows = static_cast<int>(lambda.size());
    if (static_cast<int>(mu.size()) > rows)
        throw input_error("flagged shape: mu longer than lambda");
    if (static_cast<int>(flags.a.size()) != rows || static_cast<int>(flags.b.size()) != rows)
        throw input_error("flagged shape: flag length must match row count");
    for (int r = 0; r < rows; ++r) {
        int mr = r < static_cast<int>(mu.size()) ? mu[r] : 0;
        if (mr < 0 || lambda[r] < mr)
            throw input_error("flagged shape: row " + std::to_string(r + 1) + " has mu > lambda");
        if (r > 0 && lambda[r] > lambda[r - 1])
            throw input_error("flagged shape: lambda not weakly decreasing");
        if (r > 0 && mr > (r - 1 < static_cast<int>(mu.size()) ? mu[r - 1] : 0))
            throw input_error("flagged shape: mu not weakly decreasing");
    }
}

namespace {

std::vector<int> padded_mu(const std::vector<int>& mu, int rows) {
    std::vector<int> m(mu);
    m.resize(rows, 0);
    return m;
}

// Cell by cell backtracking in row order. emit sees the finished rows.
void walk_fillings(const std::vector<int>& lambda, const std::vector<int>& mu,
                   const FlagPair& flags, int maxEntry, const std::vector<int>* weight,
                   const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    int rows = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(lambda[r] - mu[r], 0);
    std::vector<int> rem;
    if (weight) {
        rem = *weight;
        long long cells = 0, want = 0;
        for (int r = 0; r < rows; ++r) cells += lambda[r] - mu[r];
        for (int w : rem) want += w;
        if (want != cells) return;
    }

    std::function<void(int, int)> rec = [&](int r, int idx) {
        if (r == rows) {
            if (weight)
                for (int w : rem)
                    if (w != 0) return;
            emit(fill);
            return;
        }
        if (idx == static_cast<int>(fill[r].size())) {
            rec(r + 1, 0);
            return;
        }
        int col = mu[r] + idx + 1;
        int lo = flags.a[r];
        if (idx > 0) lo = std::max(lo, fill[r][idx - 1]);
        if (r > 0 && col > mu[r - 1] && col <= lambda[r - 1])
            lo = std::max(lo, fill[r - 1][col - mu[r - 1] - 1] + 1);
        int hi = std::min(flags.b[r], maxEntry);
        for (int v = lo; v <= hi; ++v) {
            if (weight) {
                if (v > static_cast<int>(rem.size()) || rem[v - 1] <= 0) continue;
                --rem[v - 1];
            }
            fill[r][idx] = v;
            rec(r, idx + 1);
            if (weight) ++rem[v - 1];
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<std::vector<std::vector<int>>> flagged_tableaux(const std::vector<int>& lambda,
                                                            const std::vector<int>& mu,
                                                            const FlagPair& flags, int maxEntry,
                                                            const std::vector<int>* weight) {
    validate_flagged_shape(lambda, mu, flags);
    auto m = padded_mu(mu, static_cast<int>(lambda.size()));
    std::vector<std::vector<std::vector<int>>> out;
    walk_fillings(lambda, m, flags, maxEntry, weight,
                  [&](const std::vector<std::vector<int>>& f) { out.push_back(f); });
    return out;
}

long long flagged_kostka(const std::vector<int>& lambda, const std::vector<int>& mu,
                         const FlagPair& flags, const std::vector<int>& weight) {
    validate_flagged_shape(lambda, mu, flags);
    auto m = padded_mu(mu, static_cast<int>(lambda.size()));
    long long count = 0;
    walk_fillings(lambda, m, flags, static_cast<int>(weight.size()), &weight,
                  [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

SparsePolynomial flagged_schur_enum(const std::vector<int>& lambda, const std::vector<int>& mu,
                                    const FlagPair& flags, int nvars) {
    validate_flagged_shape(lambda, mu, flags);
    auto m = padded_mu(mu, static_cast<int>(lambda.size()));
    SparsePolynomial p(nvars);
    walk_fillings(lambda, m, flags, nvars, nullptr, [&](const std::vector<std::vector<int>>& f) {
        std::vector<int> expo(nvars, 0);
        for (const auto& row : f)
            for (int v : row) ++expo[v - 1];
        p.add_term(expo, Rational(1));
    });
    return p;
}

SparsePolynomial flagged_h(int m, int lo, int hi, int nvars) {
    if (lo < 1 || hi > nvars) throw input_error("flagged_h: variable window outside 1..nvars");
    SparsePolynomial p(nvars);
    if (m < 0) return p;
    if (m == 0) return SparsePolynomial(nvars, Rational(1));
    if (lo > hi) return p;
    std::vector<int> expo(nvars, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == hi) {
            expo[var - 1] = left;
            p.add_term(expo, Rational(1));
            expo[var - 1] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            expo[var - 1] = e;
            rec(var + 1, left - e);
        }
        expo[var - 1] = 0;
    };
    rec(lo, m);
    return p;
}

SparsePolynomial flagged_h_product(const std::vector<int>& alpha, const FlagPair& flags,
                                   int nvars) {
    if (alpha.size() != flags.a.size() || alpha.size() != flags.b.size())
        throw input_error("flagged_h_product: length mismatch");
    SparsePolynomial p(nvars, Rational(1));
    for (size_t i = 0; i < alpha.size(); ++i)
        p = p * flagged_h(alpha[i], flags.a[i], flags.b[i], nvars);
    return p;
}

namespace {

// The determinant identity only holds for weakly increasing flag pairs.
void validate_jt_flags(const FlagPair& flags, int nvars) {
    int rows = static_cast<int>(flags.a.size());
    for (int r = 0; r < rows; ++r) {
        if (flags.a[r] > flags.b[r])
            throw input_error("flags: a_r > b_r in row " + std::to_string(r + 1));
        if (r > 0 && (flags.a[r] < flags.a[r - 1] || flags.b[r] < flags.b[r - 1]))
            throw input_error("flags: must be weakly increasing for the determinant");
        if (nvars > 0 && flags.b[r] > nvars)
            throw input_error("flags: variable count below flag bound");
    }
}

}  // namespace

SparsePolynomial flagged_schur_jt(const std::vector<int>& lambda, const std::vector<int>& mu,
                                  const FlagPair& flags, int nvars) {
    validate_flagged_shape(lambda, mu, flags);
    validate_jt_flags(flags, nvars);
    int rows = static_cast<int>(lambda.size());
    auto m = padded_mu(mu, rows);
    SparsePolynomial det(nvars);
    for_each_permutation(rows, [&](const std::vector<int>& perm, int sign) {
        SparsePolynomial term(nvars, Rational(sign));
        for (int j = 0; j < rows && !term.is_zero(); ++j) {
            int i = perm[j];
            term = term * flagged_h(lambda[i] - m[j] - i + j, flags.a[j], flags.b[i], nvars);
        }
        det = det + term;
    });
    return det;
}

namespace {

// Column recursion memoized on the remaining row sums.
long long cont_rec(const ContingencySpec& s, int j, std::vector<long long>& rem,
                   std::vector<std::map<std::vector<long long>, long long>>& memo) {
    int cols = static_cast<int>(s.alpha.size());
    if (j == cols) {
        for (long long r : rem)
            if (r != 0) return 0;
        return 1;
    }
    auto it = memo[j].find(rem);
    if (it != memo[j].end()) return it->second;
    int nrows = static_cast<int>(s.beta.size());
    int lo = std::max(1, s.a[j]), hi = std::min(nrows, s.b[j]);
    long long total = 0;
    std::function<void(int, long long)> dist = [&](int row, long long left) {
        if (row > hi) {
            if (left == 0) total += cont_rec(s, j + 1, rem, memo);
            return;
        }
        long long cap = std::min(left, rem[row - 1]);
        for (long long v = 0; v <= cap; ++v) {
            rem[row - 1] -= v;
            dist(row + 1, left - v);
            rem[row - 1] += v;
        }
    };
    if (s.alpha[j] == 0)
        total = cont_rec(s, j + 1, rem, memo);
    else if (lo <= hi)
        dist(lo, s.alpha[j]);
    memo[j][rem] = total;
    return total;
}

}  // namespace

long long contingency_count(const ContingencySpec& spec) {
    if (spec.a.size() != spec.alpha.size() || spec.b.size() != spec.alpha.size())
        throw input_error("contingency: window count must match column count");
    long long sa = 0, sb = 0;
    for (long long v : spec.alpha) {
        if (v < 0) return 0;
        sa += v;
    }
    for (long long v : spec.beta) {
        if (v < 0) return 0;
        sb += v;
    }
    if (sa != sb) return 0;
    std::vector<long long> rem(spec.beta);
    std::vector<std::map<std::vector<long long>, long long>> memo(spec.alpha.size());
    return cont_rec(spec, 0, rem, memo);
}

long long kostka_via_contingency(const std::vector<int>& lambda, const std::vector<int>& mu,
                                 const FlagPair& flags, const std::vector<long long>& beta) {
    validate_flagged_shape(lambda, mu, flags);
    validate_jt_flags(flags, 0);
    int l = static_cast<int>(lambda.size());
    auto m = padded_mu(mu, l);
    long long total = 0;
    for_each_permutation(l, [&](const std::vector<int>& tau, int sign) {
        ContingencySpec s;
        s.beta = beta;
        s.alpha.resize(l);
        s.a.resize(l);
        s.b.resize(l);
        for (int j = 0; j < l; ++j) {
            int i = tau[j];
            s.alpha[j] = lambda[i] - m[j] - i + j;
            s.a[j] = flags.a[j];
            s.b[j] = flags.b[i];
        }
        total += sign * contingency_count(s);
    });
    return total;
}

long long kostka_number(const Partition& lambda, const std::vector<int>& content) {
    for (int c : content)
        if (c < 0) return 0;
    auto flags = FlagPair::trivial(lambda.length(), static_cast<int>(content.size()));
    return flagged_kostka(lambda.parts(), {}, flags, content);
}

namespace {

std::vector<int> pad_parts(const Partition& p, int l) {
    std::vector<int> v(p.parts());
    v.resize(l, 0);
    return v;
}

long long lr_kostant(const Partition& nu, const Partition& lambda, const Partition& mu, int l) {
    auto nuV = pad_parts(nu, l), lamV = pad_parts(lambda, l);
    auto rho2 = special_vectors(l).second;
    long long total = 0;
    for_each_permutation(l, [&](const std::vector<int>& perm, int sign) {
        std::vector<int> w(l);
        for (int i = 0; i < l; ++i) {
            int s = perm[i];
            w[i] = nuV[s] + static_cast<int>(rho2[s] - rho2[i]) / 2 - lamV[i];
        }
        total += sign * kostka_number(mu, w);
    });
    return total;
}

long long lr_contingency(const Partition& nu, const Partition& lambda, const Partition& mu,
                         int l) {
    auto nuV = pad_parts(nu, l), lamV = pad_parts(lambda, l), muV = pad_parts(mu, l);
    auto rho2 = special_vectors(l).second;
    long long total = 0;
    for_each_permutation(l, [&](const std::vector<int>& sigma, int ssign) {
        std::vector<long long> beta(l);
        bool ok = true;
        for (int i = 0; i < l; ++i) {
            int s = sigma[i];
            beta[i] = nuV[s] + (rho2[s] - rho2[i]) / 2 - lamV[i];
            if (beta[i] < 0) ok = false;
        }
        if (!ok) return;
        for_each_permutation(l, [&](const std::vector<int>& tau, int tsign) {
            ContingencySpec spec;
            spec.beta = beta;
            spec.alpha.resize(l);
            spec.a.assign(l, 1);
            spec.b.assign(l, l);
            for (int j = 0; j < l; ++j)
                spec.alpha[j] = muV[tau[j]] + (l - 1 - tau[j]) - (l - 1 - j);
            total += ssign * tsign * contingency_count(spec);
        });
    });
    return total;
}

long long lr_lattice(const Partition& nu, const Partition& lambda, const Partition& mu) {
    int values = std::max(1, mu.length());
    std::vector<int> content(mu.parts());
    content.resize(values, 0);
    auto flags = FlagPair::trivial(nu.length(), values);
    auto fills = flagged_tableaux(nu.parts(), lambda.parts(), flags, values, &content);
    long long count = 0;
    for (const auto& f : fills) {
        // Reverse reading word: rows top down, each right to left.
        std::vector<int> seen(values + 1, 0);
        bool lattice = true;
        for (const auto& row : f) {
            for (auto it = row.rbegin(); it != row.rend() && lattice; ++it) {
                ++seen[*it];
                if (*it > 1 && seen[*it] > seen[*it - 1]) lattice = false;
            }
            if (!lattice) break;
        }
        if (lattice) ++count;
    }
    return count;
}

}  // namespace

long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu,
                         LrRoute route) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    for (int r = 0; r < lambda.length(); ++r)
        if (lambda[r] > nu[r]) return 0;
    int l = std::max({nu.length(), lambda.length(), mu.length(), 1});
    switch (route) {
        case LrRoute::Kostant: return lr_kostant(nu, lambda, mu, l);
        case LrRoute::Contingency: return lr_contingency(nu, lambda, mu, l);
        case LrRoute::LatticeWord: return lr_lattice(nu, lambda, mu);
    }
    return 0;
}

long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
    long long a = lr_coefficient(nu, lambda, mu, LrRoute::Kostant);
    long long b = lr_coefficient(nu, lambda, mu, LrRoute::Contingency);
    long long c = lr_coefficient(nu, lambda, mu, LrRoute::LatticeWord);
    if (a != b || b != c) throw std::logic_error("lr_coefficient: routes disagree");
    return a;
}

}  // namespace cylschur
