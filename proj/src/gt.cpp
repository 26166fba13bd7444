#include "cylschur/gt.hpp"

#include "cylschur/common.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace cylschur {

std::vector<int> GTPattern::weight() const {
    std::vector<int> w(levels(), 0);
    for (int i = 1; i <= levels(); ++i)
        for (int j = 0; j < width(); ++j) w[i - 1] += rows[i][j] - rows[i - 1][j];
    return w;
}

namespace {

[[noreturn]] void fail(int i, int j, const std::string& rel, int i2, int j2) {
    std::ostringstream os;
    os << "GT: x[" << i << "][" << j + 1 << "] " << rel << " x[" << i2 << "][" << j2 + 1
       << "] fails";
    throw input_error(os.str());
}

}  // namespace

void validate_pattern(const GTPattern& p) {
    int n = p.levels(), m = p.width();
    if (n < 0 || m == 0) throw input_error("GT: empty pattern");
    for (const auto& row : p.rows)
        if (static_cast<int>(row.size()) != m) throw input_error("GT: ragged pattern");
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j < m; ++j)
            if (p.rows[i][j] > p.rows[i][j - 1]) fail(i, j, "<=", i, j - 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < m; ++j) {
            if (p.rows[i][j] < p.rows[i - 1][j]) fail(i, j, ">=", i - 1, j);
            if (j > 0 && p.rows[i][j] > p.rows[i - 1][j - 1]) fail(i, j, "<=", i - 1, j - 1);
        }
    }
    if (p.wrapShift >= 0) {
        for (int i = 0; i <= n; ++i)
            if (p.rows[i][m - 1] < p.rows[i][0] - p.wrapShift)
                fail(i, m - 1, ">= -shift +", i, 0);
        for (int i = 1; i <= n; ++i)
            if (p.rows[i][0] > p.rows[i - 1][m - 1] + p.wrapShift)
                fail(i, 0, "<= shift +", i - 1, m - 1);
    }
}

void validate_pattern_flags(const GTPattern& p, const FlagPair& flags) {
    int n = p.levels(), m = p.width();
    if (static_cast<int>(flags.a.size()) != m || static_cast<int>(flags.b.size()) != m)
        throw input_error("GT: flag length must match pattern width");
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < m; ++j)
            if ((i < flags.a[j] || i > flags.b[j]) && p.rows[i][j] != p.rows[i - 1][j])
                fail(i, j, "==", i - 1, j);
}

GTPattern pattern_of_filling(const std::vector<int>& lambda, const std::vector<int>& mu, int n,
                             const std::vector<std::vector<int>>& filling) {
    int m = static_cast<int>(lambda.size());
    std::vector<int> muP(mu);
    muP.resize(m, 0);
    GTPattern p;
    p.rows.assign(n + 1, std::vector<int>(m, 0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < m; ++j) {
            int c = 0;
            for (int v : filling[j])
                if (v <= i) ++c;
            p.rows[i][j] = muP[j] + c;
        }
    return p;
}

std::vector<std::vector<int>> filling_of_pattern(const GTPattern& p) {
    int n = p.levels(), m = p.width();
    std::vector<std::vector<int>> fill(m);
    for (int j = 0; j < m; ++j)
        for (int i = 1; i <= n; ++i)
            for (int c = p.rows[i][j] - p.rows[i - 1][j]; c > 0; --c) fill[j].push_back(i);
    return fill;
}

namespace {

// Shared level walker. wrapShift < 0 runs the planar rules.
void walk_gt(const std::vector<int>& lambda, const std::vector<int>& mu, int n, int wrapShift,
             const FlagPair* flags, const std::vector<int>* weight,
             const std::function<void(const GTPattern&)>& emit) {
    int m = static_cast<int>(lambda.size());
    if (n < 1) throw input_error("GT: need n >= 1");
    std::vector<int> muP(mu);
    muP.resize(m, 0);
    for (int j = 1; j < m; ++j) {
        if (lambda[j] > lambda[j - 1] || muP[j] > muP[j - 1])
            throw input_error("GT: shape rows not weakly decreasing");
    }
    for (int j = 0; j < m; ++j)
        if (muP[j] > lambda[j]) throw input_error("GT: mu exceeds lambda");
    if (wrapShift >= 0) {
        if (lambda[m - 1] < lambda[0] - wrapShift || muP[m - 1] < muP[0] - wrapShift)
            throw input_error("GT: shape violates the wrap bound");
    }
    if (weight) {
        long long want = 0, cells = 0;
        for (size_t t = 0; t < weight->size(); ++t) {
            if (t >= static_cast<size_t>(n) && (*weight)[t] != 0) return;
            want += (*weight)[t];
        }
        for (int j = 0; j < m; ++j) cells += lambda[j] - muP[j];
        if (want != cells) return;
    }

    GTPattern p;
    p.wrapShift = wrapShift;
    p.rows.assign(n + 1, std::vector<int>(m, 0));
    p.rows[0] = muP;
    p.rows[n] = lambda;

    std::function<void(int, int)> level = [&](int i, int j) {
        auto& cur = p.rows[i];
        const auto& prev = p.rows[i - 1];
        if (j == m) {
            if (weight) {
                int sum = 0;
                for (int c = 0; c < m; ++c) sum += cur[c] - prev[c];
                if (sum != (i - 1 < static_cast<int>(weight->size()) ? (*weight)[i - 1] : 0))
                    return;
            }
            if (i + 1 == n) {
                // Top row is fixed; check it against level n-1.
                for (int c = 0; c < m; ++c) {
                    if (lambda[c] < cur[c]) return;
                    if (c > 0 && lambda[c] > cur[c - 1]) return;
                    if (flags && lambda[c] != cur[c] && (n < flags->a[c] || n > flags->b[c]))
                        return;
                }
                if (wrapShift >= 0 && lambda[0] > cur[m - 1] + wrapShift) return;
                if (weight) {
                    int sum = 0;
                    for (int c = 0; c < m; ++c) sum += lambda[c] - cur[c];
                    if (sum != (i < static_cast<int>(weight->size()) ? (*weight)[i] : 0)) return;
                }
                emit(p);
            } else {
                level(i + 1, 0);
            }
            return;
        }
        int lo = prev[j];
        int hi = std::min(lambda[j], j > 0 ? prev[j - 1] : (wrapShift >= 0 ? prev[m - 1] + wrapShift
                                                                           : lambda[0]));
        if (flags && (i < flags->a[j] || i > flags->b[j])) hi = std::min(hi, lo);
        for (int v = lo; v <= hi; ++v) {
            cur[j] = v;
            level(i, j + 1);
        }
    };

    if (n == 1) {
        // Single step: lambda itself must interlace mu.
        for (int c = 0; c < m; ++c) {
            if (lambda[c] < muP[c]) return;
            if (c > 0 && lambda[c] > muP[c - 1]) return;
            if (flags && lambda[c] != muP[c] && (1 < flags->a[c] || 1 > flags->b[c])) return;
        }
        if (wrapShift >= 0 && lambda[0] > muP[m - 1] + wrapShift) return;
        if (weight) {
            int sum = 0;
            for (int c = 0; c < m; ++c) sum += lambda[c] - muP[c];
            if (weight->empty() || sum != (*weight)[0]) return;
        }
        emit(p);
        return;
    }
    level(1, 0);
}

}  // namespace

std::vector<GTPattern> enumerate_gt(const std::vector<int>& lambda, const std::vector<int>& mu,
                                    int n, const FlagPair* flags, const std::vector<int>* weight) {
    if (flags && (flags->a.size() != lambda.size() || flags->b.size() != lambda.size()))
        throw input_error("GT: flag length must match shape");
    std::vector<GTPattern> out;
    walk_gt(lambda, mu, n, -1, flags, weight, [&](const GTPattern& p) { out.push_back(p); });
    return out;
}

CylGTShape cyl_gt_shape(const CylindricDiagram& D) {
    auto view = D.skew_view();
    return CylGTShape{view.lambda, view.mu, view.shift};
}

std::vector<GTPattern> enumerate_cyl_gt(const CylGTShape& shape, int n,
                                        const std::vector<int>* weight) {
    if (shape.shift < 1) throw input_error("GT: wrap shift must be positive");
    std::vector<GTPattern> out;
    walk_gt(shape.lambda, shape.mu, n, shape.shift, nullptr, weight,
            [&](const GTPattern& p) { out.push_back(p); });
    return out;
}

GTPattern pattern_of_cssyt(const CylindricDiagram& D, const CSSYT& t, int n) {
    auto view = D.skew_view();
    auto rows = band_rows(D);
    int m = view.rows;
    GTPattern p;
    p.wrapShift = view.shift;
    p.rows.assign(n + 1, std::vector<int>(m, 0));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i <= n; ++i) {
            int c = 0;
            for (const auto& cell : rows[j])
                if (t.values[D.box_index(cell.first, cell.second)] <= i) ++c;
            p.rows[i][j] = view.mu[j] + c;
        }
    }
    return p;
}

CSSYT cssyt_of_pattern(const CylindricDiagram& D, const GTPattern& p) {
    auto view = D.skew_view();
    auto rows = band_rows(D);
    int m = view.rows, n = p.levels();
    CSSYT t;
    t.values.assign(D.box_count(), 0);
    for (int j = 0; j < m; ++j) {
        std::vector<int> vals;
        for (int i = 1; i <= n; ++i)
            for (int c = p.rows[i][j] - p.rows[i - 1][j]; c > 0; --c) vals.push_back(i);
        if (vals.size() != rows[j].size())
            throw input_error("GT: pattern row total does not match band " + std::to_string(j + 1));
        for (size_t k = 0; k < vals.size(); ++k)
            t.values[D.box_index(rows[j][k].first, rows[j][k].second)] = vals[k];
    }
    return t;
}

std::string format_gt(const GTPattern& p) {
    int n = p.levels(), m = p.width(), w = 1;
    for (const auto& row : p.rows)
        for (int v : row) w = std::max(w, static_cast<int>(std::to_string(v).size()));
    std::ostringstream os;
    for (int i = n; i >= 0; --i) {
        os << std::string(static_cast<size_t>(n - i) * ((w + 2) / 2), ' ');
        for (int j = 0; j < m; ++j) {
            std::string s = std::to_string(p.rows[i][j]);
            os << std::string(w - s.size(), ' ') << s << (j + 1 < m ? " " : "");
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace cylschur
