#include "cylschur/diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cylschur {

namespace {

// Heights of the x strips covered by one loop, normalized to strips 1..x.
// The walk starts at (startX, startY); a 0-letter covers strip X+1 at the
// current height, a 1-letter drops the height.
std::vector<int> strip_heights(int x, int y, const std::string& word, int startX, int startY) {
    if (static_cast<int>(word.size()) != x + y)
        throw input_error("boundary word must have length x+y");
    std::vector<int> h(x, 0);
    std::vector<bool> seen(x, false);
    int X = startX, Y = startY;
    for (char c : word) {
        if (c == '0') {
            int strip = X + 1;
            int k = floor_div(strip - 1, x);
            int i0 = strip - k * x;  // 1..x
            h[i0 - 1] = Y + k * y;
            seen[i0 - 1] = true;
            ++X;
        } else if (c == '1') {
            --Y;
        } else {
            throw input_error("boundary word may contain only 0 and 1");
        }
    }
    for (bool s : seen)
        if (!s) throw input_error("boundary word does not have x zero letters");
    if (X != startX + x || Y != startY - y)
        throw input_error("boundary word does not have y one letters");
    return h;
}

void check_profile(int x, int y, const std::vector<int>& h, const char* which) {
    if (static_cast<int>(h.size()) != x) throw input_error("profile length must equal x");
    for (int i = 0; i < x; ++i) {
        int next = (i + 1 < x) ? h[i + 1] : h[0] - y;
        if (h[i] < next) {
            std::ostringstream os;
            os << which << " profile is not weakly decreasing around the cylinder";
            throw input_error(os.str());
        }
    }
}

}  // namespace

void CylindricDiagram::finish() {
    check_profile(x_, y_, inner_, "inner");
    check_profile(x_, y_, outer_, "outer");
    for (int i = 0; i < x_; ++i)
        if (outer_[i] < inner_[i])
            throw input_error("boundary crossing: inner loop exits the outer loop");
    boxes_.clear();
    index_.clear();
    for (int i = 1; i <= x_; ++i)
        for (int j = inner_[i - 1] + 1; j <= outer_[i - 1]; ++j) {
            index_[{i, j}] = static_cast<int>(boxes_.size());
            boxes_.push_back({i, j});
        }
}

CylindricDiagram CylindricDiagram::from_loops(int x, int y, const std::string& innerWord,
                                              int innerX, int innerY,
                                              const std::string& outerWord, int outerX,
                                              int outerY) {
    if (x < 1 || y < 1) throw input_error("cylinder periods must be positive");
    CylindricDiagram D;
    D.x_ = x;
    D.y_ = y;
    D.inner_ = strip_heights(x, y, innerWord, innerX, innerY);
    D.outer_ = strip_heights(x, y, outerWord, outerX, outerY);
    D.finish();
    return D;
}

CylindricDiagram CylindricDiagram::from_profiles(int x, int y, std::vector<int> inner,
                                                 std::vector<int> outer) {
    if (x < 1 || y < 1) throw input_error("cylinder periods must be positive");
    CylindricDiagram D;
    D.x_ = x;
    D.y_ = y;
    D.inner_ = std::move(inner);
    D.outer_ = std::move(outer);
    D.finish();
    return D;
}

int CylindricDiagram::innerAt(int i) const {
    int k = floor_div(i - 1, x_);
    return inner_[i - k * x_ - 1] - k * y_;
}

int CylindricDiagram::outerAt(int i) const {
    int k = floor_div(i - 1, x_);
    return outer_[i - k * x_ - 1] - k * y_;
}

std::pair<int, int> CylindricDiagram::reduce(int i, int j) const {
    int k = floor_div(i - 1, x_);
    return {i - k * x_, j + k * y_};
}

bool CylindricDiagram::has_box(int i, int j) const {
    auto [i0, j0] = reduce(i, j);
    return inner_[i0 - 1] < j0 && j0 <= outer_[i0 - 1];
}

int CylindricDiagram::box_index(int i, int j) const {
    auto it = index_.find(reduce(i, j));
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> CylindricDiagram::canonical_key() const {
    std::vector<int> data;
    for (int i = 1; i <= x_; ++i) {
        data.push_back(outer_[i - 1] - inner_[i - 1]);
        data.push_back(inner_[i - 1] - innerAt(i + 1));
    }
    std::vector<int> best;
    for (int r = 0; r < x_; ++r) {
        std::vector<int> rot;
        for (int t = 0; t < 2 * x_; ++t) rot.push_back(data[(2 * r + t) % (2 * x_)]);
        if (best.empty() || rot < best) best = rot;
    }
    std::vector<int> key = {x_, y_};
    key.insert(key.end(), best.begin(), best.end());
    return key;
}

SkewView CylindricDiagram::skew_view() const {
    SkewView v;
    v.rows = y_;
    v.shift = x_;
    v.jLo = inner_[x_ - 1] + 1;
    // Band j spans strips [lI(j), hO(j)] where the extended profiles admit a
    // box at height j.
    auto hO = [&](int j) {
        int best = 0;
        for (int i0 = 1; i0 <= x_; ++i0) {
            int i = i0 + floor_div(outer_[i0 - 1] - j, y_) * x_;
            if (i0 == 1 || i > best) best = i;
        }
        return best;
    };
    auto lI = [&](int j) {
        int best = 0;
        for (int i0 = 1; i0 <= x_; ++i0) {
            int i = i0 + floor_div(inner_[i0 - 1] - j + y_, y_) * x_;
            if (i0 == 1 || i < best) best = i;
        }
        return best;
    };
    std::vector<int> lam, mu;
    for (int r = 0; r < y_; ++r) {
        int j = v.jLo + r;
        int top = hO(j);
        lam.push_back(top);
        mu.push_back(std::min(lI(j) - 1, top));
    }
    int off = *std::min_element(mu.begin(), mu.end());
    for (int r = 0; r < y_; ++r) {
        lam[r] -= off;
        mu[r] -= off;
    }
    v.lambda = lam;
    v.mu = mu;
    v.colOffset = off;
    return v;
}

CylindricDiagram CylindricDiagram::from_skew(const SkewView& view) {
    int x = view.shift, y = view.rows;
    if (x < 1 || y < 1) throw input_error("skew view needs positive shift and rows");
    if (static_cast<int>(view.lambda.size()) != y || static_cast<int>(view.mu.size()) != y)
        throw input_error("skew view needs exactly `rows` parts in lambda and mu");
    for (int r = 0; r < y; ++r) {
        if (view.mu[r] > view.lambda[r]) throw input_error("skew view has mu exceeding lambda");
        int ln = (r + 1 < y) ? view.lambda[r + 1] : view.lambda[0] - x;
        int mn = (r + 1 < y) ? view.mu[r + 1] : view.mu[0] - x;
        if (view.lambda[r] < ln || view.mu[r] < mn)
            throw input_error("skew view rows must weakly decrease around the wrap");
    }
    // Gather, per fundamental strip, the heights j of bands covering it.
    std::vector<int> minJ(x, 0), maxJ(x, 0);
    std::vector<int> count(x, 0);
    for (int i = 1; i <= x; ++i) {
        for (int r = 0; r < y; ++r) {
            int lo = view.mu[r] + 1 + view.colOffset, hi = view.lambda[r] + view.colOffset;
            // Band at j = jLo + r + t*y has columns shifted by -t*x.
            int tLo = -floor_div(i - lo, x), tHi = floor_div(hi - i, x);
            for (int t = tLo; t <= tHi; ++t) {
                int j = view.jLo + r + t * y;
                if (count[i - 1] == 0 || j < minJ[i - 1]) minJ[i - 1] = j;
                if (count[i - 1] == 0 || j > maxJ[i - 1]) maxJ[i - 1] = j;
                ++count[i - 1];
            }
        }
    }
    for (int i = 0; i < x; ++i)
        if (count[i] > 0 && count[i] != maxJ[i] - minJ[i] + 1)
            throw input_error("skew view bands are not contiguous on a strip");
    std::vector<int> inner(x), outer(x);
    bool any = false;
    for (int i = 0; i < x; ++i) any = any || count[i] > 0;
    if (!any) {
        // No boxes: hug a staircase dropping y over each period.
        for (int i = 0; i < x; ++i)
            inner[i] = outer[i] = view.jLo - 1 - floor_div(i * y, x);
    } else {
        for (int i = 0; i < x; ++i) {
            if (count[i] > 0) {
                inner[i] = minJ[i] - 1;
                outer[i] = maxJ[i];
            }
        }
        // A strip with no band carries an empty boundary segment; pin it to
        // the inner height of the nearest covered strip on its left.
        for (int i = 1; i <= x; ++i) {
            if (count[i - 1] > 0) continue;
            int h = 0;
            bool found = false;
            for (int step = 1; step < x && !found; ++step) {
                int p = i - step;
                int k = floor_div(p - 1, x);
                int p0 = p - k * x;
                if (count[p0 - 1] > 0) {
                    h = inner[p0 - 1] - k * y;
                    found = true;
                }
            }
            inner[i - 1] = outer[i - 1] = h;
        }
    }
    return from_profiles(x, y, std::move(inner), std::move(outer));
}

namespace {

std::tuple<std::string, int, int> loop_word(int x, int y, const std::vector<int>& h) {
    std::string w;
    for (int i = 1; i <= x; ++i) {
        w += '0';
        int next = (i < x) ? h[i] : h[0] - y;
        w.append(h[i - 1] - next, '1');
    }
    return {w, 0, h[0]};
}

}  // namespace

std::tuple<std::string, int, int> CylindricDiagram::inner_word() const {
    return loop_word(x_, y_, inner_);
}

std::tuple<std::string, int, int> CylindricDiagram::outer_word() const {
    return loop_word(x_, y_, outer_);
}

std::string CylindricDiagram::str() const {
    auto [iw, ix, iy] = inner_word();
    auto [ow, ox, oy] = outer_word();
    std::ostringstream os;
    os << "cyl x=" << x_ << " y=" << y_ << " inner=" << iw << "@" << ix << "," << iy
       << " outer=" << ow << "@" << ox << "," << oy;
    return os.str();
}

std::string CylindricDiagram::ascii() const {
    if (boxes_.empty()) return "(empty)\n";
    int hi = *std::max_element(outer_.begin(), outer_.end());
    int lo = *std::min_element(inner_.begin(), inner_.end());
    std::ostringstream os;
    for (int j = hi; j > lo - y_; --j) {
        std::string line;
        for (int i = 1; i <= 2 * x_; ++i) {
            if (has_box(i, j))
                line += (i <= x_) ? "[]" : " .";
            else
                line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        if (!line.empty()) os << line << "\n";
    }
    return os.str();
}

OrientedPoset poset_of(const CylindricDiagram& D) {
    EdgeList covers, strict;
    for (auto [i, j] : D.boxes()) {
        int a = D.box_index(i, j);
        if (D.has_box(i + 1, j)) covers.push_back({a, D.box_index(i + 1, j)});
        if (D.has_box(i, j + 1)) {
            int b = D.box_index(i, j + 1);
            covers.push_back({a, b});
            strict.push_back({a, b});
        }
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    OrientedPoset P = OrientedPoset::from_covers(D.box_count(), covers);
    P.strictEdges = strict;
    return P;
}

std::vector<int> CSSYT::weight(int maxEntry) const {
    std::vector<int> w(maxEntry, 0);
    for (int v : values) ++w[v - 1];
    return w;
}

namespace {

// Fills boxes in strip-major order; yield returns false to stop the walk.
void walk_cssyt(const CylindricDiagram& D, int maxEntry, const std::vector<int>* filter,
                const std::function<bool(const std::vector<int>&)>& yield) {
    if (maxEntry < 0) throw input_error("maxEntry must be nonnegative");
    const auto& boxes = D.boxes();
    int n = static_cast<int>(boxes.size());
    std::vector<int> val(n, 0);
    std::vector<int> used(maxEntry, 0);
    bool stop = false;
    std::function<void(int)> go = [&](int t) {
        if (stop) return;
        if (t == n) {
            if (filter) {
                for (int v = 0; v < maxEntry; ++v) {
                    int want = v < static_cast<int>(filter->size()) ? (*filter)[v] : 0;
                    if (used[v] != want) return;
                }
            }
            if (!yield(val)) stop = true;
            return;
        }
        auto [i, j] = boxes[t];
        int lb = 1, ub = maxEntry;
        if (D.has_box(i, j - 1)) lb = std::max(lb, val[D.box_index(i, j - 1)] + 1);
        if (i >= 2 && D.has_box(i - 1, j)) lb = std::max(lb, val[D.box_index(i - 1, j)]);
        if (i == 1 && D.x() == 1 && D.has_box(1, j - D.y()))
            lb = std::max(lb, val[D.box_index(1, j - D.y())]);
        if (i == D.x() && D.x() >= 2 && D.has_box(1, j + D.y()))
            ub = std::min(ub, val[D.box_index(1, j + D.y())]);
        for (int v = lb; v <= ub && !stop; ++v) {
            if (filter) {
                int want = v - 1 < static_cast<int>(filter->size()) ? (*filter)[v - 1] : 0;
                if (used[v - 1] >= want) continue;
            }
            val[t] = v;
            ++used[v - 1];
            go(t + 1);
            --used[v - 1];
        }
        val[t] = 0;
    };
    go(0);
}

}  // namespace

std::vector<CSSYT> enumerate_cssyt(const CylindricDiagram& D, int maxEntry,
                                   const std::vector<int>* weightFilter) {
    std::vector<CSSYT> out;
    walk_cssyt(D, maxEntry, weightFilter, [&](const std::vector<int>& v) {
        out.push_back({v});
        return true;
    });
    return out;
}

long long count_cssyt(const CylindricDiagram& D, int maxEntry,
                      const std::vector<int>* weightFilter) {
    long long n = 0;
    walk_cssyt(D, maxEntry, weightFilter, [&](const std::vector<int>&) {
        ++n;
        return true;
    });
    return n;
}

bool exists_cssyt(const CylindricDiagram& D, int maxEntry, const std::vector<int>* weightFilter) {
    bool found = false;
    walk_cssyt(D, maxEntry, weightFilter, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

SparsePolynomial schur_monomial(const CylindricDiagram& D, int nvars) {
    if (nvars < 0) throw input_error("nvars must be nonnegative");
    SparsePolynomial p(nvars);
    walk_cssyt(D, nvars, nullptr, [&](const std::vector<int>& val) {
        std::vector<int> e(nvars, 0);
        for (int v : val) ++e[v - 1];
        p.add_term(e, 1);
        return true;
    });
    return p;
}

std::vector<std::vector<std::pair<int, int>>> band_rows(const CylindricDiagram& D) {
    SkewView v = D.skew_view();
    std::vector<std::vector<std::pair<int, int>>> rows(v.rows);
    for (int r = 0; r < v.rows; ++r) {
        int j = v.jLo + r;
        for (int i = v.mu[r] + 1 + v.colOffset; i <= v.lambda[r] + v.colOffset; ++i)
            rows[r].push_back({i, j});
    }
    return rows;
}

std::pair<Partition, std::vector<Partition>> classical_core_quotient(const Partition& lambda,
                                                                     int k) {
    if (k < 1) throw input_error("quotient order k must be positive");
    long long n = lambda.weight();
    int W = static_cast<int>(n) + k + 2;
    // bit[t+W] = 1 when t is a vertical edge of the boundary, t in [-W, W).
    std::vector<int> bit(2 * W, 0);
    for (int t = -W; t < W; ++t) {
        bool one = t <= -lambda.length() - 1;
        for (int i = 1; i <= lambda.length(); ++i)
            if (lambda[i - 1] - i == t) one = true;
        bit[t + W] = one ? 1 : 0;
    }
    auto from_bits = [](const std::vector<int>& b) {
        // Each part equals the number of zeros below its one.
        std::vector<int> parts;
        std::vector<int> zeroPrefix(b.size(), 0);
        int zerosBelow = 0;
        for (std::size_t t = 0; t < b.size(); ++t) {
            zeroPrefix[t] = zerosBelow;
            if (b[t] == 0) ++zerosBelow;
        }
        for (std::size_t t = 0; t < b.size(); ++t)
            if (b[t] == 1 && zeroPrefix[t] > 0) parts.push_back(zeroPrefix[t]);
        std::sort(parts.rbegin(), parts.rend());
        return Partition(parts);
    };
    std::vector<int> core = bit;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int t = 0; t + k < 2 * W; ++t) {
            if (core[t] == 0 && core[t + k] == 1) {
                core[t] = 1;
                core[t + k] = 0;
                moved = true;
            }
        }
    }
    std::vector<Partition> quot;
    for (int r = 0; r < k; ++r) {
        std::vector<int> sub;
        for (int t = -W + (r + W) % k; t < W; t += k) sub.push_back(bit[t + W]);
        quot.push_back(from_bits(sub));
    }
    return {from_bits(core), quot};
}

namespace {

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& toks) {
    std::map<std::string, std::string> kv;
    for (std::size_t t = 1; t < toks.size(); ++t) {
        auto eq = toks[t].find('=');
        if (eq == std::string::npos)
            throw input_error("diagram spec expects key=value tokens, got '" + toks[t] + "'");
        kv[toks[t].substr(0, eq)] = toks[t].substr(eq + 1);
    }
    return kv;
}

long long require_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw input_error("diagram spec is missing " + key);
    auto v = parse_int_list(it->second);
    if (v.size() != 1) throw input_error("diagram spec key " + key + " expects one integer");
    return v[0];
}

std::tuple<std::string, int, int> parse_loop(const std::map<std::string, std::string>& kv,
                                             const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw input_error("diagram spec is missing " + key);
    auto at = it->second.find('@');
    if (at == std::string::npos)
        throw input_error("loop spec must look like WORD@x,y");
    auto start = parse_int_list(it->second.substr(at + 1));
    if (start.size() != 2) throw input_error("loop start must be x,y");
    return {it->second.substr(0, at), static_cast<int>(start[0]), static_cast<int>(start[1])};
}

}  // namespace

CylindricDiagram parse_diagram_spec(const std::string& spec) {
    std::vector<std::string> toks;
    std::istringstream is(spec);
    for (std::string t; is >> t;) toks.push_back(t);
    if (toks.empty()) throw input_error("empty diagram spec");
    auto kv = parse_kv(toks);
    if (toks[0] == "cyl") {
        int x = static_cast<int>(require_int(kv, "x"));
        int y = static_cast<int>(require_int(kv, "y"));
        auto [iw, ix, iy] = parse_loop(kv, "inner");
        auto [ow, ox, oy] = parse_loop(kv, "outer");
        return CylindricDiagram::from_loops(x, y, iw, ix, iy, ow, ox, oy);
    }
    if (toks[0] == "skew") {
        SkewView v;
        auto lamIt = kv.find("lambda");
        if (lamIt == kv.end()) throw input_error("skew spec is missing lambda");
        auto lam = parse_int_list(lamIt->second);
        v.rows = kv.count("rows") ? static_cast<int>(require_int(kv, "rows"))
                                  : static_cast<int>(lam.size());
        v.shift = static_cast<int>(require_int(kv, "shift"));
        std::vector<int> mu;
        if (kv.count("mu")) mu = parse_int_list(kv.at("mu"));
        if (static_cast<int>(lam.size()) > v.rows || static_cast<int>(mu.size()) > v.rows)
            throw input_error("skew spec has more parts than rows");
        v.lambda.assign(v.rows, 0);
        v.mu.assign(v.rows, 0);
        for (std::size_t r = 0; r < lam.size(); ++r) v.lambda[r] = lam[r];
        for (std::size_t r = 0; r < mu.size(); ++r) v.mu[r] = mu[r];
        return CylindricDiagram::from_skew(v);
    }
    throw input_error("diagram spec must begin with 'cyl' or 'skew'");
}

}
