#include "cylschur/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace cylschur {

namespace {

const int DX[4] = {1, -1, 0, 0};
const int DY[4] = {0, 0, 1, -1};

}  // namespace

bool has_two_by_two(const CylindricDiagram& R) {
    for (auto [i, j] : R.boxes())
        if (R.has_box(i + 1, j) && R.has_box(i, j + 1) && R.has_box(i + 1, j + 1)) return true;
    return false;
}

bool cylinder_connected(const CylindricDiagram& R) {
    if (R.empty()) return false;
    std::vector<char> seen(R.box_count(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        auto [i, j] = R.boxes()[stack.back()];
        stack.pop_back();
        for (int d = 0; d < 4; ++d) {
            int t = R.box_index(i + DX[d], j + DY[d]);
            if (t >= 0 && !seen[t]) {
                seen[t] = 1;
                ++found;
                stack.push_back(t);
            }
        }
    }
    return found == R.box_count();
}

// A loop winds once around the cylinder: x+y boxes, edge-connected, no 2x2,
// and every box sees exactly two of its four periodic neighbors. The
// neighbor count distinguishes a loop from a plain ribbon of the same size,
// whose end boxes see only one.
bool is_loop_ribbon(const CylindricDiagram& R) {
    if (R.box_count() != R.x() + R.y()) return false;
    if (has_two_by_two(R)) return false;
    if (!cylinder_connected(R)) return false;
    for (auto [i, j] : R.boxes()) {
        int deg = 0;
        for (int d = 0; d < 4; ++d)
            if (R.has_box(i + DX[d], j + DY[d])) ++deg;
        if (deg != 2) return false;
    }
    return true;
}

std::optional<int> planar_height(const CylindricDiagram& R) {
    std::set<std::pair<int, int>> lift;
    std::vector<std::pair<int, int>> stack = {R.boxes()[0]};
    lift.insert(R.boxes()[0]);
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        for (int d = 0; d < 4; ++d) {
            int ni = i + DX[d], nj = j + DY[d];
            if (R.has_box(ni, nj) && lift.insert({ni, nj}).second) {
                if (static_cast<int>(lift.size()) > R.box_count()) return std::nullopt;
                stack.push_back({ni, nj});
            }
        }
    }
    int lo = 0, hi = 0;
    bool first = true;
    for (auto [i, j] : lift) {
        if (first || j < lo) lo = j;
        if (first || j > hi) hi = j;
        first = false;
    }
    return hi - lo;
}

bool is_ribbon(const CylindricDiagram& R) {
    if (R.empty() || R.box_count() > R.x() + R.y()) return false;
    return !has_two_by_two(R) && cylinder_connected(R);
}

int ribbon_height(const CylindricDiagram& R) {
    if (!is_ribbon(R)) throw input_error("region is not a ribbon");
    if (auto h = planar_height(R)) return *h;
    return R.y();
}

namespace {

std::vector<int> peel_profile(const CylindricDiagram& F) {
    std::vector<int> op(F.x());
    for (int i = 1; i <= F.x(); ++i)
        op[i - 1] = std::max(F.innerAt(i), F.outerAt(i + 1) - 1);
    return op;
}

}  // namespace

long long StackedRibbonClass::closed_form() const {
    if (tag == StackedTag::NotStacked) return 0;
    return (signExponent % 2 == 0) ? width : -width;
}

StackedRibbonClass classify_stacked(const CylindricDiagram& D) {
    if (D.empty()) throw input_error("cannot classify an empty region");
    int x = D.x(), y = D.y();
    std::vector<int> cur = D.outer();
    int loops = 0;
    while (true) {
        CylindricDiagram F = CylindricDiagram::from_profiles(x, y, D.inner(), cur);
        auto op = peel_profile(F);
        if (op == D.inner()) break;  // rim is everything that is left
        auto rim = CylindricDiagram::from_profiles(x, y, op, cur);
        if (!is_loop_ribbon(rim)) break;  // rim != F, so F keeps a 2x2 and fails below
        ++loops;
        cur = op;
    }
    CylindricDiagram F = CylindricDiagram::from_profiles(x, y, D.inner(), cur);
    StackedRibbonClass c;
    c.loopCount = loops;
    int hF = 0;
    if (is_loop_ribbon(F)) {
        c.tag = StackedTag::PureStacked;
        c.width = x;
        hF = y;
    } else if (!has_two_by_two(F) && cylinder_connected(F)) {
        if (auto h = planar_height(F)) {
            c.tag = StackedTag::NonPureStacked;
            c.width = 1;
            hF = *h;
        }
    }
    if (c.tag == StackedTag::NotStacked) return c;
    c.heights.push_back(hF);
    c.heights.insert(c.heights.end(), loops, y);
    c.height = loops * y + hF;
    c.signExponent = loops * (y + 1) + hF;
    return c;
}

long long RibbonTableau::weight() const {
    long long w = 1;
    for (const auto& b : blocks) w *= b.cls.closed_form();
    return w;
}

namespace {

// Removes blocks outermost first, so the last part of mu goes first. Each
// candidate block is the region between consecutive valid outer profiles.
void walk_rts(const CylindricDiagram& D, const Partition& mu,
              const std::function<void(const std::vector<RibbonBlock>&)>& visit) {
    if (mu.weight() != D.box_count())
        throw input_error("mu must partition the box count of D");
    int x = D.x(), y = D.y();
    const std::vector<int> inner = D.inner();
    std::vector<int> cur = D.outer();
    std::vector<RibbonBlock> rev;
    std::function<void(int)> rec = [&](int idx) {
        if (idx == 0) {
            std::vector<RibbonBlock> blocks(rev.rbegin(), rev.rend());
            visit(blocks);
            return;
        }
        int m = mu[idx - 1];
        // t is per level, the nested rec call below must not clobber it
        std::vector<int> t(x, 0);
        std::function<void(int, int)> place = [&](int strip, int left) {
            if (strip == x) {
                if (left != 0) return;
                std::vector<int> op(x);
                for (int i = 0; i < x; ++i) op[i] = cur[i] - t[i];
                for (int i = 0; i < x; ++i) {
                    int nxt = (i + 1 < x) ? op[i + 1] : op[0] - y;
                    if (op[i] < nxt) return;
                }
                auto region = CylindricDiagram::from_profiles(x, y, op, cur);
                auto cls = classify_stacked(region);
                if (cls.tag == StackedTag::NotStacked) return;
                auto saved = cur;
                cur = op;
                rev.push_back({std::move(region), std::move(cls)});
                rec(idx - 1);
                rev.pop_back();
                cur = saved;
                return;
            }
            int cap = std::min(left, cur[strip] - inner[strip]);
            for (int v = 0; v <= cap; ++v) {
                t[strip] = v;
                place(strip + 1, left - v);
            }
            t[strip] = 0;
        };
        place(0, m);
    };
    rec(mu.length());
}

}  // namespace

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const CylindricDiagram& D,
                                                     const Partition& mu) {
    std::vector<RibbonTableau> out;
    walk_rts(D, mu, [&](const std::vector<RibbonBlock>& blocks) { out.push_back({blocks}); });
    return out;
}

BasisExpansion mn_expansion(const CylindricDiagram& D) {
    BasisExpansion out;
    out.basis = Basis::PowerSum;
    for (const auto& mu : partitions_of(D.box_count())) {
        long long total = 0;
        walk_rts(D, mu, [&](const std::vector<RibbonBlock>& blocks) {
            long long w = 1;
            for (const auto& b : blocks) w *= b.cls.closed_form();
            total += w;
        });
        if (total != 0) out.byPartition[mu] = Rational(total, z_of(mu));
    }
    return out;
}

StackedCheck verify_stacked_formula(const CylindricDiagram& D) {
    if (D.empty()) throw input_error("stacked formula needs a nonempty diagram");
    StackedCheck c;
    c.closedForm = classify_stacked(D).closed_form();
    int n = D.box_count();
    auto ps = expand_in_powersum(schur_monomial(D, n));
    auto it = ps.byPartition.find(Partition({n}));
    if (it != ps.byPartition.end()) c.viaPowerSum = it->second * n;
    c.ok = c.viaPowerSum == Rational(c.closedForm);
    return c;
}

}
