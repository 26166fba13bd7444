#include "cylschur/tiling.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cylschur {

namespace {

void check_word(const std::string& w, int k) {
    if (k < 1) throw input_error("k must be positive");
    if (w.empty() || static_cast<int>(w.size()) % k != 0)
        throw input_error("k must divide the word length");
    for (char c : w)
        if (c != '0' && c != '1') throw input_error("word letters must be 0 or 1");
}

}  // namespace

KPartitionedWord k_partition(const std::string& word, int k) {
    check_word(word, k);
    KPartitionedWord out;
    out.word = word;
    out.k = k;
    out.subwords.assign(k, "");
    out.oneCounts.assign(k, 0);
    for (int p = 1; p <= static_cast<int>(word.size()); ++p) {
        int cls = ((p - 1) % k) + 1;
        out.subwords[cls - 1] += word[p - 1];
        if (word[p - 1] == '1') ++out.oneCounts[cls - 1];
    }
    return out;
}

GoodPairReport is_good_pair(const CylindricDiagram& D, int k) {
    if (k < 1) throw input_error("k must be positive");
    if ((D.x() + D.y()) % k != 0) throw input_error("k must divide x+y");
    GoodPairReport rep;
    rep.parts = k_partition(std::get<0>(D.outer_word()), k);
    int y = D.y();
    int len = (D.x() + y) / k;
    rep.good = true;
    for (int i = 1; i <= k; ++i) {
        int yi = rep.parts.oneCounts[i - 1];
        std::ostringstream os;
        os << "class " << i << ": y_" << i << "=" << yi;
        if (yi % 2 == y % 2) {
            os << " matches y mod 2";
        } else if (yi == 0) {
            os << " is zero";
        } else if (yi == len && len % 2 == 1) {
            os << " fills an odd-length class";
        } else {
            os << " fails every clause";
            rep.good = false;
        }
        rep.reasons.push_back(os.str());
    }
    return rep;
}

long long invar_k(const std::string& word, int k) {
    check_word(word, k);
    std::vector<int> ones;
    for (int p = 1; p <= static_cast<int>(word.size()); ++p)
        if (word[p - 1] == '1') ones.push_back(p);
    std::vector<std::vector<long long>> cnt(k + 1, std::vector<long long>(k + 1, 0));
    for (std::size_t a = 0; a < ones.size(); ++a)
        for (std::size_t b = a + 1; b < ones.size(); ++b) {
            int i = ((ones[a] - 1) % k) + 1;
            int j = ((ones[b] - 1) % k) + 1;
            if (i != j) ++cnt[i][j];
        }
    if (config().epsilonMode == EpsilonMode::PerTerm) {
        long long tot = 0;
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) tot += floor_div(cnt[i][j] - cnt[j][i], 2);
        return tot;
    }
    long long s = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) s += cnt[i][j] - cnt[j][i];
    return floor_div(s, 2);
}

int epsilon_k(const std::string& word, int k) {
    return static_cast<int>(((invar_k(word, k) % 2) + 2) % 2);
}

std::vector<CylindricDiagram> removable_k_ribbons(const CylindricDiagram& D, int k) {
    if (k < 1) throw input_error("k must be positive");
    std::vector<CylindricDiagram> out;
    int x = D.x(), y = D.y();
    if (k > x + y) return out;
    const std::vector<int> inner = D.inner();
    const std::vector<int> cur = D.outer();
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
            if (is_ribbon(region)) out.push_back(std::move(region));
            return;
        }
        int cap = std::min(left, cur[strip] - inner[strip]);
        for (int v = 0; v <= cap; ++v) {
            t[strip] = v;
            place(strip + 1, left - v);
        }
        t[strip] = 0;
    };
    place(0, k);
    return out;
}

TilingReport enumerate_tilings(const CylindricDiagram& D, int k) {
    if (k < 1) throw input_error("k must be positive");
    if (D.box_count() > config().maxTilingBoxes)
        throw cost_guard_error("tiling search bounded by CYLSCHUR_MAX_TILING_BOXES");
    TilingReport rep;
    int x = D.x(), y = D.y();
    std::set<std::vector<std::vector<std::pair<int, int>>>> seen;
    std::vector<std::pair<std::vector<std::pair<int, int>>, int>> removed;
    std::vector<int> cur = D.outer();
    std::function<void()> rec = [&]() {
        auto sub = CylindricDiagram::from_profiles(x, y, D.inner(), cur);
        auto ribbons = removable_k_ribbons(sub, k);
        if (ribbons.empty()) {
            ++rep.sequenceCount;
            auto sorted = removed;
            std::sort(sorted.begin(), sorted.end());
            std::vector<std::vector<std::pair<int, int>>> key;
            for (const auto& [s, h] : sorted) key.push_back(s);
            if (!seen.insert(key).second) return;
            TilingRecord t;
            for (auto& [s, h] : sorted) {
                t.ribbons.push_back(s);
                t.heights.push_back(h);
                t.totalHeight += h;
            }
            t.core = sub;
            t.coreEmpty = sub.empty();
            rep.totalHeights.push_back(t.totalHeight);
            rep.parities.insert(t.totalHeight & 1);
            bool fresh = true;
            for (const auto& c : rep.cores)
                if (c == t.core) fresh = false;
            if (fresh) rep.cores.push_back(t.core);
            rep.tilings.push_back(std::move(t));
            return;
        }
        for (const auto& region : ribbons) {
            removed.push_back({region.boxes(), ribbon_height(region)});
            auto saved = cur;
            cur = region.inner();
            rec();
            cur = saved;
            removed.pop_back();
        }
    };
    rec();
    return rep;
}

ParityReport parity_report(const CylindricDiagram& D, int k) {
    ParityReport r;
    auto gp = is_good_pair(D, k);
    r.goodPair = gp.good;
    r.reasons = gp.reasons;
    const std::string iw = std::get<0>(D.inner_word());
    r.innerStrict = true;
    for (std::size_t p = 0; p < iw.size(); ++p)
        if (iw[p] == iw[(p + 1) % iw.size()]) r.innerStrict = false;
    auto rep = enumerate_tilings(D, k);
    for (const auto& t : rep.tilings)
        if (t.coreEmpty) r.paritiesObserved.insert(t.totalHeight & 1);
    r.cancellationFree = r.paritiesObserved.size() <= 1;
    return r;
}

}
