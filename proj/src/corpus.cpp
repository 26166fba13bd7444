#include "cylschur/corpus.hpp"

#include <map>

namespace cylschur {

namespace {

// Extends inner strip by strip, then outer, then emits.
void extend(int x, int y, int maxBoxes, int minBoxes, std::vector<int>& inner,
            std::vector<int>& outer, std::map<std::vector<int>, bool>& seen,
            std::vector<CylindricDiagram>& out) {
    if (static_cast<int>(inner.size()) < x) {
        int lo = inner.front() - y;
        int hi = inner.back();
        for (int v = hi; v >= lo; --v) {
            inner.push_back(v);
            extend(x, y, maxBoxes, minBoxes, inner, outer, seen, out);
            inner.pop_back();
        }
        return;
    }
    int i = static_cast<int>(outer.size());
    if (i < x) {
        int used = 0;
        for (int j = 0; j < i; ++j) used += outer[j] - inner[j];
        int lo = inner[i];
        int hi = i == 0 ? inner[0] + maxBoxes : outer[i - 1];
        hi = std::min(hi, inner[i] + (maxBoxes - used));
        for (int v = hi; v >= lo; --v) {
            if (i > 0 && i == x - 1 && v < outer[0] - y) break;
            outer.push_back(v);
            extend(x, y, maxBoxes, minBoxes, inner, outer, seen, out);
            outer.pop_back();
        }
        return;
    }
    int total = 0;
    for (int j = 0; j < x; ++j) total += outer[j] - inner[j];
    if (total < minBoxes || total > maxBoxes) return;
    auto d = CylindricDiagram::from_profiles(x, y, inner, outer);
    if (!seen.emplace(d.canonical_key(), true).second) return;
    out.push_back(std::move(d));
}

}  // namespace

std::vector<CylindricDiagram> all_diagrams(int maxBoxes, int maxXY, int minBoxes) {
    std::vector<CylindricDiagram> out;
    std::map<std::vector<int>, bool> seen;
    for (int x = 1; x < maxXY; ++x) {
        for (int y = 1; x + y <= maxXY; ++y) {
            std::vector<int> inner{0}, outer;
            extend(x, y, maxBoxes, minBoxes, inner, outer, seen, out);
        }
    }
    return out;
}

}  // namespace cylschur
