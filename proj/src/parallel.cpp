#include "cylschur/parallel.hpp"

#include "cylschur/common.hpp"

#include <functional>

#ifdef CYLSCHUR_HAVE_OPENMP
#include <omp.h>
#endif

namespace cylschur {

bool openmp_enabled() {
#ifdef CYLSCHUR_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef CYLSCHUR_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

// Same fill order and bounds as the serial walker; the first box's value is
// pinned so value classes can run on separate threads.
void walk_pinned(const CylindricDiagram& D, int maxEntry, const std::vector<int>* filter,
                 int firstValue, const std::function<void(const std::vector<int>&)>& yield) {
    const auto& boxes = D.boxes();
    int n = static_cast<int>(boxes.size());
    std::vector<int> val(n, 0);
    std::vector<int> used(maxEntry, 0);
    std::function<void(int)> go = [&](int t) {
        if (t == n) {
            if (filter) {
                for (int v = 0; v < maxEntry; ++v) {
                    int want = v < static_cast<int>(filter->size()) ? (*filter)[v] : 0;
                    if (used[v] != want) return;
                }
            }
            yield(val);
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
        if (t == 0) lb = ub = firstValue;
        for (int v = lb; v <= ub; ++v) {
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

long long count_cssyt_parallel(const CylindricDiagram& D, int maxEntry,
                               const std::vector<int>* weightFilter) {
    if (maxEntry < 0) throw input_error("maxEntry must be nonnegative");
    if (D.empty()) {
        if (!weightFilter) return 1;
        for (int w : *weightFilter)
            if (w != 0) return 0;
        return 1;
    }
    std::vector<long long> parts(maxEntry, 0);
#ifdef CYLSCHUR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int v = 1; v <= maxEntry; ++v) {
        long long c = 0;
        walk_pinned(D, maxEntry, weightFilter, v, [&](const std::vector<int>&) { ++c; });
        parts[v - 1] = c;
    }
    long long total = 0;
    for (long long c : parts) total += c;
    return total;
}

SparsePolynomial schur_monomial_parallel(const CylindricDiagram& D, int nvars) {
    if (nvars < 0) throw input_error("nvars must be nonnegative");
    if (D.empty()) return SparsePolynomial(nvars, 1);
    std::vector<SparsePolynomial> parts(nvars, SparsePolynomial(nvars));
#ifdef CYLSCHUR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int v = 1; v <= nvars; ++v) {
        SparsePolynomial p(nvars);
        walk_pinned(D, nvars, nullptr, v, [&](const std::vector<int>& val) {
            std::vector<int> e(nvars, 0);
            for (int w : val) ++e[w - 1];
            p.add_term(e, 1);
        });
        parts[v - 1] = std::move(p);
    }
    SparsePolynomial total(nvars);
    for (const auto& p : parts) total += p;
    return total;
}

}  // namespace cylschur
