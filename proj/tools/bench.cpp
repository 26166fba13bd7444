#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cylschur/parallel.hpp"
#include "cylschur/stretch.hpp"

using namespace cylschur;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

struct Case {
    std::string name;
    CylindricDiagram D;
    int nvars;
};

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1) scale = 1;
    std::printf("openmp=%s threads=%d scale=%d\n", openmp_enabled() ? "yes" : "no", max_threads(),
                scale);

    auto exD = CylindricDiagram::from_profiles(2, 3, {2, 1}, {6, 4});
    auto nine = CylindricDiagram::from_profiles(4, 3, {2, 2, 0, 0}, {5, 3, 3, 2});
    std::vector<Case> cases{
        {"count nine*2 n=5", subdivide(nine, 2), 5},
        {"count exD*3 n=6", subdivide(exD, 3), 6},
        {"schur exD*3 n=5", subdivide(exD, 3), 5},
        {"schur nine*2 n=5", subdivide(nine, 2), 5},
    };
    if (scale > 1) {
        cases.push_back({"count nine*2 n=6", subdivide(nine, 2), 6});
        cases.push_back({"schur exD*3 n=6", subdivide(exD, 3), 6});
    }

    for (const auto& c : cases) {
        bool schur = c.name.rfind("schur", 0) == 0;
        auto t0 = std::chrono::steady_clock::now();
        long long serialCount = 0;
        SparsePolynomial serialPoly(c.nvars), parallelPoly(c.nvars);
        if (schur)
            serialPoly = schur_monomial(c.D, c.nvars);
        else
            serialCount = count_cssyt(c.D, c.nvars);
        double serialMs = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        long long parallelCount = 0;
        if (schur)
            parallelPoly = schur_monomial_parallel(c.D, c.nvars);
        else
            parallelCount = count_cssyt_parallel(c.D, c.nvars);
        double parallelMs = ms_since(t0);

        bool match = schur ? serialPoly == parallelPoly : serialCount == parallelCount;
        if (!match) {
            std::printf("%-18s MISMATCH\n", c.name.c_str());
            return 1;
        }
        std::printf("%-18s boxes=%2d serial=%9.2fms parallel=%9.2fms speedup=%.2fx\n",
                    c.name.c_str(), c.D.box_count(), serialMs, parallelMs,
                    parallelMs > 0 ? serialMs / parallelMs : 0.0);
    }
    return 0;
}
