#include <doctest.h>

#include <algorithm>
#include <set>

#include "cylschur/tiling.hpp"

using namespace cylschur;

namespace {

CylindricDiagram make_d(int x, int y, std::vector<int> inner, std::vector<int> outer) {
    return CylindricDiagram::from_profiles(x, y, std::move(inner), std::move(outer));
}

// Column of four with two boxes attached at the bottom, the two-ribbon
// cancellation example.
CylindricDiagram ribbon_diff() { return make_d(3, 3, {0, 0, 0}, {4, 1, 1}); }

// Inner-strict staircase band with two 3-ribbon placements left open.
CylindricDiagram fills3() { return make_d(3, 3, {2, 1, 0}, {4, 3, 2}); }

// Wider staircase band whose 3-ribbon removal reaches cores of two sizes.
CylindricDiagram core3() { return make_d(3, 3, {2, 1, 0}, {5, 4, 3}); }

// The (2k,1,k-1,1) parity counterexamples for k = 3 and 4.
CylindricDiagram kce3() { return make_d(6, 3, {2, 0, 0, 0, 0, 0}, {4, 3, 1, 1, 1, 1}); }
CylindricDiagram kce4() {
    return make_d(9, 3, {2, 2, 0, 0, 0, 0, 0, 0, 0}, {4, 3, 3, 1, 1, 1, 1, 1, 1});
}

std::string outer_of(const CylindricDiagram& D) { return std::get<0>(D.outer_word()); }

// Union of ribbon supports plus the core must give back the box set.
bool partitions_diagram(const CylindricDiagram& D, const TilingRecord& t) {
    std::vector<std::pair<int, int>> all;
    for (const auto& r : t.ribbons) all.insert(all.end(), r.begin(), r.end());
    for (auto b : t.core.boxes()) all.push_back(b);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    auto boxes = D.boxes();
    std::sort(boxes.begin(), boxes.end());
    return all == boxes;
}

std::multiset<int> one_counts(const CylindricDiagram& D, int k) {
    auto parts = k_partition(outer_of(D), k);
    return {parts.oneCounts.begin(), parts.oneCounts.end()};
}

}  // namespace

TEST_CASE("k partitioning of boundary words") {
    auto p = k_partition("110001011010", 3);
    CHECK(p.subwords == std::vector<std::string>{"1000", "1011", "0110"});
    CHECK(p.oneCounts == std::vector<int>{1, 3, 2});

    auto singles = k_partition("0110", 4);
    REQUIRE(singles.subwords.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(singles.subwords[i] == std::string(1, "0110"[i]));

    for (const char* w : {"110001011010", "010110000", "0110"}) {
        std::string s(w);
        for (int k = 1; k <= static_cast<int>(s.size()); ++k) {
            if (s.size() % k) continue;
            auto q = k_partition(s, k);
            int total = 0;
            for (int c : q.oneCounts) total += c;
            CHECK(total == static_cast<int>(std::count(s.begin(), s.end(), '1')));
        }
    }

    CHECK_THROWS_AS(k_partition("110001011010", 5), input_error);
    CHECK_THROWS_AS(k_partition("012011", 3), input_error);
    CHECK_THROWS_AS(k_partition("0110", 0), input_error);
}

TEST_CASE("pairing constant and parity") {
    // Frozen by a direct O(n^2) pair count: S = 5 over the three classes.
    CHECK(invar_k("110001011010", 3) == 2);
    CHECK(epsilon_k("110001011010", 3) == 0);

    CHECK(invar_k("000100", 3) == 0);
    CHECK(invar_k("000000", 2) == 0);
    CHECK(invar_k("011100", 2) == 0);

    // Classes 2,1,3 in position order give S = 1 but a -1 term on {1,2},
    // so the two halving modes disagree here.
    CHECK(invar_k("010101", 3) == 0);
    auto saved = config().epsilonMode;
    config().epsilonMode = EpsilonMode::PerTerm;
    CHECK(invar_k("010101", 3) == -1);
    CHECK(epsilon_k("010101", 3) == 1);
    CHECK(invar_k("110001011010", 3) == 2);
    config().epsilonMode = saved;

    CHECK_THROWS_AS(invar_k("0110", 3), input_error);
}

TEST_CASE("good pairs") {
    auto bad = is_good_pair(ribbon_diff(), 2);
    CHECK_FALSE(bad.good);
    CHECK(one_counts(ribbon_diff(), 2) == std::multiset<int>{1, 2});
    REQUIRE(bad.reasons.size() == 2);
    CHECK(bad.reasons[1].find("fails") != std::string::npos);

    for (const auto& D : {ribbon_diff(), fills3(), kce3()}) {
        auto r = is_good_pair(D, 1);
        CHECK(r.good);
    }

    CHECK(is_good_pair(fills3(), 3).good);
    CHECK(is_good_pair(core3(), 3).good);
    CHECK_FALSE(is_good_pair(kce3(), 3).good);
    CHECK_FALSE(is_good_pair(kce4(), 4).good);
    CHECK(is_good_pair(make_d(2, 2, {2, 1}, {5, 3}), 4).good);

    CHECK_THROWS_AS(is_good_pair(ribbon_diff(), 4), input_error);
}

TEST_CASE("tilings of the worked shapes") {
    auto two = enumerate_tilings(ribbon_diff(), 2);
    REQUIRE(two.tilings.size() == 2);
    {
        std::multiset<int> hs(two.totalHeights.begin(), two.totalHeights.end());
        CHECK(hs == std::multiset<int>{1, 2});
    }
    CHECK(two.sequenceCount >= 2);
    for (const auto& t : two.tilings) {
        CHECK(t.coreEmpty);
        CHECK(partitions_diagram(ribbon_diff(), t));
    }

    auto three = enumerate_tilings(fills3(), 3);
    REQUIRE(three.tilings.size() == 3);
    for (const auto& t : three.tilings) {
        CHECK(t.coreEmpty);
        CHECK(t.totalHeight == 2);
        CHECK(partitions_diagram(fills3(), t));
    }

    auto cores = enumerate_tilings(core3(), 3);
    std::set<int> sizes;
    for (const auto& c : cores.cores) sizes.insert(c.box_count());
    CHECK(sizes == std::set<int>{0, 3});
    for (const auto& t : cores.tilings) CHECK(partitions_diagram(core3(), t));

    // The whole shape is one loop ribbon when k = x+y.
    auto loop = enumerate_tilings(ribbon_diff(), 6);
    REQUIRE(loop.tilings.size() == 1);
    CHECK(loop.tilings[0].heights == std::vector<int>{3});
    CHECK(loop.tilings[0].coreEmpty);

    auto lone = enumerate_tilings(make_d(2, 2, {0, 0}, {1, 0}), 2);
    REQUIRE(lone.tilings.size() == 1);
    CHECK(lone.tilings[0].ribbons.empty());
    CHECK_FALSE(lone.tilings[0].coreEmpty);
    CHECK(lone.totalHeights == std::vector<int>{0});

    CHECK_THROWS_AS(enumerate_tilings(make_d(2, 2, {0, 0}, {17, 16}), 2), cost_guard_error);
}

TEST_CASE("parity reports") {
    auto ok = parity_report(fills3(), 3);
    CHECK(ok.goodPair);
    CHECK(ok.innerStrict);
    CHECK(ok.paritiesObserved == std::set<int>{0});
    CHECK(ok.cancellationFree);

    auto mixed = parity_report(ribbon_diff(), 2);
    CHECK_FALSE(mixed.goodPair);
    CHECK_FALSE(mixed.innerStrict);
    CHECK(mixed.paritiesObserved == std::set<int>{0, 1});
    CHECK_FALSE(mixed.cancellationFree);

    CHECK(parity_report(kce3(), 3).paritiesObserved == std::set<int>{0, 1});
    CHECK_FALSE(parity_report(kce3(), 3).cancellationFree);
    CHECK(parity_report(kce4(), 4).paritiesObserved == std::set<int>{0, 1});

    // 5 boxes leave no empty core for k = 4, so the report is vacuous.
    auto vac = parity_report(make_d(2, 2, {2, 1}, {5, 3}), 4);
    CHECK(vac.goodPair);
    CHECK(vac.paritiesObserved.empty());
    CHECK(vac.cancellationFree);

    auto none = parity_report(make_d(2, 2, {1, 0}, {1, 0}), 2);
    CHECK(none.cancellationFree);
    CHECK(none.paritiesObserved == std::set<int>{0});
}

TEST_CASE("removal steps, rotations, and the parity theorem") {
    std::vector<std::pair<CylindricDiagram, int>> corpus = {
        {ribbon_diff(), 2},     {ribbon_diff(), 3},
        {ribbon_diff(), 6},     {fills3(), 2},
        {fills3(), 3},          {core3(), 3},
        {kce3(), 3},            {kce3(), 9},
        {kce4(), 4},            {make_d(2, 2, {2, 1}, {5, 3}), 2},
        {make_d(2, 2, {2, 1}, {5, 3}), 4},
        {make_d(2, 2, {0, 0}, {2, 2}), 2},
        {make_d(1, 1, {0}, {3}), 2},
        {make_d(2, 1, {0, 0}, {2, 1}), 3},
    };

    for (const auto& [D, k] : corpus) {
        CAPTURE(D.str());
        CAPTURE(k);
        bool good = is_good_pair(D, k).good;

        // Rotation lemma, both directions.
        const std::string w = outer_of(D);
        bool allEq = true;
        for (std::size_t r = 1; r < w.size(); ++r)
            if (epsilon_k(w.substr(r) + w.substr(0, r), k) != epsilon_k(w, k)) allEq = false;
        CHECK(allEq == good);

        // Walk every reachable state; one-counts never change, and for good
        // pairs a removal flips epsilon exactly when the ribbon height is odd.
        // Ribbons of x+y boxes are loops, whose word exchange wraps a full
        // period and so never moves epsilon.
        std::set<std::vector<int>> visited;
        std::vector<CylindricDiagram> stack = {D};
        visited.insert(D.outer());
        while (!stack.empty()) {
            auto S = stack.back();
            stack.pop_back();
            for (const auto& R : removable_k_ribbons(S, k)) {
                auto next = make_d(D.x(), D.y(), D.inner(), R.inner());
                CHECK(one_counts(S, k) == one_counts(next, k));
                if (k == D.x() + D.y()) {
                    CHECK(is_loop_ribbon(R));
                    CHECK(ribbon_height(R) == D.y());
                } else if (good) {
                    int flip = epsilon_k(outer_of(S), k) ^ epsilon_k(outer_of(next), k);
                    CHECK(flip == ribbon_height(R) % 2);
                }
                if (visited.insert(next.outer()).second) stack.push_back(next);
            }
        }

        if (good) {
            auto rep = enumerate_tilings(D, k);
            if (k < D.x() + D.y()) {
                int target = epsilon_k(outer_of(D), k) ^ epsilon_k(std::get<0>(D.inner_word()), k);
                for (const auto& t : rep.tilings)
                    if (t.coreEmpty) CHECK(t.totalHeight % 2 == target);
            } else {
                for (const auto& t : rep.tilings)
                    CHECK(t.totalHeight == static_cast<int>(t.ribbons.size()) * D.y());
            }
            CHECK(parity_report(D, k).cancellationFree);
        }
    }
}
