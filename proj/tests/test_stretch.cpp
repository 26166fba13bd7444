#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "cylschur/corpus.hpp"
#include "cylschur/stretch.hpp"

using namespace cylschur;

namespace {

CylindricDiagram gt_diagram() {
    return CylindricDiagram::from_profiles(2, 3, {2, 1}, {6, 4});
}

CylindricDiagram nine_box() {
    return CylindricDiagram::from_profiles(4, 3, {2, 2, 0, 0}, {5, 3, 3, 2});
}

// Two row shape k(4,3)/k(2,0), content k(2,1,1,1,0), row 1 barred from the
// value 2. Set constraints sit outside the interval flag model, so count
// directly.
long long remark_count(int k) {
    int lam[2] = {4 * k, 3 * k}, mu[2] = {2 * k, 0};
    bool allowed[2][6] = {{false, true, false, true, true, true},
                          {false, true, true, true, true, true}};
    int wt[5] = {2 * k, k, k, k, 0};
    std::map<std::pair<int, int>, int> cell;
    std::vector<std::pair<int, int>> order;
    for (int r = 0; r < 2; ++r)
        for (int c = mu[r]; c < lam[r]; ++c) order.push_back({r, c});
    int used[5] = {0, 0, 0, 0, 0};
    long long count = 0;
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == order.size()) {
            ++count;
            return;
        }
        auto [r, c] = order[t];
        int lo = 1;
        if (auto it = cell.find({r, c - 1}); it != cell.end()) lo = std::max(lo, it->second);
        if (auto it = cell.find({r - 1, c}); it != cell.end()) lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= 5; ++v) {
            if (!allowed[r][v] || used[v - 1] >= wt[v - 1]) continue;
            cell[{r, c}] = v;
            ++used[v - 1];
            rec(t + 1);
            --used[v - 1];
            cell.erase({r, c});
        }
    };
    rec(0);
    return count;
}

std::vector<Rational> rat(std::initializer_list<long long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("triangular numbers fit one polynomial") {
    std::vector<Rational> vals{1, 3, 6, 10, 15, 21};
    auto fit = stretch_and_fit(vals, 0);
    CHECK(fit.polynomial);
    CHECK(fit.degree == 2);
    CHECK(fit.onset == 0);
    CHECK(fit.period == 1);
    CHECK(fit.coeffs == std::vector<Rational>{Rational(1), Rational(3, 2), Rational(1, 2)});
    CHECK(fit.coeffsNonnegative);
    for (long long k = 0; k < 6; ++k) CHECK(evaluate_fit(fit, k) == vals[k]);
    CHECK(evaluate_fit(fit, 9) == 55);
}

TEST_CASE("stretched tables reach a constant after an onset") {
    // Margins k(2,-,4),(k,k) with the first column margin 2k-4.
    std::vector<Rational> vals;
    for (long long k = 1; k <= 6; ++k) {
        ContingencySpec s{{2 * k - 4, 4}, {k, k}, {1, 1}, {2, 2}};
        vals.push_back(contingency_count(s));
    }
    CHECK(vals == rat({0, 1, 3, 5, 5, 5}));
    auto fit = stretch_and_fit(vals, 1);
    CHECK(fit.polynomial);
    CHECK(fit.degree == 0);
    CHECK(fit.onset == 4);
    CHECK(fit.coeffs == rat({5}));
    CHECK(evaluate_fit(fit, 11) == 5);
}

TEST_CASE("the remark sequence needs period two") {
    std::vector<Rational> vals;
    for (int k = 1; k <= 8; ++k) vals.push_back(remark_count(k));
    CHECK(vals == rat({3, 7, 12, 19, 27, 37, 48, 61}));

    auto fit = stretch_and_fit(vals, 1);
    CHECK_FALSE(fit.polynomial);
    CHECK(fit.quasi());
    CHECK(fit.period == 2);
    CHECK(fit.degree == 2);
    CHECK(fit.residueCoeffs[0] ==
          std::vector<Rational>{Rational(1), Rational(3, 2), Rational(3, 4)});
    CHECK(fit.residueCoeffs[1] ==
          std::vector<Rational>{Rational(3, 4), Rational(3, 2), Rational(3, 4)});
    CHECK(fit.coeffsNonnegative);
    for (int k = 1; k <= 8; ++k) CHECK(evaluate_fit(fit, k) == vals[k - 1]);
    // Predictions past the sample agree with direct counts.
    CHECK(evaluate_fit(fit, 9) == remark_count(9));
    CHECK(evaluate_fit(fit, 10) == remark_count(10));

    // The interval relaxation of the same data is plainly polynomial.
    std::vector<Rational> relaxed;
    for (int k = 1; k <= 6; ++k)
        relaxed.push_back(flagged_kostka({4 * k, 3 * k}, {2 * k}, FlagPair{{1, 1}, {5, 5}},
                                         {2 * k, k, k, k, 0}));
    auto rfit = stretch_and_fit(relaxed, 1);
    CHECK(rfit.polynomial);
    CHECK(rfit.period == 1);
}

TEST_CASE("fit edge cases") {
    auto fit = stretch_and_fit({Rational(7), Rational(7), Rational(7)}, 2);
    CHECK(fit.polynomial);
    CHECK(fit.degree == 0);
    CHECK(fit.onset == 2);

    CHECK_THROWS_AS(stretch_and_fit({Rational(1), Rational(2)}, 0), input_error);

    std::vector<Rational> geom{1, 2, 4, 8, 16, 32, 64};
    auto none = stretch_and_fit(geom, 0, 2);
    CHECK_FALSE(none.polynomial);
    CHECK_FALSE(none.quasi());
    CHECK_THROWS_AS(evaluate_fit(none, 3), input_error);
}

TEST_CASE("subdivision replicates the strip profiles") {
    auto k3 = subdivide(nine_box(), 3);
    CHECK(k3.x() == 12);
    CHECK(k3.y() == 3);
    CHECK(k3.inner() == std::vector<int>{2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0});
    CHECK(k3.outer() == std::vector<int>{5, 5, 5, 3, 3, 3, 3, 3, 3, 2, 2, 2});
    CHECK(k3.box_count() == 27);
    CHECK(subdivide(gt_diagram(), 1) == gt_diagram());
    CHECK_THROWS_AS(subdivide(gt_diagram(), 0), input_error);
}

TEST_CASE("stretched cylindric counts of the worked diagram") {
    auto D = gt_diagram();
    std::vector<int> beta{2, 2, 1, 1, 1};
    std::vector<Rational> vals;
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> kb(beta);
        for (int& v : kb) v *= k;
        vals.push_back(count_cssyt(subdivide(D, k), 5, &kb));
    }
    CHECK(vals == rat({3, 6, 10, 15, 21}));
    auto fit = stretch_and_fit(vals, 1);
    CHECK(fit.polynomial);
    CHECK(fit.onset == 1);
    CHECK(fit.coeffs == std::vector<Rational>{Rational(1), Rational(3, 2), Rational(1, 2)});
    CHECK(fit.coeffsNonnegative);
    CHECK(evaluate_fit(fit, 0) == 1);
}

TEST_CASE("cut column terms of the nine box diagram") {
    auto nine = nine_box();
    auto terms = cylindric_as_flagged(nine, 5, 1);
    REQUIRE(terms.size() == 10);
    for (const auto& t : terms) {
        CHECK(t.lambda == std::vector<int>{3, 3, 2});
        CHECK(t.mu == std::vector<int>{1, 1, 0});
        REQUIRE(t.firstColumn.size() == 3);
        CHECK(t.flags.a == std::vector<int>{1, 1, t.firstColumn[0]});
        CHECK(t.flags.b == std::vector<int>{t.firstColumn[1], t.firstColumn[2], 5});
    }
    CHECK(terms[0].firstColumn == std::vector<int>{1, 2, 3});
    CHECK(terms[0].nu == std::vector<int>{1, 1, 1, 0, 0});

    CHECK(as_flagged_sum(terms, 5) == schur_monomial(nine, 5));
    CHECK(cylindric_as_flagged(nine, 5, 2).size() == 5);
    CHECK(as_flagged_sum(cylindric_as_flagged(nine, 5, 2), 5) == schur_monomial(nine, 5));
}

TEST_CASE("cut column terms of the gt diagram") {
    auto D = gt_diagram();
    auto cut1 = cylindric_as_flagged(D, 5, 1);
    auto cut2 = cylindric_as_flagged(D, 5, 2);
    CHECK(cut1.size() == 5);
    CHECK(cut2.size() == 10);
    auto s = schur_monomial(D, 5);
    CHECK(as_flagged_sum(cut1, 5) == s);
    CHECK(as_flagged_sum(cut2, 5) == s);

    // Summing the flagged kostka numbers over the terms gives the monomial
    // coefficient directly.
    std::vector<int> beta{2, 2, 1, 1, 1};
    long long total = 0;
    for (const auto& t : cut1) {
        std::vector<int> w(beta);
        for (size_t i = 0; i < w.size(); ++i) w[i] -= t.nu[i];
        total += flagged_kostka(t.lambda, t.mu, t.flags, w);
    }
    CHECK(total == 3);
    CHECK(s.coefficient(beta) == Rational(3));
}

TEST_CASE("single strip cylinders") {
    auto tall = CylindricDiagram::from_profiles(1, 2, {0}, {2});
    auto terms = cylindric_as_flagged(tall, 3, 1);
    CHECK(terms.size() == 3);
    for (const auto& t : terms) CHECK(t.lambda.empty());
    CHECK(as_flagged_sum(terms, 3) == schur_monomial(tall, 3));

    // Period one: the cut wraps to itself one level up, so every strictly
    // increasing choice survives and the sum is an elementary polynomial.
    auto tight = CylindricDiagram::from_profiles(1, 1, {0}, {2});
    auto tightTerms = cylindric_as_flagged(tight, 4, 1);
    CHECK(tightTerms.size() == 6);
    for (const auto& t : tightTerms) CHECK(t.lambda.empty());
    auto s = schur_monomial(tight, 4);
    CHECK_FALSE(s.is_zero());
    CHECK(as_flagged_sum(tightTerms, 4) == s);
}

TEST_CASE("recombination across a corpus") {
    int done = 0;
    for (const auto& D : all_diagrams(6, 5)) {
        auto s = schur_monomial(D, 3);
        CHECK(as_flagged_sum(cylindric_as_flagged(D, 3, 1), 3) == s);
        if (D.x() > 1) CHECK(as_flagged_sum(cylindric_as_flagged(D, 3, 2), 3) == s);
        ++done;
    }
    CHECK(done > 50);
}

TEST_CASE("flagged saturation on small shapes") {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes{
        {{2}, {}}, {{2, 1}, {}}, {{3, 1}, {1}}, {{2, 2}, {1}}, {{3, 2}, {2, 1}}, {{3, 3}, {}}};
    for (const auto& [lam, mu] : shapes) {
        int rows = static_cast<int>(lam.size());
        int cells = 0;
        for (int r = 0; r < rows; ++r)
            cells += lam[r] - (r < static_cast<int>(mu.size()) ? mu[r] : 0);
        std::vector<FlagPair> flagSets{FlagPair::trivial(rows, 3)};
        if (rows == 2) {
            flagSets.push_back(FlagPair{{1, 2}, {2, 3}});
            flagSets.push_back(FlagPair{{1, 1}, {1, 3}});
            flagSets.push_back(FlagPair{{2, 2}, {3, 3}});
        }
        for (const auto& flags : flagSets) {
            for (int n1 = 0; n1 <= cells; ++n1)
                for (int n2 = 0; n1 + n2 <= cells; ++n2) {
                    std::vector<int> nu{n1, n2, cells - n1 - n2};
                    auto rep = flagged_saturation_scan(lam, mu, flags, nu, 4);
                    CHECK_FALSE(rep.violation);
                    CHECK(rep.counts.size() == 4);
                }
        }
    }
}

TEST_CASE("cylindric saturation on small diagrams") {
    for (const auto& D : all_diagrams(4, 4)) {
        int cells = D.box_count();
        for (int n1 = 0; n1 <= cells; ++n1)
            for (int n2 = 0; n1 + n2 <= cells; ++n2) {
                std::vector<int> nu{n1, n2, cells - n1 - n2};
                auto rep = cylindric_saturation_scan(D, nu, 3);
                CHECK_FALSE(rep.violation);
            }
    }
}

TEST_CASE("interval flag corpora keep period one") {
    // Stretch several flagged kostka families; all collapse to polynomials.
    std::vector<std::tuple<std::vector<int>, std::vector<int>, FlagPair, std::vector<int>>> cases{
        {{2, 1}, {}, FlagPair{{1, 1}, {2, 2}}, {2, 1}},
        {{2, 1}, {}, FlagPair{{1, 2}, {1, 2}}, {1, 2}},
        {{3, 1}, {1}, FlagPair{{1, 1}, {2, 3}}, {1, 1, 1}},
        {{2, 2}, {1}, FlagPair{{1, 2}, {2, 3}}, {1, 1, 1}},
        {{3, 2, 1}, {}, FlagPair{{1, 1, 2}, {2, 3, 3}}, {2, 2, 2}}};
    for (const auto& [lam, mu, flags, nu] : cases) {
        std::vector<Rational> vals;
        for (int k = 1; k <= 6; ++k) {
            std::vector<int> kl(lam), km(mu), kn(nu);
            for (int& v : kl) v *= k;
            for (int& v : km) v *= k;
            for (int& v : kn) v *= k;
            vals.push_back(flagged_kostka(kl, km, flags, kn));
        }
        auto fit = stretch_and_fit(vals, 1);
        CHECK(fit.polynomial);
        CHECK(fit.period == 1);
        CHECK(fit.coeffsNonnegative);
    }
}
