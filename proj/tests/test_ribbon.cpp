#include <doctest.h>

#include "cylschur/ribbon.hpp"

using namespace cylschur;

namespace {

CylindricDiagram make_d(int x, int y, std::vector<int> inner, std::vector<int> outer) {
    return CylindricDiagram::from_profiles(x, y, std::move(inner), std::move(outer));
}

CylindricDiagram mnrule_diagram() { return make_d(2, 2, {2, 1}, {5, 3}); }

}  // namespace

TEST_CASE("stacked classification of the worked regions") {
    // Plain height-2 ribbon.
    auto a = classify_stacked(make_d(3, 3, {1, 0, 0}, {3, 2, 1}));
    CHECK(a.tag == StackedTag::NonPureStacked);
    CHECK(a.heights == std::vector<int>{2});
    CHECK(a.width == 1);
    CHECK(a.loopCount == 0);
    CHECK(a.closed_form() == 1);

    // Single loop.
    auto b = classify_stacked(make_d(4, 2, {1, 1, 0, 0}, {3, 2, 2, 1}));
    CHECK(b.tag == StackedTag::PureStacked);
    CHECK(b.heights == std::vector<int>{2});
    CHECK(b.width == 4);
    CHECK(b.height == 2);
    CHECK(b.closed_form() == 4);

    // Two stacked loops.
    auto c = classify_stacked(make_d(4, 1, {1, 1, 0, 0}, {3, 3, 3, 3}));
    CHECK(c.tag == StackedTag::PureStacked);
    CHECK(c.heights == std::vector<int>{1, 1});
    CHECK(c.width == 4);
    CHECK(c.loopCount == 1);
    CHECK(c.closed_form() == -4);

    // Height-3 ribbon under one loop.
    auto d = classify_stacked(make_d(3, 5, {1, 0, -1}, {7, 4, 3}));
    CHECK(d.tag == StackedTag::NonPureStacked);
    CHECK(d.heights == std::vector<int>{3, 5});
    CHECK(d.width == 1);
    CHECK(d.closed_form() == -1);

    // Vertical domino under two loops.
    auto e = classify_stacked(make_d(4, 2, {0, 0, 0, 0}, {4, 4, 4, 2}));
    CHECK(e.tag == StackedTag::NonPureStacked);
    CHECK(e.heights == std::vector<int>{1, 2, 2});
    CHECK(e.loopCount == 2);
    CHECK(e.signExponent == 7);
    CHECK(e.closed_form() == -1);
}

TEST_CASE("loop detection corner cases") {
    // Three boxes winding once around C_{2,1}.
    auto tri = classify_stacked(make_d(2, 1, {0, 0}, {2, 1}));
    CHECK(tri.tag == StackedTag::PureStacked);
    CHECK(tri.width == 2);
    CHECK(tri.heights == std::vector<int>{1});
    CHECK(tri.closed_form() == -2);

    // One-strip cylinder: a two-box column is a loop.
    auto two = classify_stacked(make_d(1, 1, {0}, {2}));
    CHECK(two.tag == StackedTag::PureStacked);
    CHECK(two.width == 1);
    CHECK(two.closed_form() == -1);

    // Three-box column peels one loop and keeps a single box.
    auto three = classify_stacked(make_d(1, 1, {0}, {3}));
    CHECK(three.tag == StackedTag::NonPureStacked);
    CHECK(three.heights == std::vector<int>{0, 1});
    CHECK(three.closed_form() == 1);

    // A full 2x2 square is not stacked.
    auto sq = classify_stacked(make_d(2, 2, {0, 0}, {2, 2}));
    CHECK(sq.tag == StackedTag::NotStacked);
    CHECK(sq.closed_form() == 0);

    CHECK_THROWS_AS(classify_stacked(make_d(2, 1, {0, 0}, {0, 0})), input_error);
}

TEST_CASE("five box example: tableaux and coefficients") {
    auto D = mnrule_diagram();
    auto cls = classify_stacked(D);
    CHECK(cls.tag == StackedTag::NonPureStacked);
    CHECK(cls.heights == std::vector<int>{0, 2});
    CHECK(cls.closed_form() == -1);

    std::map<Partition, long long> counts = {
        {Partition({5}), 1},          {Partition({4, 1}), 1},
        {Partition({3, 1, 1}), 2},    {Partition({2, 2, 1}), 0},
        {Partition({2, 1, 1, 1}), 0}, {Partition({1, 1, 1, 1, 1}), 4},
    };
    for (const auto& [mu, want] : counts) {
        auto rts = enumerate_ribbon_tableaux(D, mu);
        CHECK(static_cast<long long>(rts.size()) == want);
        for (const auto& rt : rts) {
            REQUIRE(rt.blocks.size() == static_cast<std::size_t>(mu.length()));
            for (int r = 0; r < mu.length(); ++r)
                CHECK(rt.blocks[r].region.box_count() == mu[r]);
        }
    }
    for (const auto& rt : enumerate_ribbon_tableaux(D, Partition({3, 1, 1})))
        CHECK(rt.weight() == -1);
    for (const auto& rt : enumerate_ribbon_tableaux(D, Partition({1, 1, 1, 1, 1})))
        CHECK(rt.weight() == 1);

    auto mn = mn_expansion(D);
    std::map<Partition, Rational> want = {
        {Partition({5}), Rational(-1, 5)},
        {Partition({4, 1}), Rational(1, 2)},
        {Partition({3, 1, 1}), Rational(-1, 3)},
        {Partition({1, 1, 1, 1, 1}), Rational(1, 30)},
    };
    CHECK(mn.basis == Basis::PowerSum);
    CHECK(mn.byPartition == want);

    CHECK_THROWS_AS(enumerate_ribbon_tableaux(D, Partition({4})), input_error);
}

TEST_CASE("removal rule agrees with the tableau expansion") {
    std::vector<CylindricDiagram> cases = {
        mnrule_diagram(),
        make_d(3, 3, {2, 0, 0}, {4, 3, 2}),
        make_d(2, 1, {0, 0}, {2, 1}),
        make_d(1, 1, {0}, {3}),
        make_d(3, 3, {1, 0, 0}, {3, 2, 1}),
        make_d(4, 2, {1, 1, 0, 0}, {3, 2, 2, 1}),
        make_d(2, 2, {0, 0}, {2, 2}),
        make_d(2, 3, {0, -1}, {2, -1}),
    };
    for (const auto& D : cases) {
        auto mn = mn_expansion(D);
        auto direct = expand_in_powersum(schur_monomial(D, std::max(D.box_count(), 1)));
        CHECK(mn.byPartition == direct.byPartition);
    }
    auto empty = mn_expansion(make_d(2, 1, {0, 0}, {0, 0}));
    REQUIRE(empty.byPartition.size() == 1);
    CHECK(empty.byPartition.at(Partition()) == 1);
}

TEST_CASE("whole diagram closed form against the p_(n) coefficient") {
    std::vector<CylindricDiagram> cases = {
        mnrule_diagram(),
        make_d(3, 3, {2, 0, 0}, {4, 3, 2}),
        make_d(2, 1, {0, 0}, {2, 1}),
        make_d(1, 1, {0}, {2}),
        make_d(1, 1, {0}, {3}),
        make_d(3, 3, {1, 0, 0}, {3, 2, 1}),
        make_d(4, 2, {1, 1, 0, 0}, {3, 2, 2, 1}),
        make_d(2, 2, {0, 0}, {2, 2}),
    };
    for (const auto& D : cases) {
        auto chk = verify_stacked_formula(D);
        CHECK(chk.ok);
        CHECK(chk.viaPowerSum == Rational(chk.closedForm));
    }
    CHECK(verify_stacked_formula(make_d(2, 1, {0, 0}, {2, 1})).closedForm == -2);
    CHECK(verify_stacked_formula(make_d(2, 2, {0, 0}, {2, 2})).closedForm == 0);
    CHECK_THROWS_AS(verify_stacked_formula(make_d(2, 1, {0, 0}, {0, 0})), input_error);
}
