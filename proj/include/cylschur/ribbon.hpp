#pragma once

#include <optional>

#include "cylschur/diagram.hpp"

namespace cylschur {

bool has_two_by_two(const CylindricDiagram& R);
bool cylinder_connected(const CylindricDiagram& R);

// A loop winds once around the cylinder; every box sees exactly two of its
// four periodic neighbors.
bool is_loop_ribbon(const CylindricDiagram& R);

// Height of a plain ribbon on a planar lift, nothing when the region winds.
std::optional<int> planar_height(const CylindricDiagram& R);

// k-ribbon in the cylindric sense: connected, no 2x2, at most x+y boxes.
bool is_ribbon(const CylindricDiagram& R);

// Loops have height y, plain ribbons count intersected rows minus one.
int ribbon_height(const CylindricDiagram& R);

enum class StackedTag { PureStacked, NonPureStacked, NotStacked };

// Result of peeling loops off a region. heights lists the constituent
// heights innermost first; every peeled loop contributes y.
struct StackedRibbonClass {
    StackedTag tag = StackedTag::NotStacked;
    int height = 0;
    int signExponent = 0;
    std::vector<int> heights;
    int width = 0;  // x for pure, 1 for non-pure, 0 otherwise
    int loopCount = 0;

    long long closed_form() const;
};

StackedRibbonClass classify_stacked(const CylindricDiagram& D);

struct RibbonBlock {
    CylindricDiagram region;
    StackedRibbonClass cls;
};

// Blocks innermost first; block r holds mu_r boxes.
struct RibbonTableau {
    std::vector<RibbonBlock> blocks;
    long long weight() const;
};

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const CylindricDiagram& D,
                                                     const Partition& mu);

// Power-sum expansion of s_D via stacked-ribbon removal.
BasisExpansion mn_expansion(const CylindricDiagram& D);

// Closed form for the whole diagram against the p_(n) coefficient computed
// from the tableau generating function.
struct StackedCheck {
    long long closedForm = 0;
    Rational viaPowerSum = 0;
    bool ok = false;
};

StackedCheck verify_stacked_formula(const CylindricDiagram& D);

}
