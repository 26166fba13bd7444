#pragma once

#include "cylschur/diagram.hpp"
#include "cylschur/flagged.hpp"

#include <string>
#include <vector>

namespace cylschur {

// Levels x_0 (bottom, = mu) through x_n (top, = lambda), each of width m,
// interlacing upward: x_{i,j} >= x_{i-1,j} >= x_{i,j+1}. wrapShift < 0 marks
// a planar pattern; wrapShift = l >= 0 adds the cylindric closure
// x_{i-1,m} + l >= x_{i,1} together with the wrapped shape bounds.
struct GTPattern {
    std::vector<std::vector<int>> rows;
    int wrapShift = -1;

    int levels() const { return static_cast<int>(rows.size()) - 1; }
    int width() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    std::vector<int> weight() const;
    bool operator==(const GTPattern&) const = default;
};

// Throws input_error naming the first failing inequality.
void validate_pattern(const GTPattern& p);

// Flag faces: x_{i,j} = x_{i-1,j} whenever i lies outside [a_j, b_j].
void validate_pattern_flags(const GTPattern& p, const FlagPair& flags);

// Planar bijection with row fillings of lambda/mu (outer rows first):
// x_{i,j} = mu_j + #{entries <= i in row j}.
GTPattern pattern_of_filling(const std::vector<int>& lambda, const std::vector<int>& mu, int n,
                             const std::vector<std::vector<int>>& filling);
std::vector<std::vector<int>> filling_of_pattern(const GTPattern& p);

std::vector<GTPattern> enumerate_gt(const std::vector<int>& lambda, const std::vector<int>& mu,
                                    int n, const FlagPair* flags = nullptr,
                                    const std::vector<int>* weight = nullptr);

// Cylindric skew shape: rows 1..m at consecutive heights, row j + m equal to
// row j shifted left by `shift` columns.
struct CylGTShape {
    std::vector<int> lambda;
    std::vector<int> mu;
    int shift = 1;
};

CylGTShape cyl_gt_shape(const CylindricDiagram& D);

std::vector<GTPattern> enumerate_cyl_gt(const CylGTShape& shape, int n,
                                        const std::vector<int>* weight = nullptr);

// Bijection with CSSYT through the band rows of D.
GTPattern pattern_of_cssyt(const CylindricDiagram& D, const CSSYT& t, int n);
CSSYT cssyt_of_pattern(const CylindricDiagram& D, const GTPattern& p);

// Staggered parallelogram, top level first.
std::string format_gt(const GTPattern& p);

}
