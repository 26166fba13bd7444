#pragma once

#include "cylschur/polynomial.hpp"
#include "cylschur/poset.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cylschur {

// Skew-plus-wrap view of a diagram: row r holds the boxes of band jLo+r-1,
// with columns translated by colOffset so that min(mu) = 0. Rows repeat with
// b_{r+rows} = b_r - shift.
struct SkewView {
    std::vector<int> lambda;
    std::vector<int> mu;
    int rows = 1;
    int shift = 1;
    int jLo = 1;
    int colOffset = 0;
};

// Region between two boundary loops on C_{x,y}. Box (i,j) sits over strip i
// with top edge at height j; membership is periodic under
// (i,j) ~ (i+x, j-y). Strips 1..x are the fundamental domain, strip i holding
// boxes inner(i) < j <= outer(i).
class CylindricDiagram {
public:
    static CylindricDiagram from_loops(int x, int y, const std::string& innerWord, int innerX,
                                       int innerY, const std::string& outerWord, int outerX,
                                       int outerY);
    static CylindricDiagram from_profiles(int x, int y, std::vector<int> inner,
                                          std::vector<int> outer);
    static CylindricDiagram from_skew(const SkewView& view);

    int x() const { return x_; }
    int y() const { return y_; }
    const std::vector<int>& inner() const { return inner_; }
    const std::vector<int>& outer() const { return outer_; }

    // Periodic profile access for any integer strip (1-based fundamental).
    int innerAt(int i) const;
    int outerAt(int i) const;
    std::pair<int, int> reduce(int i, int j) const;
    bool has_box(int i, int j) const;

    const std::vector<std::pair<int, int>>& boxes() const { return boxes_; }
    int box_count() const { return static_cast<int>(boxes_.size()); }
    bool empty() const { return boxes_.empty(); }
    int box_index(int i, int j) const;  // -1 when absent; accepts any representative

    // Translation-invariant identity: (x, y, lex-min rotation of the cyclic
    // strip data (boxCount, innerDrop)).
    std::vector<int> canonical_key() const;

    SkewView skew_view() const;

    // Canonical loop words starting over strip 1: (word, startX, startY).
    std::tuple<std::string, int, int> inner_word() const;
    std::tuple<std::string, int, int> outer_word() const;

    bool operator==(const CylindricDiagram& o) const = default;

    std::string str() const;
    std::string ascii() const;

private:
    int x_ = 1;
    int y_ = 1;
    std::vector<int> inner_;
    std::vector<int> outer_;
    std::vector<std::pair<int, int>> boxes_;
    std::map<std::pair<int, int>, int> index_;

    void finish();
};

// One element per fundamental box in boxes() order; covers are right and up
// neighbors (cylindrically), strictEdges the vertical pairs.
OrientedPoset poset_of(const CylindricDiagram& D);

struct CSSYT {
    std::vector<int> values;  // aligned with boxes()
    std::vector<int> weight(int maxEntry) const;
};

// Row-weak, column-strict periodic fillings with entries in 1..maxEntry; the
// optional filter demands an exact value-multiplicity vector.
std::vector<CSSYT> enumerate_cssyt(const CylindricDiagram& D, int maxEntry,
                                   const std::vector<int>* weightFilter = nullptr);
long long count_cssyt(const CylindricDiagram& D, int maxEntry,
                      const std::vector<int>* weightFilter = nullptr);
bool exists_cssyt(const CylindricDiagram& D, int maxEntry,
                  const std::vector<int>* weightFilter = nullptr);

SparsePolynomial schur_monomial(const CylindricDiagram& D, int nvars);

// Band r (1-based) of the skew view: its boxes as arbitrary-strip
// representatives, ascending strip.
std::vector<std::vector<std::pair<int, int>>> band_rows(const CylindricDiagram& D);

std::pair<Partition, std::vector<Partition>> classical_core_quotient(const Partition& lambda,
                                                                     int k);

// `cyl x=.. y=.. inner=WORD@a,b outer=WORD@a,b` or
// `skew lambda=.. mu=.. shift=.. rows=..`.
CylindricDiagram parse_diagram_spec(const std::string& spec);

}
