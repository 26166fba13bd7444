#pragma once

#include "cylschur/diagram.hpp"
#include "cylschur/flagged.hpp"

#include <string>
#include <vector>

namespace cylschur {

// Verdict for k -> values[k - k0]. Exactly one of `polynomial` or a period
// above 1 describes the fit; when neither does, both flags stay unset.
struct PolyFit {
    bool polynomial = false;
    int degree = -1;
    long long onset = 0;                                // first k the fit covers
    std::vector<Rational> coeffs;                       // constant term first
    int period = 1;
    std::vector<std::vector<Rational>> residueCoeffs;   // indexed by k mod period
    bool coeffsNonnegative = false;

    bool quasi() const { return period > 1; }
};

// Exact finite differences. A polynomial verdict needs the (d+1)-st
// differences to vanish with at least two witnesses; onsets are searched in
// increasing order. Quasipolynomial periods 2..maxPeriod need one vanishing
// witness per residue class and two overall.
PolyFit stretch_and_fit(const std::vector<Rational>& values, long long k0, int maxPeriod = 4);

Rational evaluate_fit(const PolyFit& fit, long long k);

// Strip-wise k-fold subdivision of the profiles, landing on C_{kx,y}.
CylindricDiagram subdivide(const CylindricDiagram& D, int k);

struct SaturationReport {
    std::vector<long long> counts;  // k = 1..kMax
    bool violation = false;
    std::string detail;
};

// Flags are held fixed while the shape and content scale.
SaturationReport flagged_saturation_scan(const std::vector<int>& lambda,
                                         const std::vector<int>& mu, const FlagPair& flags,
                                         const std::vector<int>& nu, int kMax);

SaturationReport cylindric_saturation_scan(const CylindricDiagram& D, const std::vector<int>& nu,
                                           int kMax);

// One term per filling of the cut column: the fixed values as an exponent
// vector plus a residual row-flagged shape on the remaining strips.
struct AsFlaggedTerm {
    std::vector<int> firstColumn;   // strictly increasing values in 1..nvars
    std::vector<int> nu;            // exponent vector of the fixed cells
    std::vector<int> lambda;
    std::vector<int> mu;
    FlagPair flags;
};

std::vector<AsFlaggedTerm> cylindric_as_flagged(const CylindricDiagram& D, int nvars,
                                                int cutStrip = 1);

// Sum of x^nu times the flagged generating function over all terms.
SparsePolynomial as_flagged_sum(const std::vector<AsFlaggedTerm>& terms, int nvars);

}
