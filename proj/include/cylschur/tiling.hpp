#pragma once

#include <set>
#include <string>

#include "cylschur/ribbon.hpp"

namespace cylschur {

// Subword i collects the letters whose 1-based positions are i modulo k,
// with class k taking the positions divisible by k.
struct KPartitionedWord {
    std::string word;
    int k = 1;
    std::vector<std::string> subwords;
    std::vector<int> oneCounts;
};

KPartitionedWord k_partition(const std::string& word, int k);

struct GoodPairReport {
    bool good = false;
    KPartitionedWord parts;
    std::vector<std::string> reasons;  // one line per class
};

// Reads the outer boundary word of D. Requires k | x+y.
GoodPairReport is_good_pair(const CylindricDiagram& D, int k);

// Signed imbalance of ordered cross-residue 1-pairs, halved according to
// config().epsilonMode. Pair distance is unbounded within the word.
long long invar_k(const std::string& word, int k);
int epsilon_k(const std::string& word, int k);

struct TilingRecord {
    std::vector<std::vector<std::pair<int, int>>> ribbons;  // sorted supports
    std::vector<int> heights;                               // aligned with ribbons
    int totalHeight = 0;
    CylindricDiagram core;
    bool coreEmpty = false;
};

struct TilingReport {
    std::vector<TilingRecord> tilings;
    std::vector<int> totalHeights;  // aligned with tilings
    std::set<int> parities;
    std::vector<CylindricDiagram> cores;  // distinct
    long long sequenceCount = 0;
};

// Ribbons of k boxes along the outer boundary whose removal leaves a
// cylindric diagram.
std::vector<CylindricDiagram> removable_k_ribbons(const CylindricDiagram& D, int k);

// Depth-first over removal sequences down to cores. Tilings are
// deduplicated by their unordered support multisets.
TilingReport enumerate_tilings(const CylindricDiagram& D, int k);

struct ParityReport {
    bool goodPair = false;
    std::vector<std::string> reasons;
    bool innerStrict = false;
    std::set<int> paritiesObserved;  // over empty-core tilings
    bool cancellationFree = true;
};

ParityReport parity_report(const CylindricDiagram& D, int k);

}
