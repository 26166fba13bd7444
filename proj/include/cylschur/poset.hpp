#pragma once

#include "cylschur/partition.hpp"
#include "cylschur/polynomial.hpp"

#include <utility>
#include <vector>

namespace cylschur {

using EdgeList = std::vector<std::pair<int, int>>;

// Finite poset on elements 0..n-1 with an optional marked subset of strict
// relation pairs.
class OrientedPoset {
public:
    OrientedPoset() = default;
    static OrientedPoset from_covers(int n, const EdgeList& covers);
    // Expects an irreflexive antisymmetric relation; transitively closed here.
    static OrientedPoset from_relation(int n, const std::vector<std::vector<bool>>& less);

    int size() const { return n_; }
    bool less(int a, int b) const { return less_[a][b]; }
    const EdgeList& covers() const { return covers_; }
    EdgeList relation_pairs() const;
    std::vector<int> topological_order() const;

    // Sub-poset on keep (ascending element list), reindexed to 0..k-1.
    OrientedPoset induced(const std::vector<int>& keep) const;
    static EdgeList restrict_edges(const EdgeList& S, const std::vector<int>& keep);

    void validate_edges(const EdgeList& S) const;

    EdgeList strictEdges;

private:
    int n_ = 0;
    EdgeList covers_;
    std::vector<std::vector<bool>> less_;
};

struct ChainCongruence {
    std::vector<std::vector<int>> classes;  // members ascending, classes by min member
    std::vector<int> classOf;
    OrientedPoset quotient;                 // one element per class, same order
    EdgeList closedEdges;                   // pairs of rel(P) inside one class, lex order
};

// Fixpoint of sandwich merging and quotient-cycle merging; the result's
// quotient is a genuine poset.
ChainCongruence chain_congruence_closure(const OrientedPoset& P, const EdgeList& S);

// 0 unless the quotient by the closure of S has a unique minimal class, else
// that class's size.
long long m_E(const OrientedPoset& P, const EdgeList& S);

struct OrderSurjection {
    std::vector<int> assignment;  // element -> block, 1-based
    Composition blockSizes;
};

// Order-preserving surjections with |f^-1(i)| = alpha_i and f constant on
// each pair of S; lexicographic in the assignment vector.
std::vector<OrderSurjection> enumerate_surjections(const OrientedPoset& P, const EdgeList& S,
                                                   const Composition& alpha);

enum class KMode { Equal, Strict };

// Generating function of weakly order-preserving maps P -> [nvars] with the
// mode constraint on S; recursion over a linear extension, not nvars^|P|.
SparsePolynomial K_generating(const OrientedPoset& P, const EdgeList& S, KMode mode, int nvars);

// Eq. (9): Psi coefficient of alpha is sum over O_alpha(P,E) of the blockwise
// m_E product, divided by z_alpha. E must already be a chain congruence.
BasisExpansion psi_AS(const OrientedPoset& P, const EdgeList& E);

// Eq. (10): plain order-preserving surjections with blockwise signed m sums.
BasisExpansion psi_strict(const OrientedPoset& P, const EdgeList& E);

// Eq. (11): sum over subsets S of E of (-1)^|S| m_E(P, S).
long long signed_mE_sum(const OrientedPoset& P, const EdgeList& E);

}
