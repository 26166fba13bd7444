#pragma once

#include "cylschur/partition.hpp"
#include "cylschur/polynomial.hpp"

#include <vector>

namespace cylschur {

// Row entry windows [a_r, b_r], values 1-based. Row r of the shape draws its
// entries from this closed interval.
struct FlagPair {
    std::vector<int> a;
    std::vector<int> b;

    static FlagPair trivial(int rows, int maxEntry);
    bool operator==(const FlagPair&) const = default;
};

// Shapes are row length vectors lambda >= mu (componentwise), each weakly
// decreasing; lambda fixes the row count, mu is zero padded. Fillings use
// English order: values weakly increase along a row and strictly increase
// down a column.
void validate_flagged_shape(const std::vector<int>& lambda, const std::vector<int>& mu,
                            const FlagPair& flags);

// Row fillings, outer rows first. weight, when given, pins the content.
std::vector<std::vector<std::vector<int>>> flagged_tableaux(const std::vector<int>& lambda,
                                                            const std::vector<int>& mu,
                                                            const FlagPair& flags, int maxEntry,
                                                            const std::vector<int>* weight = nullptr);

long long flagged_kostka(const std::vector<int>& lambda, const std::vector<int>& mu,
                         const FlagPair& flags, const std::vector<int>& weight);

// Sum of x^T over all flagged fillings.
SparsePolynomial flagged_schur_enum(const std::vector<int>& lambda, const std::vector<int>& mu,
                                    const FlagPair& flags, int nvars);

// Complete homogeneous h_m in x_lo..x_hi. Zero for m < 0 or an empty range
// with m > 0; one for m == 0.
SparsePolynomial flagged_h(int m, int lo, int hi, int nvars);

SparsePolynomial flagged_h_product(const std::vector<int>& alpha, const FlagPair& flags, int nvars);

// det[ h_{lambda_i - mu_j - i + j}(a_j, b_i) ]. Requires weakly increasing
// flags with a_r <= b_r and nvars >= max b.
SparsePolynomial flagged_schur_jt(const std::vector<int>& lambda, const std::vector<int>& mu,
                                  const FlagPair& flags, int nvars);

// Nonnegative l x l matrices with column sums alpha, row sums beta, column j
// supported on rows a_j..b_j.
struct ContingencySpec {
    std::vector<long long> alpha;
    std::vector<long long> beta;
    std::vector<int> a;
    std::vector<int> b;
};

long long contingency_count(const ContingencySpec& spec);

// Signed permutation sum of contingency counts; equals flagged_kostka for
// any content beta.
long long kostka_via_contingency(const std::vector<int>& lambda, const std::vector<int>& mu,
                                 const FlagPair& flags, const std::vector<long long>& beta);

// Straight shape Kostka number; content entries may be any integers, with
// negatives giving zero.
long long kostka_number(const Partition& lambda, const std::vector<int>& content);

enum class LrRoute { Kostant, Contingency, LatticeWord };

long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu,
                         LrRoute route);

// Runs all three routes and checks they agree.
long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

}
