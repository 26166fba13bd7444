#pragma once

#include "cylschur/partition.hpp"
#include "cylschur/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cylschur {

// Exact-rational multivariate polynomial with a fixed variable count.
// Cross-arity arithmetic is rejected, never padded.
class SparsePolynomial {
public:
    explicit SparsePolynomial(int nvars, const Rational& constant = Rational(0));

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const std::vector<int>& exps) const;

    void add_term(std::vector<int> exps, const Rational& c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const Rational& c) const;

    bool operator==(const SparsePolynomial& o) const = default;

    // Common total degree, or nullopt when terms mix degrees. Zero maps to 0.
    std::optional<long long> homogeneous_degree() const;

private:
    int nvars_ = 1;
    std::map<std::vector<int>, Rational> terms_;
};

enum class Basis { MonomialSym, PowerSum, QMonomial, QPsi };

struct BasisExpansion {
    Basis basis = Basis::MonomialSym;
    std::map<Partition, Rational> byPartition;
    std::map<Composition, Rational> byComposition;

    bool operator==(const BasisExpansion& o) const = default;
};

// m_lambda, p_lambda, M_alpha, Psi_alpha in nvars variables. The index is
// validated as a partition or composition to match the kind. More parts than
// variables gives the zero polynomial for m and M.
SparsePolynomial basis_element(Basis kind, const std::vector<int>& index, int nvars);

SparsePolynomial monomial_sym(const Partition& lambda, int nvars);
SparsePolynomial powersum(const Partition& lambda, int nvars);
SparsePolynomial qmonomial(const Composition& alpha, int nvars);
SparsePolynomial qpsi(const Composition& alpha, int nvars);

// Rejects non-symmetric input with a witness pair of exponent vectors.
BasisExpansion expand_in_monomial_sym(const SparsePolynomial& f);

// Needs f symmetric and homogeneous of degree d with nvars >= d; solves the
// p-to-m transition system over exact rationals (inverse cached per degree).
BasisExpansion expand_in_powersum(const SparsePolynomial& f);

// Needs f quasisymmetric and homogeneous with nvars >= d; triangular solve
// along the refinement order, finest compositions first.
BasisExpansion expand_in_psi(const SparsePolynomial& f);

SparsePolynomial recombine(const BasisExpansion& e, int nvars);

std::string format_expansion(const BasisExpansion& e);

}
