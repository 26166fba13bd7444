#include "cylschur/polynomial.hpp"

#include "cylschur/common.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cylschur {

namespace {

std::string exps_str(const std::vector<int>& e) {
    return "(" + format_int_list(e) + ")";
}

void check_arity(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.nvars() != b.nvars())
        throw input_error("polynomial arity mismatch: " + std::to_string(a.nvars()) + " vs " +
                          std::to_string(b.nvars()));
}

}  // namespace

SparsePolynomial::SparsePolynomial(int nvars, const Rational& constant) : nvars_(nvars) {
    if (nvars < 1) throw input_error("polynomial needs nvars >= 1");
    if (constant != 0) terms_[std::vector<int>(nvars_, 0)] = constant;
}

Rational SparsePolynomial::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(std::vector<int> exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw input_error("exponent vector length " + std::to_string(exps.size()) +
                          " does not match nvars " + std::to_string(nvars_));
    for (int e : exps)
        if (e < 0) throw input_error("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    check_arity(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    check_arity(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r += o;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r -= o;
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    check_arity(*this, o);
    SparsePolynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
    SparsePolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

std::optional<long long> SparsePolynomial::homogeneous_degree() const {
    long long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long s = std::accumulate(e.begin(), e.end(), 0LL);
        if (first) {
            d = s;
            first = false;
        } else if (s != d) {
            return std::nullopt;
        }
    }
    return d;
}

SparsePolynomial basis_element(Basis kind, const std::vector<int>& index, int nvars) {
    switch (kind) {
        case Basis::MonomialSym:
            return monomial_sym(Partition(index), nvars);
        case Basis::PowerSum:
            return powersum(Partition(index), nvars);
        case Basis::QMonomial:
            return qmonomial(Composition(index), nvars);
        case Basis::QPsi:
            return qpsi(Composition(index), nvars);
    }
    throw input_error("unknown basis kind");
}

SparsePolynomial monomial_sym(const Partition& lambda, int nvars) {
    SparsePolynomial r(nvars);
    if (lambda.length() > nvars) return r;
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i];
    std::sort(e.begin(), e.end());
    do {
        r.add_term(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

SparsePolynomial powersum(const Partition& lambda, int nvars) {
    SparsePolynomial r(nvars, 1);
    for (int k : lambda.parts()) {
        SparsePolynomial pk(nvars);
        for (int i = 0; i < nvars; ++i) {
            std::vector<int> e(nvars, 0);
            e[i] = k;
            pk.add_term(std::move(e), 1);
        }
        r = r * pk;
    }
    return r;
}

SparsePolynomial qmonomial(const Composition& alpha, int nvars) {
    SparsePolynomial r(nvars);
    const int l = alpha.length();
    if (l > nvars) return r;
    std::vector<int> idx(l);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == l) {
            std::vector<int> e(nvars, 0);
            for (int j = 0; j < l; ++j) e[idx[j]] = alpha[j];
            r.add_term(std::move(e), 1);
            return;
        }
        for (int i = lo; i <= nvars - (l - pos); ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return r;
}

SparsePolynomial qpsi(const Composition& alpha, int nvars) {
    const Rational z(z_of(alpha.sort()));
    SparsePolynomial r(nvars);
    for (const auto& [beta, pi] : coarsenings_with_pi(alpha))
        r += qmonomial(beta, nvars) * (z / pi);
    return r;
}

BasisExpansion expand_in_monomial_sym(const SparsePolynomial& f) {
    BasisExpansion out;
    out.basis = Basis::MonomialSym;
    // Orbit representatives in ascending order so next_permutation walks the
    // full orbit of each.
    std::map<std::vector<int>, std::vector<int>> orbitRep;
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> key = e;
        std::sort(key.begin(), key.end());
        orbitRep.emplace(std::move(key), e);
    }
    for (const auto& [key, witness] : orbitRep) {
        const Rational want = f.coefficient(witness);
        std::vector<int> e = key;
        do {
            if (f.coefficient(e) != want)
                throw input_error("not symmetric: coefficient of x^" + exps_str(witness) +
                                  " differs from x^" + exps_str(e));
        } while (std::next_permutation(e.begin(), e.end()));
        std::vector<int> desc(key.rbegin(), key.rend());
        out.byPartition[Partition(std::move(desc))] = want;
    }
    return out;
}

namespace {

// Inverse of the degree-d transition matrix whose columns expand p_mu in the
// monomial basis. Valid whenever nvars >= d.
struct PowersumTable {
    std::vector<Partition> lambdas;
    std::map<Partition, int> index;
    std::vector<std::vector<Rational>> inverse;
};

const PowersumTable& powersum_table(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PowersumTable>> cache;
    std::scoped_lock lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
    if (d > 20) throw cost_guard_error("powersum expansion degree " + std::to_string(d) + " exceeds 20");

    auto t = std::make_unique<PowersumTable>();
    t->lambdas = partitions_of(d);
    const int n = static_cast<int>(t->lambdas.size());
    for (int i = 0; i < n; ++i) t->index[t->lambdas[i]] = i;

    // Augmented [A | I], Gauss-Jordan over exact rationals.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int col = 0; col < n; ++col) {
        const auto expansion = expand_in_monomial_sym(powersum(t->lambdas[col], std::max(d, 1)));
        for (const auto& [lam, c] : expansion.byPartition) a[t->index.at(lam)][col] = c;
        a[col][n + col] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw input_error("singular powersum transition matrix");
        std::swap(a[col], a[pivot]);
        const Rational inv = Rational(1) / a[col][col];
        for (int j = col; j < 2 * n; ++j) a[col][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (int j = col; j < 2 * n; ++j) a[row][j] -= factor * a[col][j];
        }
    }
    t->inverse.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t->inverse[i][j] = a[i][n + j];

    auto [it, ok] = cache.emplace(d, std::move(t));
    return *it->second;
}

}  // namespace

BasisExpansion expand_in_powersum(const SparsePolynomial& f) {
    BasisExpansion out;
    out.basis = Basis::PowerSum;
    const BasisExpansion mono = expand_in_monomial_sym(f);
    if (mono.byPartition.empty()) return out;

    const auto deg = f.homogeneous_degree();
    if (!deg) throw input_error("powersum expansion needs homogeneous input");
    const long long d = *deg;
    if (d == 0) {
        out.byPartition[Partition()] = mono.byPartition.begin()->second;
        return out;
    }
    if (f.nvars() < d)
        throw input_error("powersum expansion needs nvars >= degree, got " +
                          std::to_string(f.nvars()) + " < " + std::to_string(d));

    const PowersumTable& t = powersum_table(static_cast<int>(d));
    const int n = static_cast<int>(t.lambdas.size());
    std::vector<Rational> c(n, Rational(0));
    for (const auto& [lam, v] : mono.byPartition) c[t.index.at(lam)] = v;
    for (int i = 0; i < n; ++i) {
        Rational x(0);
        for (int j = 0; j < n; ++j)
            if (c[j] != 0) x += t.inverse[i][j] * c[j];
        if (x != 0) out.byPartition[t.lambdas[i]] = x;
    }
    return out;
}

BasisExpansion expand_in_psi(const SparsePolynomial& f) {
    BasisExpansion out;
    out.basis = Basis::QPsi;
    const int nvars = f.nvars();

    // Quasisymmetry: the coefficient may depend only on the composition of
    // non-zero exponents, and every index choice must appear.
    std::map<Composition, Rational> mcoef;
    std::map<std::vector<int>, std::vector<int>> compRep;
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> comp;
        for (int v : e)
            if (v != 0) comp.push_back(v);
        compRep.emplace(std::move(comp), e);
    }
    for (const auto& [comp, witness] : compRep) {
        const Rational want = f.coefficient(witness);
        const int l = static_cast<int>(comp.size());
        std::vector<int> idx(l);
        std::function<void(int, int)> rec = [&](int pos, int lo) {
            if (pos == l) {
                std::vector<int> e(nvars, 0);
                for (int j = 0; j < l; ++j) e[idx[j]] = comp[j];
                if (f.coefficient(e) != want)
                    throw input_error("not quasisymmetric: coefficient of x^" + exps_str(witness) +
                                      " differs from x^" + exps_str(e));
                return;
            }
            for (int i = lo; i <= nvars - (l - pos); ++i) {
                idx[pos] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
        mcoef[Composition(comp)] = want;
    }
    if (mcoef.empty()) return out;

    const auto deg = f.homogeneous_degree();
    if (!deg) throw input_error("psi expansion needs homogeneous input");
    const long long d = *deg;
    if (d == 0) {
        out.byComposition[Composition()] = mcoef.begin()->second;
        return out;
    }
    if (nvars < d)
        throw input_error("psi expansion needs nvars >= degree, got " + std::to_string(nvars) +
                          " < " + std::to_string(d));

    // Finest compositions first; each solved coefficient pushes its
    // M-contributions onto strict coarsenings.
    std::vector<Composition> order = compositions_of(static_cast<int>(d));
    std::stable_sort(order.begin(), order.end(), [](const Composition& a, const Composition& b) {
        return a.length() > b.length();
    });
    std::map<Composition, Rational> pushed;
    for (const Composition& beta : order) {
        Rational c(0);
        if (auto it = mcoef.find(beta); it != mcoef.end()) c = it->second;
        if (auto it = pushed.find(beta); it != pushed.end()) c -= it->second;
        if (c == 0) continue;
        const Rational z(z_of(beta.sort()));
        Rational piSelf(1);
        for (int p : beta.parts()) piSelf *= p;
        const Rational a = c * piSelf / z;
        out.byComposition[beta] = a;
        for (const auto& [gamma, pi] : coarsenings_with_pi(beta)) {
            if (gamma == beta) continue;
            pushed[gamma] += a * z / pi;
        }
    }
    return out;
}

SparsePolynomial recombine(const BasisExpansion& e, int nvars) {
    SparsePolynomial r(nvars);
    switch (e.basis) {
        case Basis::MonomialSym:
            for (const auto& [lam, c] : e.byPartition) r += monomial_sym(lam, nvars) * c;
            break;
        case Basis::PowerSum:
            for (const auto& [lam, c] : e.byPartition) r += powersum(lam, nvars) * c;
            break;
        case Basis::QMonomial:
            for (const auto& [alpha, c] : e.byComposition) r += qmonomial(alpha, nvars) * c;
            break;
        case Basis::QPsi:
            for (const auto& [alpha, c] : e.byComposition) r += qpsi(alpha, nvars) * c;
            break;
    }
    return r;
}

std::string format_expansion(const BasisExpansion& e) {
    const char* tag = "";
    switch (e.basis) {
        case Basis::MonomialSym: tag = "m"; break;
        case Basis::PowerSum: tag = "p"; break;
        case Basis::QMonomial: tag = "M"; break;
        case Basis::QPsi: tag = "Psi"; break;
    }
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& index, const Rational& c) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << tag << index;
    };
    for (const auto& [lam, c] : e.byPartition) emit(lam.str(), c);
    for (const auto& [alpha, c] : e.byComposition) emit(alpha.str(), c);
    if (first) os << "0";
    return os.str();
}

}
