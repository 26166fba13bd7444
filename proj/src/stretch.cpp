#include "cylschur/stretch.hpp"

#include "cylschur/common.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace cylschur {

namespace {

std::vector<std::vector<Rational>> difference_table(const std::vector<Rational>& w) {
    std::vector<std::vector<Rational>> d{w};
    while (d.back().size() > 1) {
        const auto& prev = d.back();
        std::vector<Rational> next(prev.size() - 1);
        for (size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
        d.push_back(std::move(next));
    }
    return d;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

// coeffs *= (x - root), constant term first.
std::vector<Rational> mul_linear(const std::vector<Rational>& c, const Rational& root) {
    std::vector<Rational> out(c.size() + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        out[i + 1] += c[i];
        out[i] -= root * c[i];
    }
    return out;
}

// Newton form over nodes start, start+step, ... into monomial coefficients.
std::vector<Rational> newton_coeffs(const std::vector<Rational>& diffsHead, long long start,
                                    long long step, int degree) {
    std::vector<Rational> total(degree + 1, Rational(0));
    for (int t = 0; t <= degree; ++t) {
        std::vector<Rational> term{Rational(1)};
        Rational denom(1);
        for (int u = 0; u < t; ++u) {
            term = mul_linear(term, Rational(start + static_cast<long long>(u) * step));
            denom *= Rational(u + 1) * Rational(step);
        }
        Rational scale = diffsHead[t] / denom;
        for (size_t i = 0; i < term.size(); ++i) total[i] += term[i] * scale;
    }
    while (total.size() > 1 && total.back() == 0) total.pop_back();
    return total;
}

bool nonnegative(const std::vector<Rational>& c) {
    return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r >= 0; });
}

}  // namespace

PolyFit stretch_and_fit(const std::vector<Rational>& values, long long k0, int maxPeriod) {
    int L = static_cast<int>(values.size());
    if (L < 3) throw input_error("stretch_and_fit: need at least 3 values");
    if (maxPeriod < 1) throw input_error("stretch_and_fit: maxPeriod must be positive");

    for (int s = 0; s + 3 <= L; ++s) {
        std::vector<Rational> tail(values.begin() + s, values.end());
        auto table = difference_table(tail);
        int T = L - s;
        for (int d = 0; T - d - 1 >= 2; ++d) {
            if (!all_zero(table[d + 1])) continue;
            std::vector<Rational> first(d + 1);
            for (int t = 0; t <= d; ++t) first[t] = table[t][0];
            PolyFit fit;
            fit.polynomial = true;
            fit.degree = d;
            fit.onset = k0 + s;
            fit.coeffs = newton_coeffs(first, k0 + s, 1, d);
            fit.coeffsNonnegative = nonnegative(fit.coeffs);
            return fit;
        }
    }

    for (int P = 2; P <= maxPeriod; ++P) {
        std::vector<std::vector<Rational>> cls(P);
        std::vector<long long> firstK(P, -1);
        for (int i = 0; i < L; ++i) {
            long long k = k0 + i;
            int r = static_cast<int>(((k % P) + P) % P);
            if (firstK[r] < 0) firstK[r] = k;
            cls[r].push_back(values[i]);
        }
        bool ok = true;
        int witnesses = 0, maxDeg = 0;
        std::vector<std::vector<Rational>> perResidue(P);
        for (int r = 0; r < P && ok; ++r) {
            if (cls[r].size() < 2) {
                ok = false;
                break;
            }
            auto table = difference_table(cls[r]);
            int len = static_cast<int>(cls[r].size());
            int found = -1;
            for (int d = 0; len - d - 1 >= 1; ++d) {
                if (all_zero(table[d + 1])) {
                    found = d;
                    break;
                }
            }
            if (found < 0) {
                ok = false;
                break;
            }
            witnesses += len - found - 1;
            maxDeg = std::max(maxDeg, found);
            std::vector<Rational> first(found + 1);
            for (int t = 0; t <= found; ++t) first[t] = table[t][0];
            perResidue[r] = newton_coeffs(first, firstK[r], P, found);
        }
        if (!ok || witnesses < 2) continue;
        PolyFit fit;
        fit.period = P;
        fit.degree = maxDeg;
        fit.onset = k0;
        fit.residueCoeffs = std::move(perResidue);
        fit.coeffsNonnegative = std::all_of(fit.residueCoeffs.begin(), fit.residueCoeffs.end(),
                                            [](const auto& c) { return nonnegative(c); });
        return fit;
    }
    return PolyFit{};
}

Rational evaluate_fit(const PolyFit& fit, long long k) {
    const std::vector<Rational>* c = nullptr;
    if (fit.polynomial) {
        c = &fit.coeffs;
    } else if (fit.quasi()) {
        c = &fit.residueCoeffs[static_cast<size_t>(((k % fit.period) + fit.period) % fit.period)];
    } else {
        throw input_error("evaluate_fit: no fit to evaluate");
    }
    Rational acc(0), pw(1), x(k);
    for (const Rational& coef : *c) {
        acc += coef * pw;
        pw *= x;
    }
    return acc;
}

CylindricDiagram subdivide(const CylindricDiagram& D, int k) {
    if (k < 1) throw input_error("subdivide: k must be positive");
    std::vector<int> inner, outer;
    for (int i = 0; i < D.x(); ++i)
        for (int c = 0; c < k; ++c) {
            inner.push_back(D.inner()[i]);
            outer.push_back(D.outer()[i]);
        }
    return CylindricDiagram::from_profiles(k * D.x(), D.y(), std::move(inner), std::move(outer));
}

namespace {

std::vector<int> scaled(const std::vector<int>& v, int k) {
    std::vector<int> out(v);
    for (int& x : out) x *= k;
    return out;
}

SaturationReport finish_report(std::vector<long long> counts) {
    SaturationReport rep;
    rep.counts = std::move(counts);
    bool base = rep.counts.front() > 0;
    for (size_t i = 1; i < rep.counts.size(); ++i) {
        if ((rep.counts[i] > 0) != base) {
            rep.violation = true;
            std::ostringstream os;
            os << "k=" << i + 1 << " count " << rep.counts[i] << " but k=1 count "
               << rep.counts.front();
            rep.detail = os.str();
            break;
        }
    }
    return rep;
}

}  // namespace

SaturationReport flagged_saturation_scan(const std::vector<int>& lambda,
                                         const std::vector<int>& mu, const FlagPair& flags,
                                         const std::vector<int>& nu, int kMax) {
    if (kMax < 1) throw input_error("saturation: kMax must be positive");
    std::vector<long long> counts;
    for (int k = 1; k <= kMax; ++k)
        counts.push_back(flagged_kostka(scaled(lambda, k), scaled(mu, k), flags, scaled(nu, k)));
    return finish_report(std::move(counts));
}

SaturationReport cylindric_saturation_scan(const CylindricDiagram& D, const std::vector<int>& nu,
                                           int kMax) {
    if (kMax < 1) throw input_error("saturation: kMax must be positive");
    std::vector<long long> counts;
    for (int k = 1; k <= kMax; ++k) {
        auto w = scaled(nu, k);
        counts.push_back(count_cssyt(subdivide(D, k), static_cast<int>(nu.size()), &w));
    }
    return finish_report(std::move(counts));
}

std::vector<AsFlaggedTerm> cylindric_as_flagged(const CylindricDiagram& D, int nvars,
                                                int cutStrip) {
    if (nvars < 1) throw input_error("as_flagged: need nvars >= 1");
    int x = D.x(), y = D.y(), c = cutStrip;
    int p = D.outerAt(c) - D.innerAt(c);
    int base = D.innerAt(c);
    if (p > nvars) return {};

    // Residual rows over strips c+1..c+x-1, one per height, bottom first.
    struct Row {
        int h, lam, mu;
    };
    std::vector<Row> rows;
    if (x > 1) {
        int hMin = D.innerAt(c + x - 1) + 1, hMax = D.outerAt(c + 1);
        for (int h = hMin; h <= hMax; ++h) {
            int lam = 0, mu = 0;
            for (int s = c + x - 1; s > c; --s) {
                if (lam == 0 && D.outerAt(s) >= h) lam = s - c;
                if (mu == 0 && D.innerAt(s) >= h) mu = s - c;
            }
            rows.push_back({h, lam, mu});
        }
    }

    std::vector<AsFlaggedTerm> out;
    std::vector<int> pick(p);
    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == p) {
            AsFlaggedTerm term;
            term.firstColumn = pick;
            term.nu.assign(nvars, 0);
            for (int v : pick) term.nu[v - 1] = 1;
            for (const Row& r : rows) {
                term.lambda.push_back(r.lam);
                term.mu.push_back(r.mu);
                int lo = 1, hi = nvars;
                if (r.lam > r.mu) {
                    if (r.mu == 0 && D.has_box(c, r.h)) lo = pick[r.h - base - 1];
                    if (r.lam == x - 1 && D.has_box(c + x, r.h)) hi = pick[r.h + y - base - 1];
                }
                term.flags.a.push_back(lo);
                term.flags.b.push_back(hi);
            }
            out.push_back(std::move(term));
            return;
        }
        for (int v = from; v + (p - idx - 1) <= nvars; ++v) {
            pick[idx] = v;
            choose(idx + 1, v + 1);
        }
    };
    choose(0, 1);
    return out;
}

SparsePolynomial as_flagged_sum(const std::vector<AsFlaggedTerm>& terms, int nvars) {
    SparsePolynomial total(nvars);
    for (const auto& t : terms) {
        SparsePolynomial mono(nvars);
        mono.add_term(t.nu, Rational(1));
        total += mono * flagged_schur_enum(t.lambda, t.mu, t.flags, nvars);
    }
    return total;
}

}  // namespace cylschur
