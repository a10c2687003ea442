#include "ptqm/hermite_series.hpp"

#include <vector>

namespace ptqm {

Rational factorial(int n) {
    Rational f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Rational hermite_norm_factor(const MultiIndex& idx) {
    Rational f = 1;
    for (int ax = 0; ax < idx.arity(); ++ax) {
        int n = idx[ax];
        Rational p = 1;
        for (int k = 0; k < n; ++k) p *= 2;
        f *= p * factorial(n);
    }
    return f;
}

HermiteSeries multiply_by_x(const HermiteSeries& s, int axis) {
    detail::require_axis(axis, s.arity());
    HermiteSeries out(s.arity());
    for (const auto& [idx, c] : s.terms()) {
        const int n = idx[axis];
        out.add(idx.shifted(axis, +1), c * grat(1, 2));
        if (n > 0) out.add(idx.shifted(axis, -1), c * grat(n));
    }
    return out;
}

HermiteSeries multiply_by_x3(const HermiteSeries& s, int axis) {
    detail::require_axis(axis, s.arity());
    HermiteSeries out(s.arity());
    for (const auto& [idx, c] : s.terms()) {
        const long long n = idx[axis];
        out.add(idx.shifted(axis, +3), c * grat(1, 8));
        out.add(idx.shifted(axis, +1), c * grat(3 * (n + 1), 4));
        if (n >= 1) out.add(idx.shifted(axis, -1), c * grat(3 * n * n, 2));
        if (n >= 3) out.add(idx.shifted(axis, -3), c * grat(n * (n - 1) * (n - 2)));
    }
    return out;
}

HermiteSeries differentiate(const HermiteSeries& s, int axis) {
    detail::require_axis(axis, s.arity());
    HermiteSeries out(s.arity());
    for (const auto& [idx, c] : s.terms()) {
        const int n = idx[axis];
        if (n > 0) out.add(idx.shifted(axis, -1), c * grat(2 * n));
    }
    return out;
}

HermiteSeries parity_flip(const HermiteSeries& s) {
    HermiteSeries out(s.arity());
    for (const auto& [idx, c] : s.terms()) out.add(idx, idx.total() % 2 == 0 ? c : -c);
    return out;
}

HermiteSeries conjugate(const HermiteSeries& s) {
    HermiteSeries out(s.arity());
    for (const auto& [idx, c] : s.terms()) out.add(idx, c.conj());
    return out;
}

namespace {

// Monomial expansion of H_n(x) in one variable, computed once per degree via
// H_{n+1} = 2x H_n - 2n H_{n-1}; coefficient of x^k in H_n.
const std::vector<Rational>& hermite_monomial_row(int n) {
    static std::vector<std::vector<Rational>> cache = {{Rational(1)}, {Rational(0), Rational(2)}};
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size()) - 1;  // have H_m, build H_{m+1}
        const auto& hm = cache[m];
        const auto& hm1 = cache[m - 1];
        std::vector<Rational> next(m + 2, Rational(0));
        for (int k = 0; k <= m; ++k) next[k + 1] += 2 * hm[k];
        for (int k = 0; k < m; ++k) next[k] -= 2 * m * hm1[k];
        cache.push_back(std::move(next));
    }
    return cache[n];
}

}  // namespace

MonomialPoly to_monomials(const HermiteSeries& s) {
    MonomialPoly out(s.arity());
    for (const auto& [idx, c] : s.terms()) {
        // product over axes of the 1-d expansions
        std::vector<std::pair<MultiIndex, GaussianRational>> acc = {{MultiIndex(s.arity()), c}};
        for (int ax = 0; ax < s.arity(); ++ax) {
            const auto& row = hermite_monomial_row(idx[ax]);
            std::vector<std::pair<MultiIndex, GaussianRational>> next;
            for (const auto& [mi, mc] : acc)
                for (int k = 0; k < static_cast<int>(row.size()); ++k)
                    if (row[k] != 0) next.emplace_back(mi.with(ax, k), mc * GaussianRational(row[k]));
            acc = std::move(next);
        }
        for (const auto& [mi, mc] : acc) out.add(mi, mc);
    }
    return out;
}

HermiteSeries from_monomials(const MonomialPoly& p) {
    HermiteSeries out(p.arity());
    for (const auto& [idx, c] : p.terms()) {
        // expand x^{i0} y^{i1} z^{i2} by repeated multiply_by_x on H_0...0
        HermiteSeries term = HermiteSeries::basis(MultiIndex(p.arity()), c);
        for (int ax = 0; ax < p.arity(); ++ax)
            for (int k = 0; k < idx[ax]; ++k) term = multiply_by_x(term, ax);
        out += term;
    }
    return out;
}

GaussianIntegral gaussian_inner_product(const HermiteSeries& a, const HermiteSeries& b) {
    if (a.arity() != b.arity())
        throw std::invalid_argument("gaussian_inner_product: arity mismatch");
    GaussianRational acc;
    const bool a_smaller = a.size() <= b.size();
    const HermiteSeries& small = a_smaller ? a : b;
    const HermiteSeries& large = a_smaller ? b : a;
    for (const auto& [idx, c] : small.terms()) {
        const GaussianRational oc = large.coeff(idx);
        if (!oc.is_zero()) acc += c * oc * GaussianRational(hermite_norm_factor(idx));
    }
    return {acc, a.arity()};
}

}  // namespace ptqm
