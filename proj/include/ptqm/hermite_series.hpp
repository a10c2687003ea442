// hermite_series.hpp — exact multi-variable polynomial algebra in the basis of
// physicists' Hermite polynomials (H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}),
// in up to three coordinates, with Gaussian-rational coefficients.

#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "ptqm/multi_index.hpp"
#include "ptqm/rational.hpp"

namespace ptqm {

namespace detail {
inline void require_axis(int axis, int arity) {
    if (axis < 0 || axis >= arity) throw std::invalid_argument("axis out of range for arity");
}
}  // namespace detail

// Sparse exact series sum_idx c_idx * H_{idx0}(x) H_{idx1}(y) H_{idx2}(z).
// Zero coefficients are never stored.
class HermiteSeries {
  public:
    using TermMap = std::map<MultiIndex, GaussianRational>;

    explicit HermiteSeries(int arity = 1) : arity_(arity) {
        if (arity < 1 || arity > 3) throw std::invalid_argument("HermiteSeries: arity must be 1..3");
    }

    static HermiteSeries basis(const MultiIndex& idx, GaussianRational c = grat(1)) {
        HermiteSeries s(idx.arity());
        s.add(idx, std::move(c));
        return s;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    GaussianRational coeff(const MultiIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add(const MultiIndex& idx, const GaussianRational& c) {
        if (idx.arity() != arity_) throw std::invalid_argument("HermiteSeries: index arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void set(const MultiIndex& idx, const GaussianRational& c) {
        if (idx.arity() != arity_) throw std::invalid_argument("HermiteSeries: index arity mismatch");
        if (c.is_zero())
            terms_.erase(idx);
        else
            terms_[idx] = c;
    }

    HermiteSeries& operator+=(const HermiteSeries& o) {
        if (o.arity_ != arity_) throw std::invalid_argument("HermiteSeries: arity mismatch");
        for (const auto& [idx, c] : o.terms_) add(idx, c);
        return *this;
    }
    HermiteSeries& operator-=(const HermiteSeries& o) {
        if (o.arity_ != arity_) throw std::invalid_argument("HermiteSeries: arity mismatch");
        for (const auto& [idx, c] : o.terms_) add(idx, -c);
        return *this;
    }
    HermiteSeries& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [idx, c] : terms_) c *= s;
        return *this;
    }

    friend HermiteSeries operator+(HermiteSeries a, const HermiteSeries& b) { return a += b; }
    friend HermiteSeries operator-(HermiteSeries a, const HermiteSeries& b) { return a -= b; }
    friend HermiteSeries operator*(HermiteSeries a, const GaussianRational& s) { return a *= s; }
    friend HermiteSeries operator*(const GaussianRational& s, HermiteSeries a) { return a *= s; }

    friend bool operator==(const HermiteSeries& a, const HermiteSeries& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HermiteSeries& a, const HermiteSeries& b) { return !(a == b); }

    int max_degree() const {
        int d = 0;
        for (const auto& [idx, c] : terms_) d = std::max(d, idx.total());
        return d;
    }

    friend std::ostream& operator<<(std::ostream& os, const HermiteSeries& s) {
        if (s.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [idx, c] : s.terms_) {
            if (!first) os << " + ";
            os << c << "*H" << idx;
            first = false;
        }
        return os;
    }

  private:
    int arity_;
    TermMap terms_;
};

// Same sparse container, monomial basis: sum c * x^{i0} y^{i1} z^{i2}.
class MonomialPoly {
  public:
    using TermMap = std::map<MultiIndex, GaussianRational>;

    explicit MonomialPoly(int arity = 1) : arity_(arity) {
        if (arity < 1 || arity > 3) throw std::invalid_argument("MonomialPoly: arity must be 1..3");
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    GaussianRational coeff(const MultiIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add(const MultiIndex& idx, const GaussianRational& c) {
        if (idx.arity() != arity_) throw std::invalid_argument("MonomialPoly: index arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MonomialPoly& operator+=(const MonomialPoly& o) {
        if (o.arity_ != arity_) throw std::invalid_argument("MonomialPoly: arity mismatch");
        for (const auto& [idx, c] : o.terms_) add(idx, c);
        return *this;
    }
    MonomialPoly& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [idx, c] : terms_) c *= s;
        return *this;
    }

    friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

  private:
    int arity_;
    TermMap terms_;
};

// x_axis * s via x H_n = 1/2 H_{n+1} + n H_{n-1}.
HermiteSeries multiply_by_x(const HermiteSeries& s, int axis);

// x_axis^3 * s via the closed form
// x^3 H_n = 1/8 H_{n+3} + 3/4 (n+1) H_{n+1} + 3/2 n^2 H_{n-1} + n(n-1)(n-2) H_{n-3}.
HermiteSeries multiply_by_x3(const HermiteSeries& s, int axis);

// d/dx_axis via H_n' = 2 n H_{n-1}.
HermiteSeries differentiate(const HermiteSeries& s, int axis);

// Parity flip x -> -x on all axes: H_idx picks up (-1)^{|idx|}.
HermiteSeries parity_flip(const HermiteSeries& s);

// Complex-conjugate all coefficients.
HermiteSeries conjugate(const HermiteSeries& s);

// Exact basis changes (mutually inverse).
MonomialPoly to_monomials(const HermiteSeries& s);
HermiteSeries from_monomials(const MonomialPoly& p);

// Exact value of integral e^{-r^2} a b over all coordinates, which is a
// rational multiple of pi^{arity/2}; the pi power stays symbolic.
struct GaussianIntegral {
    GaussianRational coefficient;  // multiplies pi^{pi_sqrt_power/2}
    int pi_sqrt_power = 0;         // equals the common arity

    friend bool operator==(const GaussianIntegral& x, const GaussianIntegral& y) {
        return x.coefficient == y.coefficient && x.pi_sqrt_power == y.pi_sqrt_power;
    }
};

// Bilinear (no conjugation), matching the PT convention for real integrands:
// uses int e^{-x^2} H_m H_n dx = 2^n n! sqrt(pi) delta_mn per axis.
GaussianIntegral gaussian_inner_product(const HermiteSeries& a, const HermiteSeries& b);

// 2^n n! per axis, as an exact rational; the Hermite norm without sqrt(pi).
Rational hermite_norm_factor(const MultiIndex& idx);

Rational factorial(int n);

}  // namespace ptqm
