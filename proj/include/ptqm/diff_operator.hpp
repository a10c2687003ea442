// diff_operator.hpp — normal-ordered differential operators with
// Gaussian-rational coefficients: finite sums of x^a d^b terms where every
// multiplication operator stands left of every derivative.

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ptqm/hermite_series.hpp"
#include "ptqm/multi_index.hpp"
#include "ptqm/rational.hpp"

namespace ptqm {

// One normal-ordered factor x^{mono} d^{deriv}.
struct OpTerm {
    MultiIndex mono;
    MultiIndex deriv;

    friend bool operator<(const OpTerm& a, const OpTerm& b) {
        if (a.mono != b.mono) return a.mono < b.mono;
        return a.deriv < b.deriv;
    }
    friend bool operator==(const OpTerm& a, const OpTerm& b) {
        return a.mono == b.mono && a.deriv == b.deriv;
    }
};

// A primitive (not yet ordered) factor: either multiplication by x^powers or
// a pure derivative d^powers.
struct RawFactor {
    bool is_derivative = false;
    MultiIndex powers;

    static RawFactor x(int axis, int arity, int power = 1) {
        RawFactor f;
        f.powers = MultiIndex(arity).with(axis, power);
        return f;
    }
    static RawFactor d(int axis, int arity, int power = 1) {
        RawFactor f;
        f.is_derivative = true;
        f.powers = MultiIndex(arity).with(axis, power);
        return f;
    }
};

using RawProduct = std::vector<RawFactor>;

class DiffOperator {
  public:
    using TermMap = std::map<OpTerm, GaussianRational>;

    explicit DiffOperator(int arity = 1) : arity_(arity) {
        if (arity < 1 || arity > 3) throw std::invalid_argument("DiffOperator: arity must be 1..3");
    }

    static DiffOperator identity(int arity) {
        DiffOperator op(arity);
        op.add({MultiIndex(arity), MultiIndex(arity)}, grat(1));
        return op;
    }

    // c * x^mono d^deriv
    static DiffOperator monomial_term(const GaussianRational& c, const MultiIndex& mono,
                                      const MultiIndex& deriv) {
        if (mono.arity() != deriv.arity())
            throw std::invalid_argument("DiffOperator: term arity mismatch");
        DiffOperator op(mono.arity());
        op.add({mono, deriv}, c);
        return op;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussianRational coeff(const OpTerm& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add(const OpTerm& t, const GaussianRational& c) {
        if (t.mono.arity() != arity_ || t.deriv.arity() != arity_)
            throw std::invalid_argument("DiffOperator: term arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    DiffOperator& operator*=(const GaussianRational& s);

    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(DiffOperator a, const GaussianRational& s) { return a *= s; }
    friend DiffOperator operator*(const GaussianRational& s, DiffOperator a) { return a *= s; }

    // Operator composition a∘b, re-normal-ordered exactly.
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const DiffOperator& op);

  private:
    int arity_;
    TermMap terms_;
};

// Normal-order a sum of coefficient-weighted factor products, using
// [d_i, x_i] = 1; the action on any polynomial is unchanged.
DiffOperator normal_order(int arity, const std::vector<std::pair<GaussianRational, RawProduct>>& raw);

// Parity conjugation P op P: x^a d^b -> (-1)^{|a|+|b|} x^a d^b.
DiffOperator parity_conjugate(const DiffOperator& op);

// Transpose under the bilinear pairing int f (op g): x^a d^b -> (-d)^b x^a.
DiffOperator transpose(const DiffOperator& op);

// Rewrite an operator written in the mirrored coordinates (x', y', z') as an
// operator in (x, y, z) acting on the parity kernel delta(x+x')...: each
// primed term x'^a d'^b becomes (-1)^{|a|} times the normal ordering of
// d^b ∘ x^a.
DiffOperator parity_pushthrough(const DiffOperator& op);

// Plain polynomial action (no Gaussian weight).
MonomialPoly apply_to_poly(const DiffOperator& op, const MonomialPoly& p);
HermiteSeries apply_to_poly(const DiffOperator& op, const HermiteSeries& s);

// Action on s interpreted as s * exp(-r^2/2): returns the polynomial t with
// op(s e^{-r^2/2}) = t e^{-r^2/2}, i.e. applies the exactly conjugated
// operator e^{+r^2/2} op e^{-r^2/2} (each d_i becomes d_i - x_i).
HermiteSeries apply_weighted(const DiffOperator& op, const HermiteSeries& s);

// Canonical text form, e.g. "1 - 4/3*i*Dx^3 + 2*i*x^2*Dx + 2*i*x".
std::string to_text(const DiffOperator& op);

}  // namespace ptqm
