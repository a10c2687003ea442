#include "ptqm/diff_operator.hpp"

#include <sstream>

namespace ptqm {

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("DiffOperator: arity mismatch");
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("DiffOperator: arity mismatch");
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
}

DiffOperator& DiffOperator::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, c] : terms_) c *= s;
    return *this;
}

namespace {

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

}  // namespace

// (x^a d^b)(x^c d^d) with d^b x^c = sum_k C(b,k) C(c,k) k! x^{c-k} d^{b-k}
// applied per axis.
DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("DiffOperator: arity mismatch");
    const int arity = a.arity();
    DiffOperator out(arity);
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            // commute d^{ta.deriv} past x^{tb.mono}, axis by axis
            std::vector<std::pair<OpTerm, GaussianRational>> acc = {
                {{MultiIndex(arity), MultiIndex(arity)}, ca * cb}};
            for (int ax = 0; ax < arity; ++ax) {
                const int bpow = ta.deriv[ax];
                const int cpow = tb.mono[ax];
                std::vector<std::pair<OpTerm, GaussianRational>> next;
                for (const auto& [t, c] : acc) {
                    for (int k = 0; k <= std::min(bpow, cpow); ++k) {
                        Rational f = binomial(bpow, k) * binomial(cpow, k) * factorial(k);
                        OpTerm nt = t;
                        nt.mono = nt.mono.with(ax, t.mono[ax] + cpow - k);
                        nt.deriv = nt.deriv.with(ax, t.deriv[ax] + bpow - k);
                        next.emplace_back(nt, c * GaussianRational(f));
                    }
                }
                acc = std::move(next);
            }
            for (auto& [t, c] : acc) {
                OpTerm full = t;
                for (int ax = 0; ax < arity; ++ax) {
                    full.mono = full.mono.with(ax, t.mono[ax] + ta.mono[ax]);
                    full.deriv = full.deriv.with(ax, t.deriv[ax] + tb.deriv[ax]);
                }
                out.add(full, c);
            }
        }
    }
    return out;
}

DiffOperator normal_order(int arity,
                          const std::vector<std::pair<GaussianRational, RawProduct>>& raw) {
    DiffOperator out(arity);
    for (const auto& [coeff, product] : raw) {
        DiffOperator acc = DiffOperator::identity(arity) * coeff;
        for (const auto& f : product) {
            DiffOperator factor =
                f.is_derivative ? DiffOperator::monomial_term(grat(1), MultiIndex(arity), f.powers)
                                : DiffOperator::monomial_term(grat(1), f.powers, MultiIndex(arity));
            acc = acc * factor;
        }
        out += acc;
    }
    return out;
}

DiffOperator parity_conjugate(const DiffOperator& op) {
    DiffOperator out(op.arity());
    for (const auto& [t, c] : op.terms()) {
        const int par = (t.mono.total() + t.deriv.total()) % 2;
        out.add(t, par == 0 ? c : -c);
    }
    return out;
}

DiffOperator transpose(const DiffOperator& op) {
    DiffOperator out(op.arity());
    for (const auto& [t, c] : op.terms()) {
        const GaussianRational sign = t.deriv.total() % 2 == 0 ? grat(1) : grat(-1);
        DiffOperator dpart = DiffOperator::monomial_term(sign * c, MultiIndex(op.arity()), t.deriv);
        DiffOperator xpart =
            DiffOperator::monomial_term(grat(1), t.mono, MultiIndex(op.arity()));
        out += dpart * xpart;
    }
    return out;
}

DiffOperator parity_pushthrough(const DiffOperator& op) {
    DiffOperator out(op.arity());
    for (const auto& [t, c] : op.terms()) {
        const GaussianRational sign = t.mono.total() % 2 == 0 ? c : -c;
        DiffOperator dpart = DiffOperator::monomial_term(sign, MultiIndex(op.arity()), t.deriv);
        DiffOperator xpart = DiffOperator::monomial_term(grat(1), t.mono, MultiIndex(op.arity()));
        out += dpart * xpart;
    }
    return out;
}

MonomialPoly apply_to_poly(const DiffOperator& op, const MonomialPoly& p) {
    if (op.arity() != p.arity()) throw std::invalid_argument("apply_to_poly: arity mismatch");
    const int arity = op.arity();
    MonomialPoly out(arity);
    for (const auto& [t, c] : op.terms()) {
        for (const auto& [idx, pc] : p.terms()) {
            // d^deriv x^idx = falling factorial; then shift by mono
            Rational fall = 1;
            bool dead = false;
            MultiIndex res(arity);
            for (int ax = 0; ax < arity; ++ax) {
                const int n = idx[ax], b = t.deriv[ax];
                if (b > n) {
                    dead = true;
                    break;
                }
                for (int k = 0; k < b; ++k) fall *= (n - k);
                res = res.with(ax, n - b + t.mono[ax]);
            }
            if (!dead) out.add(res, c * pc * GaussianRational(fall));
        }
    }
    return out;
}

HermiteSeries apply_to_poly(const DiffOperator& op, const HermiteSeries& s) {
    return from_monomials(apply_to_poly(op, to_monomials(s)));
}

HermiteSeries apply_weighted(const DiffOperator& op, const HermiteSeries& s) {
    if (op.arity() != s.arity()) throw std::invalid_argument("apply_weighted: arity mismatch");
    const int arity = op.arity();
    // conjugated operator: x^a prod_ax (d_ax - x_ax)^{b_ax}
    DiffOperator conj(arity);
    for (const auto& [t, c] : op.terms()) {
        DiffOperator acc = DiffOperator::monomial_term(c, t.mono, MultiIndex(arity));
        for (int ax = 0; ax < arity; ++ax) {
            if (t.deriv[ax] == 0) continue;
            DiffOperator dmx =
                DiffOperator::monomial_term(grat(1), MultiIndex(arity),
                                            MultiIndex(arity).with(ax, 1)) -
                DiffOperator::monomial_term(grat(1), MultiIndex(arity).with(ax, 1),
                                            MultiIndex(arity));
            for (int k = 0; k < t.deriv[ax]; ++k) acc = acc * dmx;
        }
        conj += acc;
    }
    return apply_to_poly(conj, s);
}

namespace {

void print_symbols(std::ostream& os, const MultiIndex& powers, const char* names[3], bool deriv,
                   bool& first_factor) {
    for (int ax = 0; ax < powers.arity(); ++ax) {
        if (powers[ax] == 0) continue;
        if (!first_factor) os << "*";
        first_factor = false;
        os << (deriv ? "D" : "") << names[ax];
        if (powers[ax] > 1) os << "^" << powers[ax];
    }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const DiffOperator& op) {
    os << to_text(op);
    return os;
}

std::string to_text(const DiffOperator& op) {
    static const char* names[3] = {"x", "y", "z"};
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : op.terms()) {
        std::ostringstream coeff;
        bool negated = false;
        if (c.im == 0) {
            Rational r = c.re;
            if (r < 0) {
                negated = true;
                r = -r;
            }
            if (r != 1 || (t.mono.total() == 0 && t.deriv.total() == 0)) coeff << r.str();
        } else if (c.re == 0) {
            Rational i = c.im;
            if (i < 0) {
                negated = true;
                i = -i;
            }
            if (i != 1) coeff << i.str() << "*";
            coeff << "i";
        } else {
            coeff << "(" << c.re.str() << (c.im > 0 ? "+" : "") << c.im.str() << "*i)";
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        std::string cs = coeff.str();
        bool first_factor = cs.empty();
        os << cs;
        print_symbols(os, t.mono, names, false, first_factor);
        print_symbols(os, t.deriv, names, true, first_factor);
    }
    return os.str();
}

}  // namespace ptqm
