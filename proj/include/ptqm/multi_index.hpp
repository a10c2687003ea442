// multi_index.hpp — small fixed-arity index tuples for Hermite products
// H_{i0}(x) H_{i1}(y) H_{i2}(z) and for monomial/derivative exponents.

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

namespace ptqm {

class MultiIndex {
  public:
    MultiIndex() : arity_(1), d_{0, 0, 0} {}

    explicit MultiIndex(int arity) : arity_(arity), d_{0, 0, 0} { check_arity(arity); }

    MultiIndex(std::initializer_list<int> v) : d_{0, 0, 0} {
        check_arity(static_cast<int>(v.size()));
        arity_ = static_cast<int>(v.size());
        int k = 0;
        for (int x : v) {
            if (x < 0) throw std::invalid_argument("MultiIndex: negative degree");
            d_[k++] = x;
        }
    }

    static MultiIndex of(int arity, const std::array<int, 3>& d) {
        check_arity(arity);
        MultiIndex m(arity);
        for (int i = 0; i < arity; ++i) {
            if (d[i] < 0) throw std::invalid_argument("MultiIndex: negative degree");
            m.d_[i] = d[i];
        }
        return m;
    }

    int arity() const { return arity_; }
    int operator[](int axis) const { return d_[axis]; }

    int total() const {
        int s = 0;
        for (int i = 0; i < arity_; ++i) s += d_[i];
        return s;
    }

    // Index with one axis shifted by delta; throws if it would go negative.
    MultiIndex shifted(int axis, int delta) const {
        if (axis < 0 || axis >= arity_) throw std::invalid_argument("MultiIndex: axis out of range");
        MultiIndex m = *this;
        m.d_[axis] += delta;
        if (m.d_[axis] < 0) throw std::invalid_argument("MultiIndex: shift below zero");
        return m;
    }

    bool can_shift(int axis, int delta) const { return d_[axis] + delta >= 0; }

    MultiIndex with(int axis, int value) const {
        MultiIndex m = *this;
        m.d_[axis] = value;
        return m;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.arity_ == b.arity_ && a.d_ == b.d_;
    }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
        return a.d_ < b.d_;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
        os << "(";
        for (int i = 0; i < m.arity_; ++i) os << (i ? "," : "") << m.d_[i];
        return os << ")";
    }

  private:
    static void check_arity(int a) {
        if (a < 1 || a > 3) throw std::invalid_argument("MultiIndex: arity must be 1..3");
    }

    int arity_;
    std::array<int, 3> d_;
};

}  // namespace ptqm
