// rational.hpp — exact rational and Gaussian-rational (a + i b) arithmetic.
//
// All coefficients in the symbolic layer are Gaussian rationals so that the
// perturbative results are reproduced bit-exactly; floats never enter here.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace ptqm {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    return Rational(num, den);
}

// Parse "p/q" or "p" (optional sign). Used by the JSON round-trip.
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(s);
    return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                    boost::multiprecision::cpp_int(s.substr(slash + 1)));
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

// value = re + i*im, both exact rationals (canonical reduced form is
// maintained by cpp_rational itself).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long long r) : re(r) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    GaussianRational& operator/=(const Rational& d) {
        if (d == 0) throw std::domain_error("GaussianRational: division by zero");
        re /= d;
        im /= d;
        return *this;
    }
    friend GaussianRational operator/(GaussianRational a, const Rational& d) { return a /= d; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
        if (v.im == 0) return os << v.re;
        if (v.re == 0) return os << v.im << "*i";
        return os << "(" << v.re << (v.im > 0 ? "+" : "") << v.im << "*i)";
    }
};

inline GaussianRational grat(long long num, long long den = 1) {
    return GaussianRational(Rational(num, den));
}

// i * v
inline GaussianRational times_i(const GaussianRational& v) {
    return {-v.im, v.re};
}

}  // namespace ptqm
