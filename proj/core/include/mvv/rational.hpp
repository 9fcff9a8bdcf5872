#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mvv {

using Rational = mpq_class;

/// num/den in canonical form (the raw two-argument mpq_class constructor does
/// not reduce common factors).
inline Rational make_frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = re_ * re_ + im_ * im_;
        return {re_ / n, -im_ / n};
    }

    GaussianRational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        GaussianRational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order for use as a map key; not a numeric order.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Self-contained rendering: "3/2", "-1", "i", "-2*i", "(1/2 + 3*i)".
    std::string to_string() const {
        if (im_ == 0) return re_.get_str();
        if (re_ == 0) {
            if (im_ == 1) return "i";
            if (im_ == -1) return "-i";
            return im_.get_str() + "*i";
        }
        std::string s = "(" + re_.get_str();
        s += im_ < 0 ? " - " : " + ";
        Rational m = abs(im_);
        if (m != 1) s += m.get_str() + "*";
        s += "i)";
        return s;
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace mvv
