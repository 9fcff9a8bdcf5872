#pragma once

#include <string>
#include <utility>

#include "mvv/laurent.hpp"

namespace mvv {

/// Rational function in z over Q(i), num/den with a Laurent numerator and a
/// plain polynomial denominator. Canonical form: gcd(num, den) = 1, z does not
/// divide den, and den's constant coefficient is exactly 1. Equality of values
/// is equality of canonical forms.
class RatFun {
public:
    RatFun() : den_(poly_one()) {}
    RatFun(long v) : num_(GaussianRational(v)), den_(poly_one()) {}  // NOLINT
    explicit RatFun(const GaussianRational& c) : num_(c), den_(poly_one()) {}
    explicit RatFun(ZLaurent num) : num_(std::move(num)), den_(poly_one()) {}
    RatFun(ZLaurent num, Poly den);  // reduces to canonical form

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(1); }
    static RatFun z_pow(int e) { return RatFun(ZLaurent::monomial(GaussianRational(1), e)); }
    /// [n] = z^n - z^-n; n must be nonzero.
    static RatFun bracket(int n);

    const ZLaurent& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_ == poly_one(); }
    bool is_laurent() const { return den_ == poly_one(); }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun reciprocal() const;
    RatFun scaled(const GaussianRational& c) const;
    RatFun shifted(int k) const { return RatFun(num_.shifted(k), den_); }

    /// The ring endomorphism z -> z^-1.
    RatFun invert_q() const;

    /// Exact evaluation; throws on a pole (den(x) = 0) and requires x != 0
    /// when the numerator has negative exponents.
    GaussianRational eval(const GaussianRational& x) const;

    /// lambda-expansion support: order of vanishing at z = 1.
    int num_multiplicity_at_one() const;
    int den_multiplicity_at_one() const;

    std::string to_string() const;

private:
    void reduce();

    ZLaurent num_;
    Poly den_;
};

}  // namespace mvv
