#pragma once

#include <compare>
#include <map>
#include <string>

#include "mvv/ratfun.hpp"

namespace mvv {

/// Exponent triple for the generators u (Laurent) and a, b (polynomial).
struct UabKey {
    int u = 0;
    int a = 0;
    int b = 0;
    auto operator<=>(const UabKey&) const = default;
};

/// Element of the coefficient ring Q(i)(z)[a,b][u,u^-1]: a finite sum of
/// rational functions in z times monomials u^e_u a^e_a b^e_b. Everything is
/// exact; there is no floating point anywhere.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) { add_entry({0, 0, 0}, RatFun(v)); }  // NOLINT
    explicit Scalar(const RatFun& r) { add_entry({0, 0, 0}, r); }
    explicit Scalar(const GaussianRational& c) { add_entry({0, 0, 0}, RatFun(c)); }

    static Scalar zero() { return {}; }
    static Scalar one() { return Scalar(1); }
    static Scalar monomial(const RatFun& r, UabKey key);
    static Scalar u_pow(int e) { return monomial(RatFun::one(), {e, 0, 0}); }
    static Scalar a_pow(int e) { return monomial(RatFun::one(), {0, e, 0}); }
    static Scalar b_pow(int e) { return monomial(RatFun::one(), {0, 0, e}); }
    static Scalar z_pow(int e) { return Scalar(RatFun::z_pow(e)); }

    /// [n] = z^n - z^-n; [0] is rejected (it is 0, never a legal denominator).
    static Scalar quantum_int(int n);
    /// [n]_{e^t} = u^-1 z^n - u z^-n; defined for every n including 0.
    static Scalar quantum_int_t(int n);

    const std::map<UabKey, RatFun>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool is_one() const;
    /// True when the only possible entry sits at (0,0,0) (pure z content).
    bool is_pure_z() const;
    /// The (0,0,0) entry; requires is_pure_z().
    RatFun pure_z() const;
    RatFun coeff(UabKey key) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Division; the divisor must be pure z (single entry at (0,0,0)).
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y) { return x.entries_ == y.entries_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar scaled(const GaussianRational& c) const;
    Scalar scaled(const RatFun& r) const;
    Scalar times_u_pow(int e) const;

    /// z -> z^-1 on every entry; u, a, b fixed.
    Scalar invert_q() const;

    /// Drop entries with u-exponent above max_u.
    Scalar truncate_u(int max_u) const;
    int max_u_exp() const;  // 0 for the zero scalar

    /// Entries keyed by u-exponent; requires all a/b exponents to be zero.
    std::map<int, RatFun> u_series() const;

    /// Exact evaluation at a point; z0 and u0 must avoid poles/zero.
    GaussianRational eval_point(const GaussianRational& z0, const GaussianRational& a0,
                                const GaussianRational& b0, const GaussianRational& u0) const;

    /// Canonical rendering over the common denominator, e.g.
    /// "(u^-1 - u) * (z - z^-1)^-1". Term groups ascend by (u,a,b);
    /// z-exponents descend within a group.
    std::string to_string() const;

private:
    void add_entry(UabKey key, const RatFun& r);

    std::map<UabKey, RatFun> entries_;
};

}  // namespace mvv
