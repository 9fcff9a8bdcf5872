#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvv/rational.hpp"

namespace mvv {

/// Dense univariate polynomial over Q(i): coeffs[k] is the z^k coefficient.
/// Always trimmed (no trailing zeros); the zero polynomial is the empty vector.
using Poly = std::vector<GaussianRational>;

void poly_trim(Poly& p);
bool poly_is_zero(const Poly& p);
int poly_degree(const Poly& p);  // -1 for zero
Poly poly_one();
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const GaussianRational& c);
/// Exact division with remainder over the field Q(i). b must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
/// Exact quotient; throws if the division is not exact.
Poly poly_div_exact(const Poly& a, const Poly& b);
/// Monic gcd (Euclid); gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);
GaussianRational poly_eval(const Poly& p, const GaussianRational& x);
/// Multiplicity of z = 1 as a root of p (0 if p(1) != 0; p must be nonzero).
int poly_multiplicity_at_one(const Poly& p);

/// Sparse Laurent polynomial in z over Q(i).
class ZLaurent {
public:
    ZLaurent() = default;
    explicit ZLaurent(const GaussianRational& c) {
        if (!c.is_zero()) terms_[0] = c;
    }
    static ZLaurent monomial(const GaussianRational& c, int exp) {
        ZLaurent r;
        if (!c.is_zero()) r.terms_[exp] = c;
        return r;
    }
    static ZLaurent from_poly(const Poly& p, int offset = 0);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
    int min_exp() const;  // throws on zero
    int max_exp() const;
    const std::map<int, GaussianRational>& terms() const { return terms_; }
    GaussianRational coeff(int exp) const;
    void set_coeff(int exp, const GaussianRational& c);

    ZLaurent operator-() const;
    ZLaurent& operator+=(const ZLaurent& o);
    ZLaurent& operator-=(const ZLaurent& o);
    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
    friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    friend bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.terms_ == b.terms_; }

    ZLaurent scaled(const GaussianRational& c) const;
    ZLaurent shifted(int k) const;  // multiply by z^k
    ZLaurent mirrored() const;      // z -> z^-1

    /// Contents as (offset, dense polynomial): *this = z^offset * poly.
    std::pair<int, Poly> to_poly() const;

    /// Evaluation; x must be nonzero when negative exponents are present.
    GaussianRational eval(const GaussianRational& x) const;

    /// Terms rendered with z-exponents descending: "z^2 - 2 + z^-2".
    std::string to_string() const;

private:
    std::map<int, GaussianRational> terms_;
};

}  // namespace mvv
