#include "mvv/ratfun.hpp"

#include <stdexcept>

namespace mvv {

RatFun::RatFun(ZLaurent num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (poly_is_zero(den_)) throw std::domain_error("RatFun: zero denominator");
    reduce();
}

RatFun RatFun::bracket(int n) {
    if (n == 0) throw std::domain_error("RatFun::bracket: [0] is zero and never legal");
    ZLaurent l = ZLaurent::monomial(GaussianRational(1), n);
    l += ZLaurent::monomial(GaussianRational(-1), -n);
    return RatFun(l);
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = poly_one();
        return;
    }
    // z-powers are units: strip them from the denominator into the numerator.
    size_t zpow = 0;
    while (zpow < den_.size() && den_[zpow].is_zero()) ++zpow;
    if (zpow > 0) {
        den_.erase(den_.begin(), den_.begin() + static_cast<long>(zpow));
        num_ = num_.shifted(-static_cast<int>(zpow));
    }
    if (poly_degree(den_) > 0) {
        auto [off, npoly] = num_.to_poly();
        Poly g = poly_gcd(npoly, den_);
        if (poly_degree(g) > 0) {
            npoly = poly_div_exact(npoly, g);
            den_ = poly_div_exact(den_, g);
            num_ = ZLaurent::from_poly(npoly, off);
        }
    }
    if (!den_[0].is_one()) {
        GaussianRational inv = den_[0].inverse();
        den_ = poly_scale(den_, inv);
        num_ = num_.scaled(inv);
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    Poly g = poly_gcd(den_, o.den_);
    Poly d1 = poly_div_exact(den_, g);
    Poly d2 = poly_div_exact(o.den_, g);
    ZLaurent n = num_ * ZLaurent::from_poly(d2) + o.num_ * ZLaurent::from_poly(d1);
    Poly d = poly_mul(den_, d2);
    num_ = std::move(n);
    den_ = std::move(d);
    reduce();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (num_.is_zero() || o.num_.is_zero()) return *this = RatFun();
    // Cross-reduce before multiplying to keep the final gcd small.
    ZLaurent n1 = num_, n2 = o.num_;
    Poly d1 = den_, d2 = o.den_;
    if (poly_degree(d2) > 0) {
        auto [off1, p1] = n1.to_poly();
        Poly g = poly_gcd(p1, d2);
        if (poly_degree(g) > 0) {
            n1 = ZLaurent::from_poly(poly_div_exact(p1, g), off1);
            d2 = poly_div_exact(d2, g);
        }
    }
    if (poly_degree(d1) > 0) {
        auto [off2, p2] = n2.to_poly();
        Poly g = poly_gcd(p2, d1);
        if (poly_degree(g) > 0) {
            n2 = ZLaurent::from_poly(poly_div_exact(p2, g), off2);
            d1 = poly_div_exact(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = poly_mul(d1, d2);
    reduce();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.reciprocal(); }

RatFun RatFun::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("RatFun: division by zero");
    auto [off, npoly] = num_.to_poly();
    RatFun r;
    r.num_ = ZLaurent::from_poly(den_, 0).shifted(-off);
    r.den_ = npoly;
    r.reduce();
    return r;
}

RatFun RatFun::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return RatFun();
    RatFun r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    return r;
}

RatFun RatFun::invert_q() const {
    if (num_.is_zero()) return RatFun();
    int d = poly_degree(den_);
    Poly rev(den_.rbegin(), den_.rend());
    return RatFun(num_.mirrored().shifted(d), std::move(rev));
}

GaussianRational RatFun::eval(const GaussianRational& x) const {
    GaussianRational d = poly_eval(den_, x);
    if (d.is_zero()) throw std::domain_error("RatFun::eval: pole at the evaluation point");
    return num_.eval(x) / d;
}

int RatFun::num_multiplicity_at_one() const {
    auto [off, p] = num_.to_poly();
    (void)off;
    return poly_multiplicity_at_one(p);
}

int RatFun::den_multiplicity_at_one() const { return poly_multiplicity_at_one(den_); }

std::string RatFun::to_string() const {
    if (num_.is_zero()) return "0";
    if (is_laurent()) return num_.to_string();
    // Display with a balanced Laurent denominator, leading coefficient 1.
    int s = poly_degree(den_) / 2;
    GaussianRational f = den_.back();
    ZLaurent dden = ZLaurent::from_poly(poly_scale(den_, f.inverse()), -s);
    ZLaurent dnum = num_.scaled(f.inverse()).shifted(-s);
    std::string ns = dnum.to_string();
    std::string out;
    if (ns == "1") {
        out = "";
    } else if (dnum.terms().size() == 1 && ns[0] != '-') {
        out = ns + " * ";
    } else {
        out = "(" + ns + ") * ";
    }
    return out + "(" + dden.to_string() + ")^-1";
}

}  // namespace mvv
