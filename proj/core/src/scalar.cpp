#include "mvv/scalar.hpp"

#include <stdexcept>

namespace mvv {

void Scalar::add_entry(UabKey key, const RatFun& r) {
    if (r.is_zero()) return;
    if (key.a < 0 || key.b < 0) throw std::domain_error("Scalar: a/b exponents must be nonnegative");
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, r);
    } else {
        it->second += r;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

Scalar Scalar::monomial(const RatFun& r, UabKey key) {
    Scalar s;
    s.add_entry(key, r);
    return s;
}

Scalar Scalar::quantum_int(int n) {
    if (n == 0) throw std::domain_error("quantum_int: [0] requested");
    return Scalar(RatFun::bracket(n));
}

Scalar Scalar::quantum_int_t(int n) {
    Scalar s;
    s.add_entry({-1, 0, 0}, RatFun::z_pow(n));
    s.add_entry({1, 0, 0}, -RatFun::z_pow(-n));
    return s;
}

bool Scalar::is_one() const {
    return entries_.size() == 1 && entries_.begin()->first == UabKey{0, 0, 0} &&
           entries_.begin()->second.is_one();
}

bool Scalar::is_pure_z() const {
    return entries_.empty() ||
           (entries_.size() == 1 && entries_.begin()->first == UabKey{0, 0, 0});
}

RatFun Scalar::pure_z() const {
    if (entries_.empty()) return RatFun::zero();
    if (!is_pure_z()) throw std::domain_error("Scalar::pure_z: u/a/b content present");
    return entries_.begin()->second;
}

RatFun Scalar::coeff(UabKey key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? RatFun::zero() : it->second;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [k, v] : entries_) r.entries_.emplace(k, -v);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [k, v] : o.entries_) add_entry(k, v);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [k, v] : o.entries_) add_entry(k, -v);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar r;
    for (const auto& [k1, v1] : entries_) {
        for (const auto& [k2, v2] : o.entries_) {
            r.add_entry({k1.u + k2.u, k1.a + k2.a, k1.b + k2.b}, v1 * v2);
        }
    }
    return *this = std::move(r);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (!o.is_pure_z()) {
        throw std::domain_error("Scalar: division by a scalar with u/a/b content is unsupported");
    }
    RatFun inv = o.entries_.begin()->second.reciprocal();
    Scalar r;
    for (const auto& [k, v] : entries_) r.add_entry(k, v * inv);
    return *this = std::move(r);
}

Scalar Scalar::scaled(const GaussianRational& c) const {
    Scalar r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : entries_) r.entries_.emplace(k, v.scaled(c));
    return r;
}

Scalar Scalar::scaled(const RatFun& f) const {
    Scalar r;
    if (f.is_zero()) return r;
    for (const auto& [k, v] : entries_) r.add_entry(k, v * f);
    return r;
}

Scalar Scalar::times_u_pow(int e) const {
    Scalar r;
    for (const auto& [k, v] : entries_) r.entries_.emplace(UabKey{k.u + e, k.a, k.b}, v);
    return r;
}

Scalar Scalar::invert_q() const {
    Scalar r;
    for (const auto& [k, v] : entries_) r.entries_.emplace(k, v.invert_q());
    return r;
}

Scalar Scalar::truncate_u(int max_u) const {
    Scalar r;
    for (const auto& [k, v] : entries_) {
        if (k.u <= max_u) r.entries_.emplace(k, v);
    }
    return r;
}

int Scalar::max_u_exp() const {
    int m = 0;
    for (const auto& [k, v] : entries_) {
        (void)v;
        if (k.u > m) m = k.u;
    }
    return m;
}

std::map<int, RatFun> Scalar::u_series() const {
    std::map<int, RatFun> s;
    for (const auto& [k, v] : entries_) {
        if (k.a != 0 || k.b != 0) {
            throw std::domain_error("Scalar::u_series: a/b content present");
        }
        s.emplace(k.u, v);
    }
    return s;
}

GaussianRational Scalar::eval_point(const GaussianRational& z0, const GaussianRational& a0,
                                    const GaussianRational& b0, const GaussianRational& u0) const {
    if (z0.is_zero() || u0.is_zero()) {
        throw std::domain_error("Scalar::eval_point: z0 and u0 must be nonzero");
    }
    GaussianRational acc;
    for (const auto& [k, v] : entries_) {
        acc += v.eval(z0) * u0.pow(k.u) * a0.pow(k.a) * b0.pow(k.b);
    }
    return acc;
}

namespace {

std::string uab_monomial(const UabKey& k) {
    std::string s;
    auto put = [&s](const char* name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    };
    put("u", k.u);
    put("a", k.a);
    put("b", k.b);
    return s;
}

// One numerator term group: the z-Laurent factor attached to u^ea^ab^b.
void render_group(std::string& out, bool& first, const ZLaurent& zpart, const UabKey& key) {
    std::string mono = uab_monomial(key);
    for (auto it = zpart.terms().rbegin(); it != zpart.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string zmono = e == 0 ? "" : (e == 1 ? "z" : "z^" + std::to_string(e));
        std::string full = zmono;
        if (!mono.empty()) full += (full.empty() ? "" : "*") + mono;
        std::string coeff;
        bool neg = false;
        if (c.is_real()) {
            neg = c.re() < 0;
            Rational m = abs(c.re());
            if (m != 1 || full.empty()) coeff = m.get_str();
        } else if (c.re() == 0) {
            neg = c.im() < 0;
            Rational m = abs(c.im());
            coeff = (m == 1 ? "i" : m.get_str() + "*i");
        } else {
            coeff = c.to_string();
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (!coeff.empty() && !full.empty()) {
            out += coeff + "*" + full;
        } else {
            out += coeff + full;
        }
    }
}

}  // namespace

std::string Scalar::to_string() const {
    if (entries_.empty()) return "0";
    Poly common = poly_one();
    for (const auto& [k, v] : entries_) {
        (void)k;
        common = poly_lcm(common, v.den());
    }
    if (poly_degree(common) == 0) {
        std::string out;
        bool first = true;
        size_t nterms = 0;
        for (const auto& [k, v] : entries_) {
            render_group(out, first, v.num(), k);
            nterms += v.num().terms().size();
        }
        return out;
    }
    // Balanced display denominator with leading coefficient 1.
    int s = poly_degree(common) / 2;
    GaussianRational f = common.back();
    GaussianRational finv = f.inverse();
    ZLaurent dden = ZLaurent::from_poly(poly_scale(common, finv), -s);
    std::string numstr;
    bool first = true;
    size_t nterms = 0;
    for (const auto& [k, v] : entries_) {
        ZLaurent zpart =
            (v.num() * ZLaurent::from_poly(poly_div_exact(common, v.den()))).scaled(finv).shifted(-s);
        render_group(numstr, first, zpart, k);
        nterms += zpart.terms().size();
    }
    std::string out;
    if (numstr == "1") {
        out = "";
    } else if (nterms == 1 && numstr[0] != '-') {
        out = numstr + " * ";
    } else {
        out = "(" + numstr + ") * ";
    }
    return out + "(" + dden.to_string() + ")^-1";
}

}  // namespace mvv
