#include "mvv/laurent.hpp"

#include <stdexcept>

namespace mvv {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_one() { return Poly{GaussianRational(1)}; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.size()) r[k] += a[k];
        if (k < b.size()) r[k] += b[k];
    }
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.size()) r[k] += a[k];
        if (k < b.size()) r[k] -= b[k];
    }
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    poly_trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const GaussianRational& c) {
    if (c.is_zero()) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("poly_divrem: division by zero polynomial");
    Poly rem = a;
    if (a.size() < b.size()) return {{}, rem};
    Poly quot(a.size() - b.size() + 1);
    GaussianRational lead_inv = b.back().inverse();
    for (int k = static_cast<int>(rem.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
        if (rem[k].is_zero()) continue;
        GaussianRational q = rem[k] * lead_inv;
        quot[k - (b.size() - 1)] = q;
        for (size_t j = 0; j < b.size(); ++j) {
            rem[k - (b.size() - 1) + j] -= q * b[j];
        }
    }
    poly_trim(quot);
    poly_trim(rem);
    return {quot, rem};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.empty()) throw std::domain_error("poly_div_exact: inexact division");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    // Euclid over Q(i), remainders kept monic to limit coefficient growth.
    while (!b.empty()) {
        auto [q, r] = poly_divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
        if (!b.empty() && !b.back().is_one()) b = poly_scale(b, b.back().inverse());
    }
    if (!a.empty() && !a.back().is_one()) a = poly_scale(a, a.back().inverse());
    return a;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly g = poly_gcd(a, b);
    Poly l = poly_mul(a, poly_div_exact(b, g));
    if (!l.back().is_one()) l = poly_scale(l, l.back().inverse());
    return l;
}

GaussianRational poly_eval(const Poly& p, const GaussianRational& x) {
    GaussianRational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int poly_multiplicity_at_one(const Poly& p) {
    if (p.empty()) throw std::domain_error("poly_multiplicity_at_one: zero polynomial");
    Poly cur = p;
    int mult = 0;
    const Poly z_minus_1{GaussianRational(-1), GaussianRational(1)};
    while (true) {
        auto [q, r] = poly_divrem(cur, z_minus_1);
        if (!r.empty()) return mult;
        ++mult;
        cur = std::move(q);
        if (cur.empty()) return mult;  // unreachable for nonzero p
    }
}

ZLaurent ZLaurent::from_poly(const Poly& p, int offset) {
    ZLaurent r;
    for (size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) r.terms_[static_cast<int>(k) + offset] = p[k];
    }
    return r;
}

int ZLaurent::min_exp() const {
    if (terms_.empty()) throw std::domain_error("ZLaurent::min_exp on zero");
    return terms_.begin()->first;
}

int ZLaurent::max_exp() const {
    if (terms_.empty()) throw std::domain_error("ZLaurent::max_exp on zero");
    return terms_.rbegin()->first;
}

GaussianRational ZLaurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void ZLaurent::set_coeff(int exp, const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.erase(exp);
    } else {
        terms_[exp] = c;
    }
}

ZLaurent ZLaurent::operator-() const {
    ZLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ZLaurent& ZLaurent::operator+=(const ZLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ZLaurent& ZLaurent::operator-=(const ZLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            GaussianRational prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_[ea + eb] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

ZLaurent ZLaurent::scaled(const GaussianRational& c) const {
    ZLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_[e] = x * c;
    return r;
}

ZLaurent ZLaurent::shifted(int k) const {
    ZLaurent r;
    for (const auto& [e, x] : terms_) r.terms_[e + k] = x;
    return r;
}

ZLaurent ZLaurent::mirrored() const {
    ZLaurent r;
    for (const auto& [e, x] : terms_) r.terms_[-e] = x;
    return r;
}

std::pair<int, Poly> ZLaurent::to_poly() const {
    if (terms_.empty()) return {0, {}};
    int off = min_exp();
    Poly p(static_cast<size_t>(max_exp() - off + 1));
    for (const auto& [e, x] : terms_) p[e - off] = x;
    return {off, p};
}

GaussianRational ZLaurent::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (const auto& [e, c] : terms_) acc += c * x.pow(e);
    return acc;
}

std::string ZLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = e == 0 ? "" : (e == 1 ? "z" : "z^" + std::to_string(e));
        std::string coeff;
        bool neg = false;
        if (c.is_real()) {
            neg = c.re() < 0;
            Rational m = abs(c.re());
            if (m != 1 || mono.empty()) coeff = m.get_str();
        } else if (c.re() == 0) {
            neg = c.im() < 0;
            Rational m = abs(c.im());
            coeff = (m == 1 ? "i" : m.get_str() + "*i");
        } else {
            coeff = c.to_string();
        }
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (!coeff.empty() && !mono.empty()) {
            s += coeff + "*" + mono;
        } else {
            s += coeff + mono;
        }
    }
    return s;
}

}  // namespace mvv
