#include "mvv/symfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvv {

SpecRule principal_rule() {
    return {[](int n) { return Scalar(RatFun::one() / RatFun::bracket(n)); }};
}

SpecRule lemma21_rule() {
    return {[](int n) {
        Scalar num = Scalar::one() - Scalar::u_pow(2 * n);
        return num / Scalar::quantum_int(n);
    }};
}

SpecRule two_param_rule() {
    return {[](int n) {
        Scalar num = Scalar::a_pow(n) - Scalar::b_pow(n);
        RatFun den = RatFun::one() - RatFun::z_pow(2 * n);
        return num / Scalar(den);
    }};
}

SpecRule zero_rule() {
    return {[](int) { return Scalar::zero(); }};
}

SpecRule omega_twisted(SpecRule rule) {
    return {[rule = std::move(rule)](int n) {
        Scalar v = rule(n);
        return n % 2 == 0 ? -v : v;
    }};
}

SymFunc::SymFunc(Basis basis, int degree_bound) : basis_(basis), degree_bound_(degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("SymFunc: negative degree bound");
}

SymFunc SymFunc::one(int degree_bound) {
    SymFunc f(Basis::P, degree_bound);
    f.coeffs_.emplace(Partition(), Scalar::one());
    return f;
}

SymFunc SymFunc::p_monomial(const Partition& mu, int degree_bound) {
    SymFunc f(Basis::P, degree_bound);
    f.set_coeff(mu, Scalar::one());
    return f;
}

SymFunc SymFunc::s_basis_elem(const Partition& mu, int degree_bound) {
    SymFunc f(Basis::S, degree_bound);
    f.set_coeff(mu, Scalar::one());
    return f;
}

Scalar SymFunc::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Scalar::zero() : it->second;
}

void SymFunc::set_coeff(const Partition& mu, const Scalar& c) {
    if (mu.size() > degree_bound_) {
        throw std::invalid_argument("SymFunc: partition size exceeds the degree bound");
    }
    if (c.is_zero()) {
        coeffs_.erase(mu);
    } else {
        coeffs_[mu] = c;
    }
}

void SymFunc::add_coeff(const Partition& mu, const Scalar& c) {
    if (mu.size() > degree_bound_) {
        throw std::invalid_argument("SymFunc: partition size exceeds the degree bound");
    }
    auto it = coeffs_.find(mu);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc SymFunc::to_basis(Basis target) const {
    if (target == basis_) return *this;
    SymFunc out(target, degree_bound_);
    for (const auto& [mu, c] : coeffs_) {
        int n = mu.size();
        if (n == 0) {
            out.add_coeff(mu, c);
            continue;
        }
        for (const Partition& nu : enumerate_partitions(n)) {
            if (basis_ == Basis::P) {
                // p_mu = sum_nu chi_nu(mu) s_nu
                mpz_class x = chi(nu, mu);
                if (x == 0) continue;
                out.add_coeff(nu, c.scaled(GaussianRational(Rational(x))));
            } else {
                // s_mu = sum_nu chi_mu(nu)/z_nu p_nu
                mpz_class x = chi(mu, nu);
                if (x == 0) continue;
                Rational w(x);
                w /= Rational(z_of(nu));
                out.add_coeff(nu, c.scaled(GaussianRational(w)));
            }
        }
    }
    return out;
}

void SymFunc::check_compatible(const SymFunc& o) const {
    if (degree_bound_ != o.degree_bound_) {
        throw std::invalid_argument("SymFunc: mixing degree bounds is an error");
    }
}

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_, degree_bound_);
    for (const auto& [mu, c] : coeffs_) r.coeffs_.emplace(mu, -c);
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    check_compatible(o);
    if (o.basis_ != basis_) return *this += o.to_basis(basis_);
    for (const auto& [mu, c] : o.coeffs_) add_coeff(mu, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    check_compatible(o);
    if (o.basis_ != basis_) return *this -= o.to_basis(basis_);
    for (const auto& [mu, c] : o.coeffs_) add_coeff(mu, -c);
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    a.check_compatible(b);
    SymFunc pa = a.to_basis(Basis::P);
    SymFunc pb = b.to_basis(Basis::P);
    SymFunc r(Basis::P, a.degree_bound_);
    for (const auto& [mu, cmu] : pa.coeffs_) {
        for (const auto& [nu, cnu] : pb.coeffs_) {
            if (mu.size() + nu.size() > a.degree_bound_) continue;  // truncation contract
            std::vector<int> parts;
            parts.reserve(mu.parts().size() + nu.parts().size());
            std::merge(mu.parts().begin(), mu.parts().end(), nu.parts().begin(), nu.parts().end(),
                       std::back_inserter(parts), std::greater<int>());
            r.add_coeff(Partition(std::move(parts)), cmu * cnu);
        }
    }
    return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.degree_bound_ != b.degree_bound_) return false;
    return a.to_basis(Basis::P).coeffs_ == b.to_basis(Basis::P).coeffs_;
}

SymFunc SymFunc::scaled(const Scalar& c) const {
    SymFunc r(basis_, degree_bound_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : coeffs_) r.add_coeff(mu, v * c);
    return r;
}

SymFunc SymFunc::scaled(const GaussianRational& c) const {
    SymFunc r(basis_, degree_bound_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : coeffs_) r.coeffs_.emplace(mu, v.scaled(c));
    return r;
}

SymFunc SymFunc::truncate_u(int max_u) const {
    SymFunc r(basis_, degree_bound_);
    for (const auto& [mu, v] : coeffs_) r.set_coeff(mu, v.truncate_u(max_u));
    return r;
}

Scalar SymFunc::inner(const SymFunc& o) const {
    check_compatible(o);
    SymFunc x = to_basis(Basis::P);
    SymFunc y = o.to_basis(Basis::P);
    Scalar acc;
    for (const auto& [mu, cx] : x.coeffs_) {
        auto it = y.coeffs_.find(mu);
        if (it == y.coeffs_.end()) continue;
        acc += (cx * it->second).scaled(GaussianRational(Rational(z_of(mu))));
    }
    return acc;
}

SymFunc SymFunc::omega() const {
    SymFunc x = to_basis(Basis::P);
    SymFunc r(Basis::P, degree_bound_);
    for (const auto& [mu, c] : x.coeffs_) {
        int sign = (mu.size() - mu.length()) % 2 == 0 ? 1 : -1;
        r.coeffs_.emplace(mu, sign == 1 ? c : -c);
    }
    return r.to_basis(basis_);
}

Scalar SymFunc::specialize(const SpecRule& rule) const {
    SymFunc x = to_basis(Basis::P);
    Scalar acc;
    for (const auto& [mu, c] : x.coeffs_) {
        Scalar term = c;
        for (int part : mu.parts()) term *= rule(part);
        acc += term;
    }
    return acc;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    const char* tag = basis_ == Basis::P ? "p" : "s";
    std::string out;
    for (const auto& [mu, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + tag + mu.to_string();
    }
    return out;
}

namespace {

RatFun hook_bracket_product(const Partition& mu) {
    RatFun prod = RatFun::one();
    for (int h : stats(mu).hooks) prod *= RatFun::bracket(h);
    return prod;
}

}  // namespace

Scalar schur_principal_closed(const Partition& mu) {
    PartitionStats st = stats(mu);
    RatFun r = RatFun::z_pow(static_cast<int>(st.kappa / 2));
    return Scalar(r / hook_bracket_product(mu));
}

Scalar schur_lemma21_closed(const Partition& mu) {
    PartitionStats st = stats(mu);
    Scalar num = Scalar::u_pow(mu.size());
    for (int c : st.contents) num *= Scalar::quantum_int_t(c);
    return num / Scalar(hook_bracket_product(mu));
}

Scalar schur_two_param_closed(const Partition& mu) {
    PartitionStats st = stats(mu);
    Scalar num = Scalar::z_pow(static_cast<int>(2 * st.n_mu));  // q^n(mu)
    RatFun den = RatFun::one();
    for (int c : st.contents) {
        num *= Scalar::a_pow(1) - Scalar::b_pow(1) * Scalar::z_pow(2 * c);
    }
    for (int h : st.hooks) den *= RatFun::one() - RatFun::z_pow(2 * h);
    return num / Scalar(den);
}

}  // namespace mvv
