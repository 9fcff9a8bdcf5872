#include "mvv/vertex.hpp"

#include <stdexcept>

namespace mvv {

namespace {

RatFun hook_bracket_product(const Partition& mu) {
    RatFun prod = RatFun::one();
    for (int h : stats(mu).hooks) prod *= RatFun::bracket(h);
    return prod;
}

RatFun w_one_rf(const Partition& nu) {
    return RatFun::z_pow(static_cast<int>(kappa_of(nu) / 2)) / hook_bracket_product(nu);
}

RatFun p_shifted_rf(int n, const Partition& mu) {
    RatFun r = RatFun::one() / RatFun::bracket(n);
    for (int i = 1; i <= mu.length(); ++i) {
        ZLaurent l = ZLaurent::monomial(GaussianRational(1), 2 * n * (mu.parts()[i - 1] - i) + n);
        l += ZLaurent::monomial(GaussianRational(-1), n * (1 - 2 * i));
        r += RatFun(std::move(l));
    }
    return r;
}

// s_nu(q^(mu+rho)) through the power-sum expansion of s_nu.
RatFun s_shifted_rf(const Partition& nu, const Partition& mu) {
    if (nu.empty()) return RatFun::one();
    RatFun acc;
    for (const Partition& tau : enumerate_partitions(nu.size())) {
        mpz_class x = chi(nu, tau);
        if (x == 0) continue;
        RatFun term = RatFun::one();
        for (int part : tau.parts()) term *= p_shifted_rf(part, mu);
        Rational w(x);
        w /= Rational(z_of(tau));
        acc += term.scaled(GaussianRational(w));
    }
    return acc;
}

RatFun w_two_rf(const Partition& mu, const Partition& nu) {
    return w_one_rf(mu) * s_shifted_rf(nu, mu);
}

GaussianRational source_weight(const Partition& eta) {
    // chi-independent part: 1 / (z_eta i^l(eta))
    Rational w(1);
    w /= Rational(z_of(eta));
    return GaussianRational(w) * GaussianRational::i().inverse().pow(eta.length());
}

Scalar q_power_of_nu(const Partition& nu) {
    // Q^|nu| with Q = -u^2
    RatFun sign(nu.size() % 2 == 0 ? 1 : -1);
    return Scalar::monomial(sign, {2 * nu.size(), 0, 0});
}

Amplitude assemble(int degree, int q_order,
                   const std::function<Scalar(const Partition&)>& mu_factor) {
    SymFunc value(Basis::P, degree);
    for (const Partition& mu : partitions_up_to(degree)) {
        Scalar f = mu_factor(mu);
        if (f.is_zero()) continue;
        if (mu.empty()) {
            value.add_coeff(mu, f);
            continue;
        }
        for (const Partition& eta : enumerate_partitions(mu.size())) {
            mpz_class x = chi(mu, eta);
            if (x == 0) continue;
            value.add_coeff(eta, f.scaled(source_weight(eta) * GaussianRational(Rational(x))));
        }
    }
    return Amplitude{value.truncate_u(2 * q_order), degree, q_order};
}

}  // namespace

Scalar qdim(const Partition& mu) {
    Scalar num = Scalar::one();
    for (int c : stats(mu).contents) num *= Scalar::quantum_int_t(c);
    return num / Scalar(hook_bracket_product(mu));
}

Scalar w_one(const Partition& nu) { return Scalar(w_one_rf(nu)); }

Scalar p_shifted(int n, const Partition& mu) {
    if (n < 1) throw std::invalid_argument("p_shifted: n must be positive");
    return Scalar(p_shifted_rf(n, mu));
}

Scalar w_two(const Partition& mu, const Partition& nu) { return Scalar(w_two_rf(mu, nu)); }

Amplitude amplitude_a(int framing, int degree, int q_order) {
    return assemble(degree, q_order, [&](const Partition& mu) {
        Scalar inner;
        for (int k = 0; k <= q_order; ++k) {
            for (const Partition& nu : enumerate_partitions(k)) {
                RatFun w = w_two_rf(mu, nu) * w_one_rf(nu) *
                           RatFun::z_pow(static_cast<int>(-kappa_of(nu)));
                inner += q_power_of_nu(nu).scaled(w);
            }
        }
        return inner * Scalar::z_pow(static_cast<int>(framing * kappa_of(mu)));
    });
}

Amplitude amplitude_b(int framing, int degree, int q_order, ZbForm form) {
    return assemble(degree, q_order, [&](const Partition& mu) {
        Scalar inner;
        for (int k = 0; k <= q_order; ++k) {
            for (const Partition& nu : enumerate_partitions(k)) {
                RatFun w;
                if (form == ZbForm::Direct) {
                    w = w_two_rf(mu.conjugate(), nu.conjugate()) * w_one_rf(nu);
                } else {
                    w = w_two_rf(mu, nu).invert_q() * w_one_rf(nu).invert_q() *
                        RatFun::z_pow(static_cast<int>(kappa_of(nu)));
                    if (mu.size() % 2 != 0) w = -w;
                }
                inner += q_power_of_nu(nu).scaled(w);
            }
        }
        return inner * Scalar::z_pow(static_cast<int>((framing + 1) * kappa_of(mu)));
    });
}

USeries vacuum_coefficient(const Amplitude& ampl) {
    return ampl.value.coeff(Partition()).u_series();
}

USeries useries_mul(const USeries& x, const USeries& y, int max_u) {
    USeries r;
    for (const auto& [ex, cx] : x) {
        for (const auto& [ey, cy] : y) {
            if (ex + ey > max_u) continue;
            RatFun prod = cx * cy;
            if (prod.is_zero()) continue;
            auto it = r.find(ex + ey);
            if (it == r.end()) {
                r.emplace(ex + ey, prod);
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return r;
}

namespace {

void useries_require_unit(const USeries& s, const char* who) {
    auto it = s.find(0);
    if (it == s.end() || !it->second.is_one()) {
        throw std::domain_error(std::string(who) + ": constant term is not 1");
    }
    if (!s.empty() && s.begin()->first < 0) {
        throw std::domain_error(std::string(who) + ": negative u exponent");
    }
}

}  // namespace

USeries useries_inverse(const USeries& s, int max_u) {
    useries_require_unit(s, "useries_inverse");
    // t_0 = 1, t_k = -sum_{j>=1} s_j t_{k-j}
    std::vector<RatFun> t(static_cast<size_t>(max_u) + 1);
    t[0] = RatFun::one();
    for (int k = 1; k <= max_u; ++k) {
        RatFun acc;
        for (const auto& [j, c] : s) {
            if (j < 1 || j > k) continue;
            if (!t[k - j].is_zero()) acc += c * t[k - j];
        }
        t[k] = -acc;
    }
    USeries r;
    for (int k = 0; k <= max_u; ++k) {
        if (!t[k].is_zero()) r.emplace(k, t[k]);
    }
    return r;
}

USeries useries_log(const USeries& s, int max_u) {
    useries_require_unit(s, "useries_log");
    USeries t = s;
    t.erase(0);  // s - 1
    if (t.empty()) return {};
    int val = t.begin()->first;
    if (val < 1) throw std::domain_error("useries_log: zero-valuation tail");
    USeries acc;
    USeries pw = t;
    for (int m = 1; m * val <= max_u && !pw.empty(); ++m) {
        Rational w = make_frac(m % 2 == 0 ? -1 : 1, m);
        for (const auto& [e, c] : pw) {
            RatFun add = c.scaled(GaussianRational(w));
            auto it = acc.find(e);
            if (it == acc.end()) {
                acc.emplace(e, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        pw = useries_mul(pw, t, max_u);
    }
    return acc;
}

Amplitude normalize(const Amplitude& ampl) {
    USeries vac = vacuum_coefficient(ampl);
    auto it = vac.find(0);
    if (it == vac.end() || !it->second.is_one()) {
        throw std::domain_error("normalize: vacuum coefficient has constant term != 1");
    }
    int max_u = 2 * ampl.q_order_bound;
    USeries inv = useries_inverse(vac, max_u);
    Scalar inv_scalar;
    for (const auto& [e, c] : inv) inv_scalar += Scalar::monomial(c, {e, 0, 0});
    SymFunc value(Basis::P, ampl.x_degree_bound);
    SymFunc in_p = ampl.value.to_basis(Basis::P);
    for (const auto& [mu, c] : in_p.coeffs()) {
        value.add_coeff(mu, (c * inv_scalar).truncate_u(max_u));
    }
    return Amplitude{value, ampl.x_degree_bound, ampl.q_order_bound};
}

SpecRule amplitude_creator_rule(Leg leg) {
    if (leg == Leg::A) {
        return {[](int n) {
            // (-1)^(n-1)/[n] + Q^n/[n] with Q = -u^2
            Scalar num = Scalar(n % 2 == 0 ? -1 : 1);
            num += Scalar::monomial(RatFun(n % 2 == 0 ? 1 : -1), {2 * n, 0, 0});
            return num / Scalar::quantum_int(n);
        }};
    }
    return {[](int n) {
        Scalar num = Scalar::one() - Scalar::u_pow(2 * n);
        return num / Scalar::quantum_int(n);
    }};
}

Amplitude operator_amplitude(int framing, Leg leg, int degree, int q_order) {
    int c = leg == Leg::A ? framing + 1 : framing;
    FockState state = apply_qK(c, creator_exp(amplitude_creator_rule(leg), degree));
    Scalar inv_i(GaussianRational::i().inverse());
    SymFunc value = pair_with_source(state, [inv_i](int) { return inv_i; });
    return Amplitude{value.truncate_u(2 * q_order), degree, q_order};
}

SymFunc mv_rhs(int framing, Leg leg, int degree) {
    SymFunc r(Basis::S, degree);
    for (const Partition& mu : partitions_up_to(degree)) {
        long long kap = kappa_of(mu);
        int zexp = static_cast<int>(leg == Leg::A ? (framing + 1) * kap : framing * kap);
        const Scalar dim = leg == Leg::A ? qdim(mu.conjugate()) : qdim(mu);
        r.add_coeff(mu, (dim * Scalar::z_pow(zexp)).times_u_pow(mu.size()));
    }
    return r;
}

SymFunc free_energy(const Amplitude& normalized) {
    int max_u = 2 * normalized.q_order_bound;
    SymFunc zhat = normalized.value.to_basis(Basis::P);
    if (!(zhat.coeff(Partition()) == Scalar::one())) {
        throw std::domain_error("free_energy: amplitude is not normalized");
    }
    SymFunc w = zhat - SymFunc::one(zhat.degree_bound());  // vanishing vacuum part
    SymFunc acc(Basis::P, zhat.degree_bound());
    SymFunc pw = w;
    for (int m = 1; m <= zhat.degree_bound() && !pw.is_zero(); ++m) {
        Rational c = make_frac(m % 2 == 0 ? -1 : 1, m);
        acc += pw.scaled(GaussianRational(c));
        pw = (pw * w).truncate_u(max_u);
    }
    return acc;
}

FreeEnergyTable free_energy_table(int framing, Leg leg, int degree, int q_order,
                                  int lambda_order) {
    FreeEnergyTable t;
    t.framing = framing;
    t.leg = leg;
    t.degree = degree;
    t.q_order = q_order;
    t.lambda_order = lambda_order;
    Amplitude ampl = leg == Leg::A ? amplitude_a(framing, degree, q_order)
                                   : amplitude_b(framing, degree, q_order, ZbForm::Direct);
    SymFunc logz = free_energy(normalize(ampl));
    for (const auto& [mu, c] : logz.coeffs()) {
        if (mu.empty()) continue;  // the free-energy sum runs over nonempty partitions
        GaussianRational twist = GaussianRational::i().pow(mu.length());
        for (const auto& [e, r] : c.u_series()) {
            if (e % 2 != 0) {
                t.parity_clean = false;
                continue;
            }
            LambdaSeries ls = lambda_expand(r, lambda_order);
            if (ls.pole_order() > t.max_pole_order) t.max_pole_order = ls.pole_order();
            if (ls.pole_order() > 2) t.pole_ok = false;
            for (const auto& [p, coeff] : ls.coeffs) {
                if (((p % 2 + 2) % 2) != ((mu.length() % 2 + 2) % 2)) t.parity_clean = false;
                if (!coeff.is_real()) t.entries_all_real = false;
                if (!(twist * coeff).is_real()) t.twisted_all_real = false;
                t.entries.push_back({mu, e / 2, p, coeff});
            }
        }
    }
    return t;
}

}  // namespace mvv
