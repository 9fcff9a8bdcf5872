#include "mvv/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvv {

namespace {

Partition with_part(const Partition& mu, int p) {
    std::vector<int> parts = mu.parts();
    parts.insert(std::upper_bound(parts.begin(), parts.end(), p, std::greater<int>()), p);
    return Partition(std::move(parts));
}

Partition without_part(const Partition& mu, int p) {
    std::vector<int> parts = mu.parts();
    auto it = std::find(parts.begin(), parts.end(), p);
    if (it == parts.end()) throw std::logic_error("without_part: part not present");
    parts.erase(it);
    return Partition(std::move(parts));
}

int multiplicity(const Partition& mu, int p) {
    return static_cast<int>(std::count(mu.parts().begin(), mu.parts().end(), p));
}

}  // namespace

FockState vacuum(int degree_bound) { return SymFunc::one(degree_bound); }

FockState apply_beta(int n, const FockState& f) {
    if (n == 0) throw std::invalid_argument("apply_beta: n = 0");
    FockState x = f.to_basis(Basis::P);
    FockState r(Basis::P, x.degree_bound());
    if (n < 0) {
        int p = -n;
        for (const auto& [mu, c] : x.coeffs()) {
            if (mu.size() + p > x.degree_bound()) continue;  // graded truncation
            r.add_coeff(with_part(mu, p), c);
        }
    } else {
        for (const auto& [mu, c] : x.coeffs()) {
            int m = multiplicity(mu, n);
            if (m == 0) continue;
            r.add_coeff(without_part(mu, n), c.scaled(GaussianRational(static_cast<long>(n) * m)));
        }
    }
    return r;
}

Scalar wick_vev(const Partition& mu, const Partition& nu) {
    int bound = std::max(mu.size(), nu.size());
    FockState state = vacuum(bound);
    for (int p : nu.parts()) state = apply_beta(-p, state);
    for (int p : mu.parts()) state = apply_beta(p, state);
    return state.coeff(Partition());
}

FockState creator_exp(const SpecRule& gamma, int degree_bound) {
    std::vector<Scalar> g(static_cast<size_t>(degree_bound) + 1);
    for (int n = 1; n <= degree_bound; ++n) g[n] = gamma(n);
    FockState r(Basis::P, degree_bound);
    for (const Partition& mu : partitions_up_to(degree_bound)) {
        Scalar c = Scalar::one();
        for (int p : mu.parts()) c *= g[p];
        if (c.is_zero()) continue;
        Rational w(1);
        w /= Rational(z_of(mu));
        r.add_coeff(mu, c.scaled(GaussianRational(w)));
    }
    return r;
}

FockState creator_exp_applied(const SpecRule& gamma, int degree_bound) {
    std::vector<Scalar> g(static_cast<size_t>(degree_bound) + 1);
    for (int n = 1; n <= degree_bound; ++n) g[n] = gamma(n);
    auto apply_sum = [&](const FockState& f) {
        FockState out(Basis::P, degree_bound);
        for (int n = 1; n <= degree_bound; ++n) {
            if (g[n].is_zero()) continue;
            Rational w(1, n);
            out += apply_beta(-n, f).scaled(g[n]).scaled(GaussianRational(w));
        }
        return out;
    };
    FockState acc = vacuum(degree_bound);
    FockState term = vacuum(degree_bound);
    for (int k = 1; k <= degree_bound; ++k) {
        term = apply_sum(term).scaled(GaussianRational(Rational(1, k)));
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

Scalar vev_exp_annihilators(const SpecRule& alpha, const FockState& state) {
    int bound = state.degree_bound();
    std::vector<Scalar> a(static_cast<size_t>(bound) + 1);
    for (int n = 1; n <= bound; ++n) a[n] = alpha(n);
    auto apply_sum = [&](const FockState& f) {
        FockState out(Basis::P, bound);
        for (int n = 1; n <= bound; ++n) {
            if (a[n].is_zero()) continue;
            Rational w(1, n);
            out += apply_beta(n, f).scaled(a[n]).scaled(GaussianRational(w));
        }
        return out;
    };
    FockState term = state.to_basis(Basis::P);
    Scalar vev = term.coeff(Partition());
    for (int k = 1; k <= bound; ++k) {
        term = apply_sum(term).scaled(GaussianRational(Rational(1, k)));
        if (term.is_zero()) break;
        vev += term.coeff(Partition());
    }
    return vev;
}

FockState cut_and_join_p(const FockState& f) {
    FockState x = f.to_basis(Basis::P);
    FockState r(Basis::P, x.degree_bound());
    for (const auto& [mu, c] : x.coeffs()) {
        std::vector<int> values = mu.parts();
        values.erase(std::unique(values.begin(), values.end()), values.end());
        // join: (1/2) p_{i+j} i j d^2/dp_i dp_j
        for (int i : values) {
            for (int j : values) {
                long long factor = (i == j)
                                       ? static_cast<long long>(multiplicity(mu, i)) * (multiplicity(mu, i) - 1)
                                       : static_cast<long long>(multiplicity(mu, i)) * multiplicity(mu, j);
                if (factor == 0) continue;
                Partition target = with_part(without_part(without_part(mu, i), j), i + j);
                Rational w = make_frac(static_cast<long>(i) * j * factor, 2);
                r.add_coeff(target, c.scaled(GaussianRational(w)));
            }
        }
        // cut: (1/2) (i+j) p_i p_j d/dp_{i+j}, summed over ordered splits
        for (int k : values) {
            int m = multiplicity(mu, k);
            for (int i = 1; i < k; ++i) {
                Partition target = with_part(with_part(without_part(mu, k), i), k - i);
                Rational w = make_frac(static_cast<long>(k) * m, 2);
                r.add_coeff(target, c.scaled(GaussianRational(w)));
            }
        }
    }
    return r;
}

FockState apply_qK(int c, const FockState& f) {
    FockState s = f.to_basis(Basis::S);
    FockState r(Basis::S, f.degree_bound());
    for (const auto& [mu, v] : s.coeffs()) {
        long long k = kappa_of(mu) * c;
        r.add_coeff(mu, v * Scalar::z_pow(static_cast<int>(k)));
    }
    return r.to_basis(f.basis());
}

SymFunc pair_with_source(const FockState& state, const std::function<Scalar(int)>& twist) {
    FockState x = state.to_basis(Basis::P);
    SymFunc r(Basis::P, x.degree_bound());
    for (const auto& [eta, c] : x.coeffs()) {
        Scalar t = c;
        for (int p : eta.parts()) t *= twist(p);
        r.add_coeff(eta, t);
    }
    return r;
}

bool heisenberg_check(int m, int n, const FockState& f) {
    if (m == 0 || n == 0) throw std::invalid_argument("heisenberg_check: zero mode");
    // Lift to a bound with headroom so creator truncation cannot clip the
    // intermediate states of either operator order.
    int bound = f.degree_bound() + std::abs(m) + std::abs(n);
    FockState g(Basis::P, bound);
    FockState fp = f.to_basis(Basis::P);
    for (const auto& [mu, c] : fp.coeffs()) g.set_coeff(mu, c);
    FockState lhs = apply_beta(m, apply_beta(n, g)) - apply_beta(n, apply_beta(m, g));
    FockState rhs(Basis::P, bound);
    if (m == -n) rhs = g.scaled(GaussianRational(static_cast<long>(m)));
    return lhs == rhs;
}

}  // namespace mvv
