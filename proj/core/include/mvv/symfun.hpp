#pragma once

#include <functional>
#include <map>

#include "mvv/characters.hpp"
#include "mvv/partition.hpp"
#include "mvv/scalar.hpp"

namespace mvv {

enum class Basis { P, S };

/// Specialization rule: the Scalar assigned to each power sum p_n, n >= 1.
struct SpecRule {
    std::function<Scalar(int)> value;
    Scalar operator()(int n) const { return value(n); }
};

SpecRule principal_rule();    // p_n -> 1/[n]
SpecRule lemma21_rule();      // p_n -> (1 - u^2n)/[n]
SpecRule two_param_rule();    // p_n -> (a^n - b^n)/(1 - q^n), q = z^2
SpecRule zero_rule();
/// The omega-twisted rule n -> (-1)^(n-1) rule(n).
SpecRule omega_twisted(SpecRule rule);

/// Degree-truncated symmetric function: sparse Scalar coefficients on a basis
/// of partitions of size <= degree_bound. The power-sum basis is canonical for
/// arithmetic; the Schur basis is a view through the character tables.
/// Mixing degree bounds in a binary operation is an error, never a silent
/// re-truncation.
class SymFunc {
public:
    SymFunc(Basis basis, int degree_bound);

    static SymFunc zero(Basis basis, int degree_bound) { return {basis, degree_bound}; }
    static SymFunc one(int degree_bound);  // P-basis, coefficient 1 at the empty partition
    static SymFunc p_monomial(const Partition& mu, int degree_bound);
    static SymFunc s_basis_elem(const Partition& mu, int degree_bound);

    Basis basis() const { return basis_; }
    int degree_bound() const { return degree_bound_; }
    const std::map<Partition, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(const Partition& mu) const;
    void set_coeff(const Partition& mu, const Scalar& c);
    void add_coeff(const Partition& mu, const Scalar& c);
    bool is_zero() const { return coeffs_.empty(); }

    SymFunc to_basis(Basis target) const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    /// Ring product in the P basis; terms above the degree bound are dropped.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    /// Equality as elements of Lambda (compared in the P basis).
    friend bool operator==(const SymFunc& a, const SymFunc& b);
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    SymFunc scaled(const Scalar& c) const;
    SymFunc scaled(const GaussianRational& c) const;
    /// u-truncate every coefficient.
    SymFunc truncate_u(int max_u) const;

    /// <.,.> with <p_mu, p_nu> = delta z_mu, extended bilinearly over Scalars.
    Scalar inner(const SymFunc& o) const;

    /// The involution p_n -> (-1)^(n-1) p_n (so s_mu -> s_{mu^t}).
    SymFunc omega() const;

    /// Ring morphism: convert to P, send each p_n to rule(n), multiply out.
    Scalar specialize(const SpecRule& rule) const;

    /// Rendering with "p[2,1]" / "s[3]" term syntax, for reports.
    std::string to_string() const;

private:
    void check_compatible(const SymFunc& o) const;

    Basis basis_;
    int degree_bound_;
    std::map<Partition, Scalar> coeffs_;
};

/// Hook/content closed forms for the three specializations of Schur functions.
Scalar schur_principal_closed(const Partition& mu);   // z^(kappa/2) / prod [h(x)]
Scalar schur_lemma21_closed(const Partition& mu);     // u^|mu| prod [c(x)]_t / [h(x)]
Scalar schur_two_param_closed(const Partition& mu);   // q^n(mu) prod (a - b q^c)/(1 - q^h)

}  // namespace mvv
