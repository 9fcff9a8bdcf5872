#pragma once

#include <vector>

#include "mvv/lambda.hpp"
#include "mvv/operators.hpp"
#include "mvv/symfun.hpp"

namespace mvv {

/// Quantum dimension dim_q R_mu = prod_x [c(x)]_t / [h(x)].
Scalar qdim(const Partition& mu);

/// One-leg vertex value W_nu = s_nu(q^rho) = z^(kappa/2) / prod [h(x)].
Scalar w_one(const Partition& nu);

/// Power sum of the shifted alphabet q^(mu+rho):
/// p_n = 1/[n] + sum_i (z^(2n(mu_i - i) + n) - z^(n(1 - 2i))).
Scalar p_shifted(int n, const Partition& mu);

/// Two-leg vertex value W_{mu,nu} = s_mu(q^rho) s_nu(q^(mu+rho)).
Scalar w_two(const Partition& mu, const Partition& nu);

/// Open-string amplitude: a symmetric function of the source alphabet whose
/// coefficients are polynomials in u^2 (via Q = -u^2), truncated at x-degree
/// x_degree_bound and u-order 2 * q_order_bound.
struct Amplitude {
    SymFunc value;  // P basis
    int x_degree_bound = 0;
    int q_order_bound = 0;  // u-exponents kept up to 2 * q_order_bound
};

enum class Leg { A, B };
enum class ZbForm { Direct, Rewritten };

/// Vertex-sum amplitude for the first toric diagram:
/// sum over mu, nu, eta of z^(a kappa_mu) W_{mu,nu} z^(-kappa_nu) Q^|nu| W_nu
/// chi_mu(eta) / (z_eta i^l(eta)) p_eta(x).
Amplitude amplitude_a(int framing, int degree, int q_order);

/// Vertex-sum amplitude for the second diagram; Direct uses
/// z^((a+1) kappa_mu) W_{mu^t,nu^t}, Rewritten the q -> q^-1 form. They must
/// agree exactly.
Amplitude amplitude_b(int framing, int degree, int q_order, ZbForm form);

/// Z-hat = Z / Z|_{p=0}: divide by the vacuum coefficient through u-adic power
/// series inversion. The vacuum coefficient must have constant term 1.
Amplitude normalize(const Amplitude& ampl);

/// Operator form of the normalized amplitude: a creator exponential, the
/// framing operator and the source pairing (with the 1/i twist on p_n(x)).
Amplitude operator_amplitude(int framing, Leg leg, int degree, int q_order);

/// The creator-exponential source of each diagram:
/// leg A: n -> ((-1)^(n-1) + Q^n)/[n]; leg B: n -> (1 - u^2n)/[n].
SpecRule amplitude_creator_rule(Leg leg);

/// Schur-weighted quantum-dimension sum the amplitudes must reproduce
/// (S basis): leg A uses z^((a+1) kappa) u^|mu| qdim(mu^t), leg B
/// z^(a kappa) u^|mu| qdim(mu).
SymFunc mv_rhs(int framing, Leg leg, int degree);

/// log of a normalized amplitude, truncated by x-degree and u-order.
SymFunc free_energy(const Amplitude& normalized);

/// u-adic series with rational-function coefficients (key = u exponent).
using USeries = std::map<int, RatFun>;

USeries vacuum_coefficient(const Amplitude& ampl);
USeries useries_mul(const USeries& x, const USeries& y, int max_u);
USeries useries_inverse(const USeries& s, int max_u);  // s[0] must be 1
USeries useries_log(const USeries& s, int max_u);      // s[0] must be 1

struct FreeEnergyEntry {
    Partition mu;
    int k = 0;             // e^{-kt} order (u-exponent / 2)
    int lambda_power = 0;  // raw Laurent power
    GaussianRational coeff;
};

struct FreeEnergyTable {
    int framing = 0;
    Leg leg = Leg::A;
    int degree = 0;
    int q_order = 0;
    int lambda_order = 0;
    std::vector<FreeEnergyEntry> entries;
    int max_pole_order = 0;        // over all (mu, k) coefficients
    bool pole_ok = true;           // every pole order <= 2
    bool entries_all_real = true;  // raw coefficients real (observed, not asserted)
    bool twisted_all_real = true;  // i^l(mu) * coeff real (observed, not asserted)
    bool parity_clean = true;      // powers congruent to l(mu) mod 2 only (observed)
};

FreeEnergyTable free_energy_table(int framing, Leg leg, int degree, int q_order,
                                  int lambda_order);

}  // namespace mvv
