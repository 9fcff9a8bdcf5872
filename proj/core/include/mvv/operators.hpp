#pragma once

#include "mvv/symfun.hpp"

namespace mvv {

/// A state A|0> is just an element of Lambda; |0> = 1.
using FockState = SymFunc;

FockState vacuum(int degree_bound);

/// beta_n: multiplication by p_{-n} for n < 0 (truncating above the bound),
/// n d/dp_n for n > 0. n = 0 is rejected.
FockState apply_beta(int n, const FockState& f);

/// <beta_mu beta_{-nu}>, computed operationally: creators into the vacuum,
/// annihilators applied, empty-partition coefficient read off.
Scalar wick_vev(const Partition& mu, const Partition& nu);

/// exp(sum_n gamma(n) beta_{-n}/n)|0> truncated at the degree bound, via the
/// closed expansion sum_mu (prod_i gamma(mu_i)/z_mu) p_mu.
FockState creator_exp(const SpecRule& gamma, int degree_bound);

/// Same operator exponential evaluated the slow way: iterated applications of
/// the creator sum, summed with 1/k!. Cross-check for creator_exp.
FockState creator_exp_applied(const SpecRule& gamma, int degree_bound);

/// <exp(sum_n alpha(n) beta_n/n) . state>: annihilator exponential applied by
/// iterated operator application, then the vacuum coefficient.
Scalar vev_exp_annihilators(const SpecRule& alpha, const FockState& state);

/// Cut-and-join operator through its power-sum differential form.
FockState cut_and_join_p(const FockState& f);

/// q^(cK): diagonal on Schur functions, s_mu -> z^(c kappa_mu) s_mu.
FockState apply_qK(int c, const FockState& f);

/// Reads the state as a symmetric function of the source alphabet x: the
/// P-coefficient at eta is scaled by prod_i twist(eta_i). twist == 1 realizes
/// exp(sum p_n(x) beta_n / n) acting as sum_mu s_mu(x) <mu|.
SymFunc pair_with_source(const FockState& state, const std::function<Scalar(int)>& twist);

/// Verifies [beta_m, beta_n] f = m delta_{m,-n} f exactly.
bool heisenberg_check(int m, int n, const FockState& f);

}  // namespace mvv
