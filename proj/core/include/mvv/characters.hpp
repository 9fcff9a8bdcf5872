#pragma once

#include <gmpxx.h>

#include <vector>

#include "mvv/partition.hpp"

namespace mvv {

inline constexpr int kDefaultCharNMax = 12;

/// Irreducible character chi_nu evaluated on the class mu, by the border-strip
/// (Murnaghan-Nakayama) recursion; memoized. Requires |nu| = |mu|.
mpz_class chi(const Partition& nu, const Partition& mu);

/// Complete character table of S_n; both partitions indexed in enumeration
/// (reverse lexicographic) order: values[row nu][col mu].
struct CharTable {
    int n = 0;
    std::vector<Partition> partitions;
    std::vector<std::vector<mpz_class>> values;
};

/// Builds the full table; n must be within the configured maximum (the default
/// is kDefaultCharNMax — character tables grow superpolynomially past that).
CharTable char_table(int n, int n_max = kDefaultCharNMax);

/// Independent character oracle: expands p_mu and s_nu as concrete polynomials
/// in |mu| variables (s_nu by tableau/Kostka counting) and extracts chi through
/// exact monomial linear algebra. No border strips anywhere. |mu| <= 8.
mpz_class char_oracle(const Partition& nu, const Partition& mu);

inline constexpr int kCharOracleMax = 8;

/// n! / prod h(x): the dimension chi_nu((1^n)) by the hook length formula.
mpz_class hook_length_dimension(const Partition& nu);

/// Kostka number K_{nu,lambda}: semistandard tableaux of shape nu and content
/// lambda, counted by direct backtracking (shared with the oracle).
mpz_class kostka_number(const Partition& nu, const std::vector<int>& content);

}  // namespace mvv
