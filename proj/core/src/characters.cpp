#include "mvv/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace mvv {

namespace {

// Beta-set (first-column hook lengths) form of a partition with l slots.
std::vector<int> beta_set(const Partition& nu) {
    int l = nu.length();
    std::vector<int> b(l);
    for (int i = 0; i < l; ++i) b[i] = nu.parts()[i] + (l - 1 - i);
    return b;  // strictly decreasing
}

Partition from_beta_set(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    int l = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int p = b[i] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

mpz_class chi_rec(const Partition& nu, const std::vector<int>& cls, size_t idx,
                  std::map<std::pair<Partition, std::vector<int>>, mpz_class>& memo);

mpz_class chi_impl(const Partition& nu, const std::vector<int>& cls, size_t idx,
                   std::map<std::pair<Partition, std::vector<int>>, mpz_class>& memo) {
    if (idx == cls.size()) return nu.empty() ? 1 : 0;  // all strips removed
    int r = cls[idx];
    // Remove a border strip of length r: replace some beta b by b - r not in
    // the set; the sign is (-1)^(number of betas strictly between them).
    std::vector<int> b = beta_set(nu);
    mpz_class total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        int target = b[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == target) {
                occupied = true;
                break;
            }
            if (b[j] > target && b[j] < b[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = b;
        nb[i] = target;
        mpz_class sub = chi_rec(from_beta_set(std::move(nb)), cls, idx + 1, memo);
        if (height % 2 == 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    return total;
}

mpz_class chi_rec(const Partition& nu, const std::vector<int>& cls, size_t idx,
                  std::map<std::pair<Partition, std::vector<int>>, mpz_class>& memo) {
    std::vector<int> rest(cls.begin() + static_cast<long>(idx), cls.end());
    auto key = std::make_pair(nu, rest);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    mpz_class v = chi_impl(nu, cls, idx, memo);
    memo.emplace(std::move(key), v);
    return v;
}

std::shared_mutex g_chi_mutex;
std::map<std::pair<Partition, std::vector<int>>, mpz_class> g_chi_memo;

}  // namespace

mpz_class chi(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size()) {
        throw std::invalid_argument("chi: |nu| != |mu| (character undefined across sizes)");
    }
    {
        std::shared_lock lock(g_chi_mutex);
        auto it = g_chi_memo.find({nu, mu.parts()});
        if (it != g_chi_memo.end()) return it->second;
    }
    std::unique_lock lock(g_chi_mutex);
    return chi_rec(nu, mu.parts(), 0, g_chi_memo);
}

CharTable char_table(int n, int n_max) {
    if (n < 1) throw std::invalid_argument("char_table: n must be positive");
    if (n > n_max) {
        throw std::runtime_error("char_table: n = " + std::to_string(n) +
                                 " exceeds the configured maximum " + std::to_string(n_max));
    }
    CharTable t;
    t.n = n;
    t.partitions = enumerate_partitions(n);
    t.values.resize(t.partitions.size());
    for (size_t r = 0; r < t.partitions.size(); ++r) {
        t.values[r].resize(t.partitions.size());
        for (size_t c = 0; c < t.partitions.size(); ++c) {
            t.values[r][c] = chi(t.partitions[r], t.partitions[c]);
        }
    }
    return t;
}

mpz_class hook_length_dimension(const Partition& nu) {
    mpz_class fact = 1;
    for (int k = 2; k <= nu.size(); ++k) fact *= k;
    mpz_class hooks = 1;
    for (int h : stats(nu).hooks) hooks *= h;
    mpz_class dim;
    mpz_divexact(dim.get_mpz_t(), fact.get_mpz_t(), hooks.get_mpz_t());
    return dim;
}

mpz_class kostka_number(const Partition& nu, const std::vector<int>& content) {
    // Fill the diagram row by row, left to right, with entries 1..len(content),
    // weakly increasing along rows, strictly increasing down columns, using
    // exactly content[v-1] copies of v.
    const auto& rows = nu.parts();
    int total = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("kostka_number: negative content");
        total += c;
    }
    if (total != nu.size()) return 0;
    int nvals = static_cast<int>(content.size());
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> fill(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) fill[r].assign(rows[r], 0);
    mpz_class count = 0;
    auto rec = [&](auto&& self, size_t r, int c) -> void {
        if (r == rows.size()) {
            ++count;
            return;
        }
        size_t nr = r;
        int nc = c + 1;
        if (nc >= rows[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = c > 0 ? fill[r][c - 1] : 1;                                  // row weak increase
        int above = (r > 0 && c < rows[r - 1]) ? fill[r - 1][c] + 1 : 1;      // column strict
        lo = std::max(lo, above);
        for (int v = lo; v <= nvals; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            fill[r][c] = v;
            self(self, nr, nc);
            ++remaining[v - 1];
        }
        fill[r][c] = 0;
    };
    if (rows.empty()) return 1;
    rec(rec, 0, 0);
    return count;
}

namespace {

// Exact rational Gaussian elimination solve; m is square and invertible.
std::vector<mpq_class> solve_linear(std::vector<std::vector<mpq_class>> m,
                                    std::vector<mpq_class> rhs) {
    size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("solve_linear: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        mpq_class inv = 1 / m[col][col];
        for (size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

mpz_class char_oracle(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size()) {
        throw std::invalid_argument("char_oracle: |nu| != |mu|");
    }
    int n = mu.size();
    if (n > kCharOracleMax) {
        throw std::invalid_argument("char_oracle: size beyond oracle limit");
    }
    if (n == 0) return 1;

    // Monomial coordinates: a symmetric polynomial of degree n in n variables
    // is determined by its coefficients at the dominant monomials x^lambda,
    // one per partition lambda of n.
    std::vector<Partition> lams = enumerate_partitions(n);

    // Coefficient of x^lambda in p_mu: expand the product of power sums over
    // exponent vectors directly.
    std::map<std::vector<int>, mpz_class> poly;
    poly.emplace(std::vector<int>(n, 0), 1);
    for (int part : mu.parts()) {
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [exps, c] : poly) {
            for (int v = 0; v < n; ++v) {
                std::vector<int> e = exps;
                e[v] += part;
                next[e] += c;
            }
        }
        poly = std::move(next);
    }
    auto dominant_coeff = [&](const Partition& lam) {
        std::vector<int> key(lam.parts());
        key.resize(n, 0);
        auto it = poly.find(key);
        return it == poly.end() ? mpz_class(0) : it->second;
    };

    // s_rho coefficients at the same monomials are Kostka numbers; solve
    // M c = p for the character column.
    std::vector<std::vector<mpq_class>> m(lams.size(), std::vector<mpq_class>(lams.size()));
    std::vector<mpq_class> rhs(lams.size());
    for (size_t row = 0; row < lams.size(); ++row) {
        std::vector<int> content(lams[row].parts().begin(), lams[row].parts().end());
        for (size_t col = 0; col < lams.size(); ++col) {
            m[row][col] = mpq_class(kostka_number(lams[col], content));
        }
        rhs[row] = mpq_class(dominant_coeff(lams[row]));
    }
    std::vector<mpq_class> sol = solve_linear(std::move(m), std::move(rhs));
    for (size_t col = 0; col < lams.size(); ++col) {
        if (lams[col] == nu) {
            mpq_class v = sol[col];
            if (v.get_den() != 1) throw std::runtime_error("char_oracle: non-integral character");
            return v.get_num();
        }
    }
    throw std::invalid_argument("char_oracle: nu is not a partition of |mu|");
}

}  // namespace mvv
