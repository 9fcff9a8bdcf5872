#include "mvv/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace mvv {

namespace {

using OrderedJson = nlohmann::ordered_json;

// ---------------------------------------------------------------- utilities

std::string uab_str(const UabKey& k) {
    return "u^" + std::to_string(k.u) + " a^" + std::to_string(k.a) + " b^" + std::to_string(k.b);
}

std::optional<std::string> diff_scalar(const std::string& where, const Scalar& lhs,
                                       const Scalar& rhs) {
    if (lhs == rhs) return std::nullopt;
    std::vector<UabKey> keys;
    for (const auto& [k, v] : lhs.entries()) keys.push_back(k);
    for (const auto& [k, v] : rhs.entries()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const UabKey& k : keys) {
        if (lhs.coeff(k) != rhs.coeff(k)) {
            return where + " at " + uab_str(k) + ": lhs = " + lhs.coeff(k).to_string() +
                   ", rhs = " + rhs.coeff(k).to_string();
        }
    }
    return where + ": scalars differ";  // unreachable
}

// Both sides in the same basis; reports the first offending coefficient.
std::optional<std::string> diff_symfunc(const SymFunc& lhs, const SymFunc& rhs) {
    std::vector<Partition> mus;
    for (const auto& [mu, c] : lhs.coeffs()) mus.push_back(mu);
    for (const auto& [mu, c] : rhs.coeffs()) mus.push_back(mu);
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
    for (const Partition& mu : mus) {
        auto w = diff_scalar("mu=" + mu.to_string(), lhs.coeff(mu), rhs.coeff(mu));
        if (w) return w;
    }
    return std::nullopt;
}

std::optional<std::string> diff_useries(const std::string& where, const USeries& lhs,
                                        const USeries& rhs) {
    std::vector<int> keys;
    for (const auto& [k, v] : lhs) keys.push_back(k);
    for (const auto& [k, v] : rhs) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    auto get = [](const USeries& s, int k) {
        auto it = s.find(k);
        return it == s.end() ? RatFun::zero() : it->second;
    };
    for (int k : keys) {
        if (get(lhs, k) != get(rhs, k)) {
            return where + " at u^" + std::to_string(k) + ": lhs = " + get(lhs, k).to_string() +
                   ", rhs = " + get(rhs, k).to_string();
        }
    }
    return std::nullopt;
}

GaussianRational rand_gauss(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> kind(0, 3);
    Rational re = make_frac(num(rng), den(rng));
    if (kind(rng) == 0) return {Rational(0), re == 0 ? Rational(1) : re};
    return {re, Rational(0)};
}

Scalar rand_scalar(std::mt19937_64& rng, bool allow_uab) {
    std::uniform_int_distribution<int> zexp(-3, 3);
    std::uniform_int_distribution<int> uexp(0, 2);
    GaussianRational c = rand_gauss(rng);
    if (c.is_zero()) c = GaussianRational(1);
    Scalar s(RatFun(ZLaurent::monomial(c, zexp(rng))));
    if (allow_uab) {
        std::uniform_int_distribution<int> pick(0, 2);
        if (pick(rng) == 0) s = s.times_u_pow(2 * uexp(rng));
    }
    return s;
}

SymFunc rand_symfunc(std::mt19937_64& rng, Basis basis, int degree) {
    SymFunc f(basis, degree);
    std::uniform_int_distribution<int> keep(0, 2);
    for (const Partition& mu : partitions_up_to(degree)) {
        if (keep(rng) == 0) continue;
        GaussianRational c = rand_gauss(rng);
        if (!c.is_zero()) f.add_coeff(mu, Scalar(c));
    }
    if (f.is_zero()) f.add_coeff(Partition(), Scalar::one());
    return f;
}

std::vector<int> clamp_framings(const std::vector<int>& framings, int lo, int hi) {
    std::vector<int> out;
    for (int a : framings) {
        if (a >= lo && a <= hi) out.push_back(a);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

struct CheckBody {
    bool pass = true;
    std::string witness;
    std::map<std::string, std::string> params;

    void fail(const std::optional<std::string>& w) {
        if (!w) return;
        pass = false;
        if (witness.empty()) witness = *w;
    }
    void require(bool ok, const std::string& w) {
        if (ok) return;
        pass = false;
        if (witness.empty()) witness = w;
    }
};

// ------------------------------------------------------------------- checks

CheckBody check_newton_schur(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 6);
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        SymFunc p = SymFunc::p_monomial(mu, d);
        SymFunc s = SymFunc::s_basis_elem(mu, d);
        body.fail(diff_symfunc(p.to_basis(Basis::S).to_basis(Basis::P), p));
        body.fail(diff_symfunc(s.to_basis(Basis::P).to_basis(Basis::S), s));
        if (!body.pass) return body;
    }
    if (d >= 3) {
        // Frozen coordinates of the change of basis at size 3.
        SymFunc p21 = SymFunc::p_monomial(Partition{2, 1}, d).to_basis(Basis::S);
        SymFunc e21 =
            SymFunc::s_basis_elem(Partition{3}, d) - SymFunc::s_basis_elem(Partition{1, 1, 1}, d);
        body.fail(diff_symfunc(p21, e21.to_basis(Basis::S)));
        SymFunc s21 = SymFunc::s_basis_elem(Partition{2, 1}, d).to_basis(Basis::P);
        SymFunc e21p =
            SymFunc::p_monomial(Partition{1, 1, 1}, d).scaled(GaussianRational(make_frac(1, 3))) -
            SymFunc::p_monomial(Partition{3}, d).scaled(GaussianRational(make_frac(1, 3)));
        body.fail(diff_symfunc(s21, e21p));
    }
    // Random roundtrips under the configured seed.
    std::mt19937_64 rng(cfg.seed + 101);
    int rounds = 100;
    body.params["random_roundtrips"] = std::to_string(rounds);
    for (int t = 0; t < rounds && body.pass; ++t) {
        SymFunc f = rand_symfunc(rng, Basis::P, d);
        body.fail(diff_symfunc(f.to_basis(Basis::S).to_basis(Basis::P), f));
    }
    return body;
}

CheckBody check_orthogonality(const CheckConfig& cfg) {
    CheckBody body;
    body.params["n_max"] = std::to_string(cfg.char_n_max);
    for (int n = 1; n <= cfg.char_n_max; ++n) {
        CharTable t = char_table(n, std::max(cfg.char_n_max, kDefaultCharNMax));
        size_t m = t.partitions.size();
        std::vector<Rational> zs(m);
        for (size_t i = 0; i < m; ++i) zs[i] = Rational(z_of(t.partitions[i]));
        for (size_t r1 = 0; r1 < m; ++r1) {
            for (size_t r2 = 0; r2 < m; ++r2) {
                Rational row_sum(0);
                mpz_class col_sum(0);
                for (size_t c = 0; c < m; ++c) {
                    row_sum += Rational(t.values[r1][c] * t.values[r2][c]) / zs[c];
                    col_sum += t.values[c][r1] * t.values[c][r2];
                }
                Rational row_want = r1 == r2 ? 1 : 0;
                mpz_class col_want = r1 == r2 ? mpz_class(zs[r1].get_num()) : mpz_class(0);
                body.require(row_sum == row_want,
                             "row orthogonality fails at n=" + std::to_string(n) + " (" +
                                 t.partitions[r1].to_string() + "," + t.partitions[r2].to_string() +
                                 "): got " + row_sum.get_str());
                body.require(col_sum == col_want,
                             "column orthogonality fails at n=" + std::to_string(n) + " (" +
                                 t.partitions[r1].to_string() + "," + t.partitions[r2].to_string() +
                                 "): got " + col_sum.get_str());
                if (!body.pass) return body;
            }
        }
    }
    return body;
}

CheckBody check_char_oracle(const CheckConfig& cfg) {
    CheckBody body;
    int n_max = std::min(cfg.char_n_max, 6);
    body.params["oracle_n_max"] = std::to_string(n_max);
    body.params["dimension_n_max"] = std::to_string(cfg.char_n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (const Partition& nu : enumerate_partitions(n)) {
            for (const Partition& mu : enumerate_partitions(n)) {
                mpz_class a = chi(nu, mu);
                mpz_class b = char_oracle(nu, mu);
                body.require(a == b, "chi(" + nu.to_string() + "," + mu.to_string() +
                                         "): recursion " + a.get_str() + " vs oracle " + b.get_str());
                if (!body.pass) return body;
            }
        }
    }
    for (int n = 1; n <= cfg.char_n_max; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        Partition id(ones);
        for (const Partition& nu : enumerate_partitions(n)) {
            body.require(chi(nu, id) == hook_length_dimension(nu),
                         "dimension of " + nu.to_string() + " disagrees with the hook formula");
            if (!body.pass) return body;
        }
    }
    return body;
}

CheckBody check_cauchy(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 6);
    body.params["degree_max"] = std::to_string(d);
    using BiKey = std::pair<Partition, Partition>;
    for (int n = 1; n <= d; ++n) {
        std::map<BiKey, GaussianRational> lhs, rhs;
        for (const Partition& mu : enumerate_partitions(n)) {
            SymFunc s = SymFunc::s_basis_elem(mu, n).to_basis(Basis::P);
            for (const auto& [alpha, ca] : s.coeffs()) {
                for (const auto& [beta, cb] : s.coeffs()) {
                    GaussianRational v = ca.pure_z().num().coeff(0) * cb.pure_z().num().coeff(0);
                    auto key = BiKey(alpha, beta);
                    lhs[key] += v;
                    if (lhs[key].is_zero()) lhs.erase(key);
                }
            }
        }
        for (const Partition& nu : enumerate_partitions(n)) {
            Rational w(1);
            w /= Rational(z_of(nu));
            rhs[BiKey(nu, nu)] = GaussianRational(w);
        }
        if (lhs != rhs) {
            body.require(false, "Cauchy kernel mismatch at degree " + std::to_string(n));
            return body;
        }
    }
    return body;
}

CheckBody check_omega_schur(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 6);
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        SymFunc lhs = SymFunc::s_basis_elem(mu, d).omega().to_basis(Basis::S);
        SymFunc rhs = SymFunc::s_basis_elem(mu.conjugate(), d);
        body.fail(diff_symfunc(lhs, rhs));
        if (!body.pass) return body;
    }
    if (d >= 2) {
        SymFunc p2 = SymFunc::p_monomial(Partition{2}, d);
        body.fail(diff_symfunc(p2.omega(), -p2));
    }
    std::mt19937_64 rng(cfg.seed + 202);
    for (int t = 0; t < 25 && body.pass; ++t) {
        SymFunc f = rand_symfunc(rng, Basis::P, d);
        body.fail(diff_symfunc(f.omega().omega(), f));
    }
    return body;
}

CheckBody check_heisenberg(const CheckConfig& cfg) {
    CheckBody body;
    int bound = std::min(cfg.max_degree, 5);
    body.params["mode_max"] = std::to_string(bound);
    body.params["monomial_degree_max"] = std::to_string(bound);
    for (int m = -bound; m <= bound; ++m) {
        if (m == 0) continue;
        for (int n = -bound; n <= bound; ++n) {
            if (n == 0) continue;
            for (const Partition& mu : partitions_up_to(bound)) {
                if (!heisenberg_check(m, n, SymFunc::p_monomial(mu, bound))) {
                    body.require(false, "[beta_" + std::to_string(m) + ", beta_" + std::to_string(n) +
                                            "] fails on p" + mu.to_string());
                    return body;
                }
            }
        }
    }
    return body;
}

CheckBody check_wick(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree + 1, 6);
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        for (const Partition& nu : partitions_up_to(d)) {
            Scalar got = wick_vev(mu, nu);
            Scalar want = mu == nu ? Scalar(GaussianRational(Rational(z_of(mu)))) : Scalar::zero();
            body.fail(diff_scalar("<beta_" + mu.to_string() + " beta_-" + nu.to_string() + ">",
                                  got, want));
            if (!body.pass) return body;
        }
    }
    // exp-pair consequence: <exp(sum a_n beta_n/n) exp(sum b_n beta_-n/n)>
    // against the graded series exp(sum a_n b_n / n).
    int dd = std::min(cfg.max_degree, 6);
    std::mt19937_64 rng(cfg.seed + 303);
    int rounds = 5;
    body.params["exp_pair_rounds"] = std::to_string(rounds);
    body.params["exp_pair_degree"] = std::to_string(dd);
    for (int t = 0; t < rounds && body.pass; ++t) {
        std::vector<Scalar> a(static_cast<size_t>(dd) + 1), b(static_cast<size_t>(dd) + 1);
        for (int n = 1; n <= dd; ++n) {
            a[n] = rand_scalar(rng, true);
            b[n] = rand_scalar(rng, true);
        }
        SpecRule ra{[&a](int n) { return a[n]; }};
        SpecRule rb{[&b](int n) { return b[n]; }};
        Scalar lhs = vev_exp_annihilators(ra, creator_exp_applied(rb, dd));
        // graded exp: weight(a_n b_n) = n, truncated at dd
        std::vector<Scalar> s(static_cast<size_t>(dd) + 1);
        for (int n = 1; n <= dd; ++n) {
            Rational w = make_frac(1, n);
            s[n] = (a[n] * b[n]).scaled(GaussianRational(w));
        }
        std::vector<Scalar> expser(static_cast<size_t>(dd) + 1);
        expser[0] = Scalar::one();
        std::vector<Scalar> pw = expser;
        Rational kfact(1);
        for (int k = 1; k <= dd; ++k) {
            std::vector<Scalar> next(static_cast<size_t>(dd) + 1);
            for (int i = 0; i <= dd; ++i) {
                if (pw[i].is_zero()) continue;
                for (int n = 1; n + i <= dd; ++n) next[i + n] += pw[i] * s[n];
            }
            pw = std::move(next);
            kfact *= k;
            Rational inv = 1 / kfact;
            for (int i = 0; i <= dd; ++i) expser[i] += pw[i].scaled(GaussianRational(inv));
        }
        Scalar rhs;
        for (int i = 0; i <= dd; ++i) rhs += expser[i];
        body.fail(diff_scalar("exp-pair VEV (round " + std::to_string(t) + ")", lhs, rhs));
    }
    return body;
}

CheckBody check_creator_schur(const CheckConfig& cfg, bool twisted) {
    CheckBody body;
    int d = cfg.max_degree;
    body.params["degree"] = std::to_string(d);
    std::mt19937_64 rng(cfg.seed + (twisted ? 505 : 404));
    std::vector<Scalar> raw(static_cast<size_t>(d) + 1);
    for (int n = 1; n <= d; ++n) raw[n] = rand_scalar(rng, true);
    SpecRule random_rule{[&raw](int n) { return raw[n]; }};
    std::vector<std::pair<std::string, SpecRule>> rules;
    rules.emplace_back("principal", principal_rule());
    rules.emplace_back("lemma21", lemma21_rule());
    rules.emplace_back("random", random_rule);
    for (const auto& [name, rule] : rules) {
        SpecRule lhs_rule = twisted ? omega_twisted(rule) : rule;
        FockState closed = creator_exp(lhs_rule, d);
        FockState applied = creator_exp_applied(lhs_rule, d);
        body.fail(diff_symfunc(closed, applied));
        SymFunc in_s = closed.to_basis(Basis::S);
        for (const Partition& mu : partitions_up_to(d)) {
            Partition target = twisted ? mu.conjugate() : mu;
            Scalar want = SymFunc::s_basis_elem(target, d).specialize(rule);
            body.fail(diff_scalar("rule " + name + ", s-coefficient at " + mu.to_string(),
                                  in_s.coeff(mu), want));
            if (!body.pass) return body;
        }
    }
    return body;
}

CheckBody check_cutjoin(const CheckConfig& cfg) {
    CheckBody body;
    int d = cfg.char_n_max;
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        SymFunc s = SymFunc::s_basis_elem(mu, d);
        SymFunc lhs = cut_and_join_p(s).to_basis(Basis::S);
        Rational half_kappa = make_frac(kappa_of(mu), 2);
        SymFunc rhs = s.scaled(GaussianRational(half_kappa));
        body.fail(diff_symfunc(lhs, rhs.to_basis(Basis::S)));
        if (!body.pass) return body;
    }
    SymFunc p11 = SymFunc::p_monomial(Partition{1, 1}, d);
    body.fail(diff_symfunc(cut_and_join_p(p11), SymFunc::p_monomial(Partition{2}, d)));
    body.require(cut_and_join_p(vacuum(d)).is_zero(), "K|0> is not 0");
    return body;
}

CheckBody check_hook_content_sums(const CheckConfig& cfg) {
    CheckBody body;
    int d = cfg.char_n_max;
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        PartitionStats st = stats(mu);
        PartitionStats stt = stats(mu.conjugate());
        long long hook_sum = 0, content_sum = 0;
        for (int h : st.hooks) hook_sum += h;
        for (int c : st.contents) content_sum += c;
        body.require(hook_sum == st.n_mu + st.n_mu_t + mu.size(),
                     "hook sum identity fails for " + mu.to_string());
        body.require(2 * content_sum == st.kappa,
                     "content sum identity fails for " + mu.to_string());
        body.require(content_sum == st.n_mu_t - st.n_mu,
                     "content sum vs n(mu^t)-n(mu) fails for " + mu.to_string());
        body.require(stt.kappa == -st.kappa, "kappa antisymmetry fails for " + mu.to_string());
        body.require(stt.hooks == st.hooks, "hook multiset transpose fails for " + mu.to_string());
        if (!body.pass) return body;
    }
    for (int n = 1; n <= d; ++n) {
        Rational acc(0);
        for (const Partition& mu : enumerate_partitions(n)) acc += 1 / Rational(z_of(mu));
        body.require(acc == 1, "sum of 1/z_mu over size " + std::to_string(n) + " is " + acc.get_str());
        if (!body.pass) return body;
    }
    return body;
}

CheckBody check_specialization(const CheckConfig& cfg, const char* which) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 6);
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        Scalar closed, via_p;
        if (std::string(which) == "principal") {
            closed = schur_principal_closed(mu);
            via_p = SymFunc::s_basis_elem(mu, d).specialize(principal_rule());
        } else if (std::string(which) == "lemma21") {
            closed = schur_lemma21_closed(mu);
            via_p = SymFunc::s_basis_elem(mu, d).specialize(lemma21_rule());
        } else {
            closed = schur_two_param_closed(mu);
            via_p = SymFunc::s_basis_elem(mu, d).specialize(two_param_rule());
        }
        body.fail(diff_scalar(std::string(which) + " specialization of s" + mu.to_string(),
                              closed, via_p));
        if (!body.pass) return body;
    }
    return body;
}

CheckBody check_macdonald(const CheckConfig& cfg) {
    CheckBody body;
    int d = cfg.char_n_max;
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        auto [left, right] = hook_shift_multisets(mu);
        if (left != right) {
            std::string l = "{", r = "{";
            for (int x : left) l += std::to_string(x) + " ";
            for (int x : right) r += std::to_string(x) + " ";
            body.require(false, "multisets differ for " + mu.to_string() + ": " + l + "} vs " + r + "}");
            return body;
        }
    }
    return body;
}

CheckBody check_qdim_product(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 6);
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        // dim_q R_mu * u^|mu| must equal the closed (and p-expanded) low-degree
        // specialization of s_mu.
        Scalar lhs = qdim(mu).times_u_pow(mu.size());
        body.fail(diff_scalar("u^|mu| dim_q at " + mu.to_string(), lhs, schur_lemma21_closed(mu)));
        Scalar via_p = SymFunc::s_basis_elem(mu, d).specialize(lemma21_rule());
        body.fail(diff_scalar("u^|mu| dim_q vs p-expansion at " + mu.to_string(), lhs, via_p));
        if (!body.pass) return body;
    }
    return body;
}

CheckBody check_prop22(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 5);
    body.params["degree"] = std::to_string(d);
    SymFunc plain = creator_exp(lemma21_rule(), d).to_basis(Basis::S);
    SymFunc twisted = creator_exp(omega_twisted(lemma21_rule()), d).to_basis(Basis::S);
    for (const Partition& mu : partitions_up_to(d)) {
        body.fail(diff_scalar("plain s-coefficient at " + mu.to_string(), plain.coeff(mu),
                              qdim(mu).times_u_pow(mu.size())));
        body.fail(diff_scalar("twisted s-coefficient at " + mu.to_string(), twisted.coeff(mu),
                              qdim(mu.conjugate()).times_u_pow(mu.size())));
        if (!body.pass) return body;
    }
    return body;
}

CheckBody check_w_symmetries(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 4);
    body.params["max_size"] = std::to_string(d);
    for (const Partition& mu : partitions_up_to(d)) {
        for (const Partition& nu : partitions_up_to(d)) {
            Scalar lhs = w_two(mu.conjugate(), nu.conjugate());
            Scalar rhs = w_two(mu, nu).invert_q();
            if ((mu.size() + nu.size()) % 2 != 0) rhs = -rhs;
            body.fail(diff_scalar("W transpose identity at (" + mu.to_string() + "," +
                                      nu.to_string() + ")",
                                  lhs, rhs));
            body.fail(diff_scalar("W symmetry at (" + mu.to_string() + "," + nu.to_string() + ")",
                                  w_two(mu, nu), w_two(nu, mu)));
            if (!body.pass) return body;
        }
        Scalar lhs = w_one(mu);
        Scalar rhs = w_one(mu).invert_q() * Scalar::z_pow(static_cast<int>(kappa_of(mu)));
        if (mu.size() % 2 != 0) rhs = -rhs;
        body.fail(diff_scalar("one-leg inversion identity at " + mu.to_string(), lhs, rhs));
        if (!body.pass) return body;
    }
    return body;
}

CheckBody check_zb_rewrite(const CheckConfig& cfg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 3);
    int k = std::min(cfg.q_order, 2);
    std::vector<int> framings = clamp_framings(cfg.framings, -1, 1);
    body.params["degree"] = std::to_string(d);
    body.params["q_order"] = std::to_string(k);
    body.params["framings"] = join_ints(framings);
    for (int a : framings) {
        Amplitude direct = amplitude_b(a, d, k, ZbForm::Direct);
        Amplitude rewritten = amplitude_b(a, d, k, ZbForm::Rewritten);
        auto w = diff_symfunc(direct.value, rewritten.value);
        if (w) {
            body.require(false, "framing " + std::to_string(a) + ": " + *w);
            return body;
        }
    }
    return body;
}

CheckBody check_prop3x(const CheckConfig& cfg, Leg leg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 4);
    int k = std::min(cfg.q_order, 2);
    std::vector<int> framings = clamp_framings(cfg.framings, -2, 2);
    body.params["degree"] = std::to_string(d);
    body.params["q_order"] = std::to_string(k);
    body.params["framings"] = join_ints(framings);
    for (int a : framings) {
        Amplitude sum = leg == Leg::A ? amplitude_a(a, d, k) : amplitude_b(a, d, k, ZbForm::Direct);
        Amplitude lhs = normalize(sum);
        Amplitude rhs = operator_amplitude(a, leg, d, k);
        auto w = diff_symfunc(lhs.value, rhs.value);
        if (w) {
            body.require(false, "framing " + std::to_string(a) + ": " + *w);
            return body;
        }
    }
    return body;
}

CheckBody check_mv_theorem(const CheckConfig& cfg, Leg leg) {
    CheckBody body;
    int d = std::min(cfg.max_degree, 5);
    int k = std::min(cfg.q_order, 3);
    body.params["degree"] = std::to_string(d);
    body.params["q_order"] = std::to_string(k);
    body.params["framings"] = join_ints(cfg.framings);
    for (int a : cfg.framings) {
        // Untwisted operator side: the framed creator exponential itself,
        // expanded over the Schur basis.
        int c = leg == Leg::A ? a + 1 : a;
        FockState state = apply_qK(c, creator_exp(amplitude_creator_rule(leg), d));
        SymFunc lhs = state.to_basis(Basis::S).truncate_u(2 * k);
        SymFunc rhs = mv_rhs(a, leg, d).truncate_u(2 * k);
        auto w = diff_symfunc(lhs, rhs);
        if (w) {
            body.require(false, "framing " + std::to_string(a) + ": " + *w);
            return body;
        }
    }
    return body;
}

CheckBody check_conifold_vacuum(const CheckConfig& cfg) {
    CheckBody body;
    int k = cfg.q_order;
    body.params["q_order"] = std::to_string(k);
    USeries want;
    want.emplace(0, RatFun::one());
    USeries expected_log;
    for (int n = 1; n <= k; ++n) {
        RatFun denom = RatFun(n) * RatFun::bracket(n) * RatFun::bracket(n);
        expected_log.emplace(2 * n, -denom.reciprocal());
    }
    for (Leg leg : {Leg::A, Leg::B}) {
        Amplitude ampl = leg == Leg::A ? amplitude_a(0, 0, k)
                                       : amplitude_b(0, 0, k, ZbForm::Direct);
        USeries got = useries_log(vacuum_coefficient(ampl), 2 * k);
        auto w = diff_useries(std::string("vacuum log, diagram ") + (leg == Leg::A ? "a" : "b"),
                              got, expected_log);
        if (w) {
            body.require(false, *w);
            return body;
        }
    }
    // Pole discipline of the emitted free-energy entries.
    int d = std::min(cfg.max_degree, 3);
    int kk = std::min(cfg.q_order, 2);
    body.params["table_degree"] = std::to_string(d);
    body.params["table_q_order"] = std::to_string(kk);
    for (Leg leg : {Leg::A, Leg::B}) {
        for (int a : clamp_framings(cfg.framings, -1, 1)) {
            FreeEnergyTable t = free_energy_table(a, leg, d, kk, 4);
            body.require(t.pole_ok, "pole order " + std::to_string(t.max_pole_order) +
                                        " > 2 in the free-energy table at framing " +
                                        std::to_string(a));
            body.params["observed_max_pole"] = std::to_string(t.max_pole_order);
            body.params["observed_entries_real"] = t.entries_all_real ? "true" : "false";
            body.params["observed_twisted_real"] = t.twisted_all_real ? "true" : "false";
            body.params["observed_parity_clean"] = t.parity_clean ? "true" : "false";
            if (!body.pass) return body;
        }
    }
    return body;
}

// ------------------------------------------------------------------ catalog

struct CheckDef {
    std::string id;
    std::string anchor;
    std::function<CheckBody(const CheckConfig&)> fn;
};

const std::vector<CheckDef>& catalog() {
    static const std::vector<CheckDef> defs = {
        {"newton-schur", "p_mu = sum_nu chi_nu(mu) s_nu ; s_nu = sum_mu chi_nu(mu)/z_mu p_mu",
         check_newton_schur},
        {"orthogonality",
         "sum_nu chi_mu(nu) chi_eta(nu)/z_nu = delta ; sum_mu chi_mu(xi) chi_mu(phi) = delta z_xi",
         check_orthogonality},
        {"char-oracle", "border-strip recursion = tableau/monomial linear-algebra oracle",
         check_char_oracle},
        {"cauchy", "sum_mu s_mu(x) s_mu(y) = sum_nu p_nu(x) p_nu(y) / z_nu", check_cauchy},
        {"omega-schur", "omega(s_mu) = s_{mu^t}", check_omega_schur},
        {"heisenberg", "[beta_m, beta_n] = m delta_{m,-n} id", check_heisenberg},
        {"wick",
         "<beta_mu beta_-nu> = delta z_mu ; <exp(sum a_n beta_n/n) exp(sum b_n beta_-n/n)> = "
         "exp(sum a_n b_n/n)",
         check_wick},
        {"creator-schur", "exp(sum_n p_n(y) beta_-n/n)|0> = sum_mu s_mu(y) |mu>",
         [](const CheckConfig& c) { return check_creator_schur(c, false); }},
        {"creator-schur-t", "exp(sum_n (-1)^(n-1) p_n(y) beta_-n/n)|0> = sum_mu s_{mu^t}(y) |mu>",
         [](const CheckConfig& c) { return check_creator_schur(c, true); }},
        {"cutjoin", "K s_mu = (kappa_mu / 2) s_mu", check_cutjoin},
        {"hook-content-sums",
         "sum h = n(mu) + n(mu^t) + |mu| ; sum c = kappa/2 ; sum_{|mu|=n} 1/z_mu = 1",
         check_hook_content_sums},
        {"principal", "s_mu(q^rho) = z^(kappa/2) / prod [h]",
         [](const CheckConfig& c) { return check_specialization(c, "principal"); }},
        {"two-param", "p_n = (a^n - b^n)/(1 - q^n) => s_mu = q^n(mu) prod (a - b q^c)/(1 - q^h)",
         [](const CheckConfig& c) { return check_specialization(c, "two-param"); }},
        {"lemma21", "p_n = (1 - u^2n)/[n] => s_mu = u^|mu| prod [c]_t / [h]",
         [](const CheckConfig& c) { return check_specialization(c, "lemma21"); }},
        {"macdonald", "{h(x)} U {mu_i - mu_j + j - i} = U_i {1 .. mu_i - i + l}", check_macdonald},
        {"qdim-product", "dim_q R_mu = prod [c]_t / [h]", check_qdim_product},
        {"prop22",
         "exp(sum (1-u^2n)/(n[n]) beta_-n)|0> = sum u^|mu| dim_q R_mu |mu> (and the omega twist)",
         check_prop22},
        {"w-symmetries",
         "W_{mu^t nu^t}(q) = (-1)^(|mu|+|nu|) W_{mu nu}(q^-1) ; W_nu(q) = (-1)^|nu| q^(kappa/2) "
         "W_nu(q^-1) ; W_{mu nu} = W_{nu mu}",
         check_w_symmetries},
        {"zb-rewrite", "two-leg vertex sum = its q -> q^-1 rewriting", check_zb_rewrite},
        {"prop31", "normalized diagram-a vertex sum = framed creator-exponential operator form",
         [](const CheckConfig& c) { return check_prop3x(c, Leg::A); }},
        {"prop32", "normalized diagram-b vertex sum = framed creator-exponential operator form",
         [](const CheckConfig& c) { return check_prop3x(c, Leg::B); }},
        {"mv-theorem-a",
         "framed creator exponential = sum_mu s_mu(x) z^((a+1)kappa) u^|mu| dim_q R_{mu^t}",
         [](const CheckConfig& c) { return check_mv_theorem(c, Leg::A); }},
        {"mv-theorem-b",
         "framed creator exponential = sum_mu s_mu(x) z^(a kappa) u^|mu| dim_q R_mu",
         [](const CheckConfig& c) { return check_mv_theorem(c, Leg::B); }},
        {"conifold-vacuum",
         "log Z|_{p=0} = sum_n (-1)^(n-1) Q^n / (n [n]^2) ; emitted F entries have pole order <= 2",
         check_conifold_vacuum},
    };
    return defs;
}

const std::map<std::string, std::vector<std::string>>& suites_map() {
    static const std::map<std::string, std::vector<std::string>> m = {
        {"characters", {"orthogonality", "char-oracle"}},
        {"basis", {"newton-schur", "cauchy", "omega-schur"}},
        {"operators", {"heisenberg", "wick", "creator-schur", "creator-schur-t", "cutjoin"}},
        {"specialization", {"principal", "two-param", "lemma21", "hook-content-sums", "macdonald"}},
        {"qdim", {"qdim-product", "prop22"}},
        {"vertex", {"w-symmetries", "zb-rewrite"}},
        {"marino-vafa", {"prop31", "prop32", "mv-theorem-a", "mv-theorem-b"}},
        {"free-energy", {"conifold-vacuum"}},
    };
    return m;
}

}  // namespace

bool Report::all_passed() const {
    for (const auto& c : checks) {
        if (c.status == "fail") return false;
    }
    return true;
}

const std::vector<std::string>& check_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& d : catalog()) v.push_back(d.id);
        return v;
    }();
    return ids;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, ids] : suites_map()) v.push_back(k);
        return v;
    }();
    return names;
}

std::vector<std::string> checks_in_suite(const std::string& suite) {
    auto it = suites_map().find(suite);
    if (it != suites_map().end()) return it->second;
    for (const auto& d : catalog()) {
        if (d.id == suite) return {suite};
    }
    throw std::invalid_argument("unknown suite or check id: " + suite);
}

CheckOutcome run_check(const std::string& id, const CheckConfig& cfg) {
    for (const auto& d : catalog()) {
        if (d.id != id) continue;
        CheckOutcome out;
        out.id = d.id;
        out.anchor = d.anchor;
        auto start = std::chrono::steady_clock::now();
        try {
            CheckBody body = d.fn(cfg);
            out.params = std::move(body.params);
            out.status = body.pass ? "pass" : "fail";
            out.witness = std::move(body.witness);
        } catch (const std::exception& e) {
            out.status = "fail";
            out.witness = std::string("exception: ") + e.what();
        }
        out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        return out;
    }
    throw std::invalid_argument("unknown check id: " + id);
}

Report run_suites(const CheckConfig& cfg) {
    std::vector<std::string> wanted;
    if (cfg.suites.empty()) {
        wanted = check_catalog();
    } else {
        for (const std::string& s : cfg.suites) {
            for (const std::string& id : checks_in_suite(s)) {
                if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) {
                    wanted.push_back(id);
                }
            }
        }
    }
    Report report;
    report.config = cfg;
    for (const std::string& id : check_catalog()) {
        if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
        report.checks.push_back(run_check(id, cfg));
    }
    return report;
}

namespace {

// Only the semantic dials: output path and format are presentation details
// and would break the byte-determinism contract.
OrderedJson config_to_json(const CheckConfig& cfg) {
    OrderedJson j;
    j["max_degree"] = cfg.max_degree;
    j["q_order"] = cfg.q_order;
    j["framings"] = cfg.framings;
    j["char_n_max"] = cfg.char_n_max;
    j["seed"] = cfg.seed;
    j["suites"] = cfg.suites;
    return j;
}

}  // namespace

std::string report_to_json(const Report& report, bool include_timing) {
    OrderedJson j;
    j["version"] = report.version;
    j["config"] = config_to_json(report.config);
    j["checks"] = OrderedJson::array();
    for (const auto& c : report.checks) {
        OrderedJson e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["params"] = OrderedJson(c.params);
        e["status"] = c.status;
        if (include_timing) e["millis"] = c.millis;
        if (!c.witness.empty()) e["witness"] = c.witness;
        j["checks"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
    std::ostringstream os;
    size_t passed = 0;
    for (const auto& c : report.checks) {
        os << (c.status == "pass" ? "[PASS] " : c.status == "skip" ? "[SKIP] " : "[FAIL] ");
        os << c.id << " (";
        bool first = true;
        for (const auto& [k, v] : c.params) {
            if (!first) os << ", ";
            os << k << "=" << v;
            first = false;
        }
        os << ") " << c.millis << "ms\n";
        if (!c.witness.empty()) os << "       " << c.witness << "\n";
        if (c.status == "pass") ++passed;
    }
    os << passed << "/" << report.checks.size() << " checks passed\n";
    return os.str();
}

// ------------------------------------------------------------------- tables

std::string characters_table_csv(int n, int n_max) {
    CharTable t = char_table(n, n_max);
    std::ostringstream os;
    os << "nu\\mu";
    for (const auto& mu : t.partitions) os << "," << mu.to_string();
    os << "\n";
    for (size_t r = 0; r < t.partitions.size(); ++r) {
        os << t.partitions[r].to_string();
        for (size_t c = 0; c < t.partitions.size(); ++c) os << "," << t.values[r][c].get_str();
        os << "\n";
    }
    return os.str();
}

std::string characters_table_json(int n, int n_max) {
    CharTable t = char_table(n, n_max);
    OrderedJson j;
    j["n"] = t.n;
    j["partitions"] = OrderedJson::array();
    for (const auto& mu : t.partitions) j["partitions"].push_back(mu.to_string());
    j["values"] = OrderedJson::array();
    for (const auto& row : t.values) {
        OrderedJson r = OrderedJson::array();
        for (const auto& v : row) r.push_back(v.get_str());
        j["values"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string qdim_table_csv(int max_size) {
    std::ostringstream os;
    os << "mu,dim_q\n";
    for (const Partition& mu : partitions_up_to(max_size)) {
        os << mu.to_string() << ",\"" << qdim(mu).to_string() << "\"\n";
    }
    return os.str();
}

std::string qdim_table_json(int max_size) {
    OrderedJson j = OrderedJson::array();
    for (const Partition& mu : partitions_up_to(max_size)) {
        OrderedJson e;
        e["mu"] = mu.to_string();
        e["dim_q"] = qdim(mu).to_string();
        j.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string w_table_csv(int max_size) {
    std::ostringstream os;
    os << "mu,nu,w\n";
    for (const Partition& mu : partitions_up_to(max_size)) {
        for (const Partition& nu : partitions_up_to(max_size)) {
            os << mu.to_string() << "," << nu.to_string() << ",\"" << w_two(mu, nu).to_string()
               << "\"\n";
        }
    }
    return os.str();
}

std::string w_table_json(int max_size) {
    OrderedJson j = OrderedJson::array();
    for (const Partition& mu : partitions_up_to(max_size)) {
        for (const Partition& nu : partitions_up_to(max_size)) {
            OrderedJson e;
            e["mu"] = mu.to_string();
            e["nu"] = nu.to_string();
            e["w"] = w_two(mu, nu).to_string();
            j.push_back(std::move(e));
        }
    }
    return j.dump(2) + "\n";
}

std::string free_energy_json(const FreeEnergyTable& table) {
    OrderedJson j;
    j["framing"] = table.framing;
    j["variant"] = table.leg == Leg::A ? "a" : "b";
    j["max_degree"] = table.degree;
    j["q_order"] = table.q_order;
    j["lambda_order"] = table.lambda_order;
    j["pole_ok"] = table.pole_ok;
    j["max_pole_order"] = table.max_pole_order;
    j["entries_all_real"] = table.entries_all_real;
    j["twisted_all_real"] = table.twisted_all_real;
    j["parity_clean"] = table.parity_clean;
    j["entries"] = OrderedJson::array();
    for (const auto& e : table.entries) {
        OrderedJson row;
        row["mu"] = e.mu.to_string();
        row["k"] = e.k;
        row["lambda_power"] = e.lambda_power;
        int num = e.lambda_power + 2 - e.mu.length();
        if (num >= 0 && num % 2 == 0) {
            row["g"] = num / 2;
        } else {
            row["g"] = nullptr;
        }
        row["re"] = e.coeff.re().get_str();
        row["im"] = e.coeff.im().get_str();
        j["entries"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

CheckConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    CheckConfig cfg;
    std::string line;
    int lineno = 0;
    auto parse_ints = [](const std::string& v) {
        std::vector<int> out;
        std::istringstream ss(v);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) out.push_back(std::stoi(tok));
        }
        return out;
    };
    auto parse_strings = [](const std::string& v) {
        std::vector<std::string> out;
        std::istringstream ss(v);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t b = tok.find_first_not_of(" \t");
            size_t e = tok.find_last_not_of(" \t");
            if (b != std::string::npos) out.push_back(tok.substr(b, e - b + 1));
        }
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t eq = line.find('=');
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key = value");
        }
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "max_degree") {
            cfg.max_degree = std::stoi(value);
        } else if (key == "q_order") {
            cfg.q_order = std::stoi(value);
        } else if (key == "framings") {
            cfg.framings = parse_ints(value);
        } else if (key == "char_n_max") {
            cfg.char_n_max = std::stoi(value);
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "suites") {
            cfg.suites = parse_strings(value);
        } else if (key == "format") {
            cfg.format = value;
        } else if (key == "out") {
            cfg.out_path = value;
        } else {
            throw std::runtime_error("config line " + std::to_string(lineno) + ": unknown key '" +
                                     key + "'");
        }
    }
    return cfg;
}

}  // namespace mvv
