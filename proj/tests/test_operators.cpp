#include "mvv/operators.hpp"

#include <random>

#include "doctest.h"

using namespace mvv;

namespace {

std::mt19937_64 rng(31415926);

Scalar rand_pure_scalar() {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> zexp(-2, 2);
    GaussianRational c(make_frac(num(rng), den(rng)));
    if (c.is_zero()) c = GaussianRational(1);
    return Scalar(RatFun(ZLaurent::monomial(c, zexp(rng))));
}

}  // namespace

TEST_CASE("beta operators") {
    CHECK(apply_beta(-2, vacuum(4)) == SymFunc::p_monomial(Partition{2}, 4));
    SymFunc two = SymFunc::one(4).scaled(Scalar(2));
    CHECK(apply_beta(2, SymFunc::p_monomial(Partition{2}, 4)) == two);
    CHECK(apply_beta(1, vacuum(4)).is_zero());
    CHECK_THROWS(apply_beta(0, vacuum(4)));
    // creators truncate silently above the bound
    CHECK(apply_beta(-3, SymFunc::p_monomial(Partition{2}, 4)).is_zero());
}

TEST_CASE("wick values") {
    CHECK(wick_vev(Partition{2, 1}, Partition{2, 1}) == Scalar(2));
    CHECK(wick_vev(Partition{2}, Partition{1, 1}) == Scalar::zero());
    CHECK(wick_vev(Partition(), Partition()) == Scalar::one());
    for (const Partition& mu : partitions_up_to(5)) {
        for (const Partition& nu : partitions_up_to(5)) {
            Scalar want = mu == nu ? Scalar(GaussianRational(Rational(z_of(mu)))) : Scalar::zero();
            CHECK(wick_vev(mu, nu) == want);
        }
    }
}

TEST_CASE("heisenberg relations on all small monomials") {
    for (int m = -5; m <= 5; ++m) {
        if (m == 0) continue;
        for (int n = -5; n <= 5; ++n) {
            if (n == 0) continue;
            for (const Partition& mu : partitions_up_to(5)) {
                CHECK(heisenberg_check(m, n, SymFunc::p_monomial(mu, 5)));
            }
        }
    }
}

TEST_CASE("creator exponential closed form") {
    SpecRule gamma{[](int n) { return Scalar(GaussianRational(Rational(n + 1))); }};
    FockState st = creator_exp(gamma, 4);
    CHECK(st.coeff(Partition{2}) == Scalar(GaussianRational(make_frac(3, 2))));  // gamma(2)/2
    CHECK(st.coeff(Partition()) == Scalar::one());
    CHECK(creator_exp(zero_rule(), 4) == vacuum(4));
}

TEST_CASE("closed creator expansion equals iterated application") {
    std::vector<SpecRule> rules;
    rules.push_back(principal_rule());
    rules.push_back(lemma21_rule());
    std::vector<Scalar> raw(6);
    for (int n = 1; n <= 5; ++n) raw[n] = rand_pure_scalar();
    rules.push_back(SpecRule{[&raw](int n) { return raw[n]; }});
    for (const SpecRule& rule : rules) {
        CHECK(creator_exp(rule, 5) == creator_exp_applied(rule, 5));
    }
}

TEST_CASE("creator exponential produces schur-weighted states") {
    // exp(sum gamma(n) beta_-n / n)|0> = sum_mu s_mu(gamma) |mu> for the
    // specialized alphabet gamma, both plain and omega-twisted.
    std::vector<Scalar> raw(6);
    for (int n = 1; n <= 5; ++n) raw[n] = rand_pure_scalar();
    SpecRule rule{[&raw](int n) { return raw[n]; }};
    SymFunc plain = creator_exp(rule, 5).to_basis(Basis::S);
    SymFunc twisted = creator_exp(omega_twisted(rule), 5).to_basis(Basis::S);
    for (const Partition& mu : partitions_up_to(5)) {
        CHECK(plain.coeff(mu) == SymFunc::s_basis_elem(mu, 5).specialize(rule));
        CHECK(twisted.coeff(mu) == SymFunc::s_basis_elem(mu.conjugate(), 5).specialize(rule));
    }
}

TEST_CASE("cut-and-join") {
    CHECK(cut_and_join_p(SymFunc::p_monomial(Partition{1, 1}, 4)) ==
          SymFunc::p_monomial(Partition{2}, 4));
    SymFunc s2 = SymFunc::s_basis_elem(Partition{2}, 4);
    CHECK(cut_and_join_p(s2) == s2);
    CHECK(cut_and_join_p(vacuum(4)).is_zero());
    for (const Partition& mu : partitions_up_to(6)) {
        SymFunc s = SymFunc::s_basis_elem(mu, 6);
        SymFunc want = s.scaled(GaussianRational(make_frac(kappa_of(mu), 2)));
        CHECK(cut_and_join_p(s) == want);
    }
}

TEST_CASE("framing operator is diagonal with integer z powers") {
    SymFunc s2 = SymFunc::s_basis_elem(Partition{2}, 4);
    CHECK(apply_qK(1, s2) == s2.scaled(Scalar::z_pow(2)));
    SymFunc s11 = SymFunc::s_basis_elem(Partition{1, 1}, 4);
    CHECK(apply_qK(1, s11) == s11.scaled(Scalar::z_pow(-2)));
    SymFunc f = SymFunc::p_monomial(Partition{2, 1}, 4);
    CHECK(apply_qK(0, f) == f);
    // q^K then q^-K is the identity
    CHECK(apply_qK(-2, apply_qK(2, f)) == f);
}

TEST_CASE("pairing with the source alphabet") {
    CHECK(pair_with_source(vacuum(3), [](int) { return Scalar::one(); }) == SymFunc::one(3));
    Scalar inv_i(GaussianRational::i().inverse());
    SymFunc p1 = SymFunc::p_monomial(Partition{1}, 3);
    SymFunc got = pair_with_source(p1, [&](int) { return inv_i; });
    CHECK(got.coeff(Partition{1}) == Scalar(GaussianRational(Rational(0), Rational(-1))));
    // with the trivial twist, the p-expansion passes through unchanged
    FockState st = creator_exp(principal_rule(), 4);
    CHECK(pair_with_source(st, [](int) { return Scalar::one(); }) == st);
}

TEST_CASE("vacuum pairing of annihilator and creator exponentials") {
    // <exp(sum a_n beta_n/n) exp(sum b_n beta_-n/n)> = exp(sum a_n b_n/n),
    // with the right side evaluated as a graded series.
    const int d = 6;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Scalar> a(d + 1), b(d + 1);
        for (int n = 1; n <= d; ++n) {
            a[n] = rand_pure_scalar();
            b[n] = rand_pure_scalar();
        }
        SpecRule ra{[&a](int n) { return a[n]; }};
        SpecRule rb{[&b](int n) { return b[n]; }};
        Scalar lhs = vev_exp_annihilators(ra, creator_exp_applied(rb, d));
        // graded exponential of s_n = a_n b_n / n
        std::vector<Scalar> s(d + 1), expser(d + 1), pw(d + 1);
        for (int n = 1; n <= d; ++n) s[n] = (a[n] * b[n]).scaled(GaussianRational(make_frac(1, n)));
        expser[0] = Scalar::one();
        pw[0] = Scalar::one();
        Rational kfact(1);
        for (int k = 1; k <= d; ++k) {
            std::vector<Scalar> next(d + 1);
            for (int i = 0; i <= d; ++i) {
                if (pw[i].is_zero()) continue;
                for (int n = 1; n + i <= d; ++n) next[i + n] += pw[i] * s[n];
            }
            pw = std::move(next);
            kfact *= k;
            for (int i = 0; i <= d; ++i) expser[i] += pw[i].scaled(GaussianRational(1 / kfact));
        }
        Scalar rhs;
        for (int i = 0; i <= d; ++i) rhs += expser[i];
        CHECK(lhs == rhs);
    }
}
