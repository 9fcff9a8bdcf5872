#include "mvv/vertex.hpp"

#include "doctest.h"

using namespace mvv;

namespace {

Scalar inv_bracket(int n) { return Scalar(RatFun::one() / RatFun::bracket(n)); }

GaussianRational q(long num, long den = 1) { return GaussianRational(make_frac(num, den)); }

}  // namespace

TEST_CASE("quantum dimensions") {
    CHECK(qdim(Partition()) == Scalar::one());
    Scalar d1 = (Scalar::u_pow(-1) - Scalar::u_pow(1)) / Scalar::quantum_int(1);
    CHECK(qdim(Partition{1}) == d1);
    Scalar d2 = Scalar::quantum_int_t(0) * Scalar::quantum_int_t(1) /
                (Scalar::quantum_int(1) * Scalar::quantum_int(2));
    CHECK(qdim(Partition{2}) == d2);
    // Lemma 2.1 closed form carries exactly the u^|mu| prefactor.
    for (const Partition& mu : partitions_up_to(5)) {
        CHECK(qdim(mu).times_u_pow(mu.size()) == schur_lemma21_closed(mu));
    }
}

TEST_CASE("one-leg vertex values") {
    CHECK(w_one(Partition()) == Scalar::one());
    CHECK(w_one(Partition{1}) == inv_bracket(1));
    CHECK(w_one(Partition{1, 1}) ==
          Scalar::z_pow(-1) / (Scalar::quantum_int(1) * Scalar::quantum_int(2)));
    for (const Partition& nu : partitions_up_to(5)) {
        CHECK(w_one(nu) == schur_principal_closed(nu));
    }
}

TEST_CASE("shifted power sums") {
    CHECK(p_shifted(1, Partition()) == inv_bracket(1));
    CHECK(p_shifted(1, Partition{1}) == inv_bracket(1) + Scalar::quantum_int(1));
    CHECK(p_shifted(2, Partition{1}) == inv_bracket(2) + Scalar::quantum_int(2));
    CHECK_THROWS(p_shifted(0, Partition{1}));
    // reduces to the principal value on the empty shift
    for (int n = 1; n <= 5; ++n) CHECK(p_shifted(n, Partition()) == inv_bracket(n));
}

TEST_CASE("two-leg vertex values") {
    for (const Partition& mu : partitions_up_to(4)) {
        CHECK(w_two(mu, Partition()) == w_one(mu));
    }
    Scalar w11 = w_two(Partition{1}, Partition{1});
    CHECK(w11 == inv_bracket(1) * inv_bracket(1) + Scalar::one());
    CHECK(w11.invert_q() == w11);
}

TEST_CASE("vertex inversion and symmetry identities") {
    for (const Partition& mu : partitions_up_to(3)) {
        Scalar lhs1 = w_one(mu);
        Scalar rhs1 = w_one(mu).invert_q() * Scalar::z_pow(static_cast<int>(kappa_of(mu)));
        if (mu.size() % 2 != 0) rhs1 = -rhs1;
        CHECK(lhs1 == rhs1);
        for (const Partition& nu : partitions_up_to(3)) {
            Scalar lhs = w_two(mu.conjugate(), nu.conjugate());
            Scalar rhs = w_two(mu, nu).invert_q();
            if ((mu.size() + nu.size()) % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
            CHECK(w_two(mu, nu) == w_two(nu, mu));
        }
    }
}

TEST_CASE("vertex-sum amplitude vacuum structure") {
    Amplitude a0 = amplitude_a(0, 2, 0);
    CHECK(a0.value.coeff(Partition()) == Scalar::one());  // only nu = empty at K = 0

    Amplitude a = amplitude_a(1, 2, 2);
    USeries vac = vacuum_coefficient(a);
    CHECK(vac.at(0) == RatFun::one());
    RatFun want = -(RatFun::one() / (RatFun::bracket(1) * RatFun::bracket(1)));
    CHECK(vac.at(2) == want);
}

TEST_CASE("u-adic series helpers") {
    USeries s;
    s.emplace(0, RatFun::one());
    s.emplace(2, -(RatFun::one() / (RatFun::bracket(1) * RatFun::bracket(1))));
    USeries inv = useries_inverse(s, 4);
    CHECK(useries_mul(s, inv, 4) == USeries{{0, RatFun::one()}});
    CHECK(inv.at(2) == RatFun::one() / (RatFun::bracket(1) * RatFun::bracket(1)));
    USeries lg = useries_log(s, 4);
    CHECK(lg.at(2) == s.at(2));  // leading log term is the series itself
    CHECK_THROWS(useries_inverse(USeries{{0, RatFun(2)}}, 2));
    CHECK_THROWS(useries_log(USeries{{2, RatFun::one()}}, 2));
}

TEST_CASE("normalization") {
    Amplitude a = amplitude_a(0, 3, 2);
    Amplitude n = normalize(a);
    USeries vac = vacuum_coefficient(n);
    CHECK(vac.size() == 1);
    CHECK(vac.at(0) == RatFun::one());
    // idempotent
    Amplitude nn = normalize(n);
    CHECK(nn.value == n.value);
    // constant term != 1 is rejected
    SymFunc bad(Basis::P, 1);
    bad.add_coeff(Partition(), Scalar(2));
    CHECK_THROWS(normalize(Amplitude{bad, 1, 1}));
}

TEST_CASE("zb direct and rewritten forms agree") {
    for (int a = -1; a <= 1; ++a) {
        Amplitude direct = amplitude_b(a, 2, 1, ZbForm::Direct);
        Amplitude rewritten = amplitude_b(a, 2, 1, ZbForm::Rewritten);
        CHECK(direct.value == rewritten.value);
    }
}

TEST_CASE("operator amplitude low-order coefficients") {
    Amplitude op = operator_amplitude(0, Leg::B, 2, 1);
    Scalar minus_i(GaussianRational(Rational(0), Rational(-1)));
    Scalar expect = minus_i * ((Scalar::one() - Scalar::u_pow(2)) / Scalar::quantum_int(1));
    CHECK(op.value.coeff(Partition{1}) == expect);
    CHECK(op.value.coeff(Partition()) == Scalar::one());
}

TEST_CASE("normalized vertex sums equal the operator amplitudes") {
    for (int a = -1; a <= 1; ++a) {
        Amplitude lhs_a = normalize(amplitude_a(a, 3, 2));
        Amplitude rhs_a = operator_amplitude(a, Leg::A, 3, 2);
        CHECK(lhs_a.value == rhs_a.value);
        Amplitude lhs_b = normalize(amplitude_b(a, 3, 2, ZbForm::Direct));
        Amplitude rhs_b = operator_amplitude(a, Leg::B, 3, 2);
        CHECK(lhs_b.value == rhs_b.value);
    }
}

TEST_CASE("schur-weighted quantum-dimension sums") {
    SymFunc rhs_b = mv_rhs(0, Leg::B, 2);
    Scalar want = qdim(Partition{1}).times_u_pow(1);
    CHECK(rhs_b.coeff(Partition{1}) == want);
    CHECK(want == (Scalar::one() - Scalar::u_pow(2)) / Scalar::quantum_int(1));
    SymFunc rhs_a = mv_rhs(0, Leg::A, 2);
    CHECK(rhs_a.coeff(Partition{1}) == want);  // kappa = 0 and (1)^t = (1)
    CHECK(mv_rhs(2, Leg::A, 0) == SymFunc::s_basis_elem(Partition(), 0));
}

TEST_CASE("framed creator exponentials match the quantum-dimension sums") {
    // untruncated at 2K >= 2D, so the equality is exact in every u order
    const int d = 3, k = 3;
    for (int a = -1; a <= 1; ++a) {
        for (Leg leg : {Leg::A, Leg::B}) {
            int c = leg == Leg::A ? a + 1 : a;
            FockState state = apply_qK(c, creator_exp(amplitude_creator_rule(leg), d));
            SymFunc lhs = state.to_basis(Basis::S).truncate_u(2 * k);
            SymFunc rhs = mv_rhs(a, leg, d).truncate_u(2 * k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("free energy series") {
    Amplitude n = normalize(amplitude_a(0, 3, 2));
    SymFunc logz = free_energy(n);
    CHECK(logz.coeff(Partition()).is_zero());
    // exp(log) reproduces the amplitude up to the truncation
    SymFunc acc = SymFunc::one(3);
    SymFunc pw = SymFunc::one(3);
    Rational kfact(1);
    for (int m = 1; m <= 3; ++m) {
        pw = (pw * logz).truncate_u(4);
        kfact *= m;
        acc += pw.scaled(GaussianRational(1 / kfact));
    }
    CHECK(acc == n.value);
    // log(1) = 0
    Amplitude unit{SymFunc::one(2), 2, 1};
    CHECK(free_energy(unit).is_zero());
    SymFunc not_normalized(Basis::P, 1);
    not_normalized.add_coeff(Partition(), Scalar(2));
    CHECK_THROWS(free_energy(Amplitude{not_normalized, 1, 1}));
}

TEST_CASE("conifold vacuum free energy") {
    const int k = 3;
    USeries logv = useries_log(vacuum_coefficient(amplitude_a(0, 0, k)), 2 * k);
    for (int n = 1; n <= k; ++n) {
        RatFun denom = RatFun(n) * RatFun::bracket(n) * RatFun::bracket(n);
        CHECK(logv.at(2 * n) == -denom.reciprocal());
    }
    CHECK(logv.size() == static_cast<size_t>(k));  // even powers only, nothing else
}

TEST_CASE("lambda expansion") {
    LambdaSeries s1 = lambda_expand(RatFun::one() / RatFun::bracket(1), 3);
    CHECK(s1.min_power() == -1);
    CHECK(s1.pole_order() == 1);
    CHECK(s1.coeff(-1) == GaussianRational(Rational(0), Rational(-1)));  // -i
    CHECK(s1.coeff(0).is_zero());
    CHECK(s1.coeff(1) == GaussianRational(Rational(0), make_frac(-1, 24)));

    LambdaSeries c = lambda_expand(RatFun(q(7, 3)), 2);
    CHECK(c.coeff(0) == q(7, 3));
    CHECK(c.pole_order() == 0);

    LambdaSeries ratio = lambda_expand(RatFun::bracket(2) / RatFun::bracket(1), 4);
    CHECK(ratio.pole_order() == 0);
    CHECK(ratio.coeff(0) == q(2));
    CHECK(ratio.coeff(2) == q(-1, 4));
    CHECK(ratio.coeff(4) == q(1, 192));
    CHECK(ratio.coeff(1).is_zero());
    CHECK(ratio.coeff(3).is_zero());

    CHECK(lambda_expand(RatFun::zero(), 2).coeffs.empty());
    CHECK_THROWS(lambda_expand(RatFun::one() / RatFun::bracket(1), -2));
}

TEST_CASE("free-energy table") {
    FreeEnergyTable t = free_energy_table(0, Leg::B, 3, 2, 3);
    CHECK(t.pole_ok);
    CHECK(t.max_pole_order <= 2);
    CHECK(t.parity_clean);
    CHECK(t.entries_all_real);
    CHECK_FALSE(t.twisted_all_real);  // odd-length rows carry i^l = i
    auto find = [&](const Partition& mu, int k, int p) -> GaussianRational {
        for (const auto& e : t.entries) {
            if (e.mu == mu && e.k == k && e.lambda_power == p) return e.coeff;
        }
        return GaussianRational();
    };
    CHECK(find(Partition{1}, 0, -1) == q(-1));
    CHECK(find(Partition{1}, 0, 1) == q(-1, 24));
    CHECK(find(Partition{1}, 0, 3) == q(-7, 5760));
    CHECK(find(Partition{1}, 1, -1) == q(1));
    CHECK(find(Partition{2}, 0, -1) == q(-1, 4));
    // the (1,1) row of this diagram cancels identically at framing 0
    for (const auto& e : t.entries) CHECK(e.mu != Partition{1, 1});
}
