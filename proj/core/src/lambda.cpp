#include "mvv/lambda.hpp"

#include <stdexcept>
#include <vector>

namespace mvv {

int LambdaSeries::min_power() const {
    return coeffs.empty() ? 0 : coeffs.begin()->first;
}

int LambdaSeries::pole_order() const {
    int m = min_power();
    return m < 0 ? -m : 0;
}

std::string LambdaSeries::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : coeffs) {
        if (!s.empty()) s += " + ";
        s += c.to_string();
        if (p != 0) s += "*L^" + std::to_string(p);
    }
    return s;
}

namespace {

// Dense power series in lambda, coeffs[k] ~ lambda^k, length = nterms.
using Series = std::vector<GaussianRational>;

// exp(i * e * lambda / 2) to nterms coefficients.
Series exp_series(int e, int nterms, const std::vector<Rational>& inv_factorial) {
    Series s(nterms);
    GaussianRational step(Rational(0), make_frac(e, 2));  // i*e/2
    GaussianRational pw(1);
    for (int k = 0; k < nterms; ++k) {
        s[k] = pw * GaussianRational(inv_factorial[k]);
        pw *= step;
    }
    return s;
}

Series eval_at_exp(const ZLaurent& l, int nterms, const std::vector<Rational>& inv_factorial) {
    Series acc(nterms);
    for (const auto& [e, c] : l.terms()) {
        Series t = exp_series(e, nterms, inv_factorial);
        for (int k = 0; k < nterms; ++k) acc[k] += c * t[k];
    }
    return acc;
}

}  // namespace

LambdaSeries lambda_expand(const RatFun& r, int order) {
    LambdaSeries out;
    out.order = order;
    if (r.is_zero()) return out;

    int vden = r.den_multiplicity_at_one();
    if (order < -vden) {
        throw std::invalid_argument("lambda_expand: order below the possible pole order");
    }
    // Expand numerator and denominator as series; the denominator's lambda
    // valuation is exactly the multiplicity of z = 1. Quotient coefficients up
    // to lambda^order need denominator terms up to lambda^(order + 2 vden).
    int nterms = order + 2 * vden + 1;
    if (nterms < 1) nterms = 1;
    std::vector<Rational> inv_factorial(static_cast<size_t>(nterms));
    Rational f(1);
    inv_factorial[0] = f;
    for (int k = 1; k < nterms; ++k) {
        f /= k;
        inv_factorial[k] = f;
    }
    Series num = eval_at_exp(r.num(), nterms, inv_factorial);
    Series den = eval_at_exp(ZLaurent::from_poly(r.den()), nterms, inv_factorial);
    for (int k = 0; k < vden; ++k) {
        if (!den[k].is_zero()) throw std::logic_error("lambda_expand: valuation mismatch");
    }
    if (den[vden].is_zero()) throw std::logic_error("lambda_expand: denominator series vanished");

    // num / den = lambda^{-vden} * (num / (den >> vden)); standard recursive
    // coefficient solve against the unit part of the denominator.
    Series dshift(den.begin() + vden, den.end());
    int qlen = order + vden + 1;
    Series q(qlen);
    GaussianRational lead_inv = dshift[0].inverse();
    for (int k = 0; k < qlen; ++k) {
        GaussianRational acc = k < static_cast<int>(num.size()) ? num[k] : GaussianRational();
        for (int j = 0; j < k; ++j) {
            int idx = k - j;
            if (idx < static_cast<int>(dshift.size())) acc -= q[j] * dshift[idx];
        }
        q[k] = acc * lead_inv;
    }
    for (int k = 0; k < qlen; ++k) {
        int power = k - vden;
        if (power > order) break;
        if (!q[k].is_zero()) out.coeffs[power] = q[k];
    }
    return out;
}

}  // namespace mvv
