#pragma once

#include <map>
#include <string>

#include "mvv/ratfun.hpp"

namespace mvv {

/// Truncated Laurent series in lambda with exact Q(i) coefficients:
/// sum of coeffs[p] * lambda^p for min_power() <= p <= order.
struct LambdaSeries {
    std::map<int, GaussianRational> coeffs;  // zero entries omitted
    int order = 0;                           // highest power computed

    GaussianRational coeff(int p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? GaussianRational() : it->second;
    }
    int min_power() const;  // 0 when the series is identically zero so far
    /// Pole order: max(0, -min_power()).
    int pole_order() const;
    std::string to_string() const;
};

/// Substitute z = e^(i lambda / 2) and expand around lambda = 0, emitting
/// coefficients of lambda^-p ... lambda^order. The pole order at lambda = 0
/// equals the multiplicity of z = 1 in the reduced denominator; `order` must
/// be at least -pole_order.
LambdaSeries lambda_expand(const RatFun& r, int order);

}  // namespace mvv
