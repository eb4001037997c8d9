#pragma once

#include "lookalike/graded_poly.hpp"
#include "lookalike/power_series.hpp"

#include <utility>

namespace lookalike {

/// K_n of the multiplicative sequence attached to f, expressed in the
/// Pontrjagin symbols p4..p_{4n}: expand prod_{i<=n} f(x_i) to total degree
/// n, take the weight-n part and rewrite it in the elementary-symmetric
/// basis with sigma_j -> p_{4j}.
///
/// Requires f(0) = 1 and order(f) >= n (std::out_of_range on truncation).
GradedPoly genus_polynomial(const PowerSeries &f, int n);

/// The two-class specialization of K_{2k} when only p_{4k} and p_{8k}
/// survive: K_{2k} = s_{2k} p_{8k} + (s_k^2 - s_{2k})/2 p_{4k}^2.
/// Returns (coefficient of p_{8k}, coefficient of p_{4k}^2).
/// Requires order(f) >= 2k + 1.
std::pair<Rational, Rational> two_point_genus(const PowerSeries &f, int k);

/// K_n of the L-genus series (weight n, built at series order max(n, 8)).
GradedPoly l_genus_polynomial(int n);

/// K_n of the A-hat genus series.
GradedPoly a_hat_polynomial(int n);

}  // namespace lookalike
