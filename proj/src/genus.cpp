#include "lookalike/genus.hpp"

#include "lookalike/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace lookalike {

GradedPoly genus_polynomial(const PowerSeries &f, int n) {
    if (n < 0) throw std::invalid_argument("weight must be non-negative");
    if (f.coeff(0) != Rational(1)) throw std::domain_error("not a genus series");
    if (f.order() < n)
        throw std::out_of_range("truncation error: weight exceeds the series order");
    if (n == 0) {
        GradedPoly one(0);
        one.add_term(PontrjaginMonomial{}, Rational(1));
        return one;
    }

    // n auxiliary variables suffice: sigma_1..sigma_n stay independent.
    SymmetricExpansion product(n, n);
    product.add_term(SymmetricExpansion::Exponents(static_cast<size_t>(n), 0), Rational(1));
    for (int i = 0; i < n; ++i) {
        SymmetricExpansion factor(n, n);
        for (int k = 0; k <= std::min(n, f.order()); ++k) {
            SymmetricExpansion::Exponents e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(i)] = k;
            factor.add_term(e, f.coeff(k));
        }
        product = product * factor;
    }
    return elementary_symmetric_decompose(product.homogeneous_part(n));
}

std::pair<Rational, Rational> two_point_genus(const PowerSeries &f, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (f.order() < 2 * k + 1)
        throw std::out_of_range("truncation error: need series order >= 2k + 1");
    std::vector<Rational> s = s_numbers(f, 2 * k);
    const Rational &sk = s[static_cast<size_t>(k) - 1];
    const Rational &s2k = s[static_cast<size_t>(2 * k) - 1];
    return {s2k, (sk * sk - s2k) / Rational(2)};
}

GradedPoly l_genus_polynomial(int n) { return genus_polynomial(l_genus_series(std::max(n, 8)), n); }

GradedPoly a_hat_polynomial(int n) { return genus_polynomial(a_hat_series(std::max(n, 8)), n); }

}  // namespace lookalike
