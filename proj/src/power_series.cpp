#include "lookalike/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lookalike {

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

PowerSeries PowerSeries::constant(const Rational &value, int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[0] = value;
    return PowerSeries(std::move(c));
}

const Rational &PowerSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("coefficient index beyond stored order");
    return coeffs_[static_cast<size_t>(k)];
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order < 0 || order > this->order())
        throw std::out_of_range("truncation order beyond stored order");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational &c) { return c.is_zero(); });
}

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries &a, const PowerSeries &b) { return a + (-b); }

PowerSeries PowerSeries::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return PowerSeries(std::move(c));
}

bool operator==(const PowerSeries &a, const PowerSeries &b) { return a.coeffs_ == b.coeffs_; }

std::string PowerSeries::str() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        const Rational &c = coeffs_[static_cast<size_t>(k)];
        if (k == 0) {
            out += c.str();
            continue;
        }
        out += c.is_negative() ? " - " : " + ";
        std::string mag = c.abs().str();
        out += mag + "*t";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

PowerSeries series_div(const PowerSeries &a, const PowerSeries &b) {
    if (b.coeff(0).is_zero()) throw std::domain_error("non-invertible series");
    int n = std::min(a.order(), b.order());
    std::vector<Rational> q(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a.coeff(k);
        for (int j = 0; j < k; ++j) acc -= q[static_cast<size_t>(j)] * b.coeff(k - j);
        q[static_cast<size_t>(k)] = acc / b.coeff(0);
    }
    return PowerSeries(std::move(q));
}

PowerSeries series_derivative(const PowerSeries &a) {
    if (a.order() == 0) return PowerSeries::zero(0);
    std::vector<Rational> c(static_cast<size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k)
        c[static_cast<size_t>(k - 1)] = Rational(k) * a.coeff(k);
    return PowerSeries(std::move(c));
}

PowerSeries series_integral(const PowerSeries &a) {
    std::vector<Rational> c(static_cast<size_t>(a.order()) + 2, Rational(0));
    for (int k = 0; k <= a.order(); ++k)
        c[static_cast<size_t>(k + 1)] = a.coeff(k) / Rational(k + 1);
    return PowerSeries(std::move(c));
}

namespace {

// exp(s*x) as a series in x to the given order, s rational.
PowerSeries exp_series(const Rational &s, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    for (int k = 1; k <= order; ++k) c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] * s / Rational(k);
    return PowerSeries(std::move(c));
}

// Reindex an even series in x by t = x^2.  The odd coefficients must vanish;
// this is asserted, not assumed.
PowerSeries even_part_as_t_series(const PowerSeries &even, int t_order) {
    std::vector<Rational> c(static_cast<size_t>(t_order) + 1);
    for (int k = 1; 2 * k - 1 <= even.order() && k <= t_order; ++k) {
        if (!even.coeff(2 * k - 1).is_zero())
            throw std::logic_error("odd coefficient survived in an even series");
    }
    for (int k = 0; k <= t_order; ++k) c[static_cast<size_t>(k)] = even.coeff(2 * k);
    return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries l_genus_series(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    // x/tanh(x) = (e^{2x} + 1) / ((e^{2x} - 1)/x), both factors exact.
    int xo = 2 * order + 1;
    PowerSeries e2x = exp_series(Rational(2), xo + 1);
    std::vector<Rational> num(static_cast<size_t>(xo) + 1), den(static_cast<size_t>(xo) + 1);
    for (int k = 0; k <= xo; ++k) {
        num[static_cast<size_t>(k)] = e2x.coeff(k) + (k == 0 ? Rational(1) : Rational(0));
        den[static_cast<size_t>(k)] = e2x.coeff(k + 1);  // (e^{2x}-1)/x shifts down by one
    }
    PowerSeries quotient = series_div(PowerSeries(std::move(num)), PowerSeries(std::move(den)));
    return even_part_as_t_series(quotient, order);
}

PowerSeries a_hat_series(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    // (x/2)/sinh(x/2) = (1/2) / (sinh(x/2)/x), with
    // sinh(x/2)/x = (e^{x/2} - e^{-x/2})/(2x) taken termwise.
    int xo = 2 * order + 1;
    PowerSeries ep = exp_series(Rational(1, 2), xo + 1);
    PowerSeries em = exp_series(Rational(-1, 2), xo + 1);
    std::vector<Rational> den(static_cast<size_t>(xo) + 1);
    for (int k = 0; k <= xo; ++k)
        den[static_cast<size_t>(k)] = (ep.coeff(k + 1) - em.coeff(k + 1)) / Rational(2);
    PowerSeries quotient =
        series_div(PowerSeries::constant(Rational(1, 2), xo), PowerSeries(std::move(den)));
    return even_part_as_t_series(quotient, order);
}

PowerSeries dual_series(const PowerSeries &f) {
    if (f.coeff(0) != Rational(1)) throw std::domain_error("not a genus series");
    int n = f.order();
    PowerSeries inv = series_div(PowerSeries::one(n), f);
    // (t/f)' has coefficient (k+1)*[t^k](1/f) at t^k.
    std::vector<Rational> d(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) d[static_cast<size_t>(k)] = Rational(k + 1) * inv.coeff(k);
    PowerSeries g = f * PowerSeries(std::move(d));
    return g.truncated(std::max(n - 1, 0));
}

std::vector<Rational> s_numbers(const PowerSeries &f, int kmax) {
    if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
    if (kmax > f.order() - 1)
        throw std::out_of_range("truncation error: s-numbers need series order >= kmax + 1");
    PowerSeries dual = dual_series(f);
    std::vector<Rational> s(static_cast<size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        Rational v = dual.coeff(k);
        s[static_cast<size_t>(k - 1)] = (k % 2 == 0) ? v : -v;
    }
    return s;
}

}  // namespace lookalike
