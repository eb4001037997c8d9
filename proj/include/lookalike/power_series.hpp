#pragma once

#include "lookalike/rational.hpp"

#include <vector>

namespace lookalike {

/// Truncated dense formal power series over Rational.
///
/// A series of order n stores the coefficients of t^0 .. t^n; nothing is
/// known (or claimed) beyond the stored order.  Binary operations truncate
/// to the smaller order of the two operands.  Values are immutable after
/// construction.
class PowerSeries {
  public:
    explicit PowerSeries(std::vector<Rational> coefficients);
    static PowerSeries constant(const Rational &value, int order);
    static PowerSeries zero(int order) { return constant(Rational(0), order); }
    static PowerSeries one(int order) { return constant(Rational(1), order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational &coeff(int k) const;
    const std::vector<Rational> &coefficients() const { return coeffs_; }

    PowerSeries truncated(int order) const;
    bool is_zero() const;

    friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b);
    friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b);
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
    PowerSeries operator-() const;

    friend bool operator==(const PowerSeries &a, const PowerSeries &b);
    friend bool operator!=(const PowerSeries &a, const PowerSeries &b) { return !(a == b); }

    /// "c0 + c1*t + c2*t^2 + ..." with reduced fractions; dense through the
    /// stored order, negative coefficients folded into the separator.
    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
};

/// Quotient q with q*b == a to the common truncation order.
/// Throws std::domain_error("non-invertible series") if b has zero constant term.
PowerSeries series_div(const PowerSeries &a, const PowerSeries &b);

/// Termwise derivative; order drops by one (but never below zero).
PowerSeries series_derivative(const PowerSeries &a);

/// Termwise antiderivative with zero constant term; order grows by one.
PowerSeries series_integral(const PowerSeries &a);

/// l(t) = sqrt(t)/tanh(sqrt(t)) to the given order: the series generating
/// the Hirzebruch L-genus.  Built from the even part of x/tanh(x), which is
/// computed exactly from the exponential series, then reindexed by t = x^2.
PowerSeries l_genus_series(int order);

/// a(t) = (sqrt(t)/2)/sinh(sqrt(t)/2) to the given order: the series
/// generating the A-hat genus.  Same even-series route via (x/2)/sinh(x/2).
PowerSeries a_hat_series(int order);

/// The derived series f^v = f * (t/f)', recorded to order(f) - 1.  Its
/// coefficients are (-1)^k s_k where s_k are the s-numbers of f.
/// Requires constant term 1; throws std::domain_error("not a genus series").
PowerSeries dual_series(const PowerSeries &f);

/// s_1 .. s_kmax with s_k = (-1)^k [t^k] f^v.
/// Throws std::out_of_range on truncation (kmax > order(f) - 1).
std::vector<Rational> s_numbers(const PowerSeries &f, int kmax);

}  // namespace lookalike
