#pragma once

#include "lookalike/rational.hpp"

#include <map>
#include <string>

namespace lookalike {

/// Monomial in the Pontrjagin symbols p4, p8, p12, ...  Keys are the
/// cohomological degrees (4, 8, 12, ...), values the exponents (> 0).
using PontrjaginMonomial = std::map<int, int>;

/// Assignment of rational values to Pontrjagin symbols, keyed by degree.
using PontrjaginAssignment = std::map<int, Rational>;

/// Homogeneous polynomial in the symbols p4, p8, ... where p_{4k} carries
/// weight k.  Every stored monomial has the declared weight; zero
/// coefficients are never stored.
class GradedPoly {
  public:
    /// The zero polynomial of a given weight.
    explicit GradedPoly(int weight);
    GradedPoly(int weight, std::map<PontrjaginMonomial, Rational> terms);

    int weight() const { return weight_; }
    const std::map<PontrjaginMonomial, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const PontrjaginMonomial &m) const;

    GradedPoly &add_term(const PontrjaginMonomial &m, const Rational &c);

    friend GradedPoly operator+(const GradedPoly &a, const GradedPoly &b);
    friend GradedPoly operator*(const Rational &c, const GradedPoly &p);
    friend bool operator==(const GradedPoly &a, const GradedPoly &b);
    friend bool operator!=(const GradedPoly &a, const GradedPoly &b) { return !(a == b); }

    /// Substitute 0 for the listed symbol degrees (drops their monomials).
    GradedPoly zero_out(const std::vector<int> &degrees) const;

    /// Exact substitution.  The assignment must cover every symbol that
    /// occurs; otherwise throws std::out_of_range("unbound symbol ...").
    Rational evaluate(const PontrjaginAssignment &assignment) const;

    /// Canonical sorted rendering, e.g. "(7/45)*p8 + (-1/45)*p4^2".
    /// Terms are ordered with the heavier symbols first; within a monomial
    /// the factors are printed in ascending degree.
    std::string str() const;

  private:
    static int monomial_weight(const PontrjaginMonomial &m);

    int weight_;
    std::map<PontrjaginMonomial, Rational> terms_;
};

}  // namespace lookalike
