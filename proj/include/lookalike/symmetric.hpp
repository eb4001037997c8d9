#pragma once

#include "lookalike/graded_poly.hpp"
#include "lookalike/rational.hpp"

#include <map>
#include <vector>

namespace lookalike {

/// Polynomial in n auxiliary variables x_1..x_n over Rational, used for the
/// symmetric-function side of multiplicative sequences.  Keys are exponent
/// vectors of length n.  A truncation bound (total degree) may be attached;
/// multiplication drops terms above it.
class SymmetricExpansion {
  public:
    using Exponents = std::vector<int>;

    explicit SymmetricExpansion(int variables, int max_total_degree = -1);

    int variables() const { return variables_; }
    int max_total_degree() const { return max_total_degree_; }
    const std::map<Exponents, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents &e, const Rational &c);
    Rational coefficient(const Exponents &e) const;

    friend SymmetricExpansion operator+(const SymmetricExpansion &a, const SymmetricExpansion &b);
    friend SymmetricExpansion operator-(const SymmetricExpansion &a, const SymmetricExpansion &b);
    friend SymmetricExpansion operator*(const SymmetricExpansion &a, const SymmetricExpansion &b);
    friend bool operator==(const SymmetricExpansion &a, const SymmetricExpansion &b);

    /// True iff invariant under every adjacent transposition of variables
    /// (checked exactly, which suffices: transpositions generate S_n).
    bool is_symmetric() const;

    SymmetricExpansion homogeneous_part(int degree) const;
    int total_degree() const;

    /// The elementary symmetric polynomial sigma_k in the given variables.
    static SymmetricExpansion elementary(int variables, int k);

  private:
    int variables_;
    int max_total_degree_;
    std::map<Exponents, Rational> terms_;
};

/// Rewrite a symmetric polynomial in the elementary-symmetric basis and
/// return it as a polynomial in the Pontrjagin symbols (sigma_j -> p_{4j}).
/// Triangular elimination against the lex-leading monomial; exact.
/// Throws std::domain_error("symmetry violation ...") on non-symmetric input
/// and requires homogeneous input (the result is a weighted polynomial).
GradedPoly elementary_symmetric_decompose(const SymmetricExpansion &expansion);

}  // namespace lookalike
