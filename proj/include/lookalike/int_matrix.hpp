#pragma once

#include "lookalike/rational.hpp"

#include <vector>

namespace lookalike {

/// Dense integer matrix over BigInt.  Zero-row and zero-column shapes are
/// legal; they show up as the end maps of exact sequences.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::vector<std::vector<BigInt>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt &at(int i, int j);
    const BigInt &at(int i, int j) const;

    IntMatrix transposed() const;
    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend bool operator==(const IntMatrix &a, const IntMatrix &b);
    friend bool operator!=(const IntMatrix &a, const IntMatrix &b) { return !(a == b); }

    /// Glue b to the right of a (same row count).
    static IntMatrix augment(const IntMatrix &a, const IntMatrix &b);

    BigInt determinant() const;  // square matrices only

  private:
    int rows_;
    int cols_;
    std::vector<BigInt> data_;
};

/// Smith normal form U*A*V = D with U, V unimodular and the diagonal a
/// divisor chain d_1 | d_2 | ... (non-negative, zeros trailing).
struct SmithNormalForm {
    std::vector<BigInt> divisors;  // length min(rows, cols)
    IntMatrix left;                // U
    IntMatrix right;               // V
};

SmithNormalForm smith_normal_form(const IntMatrix &a);

/// Basis of the integer kernel lattice {x : A x = 0}, one column per basis
/// vector.
IntMatrix integer_kernel(const IntMatrix &a);

/// Canonical form of the column span (lattice) of A: the row-style Hermite
/// normal form of A^T, zero rows dropped.  Two matrices span the same
/// lattice iff their canonical forms are equal.
IntMatrix lattice_canonical_form(const IntMatrix &a);

}  // namespace lookalike
