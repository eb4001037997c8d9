#include "lookalike/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lookalike {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<BigInt>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

BigInt &IntMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const BigInt &IntMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix IntMatrix::augment(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("augment needs equal row counts");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return BigInt(1);
    // fraction-free Gaussian elimination (Bareiss)
    IntMatrix m = *this;
    int n = rows_;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return BigInt(0);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

namespace {

struct Working {
    IntMatrix a;
    IntMatrix u;  // row ops accumulate here
    IntMatrix v;  // column ops accumulate here

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const BigInt &f) {  // row dst += f * row src
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(int dst, int src, const BigInt &f) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

BigInt abs_big(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix &a) {
    Working w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    const int n = std::min(a.rows(), a.cols());

    for (int s = 0; s < n; ++s) {
        for (;;) {
            // smallest nonzero entry of the trailing block as pivot
            int pi = -1, pj = -1;
            BigInt best(0);
            for (int i = s; i < w.a.rows(); ++i)
                for (int j = s; j < w.a.cols(); ++j)
                    if (w.a.at(i, j) != 0 &&
                        (pi < 0 || abs_big(w.a.at(i, j)) < best)) {
                        best = abs_big(w.a.at(i, j));
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // trailing block is zero
            w.swap_rows(s, pi);
            w.swap_cols(s, pj);

            bool dirty = false;
            for (int i = s + 1; i < w.a.rows(); ++i) {
                if (w.a.at(i, s) == 0) continue;
                BigInt q = w.a.at(i, s) / w.a.at(s, s);
                w.add_row(i, s, -q);
                if (w.a.at(i, s) != 0) dirty = true;  // remainder: pivot will shrink
            }
            for (int j = s + 1; j < w.a.cols(); ++j) {
                if (w.a.at(s, j) == 0) continue;
                BigInt q = w.a.at(s, j) / w.a.at(s, s);
                w.add_col(j, s, -q);
                if (w.a.at(s, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the rest of the block
            bool divides = true;
            for (int i = s + 1; i < w.a.rows() && divides; ++i)
                for (int j = s + 1; j < w.a.cols() && divides; ++j)
                    if (w.a.at(i, j) % w.a.at(s, s) != 0) {
                        w.add_row(s, i, BigInt(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (s < n && w.a.at(s, s) < 0) w.negate_row(s);
    }

    SmithNormalForm out{std::vector<BigInt>(), w.u, w.v};
    out.divisors.reserve(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) out.divisors.push_back(w.a.at(s, s));
    return out;
}

IntMatrix integer_kernel(const IntMatrix &a) {
    SmithNormalForm snf = smith_normal_form(a);
    int n = a.cols();
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j) {
        bool zero = j >= static_cast<int>(snf.divisors.size()) ||
                    snf.divisors[static_cast<size_t>(j)] == 0;
        if (zero) free_cols.push_back(j);
    }
    IntMatrix basis(n, static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k)
        for (int i = 0; i < n; ++i) basis.at(i, k) = snf.right.at(i, free_cols[static_cast<size_t>(k)]);
    return basis;
}

IntMatrix lattice_canonical_form(const IntMatrix &a) {
    // row HNF of A^T: unique echelon with positive pivots and the entries
    // above each pivot reduced into [0, pivot)
    IntMatrix m = a.transposed();
    int rows = m.rows(), cols = m.cols();
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        // euclidean elimination below pivot_row in this column
        for (;;) {
            int best = -1;
            for (int i = pivot_row; i < rows; ++i)
                if (m.at(i, col) != 0 &&
                    (best < 0 || abs_big(m.at(i, col)) < abs_big(m.at(best, col))))
                    best = i;
            if (best < 0) break;
            if (best != pivot_row)
                for (int j = 0; j < cols; ++j) std::swap(m.at(best, j), m.at(pivot_row, j));
            bool done = true;
            for (int i = pivot_row + 1; i < rows; ++i) {
                if (m.at(i, col) == 0) continue;
                BigInt q = m.at(i, col) / m.at(pivot_row, col);
                for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(pivot_row, j);
                if (m.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(pivot_row, col) == 0) continue;
        if (m.at(pivot_row, col) < 0)
            for (int j = 0; j < cols; ++j) m.at(pivot_row, j) = -m.at(pivot_row, j);
        for (int i = 0; i < pivot_row; ++i) {
            BigInt q = m.at(i, col) / m.at(pivot_row, col);
            if (m.at(i, col) % m.at(pivot_row, col) < 0) q -= 1;  // floor for canonical range
            if (q != 0)
                for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    // drop zero rows (they sit at the bottom after elimination)
    IntMatrix out(pivot_row, cols);
    for (int i = 0; i < pivot_row; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

}  // namespace lookalike
