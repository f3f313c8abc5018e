/*
 * tbc: complexity certificates for torus bundles over the circle
 * Copyright 2026 the tbc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "tbc/exactnum.hpp"

#include <utility>

#include "tbc/errors.hpp"

namespace tbc {

Matrix2Z Matrix2Z::operator*(const Matrix2Z& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

Matrix2Z Matrix2Z::operator-(const Matrix2Z& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

int SmithForm::rank() const {
    int r = 0;
    for (const auto& d : diagonal)
        if (d != 0) ++r;
    return r;
}

BigInt SmithForm::cokernel_torsion() const {
    BigInt t = 1;
    for (const auto& d : diagonal)
        if (d != 0) t *= d;
    return t;
}

BigInt fibonacci(long long k) {
    if (k < 1) throw DomainError("fibonacci index must be >= 1");
    // Fast doubling: F(2m) = F(m)(2F(m+1) - F(m)), F(2m+1) = F(m)^2 + F(m+1)^2.
    BigInt f = 0, g = 1;  // F(m), F(m+1) with m starting at 0
    bool bits[64];
    int nb = 0;
    for (long long v = k; v > 0; v >>= 1) bits[nb++] = (v & 1) != 0;
    for (int i = nb - 1; i >= 0; --i) {
        BigInt f2 = f * (2 * g - f);
        BigInt g2 = f * f + g * g;
        if (bits[i]) {
            f = g2;
            g = f2 + g2;
        } else {
            f = std::move(f2);
            g = std::move(g2);
        }
    }
    return f;
}

Matrix2Z monodromy_power(long long n) {
    if (n < 0) throw DomainError("monodromy power requires n >= 0");
    Matrix2Z base{2, 1, 1, 1};
    Matrix2Z acc = Matrix2Z::identity();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

BigInt torsion_order(long long n) {
    if (n < 1) throw DomainError("torsion order requires n >= 1");
    const Matrix2Z m = monodromy_power(n) - Matrix2Z::identity();
    return abs(m.det());
}

namespace {

// Row/column elementary operations applied to the working matrix and the
// corresponding unimodular transform.

void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row_multiple(IntMatrix& m, int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += q * m.at(src, c);
}

void add_col_multiple(IntMatrix& m, int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += q * m.at(r, src);
}

void negate_row(IntMatrix& m, int i) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

// Least-absolute-value nonzero entry in the submatrix starting at (k, k);
// returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& a, int k, int& pi, int& pj) {
    bool found = false;
    BigInt best;
    for (int i = k; i < a.rows(); ++i)
        for (int j = k; j < a.cols(); ++j) {
            const BigInt& v = a.at(i, j);
            if (v == 0) continue;
            BigInt av = abs(v);
            if (!found || av < best) {
                best = std::move(av);
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    const int r = input.rows(), c = input.cols();
    IntMatrix a = input;
    IntMatrix left = IntMatrix::identity(r);
    IntMatrix right = IntMatrix::identity(c);

    const int n = r < c ? r : c;
    for (int k = 0; k < n; ++k) {
        int pi = 0, pj = 0;
        if (!find_pivot(a, k, pi, pj)) break;
        swap_rows(a, k, pi);
        swap_rows(left, k, pi);
        swap_cols(a, k, pj);
        swap_cols(right, k, pj);

        for (;;) {
            // Clear column k below the pivot.
            bool dirty = false;
            for (int i = k + 1; i < r; ++i) {
                if (a.at(i, k) == 0) continue;
                BigInt q = a.at(i, k) / a.at(k, k);  // truncated; remainder is smaller
                add_row_multiple(a, i, k, -q);
                add_row_multiple(left, i, k, -q);
                if (a.at(i, k) != 0) {
                    // Remainder beats the pivot; promote it and restart.
                    swap_rows(a, k, i);
                    swap_rows(left, k, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = k + 1; j < c; ++j) {
                if (a.at(k, j) == 0) continue;
                BigInt q = a.at(k, j) / a.at(k, k);
                add_col_multiple(a, j, k, -q);
                add_col_multiple(right, j, k, -q);
                if (a.at(k, j) != 0) {
                    swap_cols(a, k, j);
                    swap_cols(right, k, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Pivot now divides its row and column; enforce divisibility of
            // the rest of the submatrix so divisors form a chain.
            int bi = -1, bj = -1;
            for (int i = k + 1; i < r && bi < 0; ++i)
                for (int j = k + 1; j < c; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            (void)bj;
            add_row_multiple(a, k, bi, 1);
            add_row_multiple(left, k, bi, 1);
        }
    }

    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) < 0) {
            negate_row(a, k);
            negate_row(left, k);
        }
    }

    SmithForm out{std::vector<BigInt>(static_cast<std::size_t>(n)), std::move(left), std::move(right)};
    for (int k = 0; k < n; ++k) out.diagonal[static_cast<std::size_t>(k)] = a.at(k, k);
    return out;
}

}  // namespace tbc
