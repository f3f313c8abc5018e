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
#pragma once

#include <vector>

#include "tbc/bigint.hpp"

namespace tbc {

/// Exact 2x2 integer matrix, row-major [[a, b], [c, d]]. Holds monodromy
/// powers of A = [[2, 1], [1, 1]] and the torsion determinants derived from
/// them.
struct Matrix2Z {
    BigInt a, b, c, d;

    static Matrix2Z identity() { return {1, 0, 0, 1}; }

    Matrix2Z operator*(const Matrix2Z& o) const;
    Matrix2Z operator-(const Matrix2Z& o) const;

    BigInt det() const { return a * d - b * c; }
    BigInt trace() const { return a + d; }

    bool operator==(const Matrix2Z&) const = default;
};

/// Dense integer matrix of arbitrary shape. Feeds the Smith normal form and
/// the cocycle linear algebra; sizes stay tiny (at most a few hundred rows).
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

/// Smith normal form of an integer matrix M: unimodular transforms with
/// left * M * right equal to the diagonal matrix carrying `diagonal`.
/// Divisors are nonnegative, each divides the next, zeros come last.
struct SmithForm {
    std::vector<BigInt> diagonal;  // length min(rows, cols)
    IntMatrix left;                // rows x rows, |det| = 1
    IntMatrix right;               // cols x cols, |det| = 1

    int rank() const;

    /// Order of the torsion subgroup of coker(Z^cols -> Z^rows): the product
    /// of the nonzero divisors.
    BigInt cokernel_torsion() const;

    /// Free rank of coker(Z^cols -> Z^rows): rows - rank.
    int cokernel_free_rank() const { return left.rows() - rank(); }
};

/// k-th Fibonacci number with the indexing fixed by the monodromy powers:
/// fibonacci(1) = fibonacci(2) = 1. Rejects k < 1.
BigInt fibonacci(long long k);

/// A^n for the monodromy A = [[2, 1], [1, 1]], by exact binary
/// exponentiation. n >= 0; det is always 1.
Matrix2Z monodromy_power(long long n);

/// |det(A^n - I)|, the order of the torsion subgroup of the first homology
/// of the torus bundle with monodromy A^n. n >= 1.
BigInt torsion_order(long long n);

/// Smith normal form by elimination with least-absolute-value pivoting.
/// Handles any shape, including zero and non-square matrices.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace tbc
