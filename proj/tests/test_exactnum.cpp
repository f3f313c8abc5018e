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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tbc/errors.hpp"
#include "tbc/exactnum.hpp"

using namespace tbc;

TEST_CASE("fibonacci base cases and small values") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(3) == 2);
    CHECK(fibonacci(13) == 233);
    CHECK(fibonacci(13) == oracle::naive_fibonacci(13));
    CHECK_THROWS_AS(fibonacci(0), DomainError);
    CHECK_THROWS_AS(fibonacci(-5), DomainError);
}

TEST_CASE("fibonacci matches the recurrence oracle") {
    for (long long k = 1; k <= 400; ++k) CHECK(fibonacci(k) == oracle::naive_fibonacci(k));
}

TEST_CASE("Cassini identity") {
    // fib(k+1) fib(k-1) - fib(k)^2 = (-1)^k, independent of how fib is
    // computed.
    for (long long k = 2; k <= 300; ++k) {
        const BigInt lhs = fibonacci(k + 1) * fibonacci(k - 1) - fibonacci(k) * fibonacci(k);
        CHECK(lhs == (k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("monodromy powers") {
    CHECK(monodromy_power(0) == Matrix2Z::identity());
    CHECK(monodromy_power(1) == Matrix2Z{2, 1, 1, 1});
    CHECK(monodromy_power(2) == Matrix2Z{5, 3, 3, 2});
    CHECK_THROWS_AS(monodromy_power(-1), DomainError);
}

TEST_CASE("monodromy power entries follow the Fibonacci pattern") {
    for (long long n = 1; n <= 100; ++n) {
        const Matrix2Z m = monodromy_power(n);
        CHECK(m.a == fibonacci(2 * n + 1));
        CHECK(m.b == fibonacci(2 * n));
        CHECK(m.c == fibonacci(2 * n));
        CHECK(m.d == fibonacci(2 * n - 1));
        CHECK(m.det() == 1);
    }
}

TEST_CASE("2x2 multiplication is associative") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    auto rnd = [&] { return Matrix2Z{d(rng), d(rng), d(rng), d(rng)}; };
    for (int i = 0; i < 200; ++i) {
        const Matrix2Z a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("torsion order") {
    CHECK(torsion_order(1) == 1);  // det(A - I) = -1
    CHECK(torsion_order(2) == 5);  // det [[4,3],[3,1]] = -5
    CHECK_THROWS_AS(torsion_order(0), DomainError);

    // Three independent paths: determinant, the Fibonacci formula, and the
    // product of Smith divisors of A^n - I.
    for (long long n = 1; n <= 100; ++n) {
        const BigInt det_path = torsion_order(n);
        const BigInt fib_path = fibonacci(2 * n + 1) + fibonacci(2 * n - 1) - 2;
        CHECK(det_path == fib_path);

        const Matrix2Z m = monodromy_power(n) - Matrix2Z::identity();
        IntMatrix im(2, 2);
        im.at(0, 0) = m.a;
        im.at(0, 1) = m.b;
        im.at(1, 0) = m.c;
        im.at(1, 1) = m.d;
        CHECK(smith_normal_form(im).cokernel_torsion() == det_path);
    }
}

TEST_CASE("torsion identity over the full acceptance range") {
    for (long long n = 101; n <= 200; ++n)
        CHECK(torsion_order(n) == fibonacci(2 * n + 1) + fibonacci(2 * n - 1) - 2);
}

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix diagonal_of(const SmithForm& s, int rows, int cols) {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = s.diagonal[i];
    return d;
}

void check_smith(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    // Reconstruction: left * m * right equals the diagonal matrix.
    CHECK(s.left * m * s.right == diagonal_of(s, m.rows(), m.cols()));
    // Unimodularity.
    CHECK(abs(oracle::det_expansion(s.left)) == 1);
    CHECK(abs(oracle::det_expansion(s.right)) == 1);
    // Nonnegative divisors, chain condition, zeros last.
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
        CHECK(s.diagonal[i] >= 0);
        if (i + 1 < s.diagonal.size()) {
            const BigInt &a = s.diagonal[i], &b = s.diagonal[i + 1];
            if (a == 0) CHECK(b == 0);
            if (a != 0 && b != 0) CHECK(b % a == 0);
        }
    }
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
    {
        const SmithForm s = smith_normal_form(from_rows({{1, 0}, {0, 1}}));
        CHECK(s.diagonal == std::vector<BigInt>{1, 1});
    }
    {
        // A^2 - I; hand elimination gives divisors (1, 5), cokernel Z/5.
        const SmithForm s = smith_normal_form(from_rows({{4, 3}, {3, 1}}));
        CHECK(s.diagonal == std::vector<BigInt>{1, 5});
        CHECK(s.cokernel_torsion() == 5);
        CHECK(s.cokernel_free_rank() == 0);
    }
    {
        const SmithForm s = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
        CHECK(s.diagonal == std::vector<BigInt>{0, 0});
        CHECK(s.cokernel_free_rank() == 2);
        CHECK(s.cokernel_torsion() == 1);
    }
}

TEST_CASE("smith normal form on non-square shapes") {
    check_smith(from_rows({{2, 4, 6}}));
    check_smith(from_rows({{2}, {4}, {6}}));
    check_smith(from_rows({{6, 4}, {2, 8}, {10, 0}}));
    const SmithForm s = smith_normal_form(from_rows({{2, 4, 6}}));
    CHECK(s.diagonal == std::vector<BigInt>{2});
}

TEST_CASE("smith normal form reconstruction on 500 random matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        check_smith(m);
    }
}

TEST_CASE("matrix product rejects shape mismatches") {
    IntMatrix a(2, 3), b(2, 2);
    CHECK_THROWS_AS(a * b, DomainError);
    CHECK((IntMatrix::identity(3) * IntMatrix::identity(3)) == IntMatrix::identity(3));
}

TEST_CASE("bigint log5 and helpers") {
    CHECK(log5(BigInt(5)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(log5(BigInt(1)) == doctest::Approx(0.0));
    CHECK(log5(BigInt(625)) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK_THROWS_AS(log5(BigInt(0)), DomainError);

    // Large values: log5(5^k * m) against k + log5(m).
    const BigInt big = pow(BigInt(5), 700) * 7;
    CHECK(log5(big) == doctest::Approx(700.0 + std::log(7.0) / std::log(5.0)).epsilon(1e-13));
    CHECK(bit_length(BigInt(1)) == 1);
    CHECK(bit_length(BigInt(0)) == 0);
    CHECK(bit_length(BigInt(8)) == 4);

    CHECK(parse_bigint("-123") == -123);
    CHECK(parse_bigint("00042") == 42);
    CHECK_THROWS_AS(parse_bigint("12x"), DomainError);
    CHECK_THROWS_AS(parse_bigint(""), DomainError);
    CHECK_THROWS_AS(parse_bigint("-"), DomainError);
}
