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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tbc {

/// Arbitrary-precision signed integer. All torsion orders, Fibonacci numbers
/// and matrix entries are exact; nothing in the exact layer ever rounds.
using BigInt = boost::multiprecision::cpp_int;

/// Number of bits of |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

/// log base 5 of x (x >= 1), accurate to well under 1e-12 absolute error
/// even for values with thousands of digits: the top 62 bits supply the
/// mantissa and the discarded bit count contributes log5(2) each.
double log5(const BigInt& x);

/// Parse a decimal integer (optional leading '-'). Throws DomainError on
/// malformed input.
BigInt parse_bigint(const std::string& text);

}  // namespace tbc
