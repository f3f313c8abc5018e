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
#include "tbc/bigint.hpp"

#include <cmath>
#include <cstdint>

#include "tbc/errors.hpp"

namespace tbc {

std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return static_cast<std::size_t>(msb(abs(x))) + 1;
}

double log5(const BigInt& x) {
    if (x < 1) throw DomainError("log5 requires a positive integer");
    static const double ln5 = std::log(5.0);
    const std::size_t bits = bit_length(x);
    if (bits <= 62) {
        return std::log(static_cast<double>(x.convert_to<std::uint64_t>())) / ln5;
    }
    // Mantissa from the top 62 bits, log5(2) per discarded bit.
    const std::size_t shift = bits - 62;
    const BigInt top = x >> static_cast<unsigned>(shift);
    const double mant = static_cast<double>(top.convert_to<std::uint64_t>());
    return (std::log(mant) + static_cast<double>(shift) * std::log(2.0)) / ln5;
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw DomainError("empty integer literal");
    const bool negative = text[0] == '-';
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw DomainError("bad integer literal: '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw DomainError("bad integer literal: '" + text + "'");
    }
    // Strip leading zeros; a leading 0 would otherwise read as octal.
    while (i + 1 < text.size() && text[i] == '0') ++i;
    const BigInt mag(text.substr(i));
    return negative ? -mag : mag;
}

}  // namespace tbc
