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

#include <array>
#include <cstdint>

#include "tbc/errors.hpp"

namespace tbc {

/// Permutation of the vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
public:
    Perm4() : img_{0, 1, 2, 3} {}

    Perm4(int a, int b, int c, int d) : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                             static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {
        int seen = 0;
        for (int v : {a, b, c, d}) {
            if (v < 0 || v > 3) throw DomainError("permutation image out of range");
            seen |= 1 << v;
        }
        if (seen != 0xF) throw DomainError("not a permutation of {0,1,2,3}");
    }

    int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = static_cast<std::uint8_t>(i);
        return r;
    }

    /// Composition: (p.after(q))[i] == p[q[i]].
    Perm4 after(const Perm4& q) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(q.img_[static_cast<std::size_t>(i)])];
        return r;
    }

    bool is_even() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++inv;
        return (inv & 1) == 0;
    }

    bool is_identity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3; }

    bool operator==(const Perm4&) const = default;

    /// All 24 permutations, in a fixed deterministic order.
    static const std::array<Perm4, 24>& all();

private:
    std::array<std::uint8_t, 4> img_;
};

}  // namespace tbc
