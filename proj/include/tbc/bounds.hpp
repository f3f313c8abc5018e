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

#include <optional>
#include <string>
#include <vector>

#include "tbc/bigint.hpp"

namespace tbc {

enum class BoundSource { Torsion, CensusFloor, Volume, Combined };

const char* to_string(BoundSource s);

/// One lower bound on complexity, with the real value it was rounded from
/// and enough provenance to audit the rounding.
struct LowerBound {
    long long value = 0;     // integer bound, >= 0
    BoundSource source = BoundSource::Torsion;
    double raw = 0.0;        // real value before the ceiling
    bool clamped = false;    // raw was negative; complexity cannot be
    bool boundary_case = false;  // raw within 1e-9 of an integer; rounded down
    std::string provenance;

    bool operator==(const LowerBound&) const = default;
};

/// Ceilings of measured reals must be auditable: a raw value within
/// `kBoundaryEps` of an integer is rounded DOWN (the conservative side) and
/// flagged as a boundary case.
inline constexpr double kBoundaryEps = 1e-9;

/// Census fact: no torus bundle of this family appears among the closed
/// orientable 3-manifolds of complexity at most 6.
inline constexpr long long kMnCensusFloor = 7;
inline constexpr const char* kMnCensusFloorNote =
    "cited: census of closed orientable 3-manifolds up to complexity 6";

/// First Betti number of every torus bundle in the monodromy family.
inline constexpr int kMnBetti1 = 1;

/// Cited upper bound c <= 2n + 5 for the compact bundles (spine
/// construction published elsewhere; not rebuilt here).
long long mn_cited_upper(long long n);

/// Limit constant 2*log5((1+sqrt 5)/2), approximately 0.598.
double mn_constant_limit();

/// Torsion lower bound ceil(2*log5(torsion) + beta1 - 1), clamped at 0.
/// torsion must be >= 1.
LowerBound mp_lower_bound(const BigInt& torsion, int beta1);

/// Lens space bound ceil(2*log5(p) - 1), clamped at 0; independent of q.
/// p must be >= 2.
LowerBound lens_lower_bound(const BigInt& p);

/// C_n = (1/n) * log5(torsion_order(n)).
double cn_constant(long long n);

/// max(census floor 7, torsion bound with beta1 = 1); exceeds 1.19n for
/// every n >= 1.
LowerBound mn_combined_lower_bound(long long n);

/// Volume bound ceil((vol - vol_error) / V) with V the maximal ideal
/// tetrahedron volume. Subtracting the error before the ceiling keeps the
/// bound sound. Requires vol > vol_error >= 0.
LowerBound volume_lower_bound(double vol, double vol_error);

/// Assembled bounds for one manifold of a family; the CLI renders these.
struct BoundReport {
    long long n = 0;
    std::string family;  // "mn", "lens", ...
    std::vector<LowerBound> bounds;
    std::optional<long long> upper;
    std::string upper_provenance;
    std::optional<long long> conjectured;

    long long best_lower() const;

    /// Hard internal consistency: every lower bound must be <= every upper
    /// bound present. Throws std::logic_error on violation.
    void check() const;
};

}  // namespace tbc
