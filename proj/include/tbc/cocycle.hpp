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

#include "tbc/triangulation.hpp"

namespace tbc {

/// Integer weights on face gluings encoding a map to the circle. One weight
/// per unordered face pair, stored on the pair's canonical direction;
/// traversing a gluing backwards negates it.
struct TransferCocycle {
    std::vector<long long> weight;  // indexed by pair id

    /// Weight seen when crossing from (tet, face) to its partner.
    long long signed_weight(const IdealTriangulation& t, int tet, int face) const;
};

/// True when the signed weight sum around every edge class vanishes.
bool cocycle_condition_holds(const IdealTriangulation& t, const TransferCocycle& w);

/// A cocycle whose periods on the dual-graph loops generate all of Z.
///
/// Weights on a spanning tree of the face-pairing graph are gauged to zero,
/// the edge-class conditions become an integer linear system on the
/// remaining weights, and a primitive kernel vector (first basis vector of
/// the kernel lattice, sign-normalized so an all-nonnegative representative
/// is preferred, else first nonzero entry positive) is returned.
///
/// Throws DomainError when the triangulation is disconnected, and
/// StructuralError("no circle-valued direction") when the kernel is trivial
/// (first homology has no free part detectable on the dual graph).
TransferCocycle transfer_cocycle(const IdealTriangulation& t);

/// Periods of the cocycle on the fundamental loops of the dual graph
/// (spanning tree from tetrahedron 0, loops ordered by pair id).
std::vector<long long> cocycle_periods(const IdealTriangulation& t, const TransferCocycle& w);

/// Cyclic n-fold cover: tetrahedra are (base tetrahedron, level), indexed
/// level * tet_count + base_tet; a gluing of weight k sends level j to
/// level (j + k) mod n with the same vertex map. Validates the cocycle
/// condition before building.
IdealTriangulation cyclic_cover(const IdealTriangulation& t, const TransferCocycle& w, int n);

}  // namespace tbc
