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
#include <optional>
#include <utility>
#include <vector>

#include "tbc/perm4.hpp"

namespace tbc {

/// One side of a face identification: face `face` of the owning tetrahedron
/// is glued to face `face_to` of `tet_to` by the vertex permutation `perm`
/// (perm maps vertex i of the owner to vertex perm[i] of the target; faces
/// are indexed by their opposite vertex, so perm[face] == face_to).
struct FaceGluing {
    int tet_to = -1;
    int face_to = -1;
    Perm4 perm;

    bool operator==(const FaceGluing&) const = default;
};

/// Ideal triangulation: tetrahedra with all 4k faces glued in pairs.
///
/// Construction always validates totality (every face glued), the gluing
/// involution, label ranges, and rejects a face glued to itself. Everything
/// is immutable afterwards; derived data (edge classes, orientation) is
/// computed on demand.
class IdealTriangulation {
public:
    /// `gluings[t][f]` describes the partner of face f of tetrahedron t.
    explicit IdealTriangulation(std::vector<std::array<FaceGluing, 4>> gluings);

    int tet_count() const { return static_cast<int>(tets_.size()); }
    const FaceGluing& gluing(int tet, int face) const { return tets_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)]; }

    /// Tetrahedron orientation signs (+1/-1) making every face pairing
    /// orientation reversing, or nullopt when no consistent labeling exists.
    /// Sign of tetrahedron 0 is +1 when defined.
    std::optional<std::vector<int>> orientation_signs() const;
    bool orientable() const { return orientation_signs().has_value(); }

    /// True when the face-pairing graph is connected.
    bool connected() const;

    // -- face-pair (dual edge) indexing ------------------------------------
    //
    // Each unordered pair of glued faces gets an id in [0, 2*tet_count).
    // The canonical direction of a pair is from its lexicographically
    // smaller (tet, face) side.

    int pair_count() const { return 2 * tet_count(); }
    int pair_id(int tet, int face) const { return pair_id_[static_cast<std::size_t>(4 * tet + face)]; }
    bool pair_is_canonical(int tet, int face) const;
    /// Canonical (tet, face) side of a pair.
    std::pair<int, int> pair_rep(int pid) const { return pair_rep_[static_cast<std::size_t>(pid)]; }

    bool operator==(const IdealTriangulation& o) const { return tets_ == o.tets_; }

private:
    std::optional<std::vector<int>> compute_orientation() const;

    std::vector<std::array<FaceGluing, 4>> tets_;
    std::vector<int> pair_id_;
    std::vector<std::pair<int, int>> pair_rep_;
    std::optional<std::vector<int>> orientation_;  // computed at construction
};

// ---------------------------------------------------------------------------
// Tetrahedron edges. Edge index e in [0,6) stands for the vertex pair:
//   0:{0,1}  1:{0,2}  2:{0,3}  3:{1,2}  4:{1,3}  5:{2,3}
// Opposite edges satisfy e + opposite(e) == 5, and opposite-pair slots
// min(e, 5-e) in {0,1,2} are where shape parameters live.

int edge_index(int a, int b);
std::pair<int, int> edge_vertices(int e);
inline int opposite_edge(int e) { return 5 - e; }
inline int edge_pair_slot(int e) { return e < 3 ? e : 5 - e; }

/// One (tetrahedron, edge) incidence in the rotation around an edge class.
struct EdgeIncidence {
    int tet = 0;
    int v0 = 0, v1 = 0;  // v0 < v1

    int edge() const { return edge_index(v0, v1); }
    bool operator==(const EdgeIncidence&) const = default;
};

/// Orbit of tetrahedron edges under the face gluings, in rotation order.
struct EdgeClass {
    std::vector<EdgeIncidence> cycle;

    /// Gluing crossed after each incidence: (face-pair id, +1 when crossed
    /// in the pair's canonical direction, -1 backwards). Aligned with
    /// `cycle`; one full rotation crosses `valence()` gluings.
    std::vector<std::pair<int, int>> crossings;

    int valence() const { return static_cast<int>(cycle.size()); }
};

/// Edge classes with their cyclic incidence order, computed by walking the
/// face gluings around each edge. Throws StructuralError when a walk folds
/// an edge back onto itself with reversed direction (no coherent rotation).
std::vector<EdgeClass> edge_classes(const IdealTriangulation& t);

/// Same partition computed independently with a union-find over the 6k
/// (tetrahedron, edge) incidences; no cyclic order. The two computations
/// must agree on every valid triangulation.
std::vector<std::vector<int>> edge_partition_union_find(const IdealTriangulation& t);

/// Combinatorics of the dual special spine.
struct SpineStats {
    int vertices = 0;  // = tetrahedra
    int edges = 0;     // = face pairs = 2 * tetrahedra
    int cells = 0;     // = edge classes
    std::vector<int> cell_boundary_lengths;  // sorted edge-class valences
    int euler = 0;     // vertices - edges + cells

    bool operator==(const SpineStats&) const = default;
};

SpineStats spine_stats(const IdealTriangulation& t);

/// Two-tetrahedron gluing pattern in letter notation: four matchings
/// "XYZ<->PQR" separated by commas, where X,Y,Z are three of the vertices
/// A..D of tetrahedron 0 and P,Q,R three of the vertices E..H of
/// tetrahedron 1. Matched letters give the vertex map, the omitted letters
/// the glued faces. Rejects anything that does not describe a valid
/// triangulation.
IdealTriangulation from_letter_pattern(const std::string& pattern);

/// The two-tetrahedron triangulation of the figure eight knot complement,
/// entered from its classical face-pairing pattern.
IdealTriangulation build_figure_eight();

/// The two-tetrahedron triangulation of the other cusped hyperbolic
/// manifold of volume 2V (the figure eight sibling).
IdealTriangulation build_sibling();

/// Combinatorial isomorphism search: seed the image of tetrahedron 0 with
/// every (target tetrahedron, vertex permutation) and propagate through the
/// gluings. Complete for connected triangulations.
bool isomorphic(const IdealTriangulation& a, const IdealTriangulation& b);

}  // namespace tbc
