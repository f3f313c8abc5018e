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

#include <algorithm>
#include <set>

#include "tbc/cocycle.hpp"
#include "tbc/errors.hpp"
#include "tbc/triangulation.hpp"

using namespace tbc;

namespace {

// The walk and the union-find must induce the same partition of the 6k
// (tetrahedron, edge) incidences.
void check_partitions_agree(const IdealTriangulation& t) {
    std::set<std::set<int>> walk;
    for (const auto& cls : edge_classes(t)) {
        std::set<int> s;
        for (const auto& inc : cls.cycle) s.insert(6 * inc.tet + inc.edge());
        walk.insert(std::move(s));
    }
    std::set<std::set<int>> uf;
    for (const auto& group : edge_partition_union_find(t)) uf.insert(std::set<int>(group.begin(), group.end()));
    CHECK(walk == uf);
}

void check_involution(const IdealTriangulation& t) {
    for (int tet = 0; tet < t.tet_count(); ++tet)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            const FaceGluing& back = t.gluing(g.tet_to, g.face_to);
            CHECK(back.tet_to == tet);
            CHECK(back.face_to == f);
            CHECK(back.perm == g.perm.inverse());
            CHECK(g.perm[f] == g.face_to);
        }
}

int total_valence(const IdealTriangulation& t) {
    int total = 0;
    for (const auto& cls : edge_classes(t)) total += cls.valence();
    return total;
}

}  // namespace

TEST_CASE("perm4 basics") {
    for (const Perm4& p : Perm4::all()) {
        CHECK(p.after(p.inverse()).is_identity());
        CHECK(p.inverse().after(p).is_identity());
        for (const Perm4& q : Perm4::all())
            CHECK(p.after(q).is_even() == (p.is_even() == q.is_even()));
    }
    CHECK(Perm4(1, 0, 2, 3).is_even() == false);
    CHECK(Perm4(1, 2, 0, 3).is_even() == true);
    CHECK_THROWS_AS(Perm4(0, 0, 2, 3), DomainError);
    CHECK_THROWS_AS(Perm4(0, 1, 2, 4), DomainError);
}

TEST_CASE("edge indexing") {
    for (int e = 0; e < 6; ++e) {
        const auto [a, b] = edge_vertices(e);
        CHECK(edge_index(a, b) == e);
        CHECK(edge_index(b, a) == e);
        // opposite edges share no vertex and pair up across slot 5 - e
        const auto [c, d] = edge_vertices(opposite_edge(e));
        CHECK(std::set<int>({a, b, c, d}).size() == 4);
        CHECK(edge_pair_slot(e) == edge_pair_slot(opposite_edge(e)));
    }
    CHECK_THROWS_AS(edge_index(1, 1), DomainError);
}

TEST_CASE("figure eight triangulation") {
    const IdealTriangulation t = build_figure_eight();
    CHECK(t.tet_count() == 2);
    CHECK(t.connected());
    CHECK(t.orientable());
    check_involution(t);

    const auto classes = edge_classes(t);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].valence() == 6);
    CHECK(classes[1].valence() == 6);
    CHECK(total_valence(t) == 6 * t.tet_count());

    const SpineStats s = spine_stats(t);
    CHECK(s.vertices == 2);
    CHECK(s.edges == 4);
    CHECK(s.cells == 2);
    CHECK(s.cell_boundary_lengths == std::vector<int>{6, 6});
    CHECK(s.euler == 0);

    check_partitions_agree(t);
}

TEST_CASE("sibling triangulation") {
    const IdealTriangulation t = build_sibling();
    CHECK(t.tet_count() == 2);
    CHECK(t.orientable());
    check_involution(t);

    const auto classes = edge_classes(t);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].valence() == 6);
    CHECK(classes[1].valence() == 6);

    const SpineStats s = spine_stats(t);
    CHECK(s.vertices == 2);
    CHECK(s.edges == 4);
    CHECK(s.cells == 2);
    CHECK(s.euler == 0);

    check_partitions_agree(t);
}

TEST_CASE("figure eight and sibling are not isomorphic") {
    const IdealTriangulation f8 = build_figure_eight();
    const IdealTriangulation sib = build_sibling();
    CHECK_FALSE(isomorphic(f8, sib));
    CHECK(isomorphic(f8, f8));
    CHECK(isomorphic(sib, sib));
}

TEST_CASE("pair indexing") {
    const IdealTriangulation t = build_figure_eight();
    CHECK(t.pair_count() == 4);
    std::set<int> ids;
    for (int tet = 0; tet < 2; ++tet)
        for (int f = 0; f < 4; ++f) ids.insert(t.pair_id(tet, f));
    CHECK(ids.size() == 4);
    for (int pid = 0; pid < 4; ++pid) {
        const auto [tet, f] = t.pair_rep(pid);
        CHECK(t.pair_is_canonical(tet, f));
        const FaceGluing& g = t.gluing(tet, f);
        CHECK_FALSE(t.pair_is_canonical(g.tet_to, g.face_to));
        CHECK(t.pair_id(g.tet_to, g.face_to) == pid);
    }
}

TEST_CASE("construction rejects broken gluing data") {
    // unglued face
    {
        std::vector<std::array<FaceGluing, 4>> g(1);
        CHECK_THROWS_AS(IdealTriangulation(std::move(g)), StructuralError);
    }
    // vertex map does not carry the face onto its target
    {
        std::vector<std::array<FaceGluing, 4>> g(1);
        g[0][0] = FaceGluing{0, 1, Perm4(2, 1, 0, 3)};  // perm[0] = 2 != 1
        g[0][1] = FaceGluing{0, 0, Perm4(2, 1, 0, 3)};
        g[0][2] = FaceGluing{0, 3, Perm4(0, 1, 3, 2)};
        g[0][3] = FaceGluing{0, 2, Perm4(0, 1, 3, 2)};
        CHECK_THROWS_AS(IdealTriangulation(std::move(g)), StructuralError);
    }
    // non-involutive pair
    {
        std::vector<std::array<FaceGluing, 4>> g(1);
        g[0][0] = FaceGluing{0, 1, Perm4(1, 0, 2, 3)};
        g[0][1] = FaceGluing{0, 0, Perm4(1, 2, 3, 0)};  // not the inverse
        g[0][2] = FaceGluing{0, 3, Perm4(0, 1, 3, 2)};
        g[0][3] = FaceGluing{0, 2, Perm4(0, 1, 3, 2)};
        CHECK_THROWS_AS(IdealTriangulation(std::move(g)), StructuralError);
    }
    // face glued to itself
    {
        std::vector<std::array<FaceGluing, 4>> g(1);
        g[0][0] = FaceGluing{0, 0, Perm4(0, 1, 3, 2)};
        g[0][1] = FaceGluing{0, 2, Perm4(0, 2, 1, 3)};
        g[0][2] = FaceGluing{0, 1, Perm4(0, 2, 1, 3)};
        g[0][3] = FaceGluing{0, 3, Perm4(0, 1, 2, 3)};
        CHECK_THROWS_AS(IdealTriangulation(std::move(g)), StructuralError);
    }
    // target out of range
    {
        std::vector<std::array<FaceGluing, 4>> g(1);
        g[0][0] = FaceGluing{1, 1, Perm4(1, 0, 2, 3)};
        g[0][1] = FaceGluing{0, 0, Perm4(1, 0, 2, 3)};
        g[0][2] = FaceGluing{0, 3, Perm4(0, 1, 3, 2)};
        g[0][3] = FaceGluing{0, 2, Perm4(0, 1, 3, 2)};
        CHECK_THROWS_AS(IdealTriangulation(std::move(g)), StructuralError);
    }
}

TEST_CASE("folded edge is a structural error") {
    // One tetrahedron; the gluing of face 0 to face 1 by the double
    // transposition maps edge {2,3} onto itself reversed, so there is no
    // coherent rotation around it.
    std::vector<std::array<FaceGluing, 4>> g(1);
    g[0][0] = FaceGluing{0, 1, Perm4(1, 0, 3, 2)};
    g[0][1] = FaceGluing{0, 0, Perm4(1, 0, 3, 2)};
    g[0][2] = FaceGluing{0, 3, Perm4(0, 1, 3, 2)};
    g[0][3] = FaceGluing{0, 2, Perm4(0, 1, 3, 2)};
    const IdealTriangulation t(std::move(g));
    CHECK_THROWS_AS(edge_classes(t), StructuralError);
}

TEST_CASE("non-orientable triangulation is detected") {
    std::vector<std::array<FaceGluing, 4>> g(1);
    const Perm4 p(1, 2, 0, 3), q(0, 2, 3, 1);
    g[0][0] = FaceGluing{0, 1, p};
    g[0][1] = FaceGluing{0, 0, p.inverse()};
    g[0][2] = FaceGluing{0, 3, q};
    g[0][3] = FaceGluing{0, 2, q.inverse()};
    const IdealTriangulation t(std::move(g));
    CHECK_FALSE(t.orientable());
    CHECK(edge_classes(t).size() == 1);  // valid rotation, just one-sided
    CHECK(total_valence(t) == 6);
}

TEST_CASE("orientation signs of the built-in triangulations") {
    const auto& f8 = build_figure_eight().orientation_signs();
    REQUIRE(f8.has_value());
    CHECK((*f8)[0] == 1);
    CHECK((*f8)[0] * (*f8)[1] == -1);  // all four vertex maps are even

    const auto& sib = build_sibling().orientation_signs();
    REQUIRE(sib.has_value());
    CHECK((*sib)[0] * (*sib)[1] == 1);  // all four vertex maps are odd
}

TEST_CASE("letter patterns parse or are rejected") {
    // whitespace-insensitive, identical to the builder output
    const IdealTriangulation t = from_letter_pattern("ABC <-> EHF,BAD<->GEF , CDA<->GFH, DCB<->EGH");
    CHECK(t == build_figure_eight());

    // incomplete
    CHECK_THROWS_AS(from_letter_pattern("ABC<->EHF"), DomainError);
    // malformed matching
    CHECK_THROWS_AS(from_letter_pattern("AB<->EHF, BAD<->GEF, CDA<->GFH, DCB<->EGH"), DomainError);
    CHECK_THROWS_AS(from_letter_pattern("ABC->EHF, BAD<->GEF, CDA<->GFH, DCB<->EGH"), DomainError);
    // repeated letter within a side
    CHECK_THROWS_AS(from_letter_pattern("ABB<->EHF, BAD<->GEF, CDA<->GFH, DCB<->EGH"), DomainError);
    // wrong alphabet on a side
    CHECK_THROWS_AS(from_letter_pattern("ABE<->EHF, BAD<->GEF, CDA<->GFH, DCB<->EGH"), DomainError);
    CHECK_THROWS_AS(from_letter_pattern("ABC<->ABD, BAD<->GEF, CDA<->GFH, DCB<->EGH"), DomainError);
    // a face used twice
    CHECK_THROWS_AS(from_letter_pattern("ABC<->EHF, ABC<->GEF, CDA<->GFH, DCB<->EGH"), DomainError);
    CHECK_THROWS_AS(from_letter_pattern("ABC<->EHF, BAD<->EHF, CDA<->GFH, DCB<->EGH"), DomainError);
}

TEST_CASE("partition agreement on covers") {
    const IdealTriangulation f8 = build_figure_eight();
    const TransferCocycle w = transfer_cocycle(f8);
    for (int n : {2, 3, 7}) {
        const IdealTriangulation cov = cyclic_cover(f8, w, n);
        check_partitions_agree(cov);
        check_involution(cov);
        CHECK(total_valence(cov) == 6 * cov.tet_count());
    }
}
