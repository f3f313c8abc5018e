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
#include "tbc/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace tbc {

const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> t{};
        std::array<int, 4> v{0, 1, 2, 3};
        int i = 0;
        do {
            t[static_cast<std::size_t>(i++)] = Perm4(v[0], v[1], v[2], v[3]);
        } while (std::next_permutation(v.begin(), v.end()));
        return t;
    }();
    return table;
}

IdealTriangulation::IdealTriangulation(std::vector<std::array<FaceGluing, 4>> gluings)
    : tets_(std::move(gluings)) {
    const int k = tet_count();
    for (int t = 0; t < k; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tets_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            if (g.tet_to < 0 || g.face_to < 0)
                throw StructuralError("face (" + std::to_string(t) + "," + std::to_string(f) + ") is unglued");
            if (g.tet_to >= k || g.face_to > 3)
                throw StructuralError("gluing target out of range at face (" + std::to_string(t) + "," +
                                      std::to_string(f) + ")");
            if (g.perm[f] != g.face_to)
                throw StructuralError("vertex map does not carry face " + std::to_string(f) + " of tetrahedron " +
                                      std::to_string(t) + " onto its target face");
            if (g.tet_to == t && g.face_to == f)
                throw StructuralError("face (" + std::to_string(t) + "," + std::to_string(f) +
                                      ") glued to itself");
            const FaceGluing& back = tets_[static_cast<std::size_t>(g.tet_to)][static_cast<std::size_t>(g.face_to)];
            if (back.tet_to != t || back.face_to != f || !(back.perm == g.perm.inverse()))
                throw StructuralError("gluing of face (" + std::to_string(t) + "," + std::to_string(f) +
                                      ") is not involutive");
        }
    }

    // Face-pair ids, canonical side = lexicographically smaller (tet, face).
    pair_id_.assign(static_cast<std::size_t>(4 * k), -1);
    for (int t = 0; t < k; ++t)
        for (int f = 0; f < 4; ++f) {
            if (pair_id_[static_cast<std::size_t>(4 * t + f)] >= 0) continue;
            const FaceGluing& g = tets_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            const int pid = static_cast<int>(pair_rep_.size());
            pair_id_[static_cast<std::size_t>(4 * t + f)] = pid;
            pair_id_[static_cast<std::size_t>(4 * g.tet_to + g.face_to)] = pid;
            pair_rep_.emplace_back(t, f);
        }

    orientation_ = compute_orientation();
}

bool IdealTriangulation::pair_is_canonical(int tet, int face) const {
    return pair_rep_[static_cast<std::size_t>(pair_id(tet, face))] == std::pair<int, int>(tet, face);
}

std::optional<std::vector<int>> IdealTriangulation::compute_orientation() const {
    const int k = tet_count();
    std::vector<int> sign(static_cast<std::size_t>(k), 0);
    bool ok = true;
    for (int root = 0; root < k && ok; ++root) {
        if (sign[static_cast<std::size_t>(root)] != 0) continue;
        sign[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty() && ok) {
            const int t = q.front();
            q.pop();
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = tets_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                // An orientation-reversing face identification has an odd
                // vertex map between like-oriented tetrahedra.
                const int want = g.perm.is_even() ? -sign[static_cast<std::size_t>(t)] : sign[static_cast<std::size_t>(t)];
                int& s = sign[static_cast<std::size_t>(g.tet_to)];
                if (s == 0) {
                    s = want;
                    q.push(g.tet_to);
                } else if (s != want) {
                    ok = false;
                    break;
                }
            }
        }
    }
    if (!ok) return std::nullopt;
    return sign;
}

std::optional<std::vector<int>> IdealTriangulation::orientation_signs() const { return orientation_; }

bool IdealTriangulation::connected() const {
    const int k = tet_count();
    if (k == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int t = q.front();
        q.pop();
        for (int f = 0; f < 4; ++f) {
            const int u = tets_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)].tet_to;
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++count;
                q.push(u);
            }
        }
    }
    return count == k;
}

namespace {
constexpr int kEdgeTable[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};
constexpr int kEdgeV0[6] = {0, 0, 0, 1, 1, 2};
constexpr int kEdgeV1[6] = {1, 2, 3, 2, 3, 3};
}  // namespace

int edge_index(int a, int b) {
    if (a == b || a < 0 || b < 0 || a > 3 || b > 3) throw DomainError("bad edge vertex pair");
    return kEdgeTable[a][b];
}

std::pair<int, int> edge_vertices(int e) {
    if (e < 0 || e > 5) throw DomainError("bad edge index");
    return {kEdgeV0[e], kEdgeV1[e]};
}

std::vector<EdgeClass> edge_classes(const IdealTriangulation& t) {
    const int k = t.tet_count();
    std::vector<char> visited(static_cast<std::size_t>(6 * k), 0);
    std::vector<EdgeClass> classes;

    for (int t0 = 0; t0 < k; ++t0) {
        for (int e0 = 0; e0 < 6; ++e0) {
            if (visited[static_cast<std::size_t>(6 * t0 + e0)]) continue;

            // Walk state: directed edge (a, b) of tetrahedron `tet`, about to
            // leave through face `exit` (one of the two non-edge vertices).
            auto [sa, sb] = edge_vertices(e0);
            const int sx = [&] {
                for (int v = 0; v < 4; ++v)
                    if (v != sa && v != sb) return v;
                return -1;
            }();
            const int start_tet = t0, start_a = sa, start_b = sb, start_exit = sx;

            EdgeClass cls;
            // direction seen for each wedge in this walk: 0 unseen, 1 as
            // (min,max), 2 reversed
            std::vector<std::pair<int, int>> local;  // (wedge id, direction)
            int tet = start_tet, a = start_a, b = start_b, exit_face = start_exit;
            const int step_cap = 12 * k + 1;
            for (int step = 0; step < step_cap; ++step) {
                const int wedge = 6 * tet + edge_index(a, b);
                const int dir = a < b ? 1 : 2;
                for (const auto& [w, d] : local) {
                    if (w != wedge) continue;
                    if (d != dir)
                        throw StructuralError(
                            "edge class folds back onto tetrahedron " + std::to_string(tet) +
                            " edge (" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) +
                            ") with reversed direction; no coherent rotation around this edge");
                    throw StructuralError("rotation walk revisited a wedge before closing");
                }
                if (visited[static_cast<std::size_t>(wedge)])
                    throw StructuralError("rotation walk crossed into another edge class");
                visited[static_cast<std::size_t>(wedge)] = 1;
                local.emplace_back(wedge, dir);
                cls.cycle.push_back(EdgeIncidence{tet, std::min(a, b), std::max(a, b)});

                const int y = 6 - a - b - exit_face;  // the other non-edge vertex
                const FaceGluing& g = t.gluing(tet, exit_face);
                cls.crossings.emplace_back(t.pair_id(tet, exit_face),
                                           t.pair_is_canonical(tet, exit_face) ? 1 : -1);
                const int na = g.perm[a], nb = g.perm[b];
                const int nexit = g.perm[y];
                tet = g.tet_to;
                a = na;
                b = nb;
                exit_face = nexit;
                if (tet == start_tet && a == start_a && b == start_b && exit_face == start_exit) break;
                if (step == step_cap - 1)
                    throw StructuralError("rotation walk failed to close");
            }
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

}  // namespace

std::vector<std::vector<int>> edge_partition_union_find(const IdealTriangulation& t) {
    const int k = t.tet_count();
    UnionFind uf(6 * k);
    for (int tet = 0; tet < k; ++tet)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            // Every edge of face f is identified with its image edge.
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                for (int b = a + 1; b < 4; ++b) {
                    if (b == f) continue;
                    uf.unite(6 * tet + edge_index(a, b), 6 * g.tet_to + edge_index(g.perm[a], g.perm[b]));
                }
            }
        }
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(static_cast<std::size_t>(6 * k), -1);
    for (int w = 0; w < 6 * k; ++w) {
        const int r = uf.find(w);
        if (group_of[static_cast<std::size_t>(r)] < 0) {
            group_of[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(r)])].push_back(w);
    }
    return groups;
}

SpineStats spine_stats(const IdealTriangulation& t) {
    SpineStats s;
    s.vertices = t.tet_count();
    s.edges = 2 * t.tet_count();
    const auto classes = edge_classes(t);
    s.cells = static_cast<int>(classes.size());
    for (const auto& c : classes) s.cell_boundary_lengths.push_back(c.valence());
    std::sort(s.cell_boundary_lengths.begin(), s.cell_boundary_lengths.end());
    s.euler = s.vertices - s.edges + s.cells;
    return s;
}

namespace {

std::vector<std::array<FaceGluing, 4>> empty_gluings(int k) {
    return std::vector<std::array<FaceGluing, 4>>(static_cast<std::size_t>(k));
}

void glue_both(std::vector<std::array<FaceGluing, 4>>& g, int t, int f, int t2, int f2, const Perm4& p) {
    g[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = FaceGluing{t2, f2, p};
    g[static_cast<std::size_t>(t2)][static_cast<std::size_t>(f2)] = FaceGluing{t, f, p.inverse()};
}

}  // namespace

IdealTriangulation from_letter_pattern(const std::string& pattern) {
    // Split on commas into "XYZ<->PQR" matchings.
    std::vector<std::pair<std::string, std::string>> matchings;
    std::string side_a, side_b, cur;
    auto flush = [&] {
        if (side_a.empty() && cur.empty()) return;
        if (side_a.size() != 3 || cur.size() != 3)
            throw DomainError("bad matching in gluing pattern: expected 'XYZ<->PQR'");
        matchings.emplace_back(side_a, cur);
        side_a.clear();
        cur.clear();
    };
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const char ch = pattern[i];
        if (ch == ' ' || ch == '\t') continue;
        if (ch == ',') {
            flush();
        } else if (ch == '<' && i + 2 < pattern.size() && pattern[i + 1] == '-' && pattern[i + 2] == '>') {
            if (!side_a.empty() || cur.size() != 3)
                throw DomainError("bad matching in gluing pattern: expected three letters before '<->'");
            side_a = cur;
            cur.clear();
            i += 2;
        } else {
            cur.push_back(ch);
        }
    }
    flush();
    if (matchings.size() != 4)
        throw DomainError("gluing pattern must contain exactly 4 face matchings");

    auto g = empty_gluings(2);
    bool used0[4] = {}, used1[4] = {};
    for (const auto& [left, right] : matchings) {
        int seen0 = 0, seen1 = 0;
        int map[4] = {-1, -1, -1, -1};  // vertex of tet 0 -> vertex of tet 1
        for (int i = 0; i < 3; ++i) {
            const int a = left[static_cast<std::size_t>(i)] - 'A';
            const int b = right[static_cast<std::size_t>(i)] - 'E';
            if (a < 0 || a > 3) throw DomainError("left side of a matching must use letters A..D");
            if (b < 0 || b > 3) throw DomainError("right side of a matching must use letters E..H");
            if (seen0 & (1 << a)) throw DomainError("repeated letter in gluing pattern");
            if (seen1 & (1 << b)) throw DomainError("repeated letter in gluing pattern");
            seen0 |= 1 << a;
            seen1 |= 1 << b;
            map[a] = b;
        }
        // The omitted letters are the glued faces; they map to each other.
        int f0 = -1, f1 = -1;
        for (int v = 0; v < 4; ++v) {
            if (!(seen0 & (1 << v))) f0 = v;
            if (!(seen1 & (1 << v))) f1 = v;
        }
        map[f0] = f1;
        if (used0[f0] || used1[f1]) throw DomainError("face glued twice in gluing pattern");
        used0[f0] = used1[f1] = true;
        glue_both(g, 0, f0, 1, f1, Perm4(map[0], map[1], map[2], map[3]));
    }
    return IdealTriangulation(std::move(g));
}

IdealTriangulation build_figure_eight() {
    // A,B,C,D are the vertices of tetrahedron 0 and E,F,G,H of
    // tetrahedron 1; matched letters give the vertex maps.
    return from_letter_pattern("ABC<->EHF, BAD<->GEF, CDA<->GFH, DCB<->EGH");
}

IdealTriangulation build_sibling() {
    return from_letter_pattern("ABC<->FHE, BAD<->FEG, CDA<->HFG, DCB<->HGE");
}

namespace {

// Propagate the seed "tet 0 of a maps to tetrahedron s of b by perm p"
// through the gluings; complete for connected triangulations.
bool try_isomorphism(const IdealTriangulation& a, const IdealTriangulation& b, int s, const Perm4& p) {
    const int k = a.tet_count();
    std::vector<int> img_tet(static_cast<std::size_t>(k), -1);
    std::vector<Perm4> img_perm(static_cast<std::size_t>(k));
    std::vector<char> used(static_cast<std::size_t>(k), 0);

    img_tet[0] = s;
    img_perm[0] = p;
    used[static_cast<std::size_t>(s)] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        const int t = q.front();
        q.pop();
        const int bt = img_tet[static_cast<std::size_t>(t)];
        const Perm4& pt = img_perm[static_cast<std::size_t>(t)];
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& ga = a.gluing(t, f);
            const FaceGluing& gb = b.gluing(bt, pt[f]);
            const Perm4 induced = gb.perm.after(pt).after(ga.perm.inverse());
            int& it = img_tet[static_cast<std::size_t>(ga.tet_to)];
            if (it < 0) {
                if (used[static_cast<std::size_t>(gb.tet_to)]) return false;
                it = gb.tet_to;
                img_perm[static_cast<std::size_t>(ga.tet_to)] = induced;
                used[static_cast<std::size_t>(gb.tet_to)] = 1;
                q.push(ga.tet_to);
            } else if (it != gb.tet_to || !(img_perm[static_cast<std::size_t>(ga.tet_to)] == induced)) {
                return false;
            }
        }
    }
    for (int t = 0; t < k; ++t)
        if (img_tet[static_cast<std::size_t>(t)] < 0) return false;
    return true;
}

}  // namespace

bool isomorphic(const IdealTriangulation& a, const IdealTriangulation& b) {
    if (a.tet_count() != b.tet_count()) return false;
    if (a.tet_count() == 0) return true;
    if (!a.connected() || !b.connected())
        throw DomainError("isomorphism search requires connected triangulations");
    for (int s = 0; s < b.tet_count(); ++s)
        for (const Perm4& p : Perm4::all())
            if (try_isomorphism(a, b, s, p)) return true;
    return false;
}

}  // namespace tbc
