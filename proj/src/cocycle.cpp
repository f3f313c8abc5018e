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
#include "tbc/cocycle.hpp"

#include <numeric>
#include <queue>

#include "tbc/exactnum.hpp"

namespace tbc {

long long TransferCocycle::signed_weight(const IdealTriangulation& t, int tet, int face) const {
    const long long w = weight[static_cast<std::size_t>(t.pair_id(tet, face))];
    return t.pair_is_canonical(tet, face) ? w : -w;
}

bool cocycle_condition_holds(const IdealTriangulation& t, const TransferCocycle& w) {
    if (static_cast<int>(w.weight.size()) != t.pair_count()) return false;
    for (const auto& cls : edge_classes(t)) {
        long long sum = 0;
        for (const auto& [pid, sgn] : cls.crossings) sum += sgn * w.weight[static_cast<std::size_t>(pid)];
        if (sum != 0) return false;
    }
    return true;
}

namespace {

// Spanning tree of the face-pairing graph, rooted at tetrahedron 0.
// Returns per-pair tree membership and the signed tree-path potential of
// each tetrahedron (weights +1 in canonical direction are not used here;
// the potential is computed later against an actual weight vector).
std::vector<char> spanning_tree_pairs(const IdealTriangulation& t) {
    std::vector<char> in_tree(static_cast<std::size_t>(t.pair_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(t.tet_count()), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(v, f);
            if (!seen[static_cast<std::size_t>(g.tet_to)]) {
                seen[static_cast<std::size_t>(g.tet_to)] = 1;
                in_tree[static_cast<std::size_t>(t.pair_id(v, f))] = 1;
                q.push(g.tet_to);
            }
        }
    }
    return in_tree;
}

// Potential of each tetrahedron: signed weight sum along the tree path from
// tetrahedron 0.
std::vector<long long> tree_potential(const IdealTriangulation& t, const TransferCocycle& w,
                                      const std::vector<char>& in_tree) {
    std::vector<long long> phi(static_cast<std::size_t>(t.tet_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(t.tet_count()), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(v, f);
            if (!in_tree[static_cast<std::size_t>(t.pair_id(v, f))]) continue;
            if (seen[static_cast<std::size_t>(g.tet_to)]) continue;
            seen[static_cast<std::size_t>(g.tet_to)] = 1;
            phi[static_cast<std::size_t>(g.tet_to)] = phi[static_cast<std::size_t>(v)] + w.signed_weight(t, v, f);
            q.push(g.tet_to);
        }
    }
    return phi;
}

}  // namespace

std::vector<long long> cocycle_periods(const IdealTriangulation& t, const TransferCocycle& w) {
    const auto in_tree = spanning_tree_pairs(t);
    const auto phi = tree_potential(t, w, in_tree);
    std::vector<long long> periods;
    for (int pid = 0; pid < t.pair_count(); ++pid) {
        if (in_tree[static_cast<std::size_t>(pid)]) continue;
        const auto [tet, face] = t.pair_rep(pid);
        const FaceGluing& g = t.gluing(tet, face);
        // Loop: root -> tet, cross the pair, target -> root.
        periods.push_back(phi[static_cast<std::size_t>(tet)] + w.weight[static_cast<std::size_t>(pid)] -
                          phi[static_cast<std::size_t>(g.tet_to)]);
    }
    return periods;
}

TransferCocycle transfer_cocycle(const IdealTriangulation& t) {
    if (!t.connected()) throw DomainError("transfer cocycle requires a connected triangulation");

    const auto in_tree = spanning_tree_pairs(t);
    std::vector<int> col_of(static_cast<std::size_t>(t.pair_count()), -1);
    std::vector<int> pid_of_col;
    for (int pid = 0; pid < t.pair_count(); ++pid)
        if (!in_tree[static_cast<std::size_t>(pid)]) {
            col_of[static_cast<std::size_t>(pid)] = static_cast<int>(pid_of_col.size());
            pid_of_col.push_back(pid);
        }
    const int m = static_cast<int>(pid_of_col.size());

    // Edge-class conditions restricted to non-tree weights (tree weights are
    // gauged to zero by a coboundary).
    const auto classes = edge_classes(t);
    IntMatrix c(static_cast<int>(classes.size()), m);
    for (int e = 0; e < static_cast<int>(classes.size()); ++e)
        for (const auto& [pid, sgn] : classes[static_cast<std::size_t>(e)].crossings) {
            const int col = col_of[static_cast<std::size_t>(pid)];
            if (col >= 0) c.at(e, col) += sgn;
        }

    const SmithForm snf = smith_normal_form(c);
    const int rank = snf.rank();
    if (rank >= m)
        throw StructuralError("no circle-valued direction: the dual cocycle space has no free part");

    // First kernel basis vector (a column of the right transform); columns
    // of a unimodular matrix are primitive, so its entries have gcd 1.
    std::vector<long long> v(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = snf.right.at(i, rank).convert_to<long long>();

    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    if (g != 1) throw StructuralError("internal error: kernel vector is not primitive");

    // Sign normalization: prefer the all-nonnegative representative when one
    // exists, otherwise make the first nonzero entry positive.
    bool neg_ok = true, pos_ok = true;
    for (long long x : v) {
        if (x > 0) neg_ok = false;
        if (x < 0) pos_ok = false;
    }
    bool flip = false;
    if (neg_ok && !pos_ok) {
        flip = true;
    } else if (!pos_ok) {
        for (long long x : v) {
            if (x != 0) {
                flip = x < 0;
                break;
            }
        }
    }
    if (flip)
        for (long long& x : v) x = -x;

    TransferCocycle w;
    w.weight.assign(static_cast<std::size_t>(t.pair_count()), 0);
    for (int col = 0; col < m; ++col)
        w.weight[static_cast<std::size_t>(pid_of_col[static_cast<std::size_t>(col)])] = v[static_cast<std::size_t>(col)];

    if (!cocycle_condition_holds(t, w))
        throw StructuralError("internal error: computed weights violate the cocycle condition");
    return w;
}

IdealTriangulation cyclic_cover(const IdealTriangulation& t, const TransferCocycle& w, int n) {
    if (n < 1) throw DomainError("cover degree must be >= 1");
    if (static_cast<int>(w.weight.size()) != t.pair_count())
        throw DomainError("cocycle does not match the triangulation");
    if (!cocycle_condition_holds(t, w))
        throw DomainError("invalid transfer cocycle: weight sum around an edge class is nonzero");

    const int k = t.tet_count();
    std::vector<std::array<FaceGluing, 4>> g(static_cast<std::size_t>(n * k));
    for (int j = 0; j < n; ++j)
        for (int tet = 0; tet < k; ++tet)
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& base = t.gluing(tet, f);
                const long long shift = w.signed_weight(t, tet, f);
                long long level = (j + shift) % n;
                if (level < 0) level += n;
                g[static_cast<std::size_t>(j * k + tet)][static_cast<std::size_t>(f)] =
                    FaceGluing{static_cast<int>(level) * k + base.tet_to, base.face_to, base.perm};
            }
    return IdealTriangulation(std::move(g));
}

}  // namespace tbc
