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
#include "tbc/tri_io.hpp"

#include <sstream>
#include <vector>

namespace tbc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

int parse_int(const std::string& tok, int line, const std::string& what, long long lo, long long hi) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    if (v < lo || v > hi) throw ParseError(line, what + " out of range: '" + tok + "'");
    return static_cast<int>(v);
}

long long parse_ll(const std::string& tok, int line, const std::string& what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    return v;
}

}  // namespace

TriangulationFile parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    enum class Stage { Header, Count, Body };
    Stage stage = Stage::Header;

    int k = 0;
    std::vector<std::array<FaceGluing, 4>> gluings;
    std::vector<char> glued;
    // weight lines, applied after all gluings are known
    struct WeightLine {
        int line, tet, face;
        long long w;
    };
    std::vector<WeightLine> weight_lines;
    int glue_count = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = tokenize(line);
        if (tok.empty()) continue;

        switch (stage) {
            case Stage::Header:
                if (tok.size() != 2 || tok[0] != "tri" || tok[1] != "v1")
                    throw ParseError(lineno, "expected header 'tri v1'");
                stage = Stage::Count;
                continue;
            case Stage::Count:
                if (tok.size() != 2 || tok[0] != "tetrahedra")
                    throw ParseError(lineno, "expected 'tetrahedra <count>'");
                k = parse_int(tok[1], lineno, "tetrahedron count", 1, 1000000);
                gluings.assign(static_cast<std::size_t>(k), {});
                glued.assign(static_cast<std::size_t>(4 * k), 0);
                stage = Stage::Body;
                continue;
            case Stage::Body:
                break;
        }

        if (tok[0] == "glue") {
            if (tok.size() != 11 || tok[3] != "->" || tok[6] != "perm")
                throw ParseError(lineno, "expected 'glue <t> <f> -> <t'> <f'> perm <p0> <p1> <p2> <p3>'");
            const int t = parse_int(tok[1], lineno, "tetrahedron index", 0, k - 1);
            const int f = parse_int(tok[2], lineno, "face index", 0, 3);
            const int t2 = parse_int(tok[4], lineno, "tetrahedron index", 0, k - 1);
            const int f2 = parse_int(tok[5], lineno, "face index", 0, 3);
            int p[4];
            for (int i = 0; i < 4; ++i) p[i] = parse_int(tok[static_cast<std::size_t>(7 + i)], lineno, "permutation image", 0, 3);
            Perm4 perm;
            try {
                perm = Perm4(p[0], p[1], p[2], p[3]);
            } catch (const DomainError&) {
                throw ParseError(lineno, "bad permutation: images must form a permutation of {0,1,2,3}");
            }
            if (perm[f] != f2)
                throw ParseError(lineno, "vertex map does not send face " + std::to_string(f) + " to face " +
                                             std::to_string(f2));
            if (t == t2 && f == f2) throw ParseError(lineno, "face glued to itself");
            if (glued[static_cast<std::size_t>(4 * t + f)])
                throw ParseError(lineno, "duplicate gluing: face (" + std::to_string(t) + "," + std::to_string(f) +
                                             ") already glued (each pair must be listed once, involutively)");
            if (glued[static_cast<std::size_t>(4 * t2 + f2)])
                throw ParseError(lineno, "duplicate gluing: face (" + std::to_string(t2) + "," + std::to_string(f2) +
                                             ") already glued (each pair must be listed once, involutively)");
            gluings[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = FaceGluing{t2, f2, perm};
            gluings[static_cast<std::size_t>(t2)][static_cast<std::size_t>(f2)] = FaceGluing{t, f, perm.inverse()};
            glued[static_cast<std::size_t>(4 * t + f)] = 1;
            glued[static_cast<std::size_t>(4 * t2 + f2)] = 1;
            ++glue_count;
        } else if (tok[0] == "weight") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'weight <t> <f> <integer>'");
            const int t = parse_int(tok[1], lineno, "tetrahedron index", 0, k - 1);
            const int f = parse_int(tok[2], lineno, "face index", 0, 3);
            weight_lines.push_back({lineno, t, f, parse_ll(tok[3], lineno, "weight")});
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }

    if (stage != Stage::Body) throw ParseError(lineno == 0 ? 1 : lineno, "missing header or tetrahedron count");
    for (int t = 0; t < k; ++t)
        for (int f = 0; f < 4; ++f)
            if (!glued[static_cast<std::size_t>(4 * t + f)])
                throw ParseError(lineno, "face (" + std::to_string(t) + "," + std::to_string(f) + ") is unglued");
    (void)glue_count;

    TriangulationFile out{IdealTriangulation(std::move(gluings)), std::nullopt};

    if (!weight_lines.empty()) {
        TransferCocycle w;
        w.weight.assign(static_cast<std::size_t>(out.triangulation.pair_count()), 0);
        std::vector<char> seen(w.weight.size(), 0);
        for (const auto& wl : weight_lines) {
            const int pid = out.triangulation.pair_id(wl.tet, wl.face);
            if (seen[static_cast<std::size_t>(pid)])
                throw ParseError(wl.line, "duplicate weight for the face pair containing (" +
                                              std::to_string(wl.tet) + "," + std::to_string(wl.face) + ")");
            seen[static_cast<std::size_t>(pid)] = 1;
            // Stored on the canonical direction; a weight given for the
            // reverse side is negated.
            w.weight[static_cast<std::size_t>(pid)] =
                out.triangulation.pair_is_canonical(wl.tet, wl.face) ? wl.w : -wl.w;
        }
        out.weights = std::move(w);
    }
    return out;
}

namespace {

void serialize_body(std::ostringstream& os, const IdealTriangulation& t, const TransferCocycle* w) {
    os << "tri v1\n";
    os << "tetrahedra " << t.tet_count() << "\n";
    for (int pid = 0; pid < t.pair_count(); ++pid) {
        const auto [tet, face] = t.pair_rep(pid);
        const FaceGluing& g = t.gluing(tet, face);
        os << "glue " << tet << " " << face << " -> " << g.tet_to << " " << g.face_to << " perm";
        for (int i = 0; i < 4; ++i) os << " " << g.perm[i];
        os << "\n";
    }
    if (w) {
        for (int pid = 0; pid < t.pair_count(); ++pid) {
            const auto [tet, face] = t.pair_rep(pid);
            os << "weight " << tet << " " << face << " " << w->weight[static_cast<std::size_t>(pid)] << "\n";
        }
    }
}

}  // namespace

std::string serialize_triangulation(const IdealTriangulation& t) {
    std::ostringstream os;
    serialize_body(os, t, nullptr);
    return os.str();
}

std::string serialize_triangulation(const IdealTriangulation& t, const TransferCocycle& w) {
    std::ostringstream os;
    serialize_body(os, t, &w);
    return os.str();
}

}  // namespace tbc
