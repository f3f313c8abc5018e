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

#include "tbc/cocycle.hpp"
#include "tbc/triangulation.hpp"

namespace tbc {

/// Triangulation file contents: the triangulation plus optional face-pair
/// weights (a transfer cocycle; unlisted pairs default to weight 0).
struct TriangulationFile {
    IdealTriangulation triangulation;
    std::optional<TransferCocycle> weights;
};

/// Line-oriented text format:
///
///   tri v1
///   tetrahedra <k>
///   glue <t> <f> -> <t'> <f'> perm <p0> <p1> <p2> <p3>   (2k lines, each
///       unordered face pair once; p maps vertex i of t to p_i of t',
///       so p_f must equal f')
///   weight <t> <f> <integer>                              (optional)
///
/// '#' starts a comment; blank lines are ignored. Errors carry the
/// offending 1-based line number.
TriangulationFile parse_triangulation(const std::string& text);

std::string serialize_triangulation(const IdealTriangulation& t);
std::string serialize_triangulation(const IdealTriangulation& t, const TransferCocycle& w);

}  // namespace tbc
