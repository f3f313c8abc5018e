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
#include <complex>
#include <optional>
#include <vector>

#include "tbc/triangulation.hpp"

namespace tbc {

/// Lobachevsky function L(theta) = -integral of log|2 sin t| from 0 to
/// theta. Odd, pi-periodic; absolute error well under 1e-12.
double lobachevsky(double theta);

/// Volume of the regular ideal tetrahedron, V = 3 L(pi/3) (the maximum over
/// all ideal tetrahedra), approximately 1.0149.
double max_tetrahedron_volume();

/// Edge-consistency equations of a triangulation. One equation per edge
/// class; exponents[e][t] = (a, b, c) counts how many incidences of edge
/// class e carry each shape form z, 1/(1-z), (z-1)/z of tetrahedron t.
/// Log form: angle parts sum to 2 pi, log-modulus parts to 0.
struct GluingEquationSystem {
    int tet_count = 0;
    std::vector<std::vector<std::array<int, 3>>> exponents;

    int equation_count() const { return static_cast<int>(exponents.size()); }
};

/// Extracts the equation system from the edge-class rotation walks. The
/// triangulation must be orientable (tetrahedra with negative orientation
/// sign are relabeled internally so every tetrahedron is positively
/// oriented); throws DomainError otherwise.
GluingEquationSystem extract_gluing_system(const IdealTriangulation& t);

/// One complex shape parameter per tetrahedron, Im z > 0. The derived
/// dihedral angles (arg z, arg 1/(1-z), arg (z-1)/z) lie in (0, pi) and sum
/// to pi.
struct ShapeAssignment {
    std::vector<std::complex<double>> shapes;

    std::array<double, 3> angles(int tet) const;
};

struct SolveOptions {
    double tol = 1e-10;       // max residual, both angle and log-modulus parts
    int max_iterations = 100;
    double degenerate_im = 1e-8;  // Im z at or below this is a flat tetrahedron
    std::optional<std::complex<double>> initial;  // default: regular shape
};

struct SolveResult {
    ShapeAssignment shapes;
    double residual = 0.0;
    int iterations = 0;
};

/// Damped Newton iteration on log-shape coordinates from the regular start
/// exp(i pi/3) (one retry from z = i), least-squares step since the edge
/// equations are rank deficient. Throws SolverError on non-convergence or
/// when the iteration converges to a degenerate shape.
SolveResult solve_gluing(const GluingEquationSystem& sys, const SolveOptions& opts = {});

/// Total hyperbolic volume of a shape assignment with a certified-by-
/// estimate error bound (per-term Lobachevsky accuracy plus residual
/// propagation; a numerical estimate, not interval arithmetic).
struct VolumeResult {
    double volume = 0.0;
    double error = 0.0;
    std::vector<double> per_tet;
};

VolumeResult volume(const ShapeAssignment& shapes, double solver_residual = 0.0);

/// Max residual of the system at the given shapes (largest angle-sum or
/// log-modulus deviation over all equations).
double system_residual(const GluingEquationSystem& sys, const ShapeAssignment& shapes);

}  // namespace tbc
