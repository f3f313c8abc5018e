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
#include "tbc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tbc {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2n) for n = 1..kZetaTerms; the first three from their closed forms,
// the rest by direct summation (the tails fall off fast enough).
constexpr int kZetaTerms = 40;

const double* zeta_table() {
    static const std::array<double, kZetaTerms + 1> table = [] {
        std::array<double, kZetaTerms + 1> z{};
        z[1] = kPi * kPi / 6.0;
        z[2] = std::pow(kPi, 4) / 90.0;
        z[3] = std::pow(kPi, 6) / 945.0;
        for (int n = 4; n <= kZetaTerms; ++n) {
            const double s = 2.0 * n;
            double sum = 1.0;
            for (int k = 2; k < 100000; ++k) {
                const double term = std::pow(static_cast<double>(k), -s);
                sum += term;
                if (term < 1e-22) break;
            }
            z[static_cast<std::size_t>(n)] = sum;
        }
        return z;
    }();
    return table.data();
}

}  // namespace

double lobachevsky(double theta) {
    // Reduce by pi-periodicity to [0, pi), then fold by oddness to
    // (0, pi/2] where the series converges quickly.
    double t = std::fmod(theta, kPi);
    if (t < 0.0) t += kPi;
    double sgn = 1.0;
    if (t > kPi / 2.0) {
        t = kPi - t;
        sgn = -1.0;
    }
    if (t == 0.0) return 0.0;

    // L(t) = t*(1 - log(2t) + sum_{n>=1} zeta(2n)/(n(2n+1)) (t/pi)^{2n}).
    const double* zeta = zeta_table();
    const double x = (t / kPi) * (t / kPi);
    double sum = 0.0;
    double xp = 1.0;
    for (int n = 1; n <= kZetaTerms; ++n) {
        xp *= x;
        const double term = zeta[n] / (n * (2.0 * n + 1.0)) * xp;
        sum += term;
        if (term < 1e-18) break;
    }
    return sgn * t * (1.0 - std::log(2.0 * t) + sum);
}

double max_tetrahedron_volume() {
    static const double v = 3.0 * lobachevsky(kPi / 3.0);
    return v;
}

namespace {

// Relabel negatively oriented tetrahedra by swapping vertices 2 and 3, so
// every tetrahedron is positively oriented (all vertex maps odd) and one
// shape-form convention applies uniformly.
IdealTriangulation positively_oriented_copy(const IdealTriangulation& t) {
    const auto signs_opt = t.orientation_signs();
    if (!signs_opt) throw DomainError("gluing equations require an orientable triangulation");
    const auto& signs = *signs_opt;
    const bool any_flip = std::any_of(signs.begin(), signs.end(), [](int s) { return s < 0; });
    const Perm4 swap23(0, 1, 3, 2);

    std::vector<std::array<FaceGluing, 4>> g(static_cast<std::size_t>(t.tet_count()));
    for (int tet = 0; tet < t.tet_count(); ++tet) {
        const Perm4 rho = signs[static_cast<std::size_t>(tet)] < 0 ? swap23 : Perm4();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& old = t.gluing(tet, f);
            const Perm4 rho2 = signs[static_cast<std::size_t>(old.tet_to)] < 0 ? swap23 : Perm4();
            const Perm4 perm = rho2.after(old.perm).after(rho.inverse());
            g[static_cast<std::size_t>(tet)][static_cast<std::size_t>(rho[f])] =
                FaceGluing{old.tet_to, rho2[old.face_to], perm};
        }
    }
    IdealTriangulation out(std::move(g));
    (void)any_flip;
    return out;
}

// Shape-form slot of an edge of a positively oriented tetrahedron: edges
// {0,1},{2,3} carry z, {0,3},{1,2} carry 1/(1-z), {0,2},{1,3} carry
// (z-1)/z.
constexpr int kFormOfPairSlot[3] = {0, 2, 1};

std::complex<double> shape_form(int slot, std::complex<double> z) {
    switch (slot) {
        case 0: return z;
        case 1: return 1.0 / (1.0 - z);
        default: return (z - 1.0) / z;
    }
}

}  // namespace

GluingEquationSystem extract_gluing_system(const IdealTriangulation& t) {
    const IdealTriangulation pos = positively_oriented_copy(t);
    const auto classes = edge_classes(pos);

    GluingEquationSystem sys;
    sys.tet_count = pos.tet_count();
    sys.exponents.assign(classes.size(),
                         std::vector<std::array<int, 3>>(static_cast<std::size_t>(pos.tet_count()), {0, 0, 0}));
    for (std::size_t e = 0; e < classes.size(); ++e)
        for (const EdgeIncidence& inc : classes[e].cycle) {
            const int slot = kFormOfPairSlot[edge_pair_slot(inc.edge())];
            ++sys.exponents[e][static_cast<std::size_t>(inc.tet)][static_cast<std::size_t>(slot)];
        }
    return sys;
}

std::array<double, 3> ShapeAssignment::angles(int tet) const {
    const std::complex<double> z = shapes[static_cast<std::size_t>(tet)];
    return {std::arg(z), std::arg(1.0 / (1.0 - z)), std::arg((z - 1.0) / z)};
}

namespace {

// Log-form residual of one equation: sum of logs of the shape forms minus
// 2 pi i. Real part is the log-modulus defect, imaginary part the angle
// defect.
std::complex<double> equation_value(const GluingEquationSystem& sys, int e,
                                    const std::vector<std::complex<double>>& z) {
    std::complex<double> acc(0.0, -2.0 * kPi);
    for (int t = 0; t < sys.tet_count; ++t) {
        const auto& ex = sys.exponents[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
        for (int slot = 0; slot < 3; ++slot) {
            if (ex[static_cast<std::size_t>(slot)] == 0) continue;
            acc += static_cast<double>(ex[static_cast<std::size_t>(slot)]) *
                   std::log(shape_form(slot, z[static_cast<std::size_t>(t)]));
        }
    }
    return acc;
}

double residual_of(const GluingEquationSystem& sys, const std::vector<std::complex<double>>& z) {
    double r = 0.0;
    for (int e = 0; e < sys.equation_count(); ++e) {
        const std::complex<double> v = equation_value(sys, e, z);
        r = std::max(r, std::max(std::fabs(v.real()), std::fabs(v.imag())));
    }
    return r;
}

// Solve (A + lambda I) x = b for a complex square system by Gaussian
// elimination with partial pivoting. A is overwritten.
std::vector<std::complex<double>> solve_linear(std::vector<std::vector<std::complex<double>>> a,
                                               std::vector<std::complex<double>> b, double lambda) {
    const int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += lambda;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
        for (int i = col + 1; i < n; ++i) {
            const double m = std::abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]);
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best == 0.0) throw SolverError("singular Newton system");
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
        std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(piv)]);
        const std::complex<double> d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int i = col + 1; i < n; ++i) {
            const std::complex<double> f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / d;
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(col)];
        }
    }
    std::vector<std::complex<double>> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        std::complex<double> s = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s / a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }
    return x;
}

struct NewtonOutcome {
    bool converged = false;
    std::vector<std::complex<double>> z;
    double residual = 0.0;
    int iterations = 0;
};

// Damped Newton on u = log z. The edge equations are rank deficient (they
// sum to the per-tetrahedron angle identities), so the step is the
// least-squares one through slightly regularized normal equations.
NewtonOutcome run_newton(const GluingEquationSystem& sys, std::complex<double> z0, const SolveOptions& opts) {
    const int k = sys.tet_count;
    const int m = sys.equation_count();
    NewtonOutcome out;

    std::vector<std::complex<double>> u(static_cast<std::size_t>(k), std::log(z0));
    std::vector<std::complex<double>> z(static_cast<std::size_t>(k));
    auto sync = [&](const std::vector<std::complex<double>>& uu, std::vector<std::complex<double>>& zz) {
        for (int t = 0; t < k; ++t) zz[static_cast<std::size_t>(t)] = std::exp(uu[static_cast<std::size_t>(t)]);
    };
    sync(u, z);

    double res = residual_of(sys, z);
    for (int it = 0; it < opts.max_iterations; ++it) {
        if (res < opts.tol) {
            out.converged = true;
            out.z = z;
            out.residual = res;
            out.iterations = it;
            return out;
        }

        // Jacobian d f_e / d u_t = a + b z/(1-z) + c/(z-1).
        std::vector<std::vector<std::complex<double>>> jac(
            static_cast<std::size_t>(m), std::vector<std::complex<double>>(static_cast<std::size_t>(k)));
        std::vector<std::complex<double>> f(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e) {
            f[static_cast<std::size_t>(e)] = equation_value(sys, e, z);
            for (int t = 0; t < k; ++t) {
                const auto& ex = sys.exponents[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
                const std::complex<double> zt = z[static_cast<std::size_t>(t)];
                jac[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)] =
                    static_cast<double>(ex[0]) + static_cast<double>(ex[1]) * zt / (1.0 - zt) +
                    static_cast<double>(ex[2]) / (zt - 1.0);
            }
        }

        // Normal equations J^H J delta = -J^H f.
        std::vector<std::vector<std::complex<double>>> jhj(
            static_cast<std::size_t>(k), std::vector<std::complex<double>>(static_cast<std::size_t>(k)));
        std::vector<std::complex<double>> jhf(static_cast<std::size_t>(k));
        double diag_max = 0.0;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                std::complex<double> s(0.0, 0.0);
                for (int e = 0; e < m; ++e)
                    s += std::conj(jac[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]) *
                         jac[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)];
                jhj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
                if (i == j) diag_max = std::max(diag_max, std::abs(s));
            }
            std::complex<double> s(0.0, 0.0);
            for (int e = 0; e < m; ++e)
                s += std::conj(jac[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]) * f[static_cast<std::size_t>(e)];
            jhf[static_cast<std::size_t>(i)] = -s;
        }
        const double lambda = 1e-12 * (diag_max > 0.0 ? diag_max : 1.0);
        std::vector<std::complex<double>> delta = solve_linear(std::move(jhj), std::move(jhf), lambda);

        // Backtrack until the residual drops and Im u stays inside (0, pi).
        double step = 1.0;
        bool moved = false;
        std::vector<std::complex<double>> u2(static_cast<std::size_t>(k)), z2(static_cast<std::size_t>(k));
        while (step > 1e-10) {
            bool inside = true;
            for (int t = 0; t < k; ++t) {
                u2[static_cast<std::size_t>(t)] = u[static_cast<std::size_t>(t)] + step * delta[static_cast<std::size_t>(t)];
                const double im = u2[static_cast<std::size_t>(t)].imag();
                if (!(im > 1e-12 && im < kPi - 1e-12)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                sync(u2, z2);
                const double r2 = residual_of(sys, z2);
                if (r2 < res) {
                    u = u2;
                    z = z2;
                    res = r2;
                    moved = true;
                    break;
                }
            }
            step /= 2.0;
        }
        if (!moved) {
            out.z = z;
            out.residual = res;
            out.iterations = it + 1;
            return out;  // stalled
        }
    }
    if (res < opts.tol) {
        out.converged = true;
        out.z = z;
        out.residual = res;
    } else {
        out.z = z;
        out.residual = res;
    }
    out.iterations = opts.max_iterations;
    return out;
}

}  // namespace

SolveResult solve_gluing(const GluingEquationSystem& sys, const SolveOptions& opts) {
    if (sys.tet_count <= 0) throw DomainError("empty gluing system");

    const std::complex<double> regular = std::polar(1.0, kPi / 3.0);
    std::vector<std::complex<double>> starts;
    if (opts.initial) {
        starts.push_back(*opts.initial);
    } else {
        starts.push_back(regular);
        starts.emplace_back(0.0, 1.0);  // retry
    }

    NewtonOutcome best;
    for (const auto& z0 : starts) {
        const NewtonOutcome o = run_newton(sys, z0, opts);
        if (o.converged) {
            for (const auto& zz : o.z)
                if (!(zz.imag() > opts.degenerate_im))
                    throw SolverError("degenerate solution: a tetrahedron flattened (Im z <= " +
                                      std::to_string(opts.degenerate_im) + ")");
            SolveResult r;
            r.shapes.shapes = o.z;
            r.residual = o.residual;
            r.iterations = o.iterations;
            return r;
        }
        best = o;
    }
    throw SolverError("no geometric solution found: Newton residual " + std::to_string(best.residual) +
                      " after " + std::to_string(best.iterations) + " iterations");
}

double system_residual(const GluingEquationSystem& sys, const ShapeAssignment& shapes) {
    return residual_of(sys, shapes.shapes);
}

VolumeResult volume(const ShapeAssignment& shapes, double solver_residual) {
    VolumeResult out;
    for (std::size_t t = 0; t < shapes.shapes.size(); ++t) {
        const std::complex<double> z = shapes.shapes[t];
        if (!(z.imag() > 0.0)) throw DomainError("volume of a degenerate (flat) tetrahedron");
        const auto ang = shapes.angles(static_cast<int>(t));
        double v = 0.0;
        for (double a : ang) {
            if (!(a > 0.0 && a < kPi)) throw DomainError("volume of a degenerate (flat) tetrahedron");
            v += lobachevsky(a);
        }
        out.per_tet.push_back(v);
        out.volume += v;
    }
    // Heuristic error estimate: Lobachevsky evaluation accuracy per term
    // plus first-order propagation of the solver residual.
    out.error = static_cast<double>(shapes.shapes.size()) * (3.0e-14 + 2.0 * solver_residual);
    return out;
}

}  // namespace tbc
