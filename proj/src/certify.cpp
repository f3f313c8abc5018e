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
#include "tbc/certify.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "tbc/cocycle.hpp"
#include "tbc/errors.hpp"
#include "tbc/exactnum.hpp"
#include "tbc/geometry.hpp"
#include "tbc/triangulation.hpp"

namespace tbc {

const char* to_string(BundleVariant v) {
    return v == BundleVariant::FigureEight ? "figure-eight" : "sibling";
}

double round12(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

long long ComplexityCertificate::best_lower() const {
    long long best = 0;
    for (const auto& b : lower_bounds)
        if (b.value > best) best = b.value;
    return best;
}

std::optional<long long> ComplexityCertificate::gap() const {
    if (!upper) return std::nullopt;
    return upper->value - best_lower();
}

void ComplexityCertificate::check() const {
    if (!upper) return;
    for (const auto& b : lower_bounds)
        if (b.value > upper->value)
            throw std::logic_error("internal error: lower bound " + std::to_string(b.value) +
                                   " exceeds upper bound " + std::to_string(upper->value) + " for " + family);
}

namespace {

LowerBound rounded(LowerBound b) {
    b.raw = round12(b.raw);
    return b;
}

void finish_status(ComplexityCertificate& c) {
    c.check();
    if (!c.upper || c.lower_bounds.empty()) {
        c.status = "gap";
        return;
    }
    if (c.best_lower() == c.upper->value)
        c.status = c.upper->cited ? "exact-by-citation" : "exact";
    else
        c.status = "gap";
}

}  // namespace

ComplexityCertificate certify_punctured_bundle(long long n, BundleVariant variant, double tol) {
    if (n < 1) throw DomainError("cover degree must be >= 1");

    const IdealTriangulation base =
        variant == BundleVariant::FigureEight ? build_figure_eight() : build_sibling();
    const TransferCocycle w = transfer_cocycle(base);
    const IdealTriangulation cover = cyclic_cover(base, w, static_cast<int>(n));

    ComplexityCertificate cert;
    cert.family = std::string("N_n(") + to_string(variant) + ")";
    cert.index = n;
    cert.upper = UpperBoundInfo{
        cover.tet_count(),
        "constructed: cyclic " + std::to_string(n) + "-fold cover triangulation with " +
            std::to_string(cover.tet_count()) + " ideal tetrahedra",
        false};

    try {
        const GluingEquationSystem sys = extract_gluing_system(cover);
        SolveOptions opts;
        opts.tol = tol;
        const SolveResult sol = solve_gluing(sys, opts);
        const VolumeResult vol = volume(sol.shapes, sol.residual);
        cert.lower_bounds.push_back(rounded(volume_lower_bound(vol.volume, vol.error)));
        cert.volume_evidence = VolumeEvidence{round12(vol.volume), round12(vol.error),
                                              round12(sol.residual), cover.tet_count(), sol.iterations};
    } catch (const SolverError& e) {
        cert.solver_error = e.what();
        LowerBound fallback;
        fallback.value = 0;
        fallback.source = BoundSource::Volume;
        fallback.raw = 0.0;
        fallback.provenance = "volume route unavailable (solver failed); fallback 0";
        cert.lower_bounds.push_back(fallback);
    }

    finish_status(cert);
    return cert;
}

MnReport report_mn(long long n) {
    if (n < 1) throw DomainError("family index must be >= 1");

    MnReport r;
    r.n = n;
    r.torsion = torsion_order(n).str();
    r.cn = round12(cn_constant(n));

    ComplexityCertificate& c = r.certificate;
    c.family = "M_n";
    c.index = n;
    c.lower_bounds.push_back(rounded(mp_lower_bound(torsion_order(n), kMnBetti1)));
    c.lower_bounds.push_back(rounded(mn_combined_lower_bound(n)));
    c.upper = UpperBoundInfo{mn_cited_upper(n), "cited: one-vertex spine construction, c <= 2n + 5", true};
    c.conjectured = mn_cited_upper(n);
    finish_status(c);
    if (c.status == "exact-by-citation")
        c.note = "boundary case: the cited census floor meets the cited upper bound; "
                 "equality is not asserted as a theorem";
    return r;
}

LensReport report_lens(const BigInt& p, const BigInt& q) {
    if (p < 2) throw DomainError("lens space requires p >= 2");
    if (q < 1) throw DomainError("lens space requires q >= 1");
    if (gcd(p, q) != 1) throw DomainError("lens space requires gcd(p, q) = 1");

    LensReport r;
    r.p = p.str();
    r.q = q.str();

    ComplexityCertificate& c = r.certificate;
    c.family = "L(p,q)";
    c.lower_bounds.push_back(rounded(lens_lower_bound(p)));

    // L(2,1) and L(3,q) are the excluded small manifolds of complexity 0;
    // the formula value is still reported but carries a caveat, and no
    // upper bound is cited for them.
    if (p <= 3)
        c.note = "L(p,q) with p <= 3 is an excluded small manifold of complexity 0; "
                 "the bound formula does not apply to it";

    // Consecutive-Fibonacci detection (literal match, no lens equivalences).
    for (long long m = 2; ; ++m) {
        const BigInt fm = fibonacci(m);
        if (fm > p) break;
        if (fm == p && fibonacci(m - 1) == q) {
            r.fibonacci_index = m;
            c.index = m;
            if (m >= 5) {
                c.upper = UpperBoundInfo{m - 4, "cited: minimal known spines of Fibonacci lens spaces, c <= m - 4", true};
                c.conjectured = m - 4;
            }
            break;
        }
    }

    finish_status(c);
    return r;
}

// --- JSON ------------------------------------------------------------------

namespace {

BoundSource bound_source_from_string(const std::string& s) {
    if (s == "torsion") return BoundSource::Torsion;
    if (s == "census-floor") return BoundSource::CensusFloor;
    if (s == "volume") return BoundSource::Volume;
    if (s == "combined") return BoundSource::Combined;
    throw DomainError("unknown bound source '" + s + "'");
}

}  // namespace

void to_json(json& j, const LowerBound& b) {
    j = json{{"value", b.value},
             {"source", to_string(b.source)},
             {"raw", b.raw},
             {"clamped", b.clamped},
             {"boundary_case", b.boundary_case},
             {"provenance", b.provenance}};
}

void from_json(const json& j, LowerBound& b) {
    b.value = j.at("value").get<long long>();
    b.source = bound_source_from_string(j.at("source").get<std::string>());
    b.raw = j.at("raw").get<double>();
    b.clamped = j.at("clamped").get<bool>();
    b.boundary_case = j.at("boundary_case").get<bool>();
    b.provenance = j.at("provenance").get<std::string>();
}

void to_json(json& j, const UpperBoundInfo& u) {
    j = json{{"value", u.value}, {"provenance", u.provenance}, {"cited", u.cited}};
}

void from_json(const json& j, UpperBoundInfo& u) {
    u.value = j.at("value").get<long long>();
    u.provenance = j.at("provenance").get<std::string>();
    u.cited = j.at("cited").get<bool>();
}

void to_json(json& j, const VolumeEvidence& v) {
    j = json{{"volume", v.volume},
             {"error", v.error},
             {"residual", v.residual},
             {"tetrahedra", v.tetrahedra},
             {"iterations", v.iterations}};
}

void from_json(const json& j, VolumeEvidence& v) {
    v.volume = j.at("volume").get<double>();
    v.error = j.at("error").get<double>();
    v.residual = j.at("residual").get<double>();
    v.tetrahedra = j.at("tetrahedra").get<int>();
    v.iterations = j.at("iterations").get<int>();
}

void to_json(json& j, const ComplexityCertificate& c) {
    j = json{{"family", c.family}, {"index", c.index}};
    if (c.upper) j["upper"] = *c.upper;
    j["lower_bounds"] = c.lower_bounds;
    if (c.conjectured) j["conjectured"] = *c.conjectured;
    j["status"] = c.status;
    if (c.volume_evidence) j["volume_evidence"] = *c.volume_evidence;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.solver_error) j["solver_error"] = *c.solver_error;
}

void from_json(const json& j, ComplexityCertificate& c) {
    c = ComplexityCertificate{};
    c.family = j.at("family").get<std::string>();
    c.index = j.at("index").get<long long>();
    if (j.contains("upper")) c.upper = j.at("upper").get<UpperBoundInfo>();
    c.lower_bounds = j.at("lower_bounds").get<std::vector<LowerBound>>();
    if (j.contains("conjectured")) c.conjectured = j.at("conjectured").get<long long>();
    c.status = j.at("status").get<std::string>();
    if (j.contains("volume_evidence")) c.volume_evidence = j.at("volume_evidence").get<VolumeEvidence>();
    if (j.contains("note")) c.note = j.at("note").get<std::string>();
    if (j.contains("solver_error")) c.solver_error = j.at("solver_error").get<std::string>();
}

void to_json(json& j, const MnReport& r) {
    j = json{{"n", r.n}, {"torsion", r.torsion}, {"cn", r.cn}, {"certificate", r.certificate}};
}

void from_json(const json& j, MnReport& r) {
    r.n = j.at("n").get<long long>();
    r.torsion = j.at("torsion").get<std::string>();
    r.cn = j.at("cn").get<double>();
    r.certificate = j.at("certificate").get<ComplexityCertificate>();
}

void to_json(json& j, const LensReport& r) {
    j = json{{"p", r.p}, {"q", r.q}};
    if (r.fibonacci_index) j["fibonacci_index"] = *r.fibonacci_index;
    j["certificate"] = r.certificate;
}

void from_json(const json& j, LensReport& r) {
    r = LensReport{};
    r.p = j.at("p").get<std::string>();
    r.q = j.at("q").get<std::string>();
    if (j.contains("fibonacci_index")) r.fibonacci_index = j.at("fibonacci_index").get<long long>();
    r.certificate = j.at("certificate").get<ComplexityCertificate>();
}

std::string Report::to_json_string() const {
    json j{{"version", version}, {"command", command}, {"inputs", inputs}, {"results", results}, {"timing_ms", timing_ms}};
    return j.dump(2) + "\n";
}

Report Report::from_json_string(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.timing_ms = j.at("timing_ms").get<long long>();
    return r;
}

}  // namespace tbc
