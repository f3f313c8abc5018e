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

#include <cmath>

#include "tbc/certify.hpp"
#include "tbc/errors.hpp"
#include "tbc/exactnum.hpp"
#include "tbc/geometry.hpp"

using namespace tbc;

TEST_CASE("figure eight certificates are exact") {
    {
        const ComplexityCertificate c = certify_punctured_bundle(1, BundleVariant::FigureEight);
        CHECK(c.status == "exact");
        REQUIRE(c.upper.has_value());
        CHECK(c.upper->value == 2);
        CHECK_FALSE(c.upper->cited);
        CHECK(c.best_lower() == 2);
        CHECK(c.gap() == 0);
        REQUIRE(c.volume_evidence.has_value());
        CHECK(c.volume_evidence->tetrahedra == 2);
    }
    {
        const ComplexityCertificate c = certify_punctured_bundle(7, BundleVariant::FigureEight);
        CHECK(c.status == "exact");
        CHECK(c.upper->value == 14);
        CHECK(c.best_lower() == 14);
        CHECK(std::fabs(c.volume_evidence->volume - 14.0 * max_tetrahedron_volume()) < 7e-9);
    }
    CHECK_THROWS_AS(certify_punctured_bundle(0, BundleVariant::FigureEight), DomainError);
}

TEST_CASE("sibling certificates are exact") {
    const ComplexityCertificate c = certify_punctured_bundle(3, BundleVariant::Sibling);
    CHECK(c.status == "exact");
    CHECK(c.upper->value == 6);
    CHECK(c.best_lower() == 6);
    CHECK(c.family == "N_n(sibling)");
}

TEST_CASE("solver failure yields an honest gap certificate") {
    // An unreachable residual target forces the solver to give up; the
    // certificate must degrade to a gap with fallback lower bound 0.
    const ComplexityCertificate c = certify_punctured_bundle(2, BundleVariant::FigureEight, 1e-30);
    CHECK(c.status == "gap");
    REQUIRE(c.solver_error.has_value());
    CHECK(c.upper->value == 4);
    CHECK(c.best_lower() == 0);
    CHECK_FALSE(c.volume_evidence.has_value());
    CHECK_NOTHROW(c.check());
}

TEST_CASE("certificates never report lower above upper") {
    for (long long n = 1; n <= 10; ++n) {
        CHECK_NOTHROW(certify_punctured_bundle(n, BundleVariant::FigureEight).check());
        CHECK_NOTHROW(report_mn(n).certificate.check());
    }
    for (long long m = 5; m <= 60; ++m)
        CHECK_NOTHROW(report_lens(fibonacci(m), fibonacci(m - 1)).certificate.check());
}

TEST_CASE("torus bundle reports") {
    {
        const MnReport r = report_mn(2);
        CHECK(r.torsion == "5");
        CHECK(r.cn == doctest::Approx(0.5));
        CHECK(r.certificate.best_lower() == 7);
        CHECK(r.certificate.upper->value == 9);
        CHECK(r.certificate.upper->cited);
        CHECK(r.certificate.conjectured == 9);
        CHECK(r.certificate.status == "gap");
        CHECK(r.certificate.gap() == 2);
    }
    {
        const MnReport r = report_mn(20);
        CHECK(r.certificate.best_lower() == 24);
        CHECK(r.certificate.upper->value == 45);
    }
    {
        // n = 1: cited floor meets cited ceiling; flagged, not asserted.
        const MnReport r = report_mn(1);
        CHECK(r.torsion == "1");
        CHECK(r.certificate.best_lower() == 7);
        CHECK(r.certificate.upper->value == 7);
        CHECK(r.certificate.status == "exact-by-citation");
        CHECK_FALSE(r.certificate.note.empty());
    }
    CHECK_THROWS_AS(report_mn(0), DomainError);
}

TEST_CASE("lens reports") {
    {
        const LensReport r = report_lens(5, 3);
        CHECK(r.fibonacci_index == 5);
        CHECK(r.certificate.best_lower() == 1);
        CHECK(r.certificate.upper->value == 1);
        CHECK(r.certificate.status == "exact-by-citation");
    }
    {
        const LensReport r = report_lens(2, 1);
        CHECK(r.certificate.best_lower() == 0);
        CHECK_FALSE(r.certificate.upper.has_value());
        CHECK(r.certificate.status == "gap");
        CHECK_FALSE(r.certificate.note.empty());  // excluded small manifold
    }
    {
        // p = 5, q = 2 is not the literal consecutive-Fibonacci pair.
        const LensReport r = report_lens(5, 2);
        CHECK_FALSE(r.fibonacci_index.has_value());
        CHECK_FALSE(r.certificate.upper.has_value());
    }
    {
        const LensReport r = report_lens(fibonacci(20), fibonacci(19));
        CHECK(r.fibonacci_index == 20);
        CHECK(r.certificate.best_lower() == 10);  // ceil(2 log5 6765 - 1)
        CHECK(r.certificate.upper->value == 16);
        CHECK(r.certificate.status == "gap");
        CHECK(r.certificate.gap() == 6);
    }
    {
        // fib(4) = 3: the excluded small lens space; no upper bound cited.
        const LensReport r = report_lens(3, 2);
        CHECK(r.fibonacci_index == 4);
        CHECK_FALSE(r.certificate.upper.has_value());
        CHECK_FALSE(r.certificate.note.empty());
    }
    {
        // L(3,1) is excluded as well, independent of Fibonacci detection.
        const LensReport r = report_lens(3, 1);
        CHECK_FALSE(r.fibonacci_index.has_value());
        CHECK_FALSE(r.certificate.note.empty());
    }
    CHECK_THROWS_AS(report_lens(6, 3), DomainError);   // not coprime
    CHECK_THROWS_AS(report_lens(1, 1), DomainError);   // p too small
    CHECK_THROWS_AS(report_lens(5, 0), DomainError);   // q out of range
}

TEST_CASE("JSON round trips for all report kinds") {
    {
        const ComplexityCertificate c = certify_punctured_bundle(3, BundleVariant::FigureEight);
        const json j = c;
        const auto back = j.get<ComplexityCertificate>();
        CHECK(back == c);
        // and through actual text
        const json reparsed = json::parse(j.dump());
        CHECK(reparsed.get<ComplexityCertificate>() == c);
    }
    {
        const MnReport r = report_mn(6);
        const json j = r;
        CHECK(json::parse(j.dump(2)).get<MnReport>() == r);
    }
    {
        const LensReport r = report_lens(fibonacci(12), fibonacci(11));
        const json j = r;
        CHECK(json::parse(j.dump(2)).get<LensReport>() == r);
    }
    {
        const LensReport r = report_lens(7, 3);  // no fibonacci index branch
        const json j = r;
        CHECK(json::parse(j.dump(2)).get<LensReport>() == r);
    }
}

TEST_CASE("report envelope round trip and determinism") {
    Report r;
    r.command = "certify n8 3 --json";
    r.inputs = json{{"family", "n8"}, {"n", 3}};
    r.results = json{{"certificate", certify_punctured_bundle(3, BundleVariant::FigureEight)}};
    r.timing_ms = 0;

    const std::string text = r.to_json_string();
    const Report back = Report::from_json_string(text);
    CHECK(back == r);
    CHECK(back.to_json_string() == text);

    // Deterministic given identical inputs and version (timing pinned).
    Report r2;
    r2.command = r.command;
    r2.inputs = r.inputs;
    r2.results = json{{"certificate", certify_punctured_bundle(3, BundleVariant::FigureEight)}};
    r2.timing_ms = 0;
    CHECK(r2.to_json_string() == text);
}

TEST_CASE("report doubles are stored with 12 significant digits") {
    CHECK(round12(1.0149416064096536) == 1.01494160641);
    CHECK(round12(0.0) == 0.0);
    const MnReport r = report_mn(6);
    CHECK(r.cn == round12(r.cn));
    const ComplexityCertificate c = certify_punctured_bundle(2, BundleVariant::FigureEight);
    CHECK(c.volume_evidence->volume == round12(c.volume_evidence->volume));
    for (const auto& b : c.lower_bounds) CHECK(b.raw == round12(b.raw));
}

TEST_CASE("certificate boundary flags surface in reports") {
    const MnReport r = report_mn(2);
    // torsion bound raw is exactly 2.0 for n = 2
    bool found = false;
    for (const auto& b : r.certificate.lower_bounds)
        if (b.source == BoundSource::Torsion && b.boundary_case) found = true;
    CHECK(found);
}
