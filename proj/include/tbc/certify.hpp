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
#include <vector>

#include <json.hpp>

#include "tbc/bigint.hpp"
#include "tbc/bounds.hpp"

namespace tbc {

inline constexpr const char* kVersion = "0.1.0";

enum class BundleVariant { FigureEight, Sibling };

const char* to_string(BundleVariant v);

/// Upper bounds carry whether they were constructed by this run (a
/// triangulation we actually built) or imported as a cited fact.
struct UpperBoundInfo {
    long long value = 0;
    std::string provenance;
    bool cited = false;

    bool operator==(const UpperBoundInfo&) const = default;
};

struct VolumeEvidence {
    double volume = 0.0;
    double error = 0.0;
    double residual = 0.0;
    int tetrahedra = 0;
    int iterations = 0;

    bool operator==(const VolumeEvidence&) const = default;
};

/// The assembled two-sided certificate for one manifold.
///
/// status is "exact" when a constructed upper bound meets the best lower
/// bound, "exact-by-citation" when the meeting upper bound is only cited,
/// and "gap" otherwise. Lower bounds never exceed an upper bound present;
/// that would be an internal error, not a reportable result.
struct ComplexityCertificate {
    std::string family;
    long long index = 0;
    std::optional<UpperBoundInfo> upper;
    std::vector<LowerBound> lower_bounds;
    std::optional<long long> conjectured;
    std::string status;
    std::optional<VolumeEvidence> volume_evidence;
    std::string note;
    std::optional<std::string> solver_error;

    long long best_lower() const;
    std::optional<long long> gap() const;  // upper - best lower, when upper present
    void check() const;                    // hard lower <= upper assertion

    bool operator==(const ComplexityCertificate&) const = default;
};

/// Full pipeline for the punctured torus bundles: build the base
/// triangulation, transfer cocycle and n-fold cover (upper bound 2n,
/// constructed), solve the gluing equations, take the volume lower bound.
/// Solver failure yields a "gap" certificate with fallback lower bound 0,
/// never a fabricated exact status.
ComplexityCertificate certify_punctured_bundle(long long n, BundleVariant variant, double tol = 1e-10);

struct MnReport {
    long long n = 0;
    std::string torsion;  // decimal; thousands of digits for large n
    double cn = 0.0;
    ComplexityCertificate certificate;

    bool operator==(const MnReport&) const = default;
};

/// Torsion order, C_n, torsion and combined lower bounds, cited upper
/// 2n + 5 and the conjectured equality.
MnReport report_mn(long long n);

struct LensReport {
    std::string p, q;  // decimal
    std::optional<long long> fibonacci_index;  // m when (p, q) = (fib(m), fib(m-1))
    ComplexityCertificate certificate;

    bool operator==(const LensReport&) const = default;
};

/// Lens space bound; when (p, q) is a consecutive-Fibonacci pair (fib(m),
/// fib(m-1)) with m >= 5, also the cited upper bound m - 4 and the
/// conjectured equality. Requires p >= 2, q >= 1, gcd(p, q) = 1.
LensReport report_lens(const BigInt& p, const BigInt& q);

// --- JSON (stable field names; reals stored pre-rounded to 12 significant
// digits so emitted reports parse back bit-identically) -------------------

using json = nlohmann::ordered_json;

void to_json(json& j, const LowerBound& b);
void from_json(const json& j, LowerBound& b);
void to_json(json& j, const UpperBoundInfo& u);
void from_json(const json& j, UpperBoundInfo& u);
void to_json(json& j, const VolumeEvidence& v);
void from_json(const json& j, VolumeEvidence& v);
void to_json(json& j, const ComplexityCertificate& c);
void from_json(const json& j, ComplexityCertificate& c);
void to_json(json& j, const MnReport& r);
void from_json(const json& j, MnReport& r);
void to_json(json& j, const LensReport& r);
void from_json(const json& j, LensReport& r);

/// Round to 12 significant digits; report payloads store doubles this way.
double round12(double x);

/// Machine report envelope. Everything except timing_ms is deterministic
/// given inputs and version; timing is wall time and excluded from the
/// byte-identity guarantee.
struct Report {
    std::string version = kVersion;
    std::string command;
    json inputs;
    json results;
    long long timing_ms = 0;

    std::string to_json_string() const;
    static Report from_json_string(const std::string& text);

    bool operator==(const Report&) const = default;
};

}  // namespace tbc
