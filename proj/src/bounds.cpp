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
#include "tbc/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tbc/errors.hpp"
#include "tbc/exactnum.hpp"
#include "tbc/geometry.hpp"

namespace tbc {

const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::Torsion: return "torsion";
        case BoundSource::CensusFloor: return "census-floor";
        case BoundSource::Volume: return "volume";
        case BoundSource::Combined: return "combined";
    }
    return "?";
}

long long mn_cited_upper(long long n) { return 2 * n + 5; }

double mn_constant_limit() {
    return 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0) / std::log(5.0);
}

namespace {

// Conservative integer ceiling: values within kBoundaryEps of an integer
// round down and get flagged, so a reader can audit the tie.
LowerBound make_bound(double raw, BoundSource source, const std::string& provenance) {
    LowerBound b;
    b.source = source;
    b.raw = raw;
    b.boundary_case = std::fabs(raw - std::round(raw)) < kBoundaryEps;
    b.clamped = raw < 0.0;
    double v = std::ceil(raw - kBoundaryEps);
    if (v < 0.0) v = 0.0;
    b.value = static_cast<long long>(v);
    b.provenance = provenance;
    if (b.clamped) b.provenance += "; raw value negative, clamped to 0";
    if (b.boundary_case) b.provenance += "; boundary case (raw within 1e-9 of an integer)";
    return b;
}

}  // namespace

LowerBound mp_lower_bound(const BigInt& torsion, int beta1) {
    if (torsion < 1) throw DomainError("torsion order must be >= 1");
    if (beta1 < 0) throw DomainError("beta1 must be >= 0");
    const double raw = 2.0 * log5(torsion) + beta1 - 1;
    std::ostringstream p;
    p << "torsion: ceil(2*log5(|Tor H1|) + b1 - 1) with b1 = " << beta1;
    return make_bound(raw, BoundSource::Torsion, p.str());
}

LowerBound lens_lower_bound(const BigInt& p) {
    if (p < 2) throw DomainError("lens bound requires p >= 2");
    const double raw = 2.0 * log5(p) - 1.0;
    return make_bound(raw, BoundSource::Torsion, "torsion: ceil(2*log5(p) - 1)");
}

double cn_constant(long long n) {
    if (n < 1) throw DomainError("cn_constant requires n >= 1");
    return log5(torsion_order(n)) / static_cast<double>(n);
}

LowerBound mn_combined_lower_bound(long long n) {
    if (n < 1) throw DomainError("combined bound requires n >= 1");
    const LowerBound torsion = mp_lower_bound(torsion_order(n), kMnBetti1);
    LowerBound out;
    if (torsion.value > kMnCensusFloor) {
        out = torsion;
    } else {
        out.value = kMnCensusFloor;
        out.raw = static_cast<double>(kMnCensusFloor);
        out.provenance = kMnCensusFloorNote;
    }
    out.source = BoundSource::Combined;
    out.provenance = "max(census floor 7, torsion bound); " + out.provenance;
    return out;
}

LowerBound volume_lower_bound(double vol, double vol_error) {
    if (!(vol_error >= 0.0)) throw DomainError("volume error must be >= 0");
    if (!(vol > vol_error)) throw DomainError("volume bound is vacuous: vol <= vol_error");
    const double v_max = max_tetrahedron_volume();
    const double raw = (vol - vol_error) / v_max;
    return make_bound(raw, BoundSource::Volume,
                      "volume: ceil((vol - err)/V), V = max ideal tetrahedron volume");
}

long long BoundReport::best_lower() const {
    long long best = 0;
    for (const auto& b : bounds)
        if (b.value > best) best = b.value;
    return best;
}

void BoundReport::check() const {
    if (!upper) return;
    for (const auto& b : bounds) {
        if (b.value > *upper) {
            std::ostringstream m;
            m << "internal error: lower bound " << b.value << " (" << to_string(b.source)
              << ") exceeds upper bound " << *upper << " for " << family << " n=" << n;
            throw std::logic_error(m.str());
        }
    }
}

}  // namespace tbc
