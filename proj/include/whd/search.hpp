#pragma once

#include <array>
#include <functional>
#include <vector>

#include "whd/exec.hpp"
#include "whd/states.hpp"
#include "whd/verify.hpp"

namespace whd {

struct SearchConfig {
    DimProfile profile;
    int root = 2;
    bool dephase = true;          // fix the first exponent to 0
    double verify_tol = 1e-9;     // full-verification tolerance for hits
    double reject_margin = 1e-6;  // fast-reject slack below the equimodular bound
    Exec exec = Exec::Parallel;
    long guard = 100'000'000;     // enumeration cap
};

struct SearchResult {
    std::vector<PhaseState> hits; // canonical orbit representatives, scan order
    long scanned = 0;
    double best_magick = 0;
    PhaseState best_state; // earliest candidate attaining the maximum
};

/// Lexicographically minimal exponent tuple over all product-WH images and
/// global phase shifts, reduced to the minimal root.
PhaseState canonical_orbit_form(const PhaseState& s);

bool orbit_equivalent(const PhaseState& a, const PhaseState& b);

/// Scans every dephased exponent tuple, fast-rejects below the equimodular
/// magick bound, fully verifies survivors (orbit partition + MUB check) and
/// deduplicates them modulo product-WH orbit.
SearchResult search_fiducials(const SearchConfig& cfg);

/// Maximum of magick over the grid with its earliest argmax.
SearchResult magick_landscape(const SearchConfig& cfg);

struct SporadicTriplet {
    std::array<PhaseState, 3> members; // canonical forms
    double magick_value = 0;
};

/// The fixed d=9, third-root pipeline: enumerate 3^8 dephased candidates,
/// keep marginal purity 5/9 on both sides, quotient by orbit, then assemble
/// triplets of distinct classes with common magick whose nine joint bases
/// pass the MUB check together with the computational basis.
std::vector<SporadicTriplet> search_sporadic_triplet(Exec exec = Exec::Parallel);

/// Nine bases generated by one triplet inside family `family`: member l
/// contributes bases {shift^j_hi shift^family_lo Z_k psi_l} for j = 0..2.
BasisSet sporadic_family(const std::array<PhaseState, 3>& members, int family);

} // namespace whd
