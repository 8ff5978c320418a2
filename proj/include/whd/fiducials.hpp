#pragma once

#include <array>
#include <optional>
#include <vector>

#include "whd/finite_field.hpp"
#include "whd/galois_ring.hpp"
#include "whd/states.hpp"

namespace whd {

struct FiducialRecipe {
    enum class Kind { Field, Ring, Qubit, Hoggar, Sporadic };
    Kind kind = Kind::Field;
    int p = 0;
    int n = 0;
    std::vector<int> a;                     // coefficient list; {v} embeds a scalar
    std::optional<std::vector<int>> poly;   // defining polynomial override
    Endian endian = Endian::Big;
};

/// Exponent at basis index J(j) is trace(a j^3) in Z_p; p >= 5, a != 0.
PhaseState fiducial_mub_field(const FieldSpec& field, const FieldElement& a,
                              Endian endian = Endian::Big);
PhaseState fiducial_mub_field(int p, int n, const std::vector<int>& a,
                              std::optional<std::vector<int>> poly = std::nullopt,
                              Endian endian = Endian::Big);

/// Exponent at index J(j) is gr_trace(a j^3) in Z/9Z with j running over the
/// coset representatives of GR(9,n)/(3); a must avoid the ideal (3).
PhaseState fiducial_mub_ring(const RingSpec& ring, const RingElement& a,
                             Endian endian = Endian::Big);
PhaseState fiducial_mub_ring(int n, const std::vector<int>& a,
                             std::optional<std::vector<int>> poly = std::nullopt,
                             Endian endian = Endian::Big);

/// The two known qubit cases: n=1 uses the eighth root, n=2 the fourth.
/// Larger n is refused.
PhaseState fiducial_mub_qubit(int n);

/// SIC fiducial of the three-qubit Hoggar lines.
StateVector hoggar_fiducial();

/// The three d=9 third-root fiducials whose subgroup orbits assemble into a
/// full set of nine unbiased Hadamard bases.
std::array<PhaseState, 3> sporadic_triplet();

/// Diagonal phase-exponent list of the gate mapping |+> to the recipe's
/// fiducial: {root, exponents}.
std::pair<int, std::vector<int>> t_gate(const FiducialRecipe& recipe);

/// Builds the fiducial a recipe describes (Hoggar is dense; the rest are
/// phase states).
PhaseState make_phase_fiducial(const FiducialRecipe& recipe);

} // namespace whd
