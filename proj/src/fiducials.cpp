#include "whd/fiducials.hpp"

#include <cmath>

namespace whd {

namespace {

DimProfile uniform_profile(int p, int n) { return DimProfile(std::vector<int>(n, p)); }

} // namespace

PhaseState fiducial_mub_field(const FieldSpec& field, const FieldElement& a, Endian endian) {
    if (field.p() < 5) fail(errc::bad_prime, "field construction needs p >= 5");
    if (a.is_zero()) fail(errc::zero_parameter, "parameter a must be nonzero");
    if (!a.spec().same_as(field)) fail(errc::spec_mismatch, "parameter a from a different field");
    const long d = field.order();
    std::vector<int> exps(d);
    for (long j = 0; j < d; ++j) {
        FieldElement el = field.from_index(j, endian);
        // the cube lives in the field, never in Z
        exps[j] = ff_trace(ff_mul(a, ff_cube(el)));
    }
    return PhaseState{field.p(), std::move(exps), uniform_profile(field.p(), field.n())};
}

PhaseState fiducial_mub_field(int p, int n, const std::vector<int>& a,
                              std::optional<std::vector<int>> poly, Endian endian) {
    FieldSpec field(p, n, std::move(poly));
    FieldElement ae = a.size() == 1 ? field.scalar(a[0]) : field.element(a);
    return fiducial_mub_field(field, ae, endian);
}

PhaseState fiducial_mub_ring(const RingSpec& ring, const RingElement& a, Endian endian) {
    if (is_zero_divisor(a)) fail(errc::zero_divisor_parameter, "parameter a must avoid the ideal (3)");
    if (!a.spec().same_as(ring)) fail(errc::spec_mismatch, "parameter a from a different ring");
    const long d = ring.residue_order();
    std::vector<int> exps(d);
    auto reps = ring.coset_representatives(endian);
    for (long j = 0; j < d; ++j) exps[j] = gr_trace(gr_mul(a, gr_cube(reps[j])));
    return PhaseState{9, std::move(exps), uniform_profile(3, ring.n())};
}

PhaseState fiducial_mub_ring(int n, const std::vector<int>& a,
                             std::optional<std::vector<int>> poly, Endian endian) {
    RingSpec ring(n, std::move(poly));
    RingElement ae = a.size() == 1 ? ring.scalar(a[0]) : ring.element(a);
    return fiducial_mub_ring(ring, ae, endian);
}

PhaseState fiducial_mub_qubit(int n) {
    if (n == 1) return PhaseState{8, {0, 1}, DimProfile({2})};
    if (n == 2) return PhaseState{4, {0, 1, 1, 1}, DimProfile({2, 2})};
    fail(errc::not_available, "no known omega_8 qubit fiducial beyond n = 2");
}

StateVector hoggar_fiducial() {
    const double s = 1.0 / std::sqrt(6.0);
    std::vector<cx> amps = {cx(1, 1), cx(0, 0), cx(-1, 0), cx(1, 0),
                            cx(0, -1), cx(-1, 0), cx(0, 0), cx(0, 0)};
    for (cx& a : amps) a *= s;
    return StateVector(std::move(amps), DimProfile({2, 2, 2}));
}

std::array<PhaseState, 3> sporadic_triplet() {
    DimProfile pr({3, 3});
    return {PhaseState{3, {0, 1, 1, 1, 1, 0, 1, 1, 0}, pr},
            PhaseState{3, {0, 0, 1, 0, 0, 1, 0, 1, 0}, pr},
            PhaseState{3, {0, 0, 0, 0, 0, 0, 1, 2, 0}, pr}};
}

PhaseState make_phase_fiducial(const FiducialRecipe& r) {
    switch (r.kind) {
    case FiducialRecipe::Kind::Field:
        return fiducial_mub_field(r.p, r.n, r.a, r.poly, r.endian);
    case FiducialRecipe::Kind::Ring:
        return fiducial_mub_ring(r.n, r.a, r.poly, r.endian);
    case FiducialRecipe::Kind::Qubit:
        return fiducial_mub_qubit(r.n);
    default:
        fail(errc::usage_error, "recipe kind has no single phase-state fiducial");
    }
}

std::pair<int, std::vector<int>> t_gate(const FiducialRecipe& recipe) {
    // |+> carries zero phases, so the diagonal is exactly the fiducial's
    // exponent list
    PhaseState f = make_phase_fiducial(recipe);
    return {f.root, f.exps};
}

} // namespace whd
