#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whd/exec.hpp"
#include "whd/states.hpp"

namespace whd {

struct VerificationReport {
    bool passed = false;
    double max_abs_deviation = 0;
    long pairs_checked = 0;
    double tolerance = 0;
    long worst_a = -1, worst_b = -1; // flat state indices of the worst pair
    std::optional<int> butson_root;
    std::optional<double> common_value; // isoentanglement: shared purity
    std::optional<double> reference_value;
    std::string detail;
};

struct Basis {
    std::vector<int> label; // k digits of the generating stratum
    std::vector<StateVector> states;
    std::optional<std::vector<PhaseState>> exact; // kept when built from a phase state
};

struct BasisSet {
    DimProfile profile;
    std::vector<Basis> bases;

    long d() const { return profile.total(); }
};

/// Splits the product-WH orbit of an equimodular state into d orthonormal
/// bases, one per k; basis k holds { W_kl s : all l } in row-major l order.
BasisSet partition_orbit(const PhaseState& s, Exec exec = Exec::Parallel);
/// Dense entry point; rejects inputs whose amplitudes are not equimodular.
BasisSet partition_orbit(const StateVector& s, double equimod_tol = 1e-9,
                         Exec exec = Exec::Parallel);

/// Checks every cross-basis squared overlap equals 1/d within tol; the
/// computational basis is prepended when requested.
VerificationReport verify_mub(const BasisSet& set, bool include_computational,
                              double tol = 1e-9, Exec exec = Exec::Parallel);

/// Checks |<a|b>|^2 = 1/(d+1) for all pairs of the d^2 states.
VerificationReport verify_sic(const std::vector<StateVector>& states, double tol = 1e-9,
                              Exec exec = Exec::Parallel);

struct Matrix {
    long n = 0;
    std::vector<cx> a;

    cx& at(long r, long c) { return a[r * n + c]; }
    const cx& at(long r, long c) const { return a[r * n + c]; }
};

/// Stacks sqrt(d) times the basis vectors as columns.
Matrix hadamard_from_basis(const Basis& basis);

/// Unimodular entries and unitarity of H/sqrt(d).
VerificationReport is_complex_hadamard(const Matrix& h, double tol = 1e-9);

/// Smallest root order r <= max_root whose powers cover every entry within
/// tol; nullopt when none does.
std::optional<int> butson_class(const Matrix& h, int max_root, double tol = 1e-9);

/// Clustered distinct values of |<a|b>|^2 across two state collections.
std::vector<double> overlap_spectrum(const std::vector<StateVector>& set_a,
                                     const std::vector<StateVector>& set_b,
                                     double tol = 1e-8);

/// All marginal purities over the kept subsystems agree within tol; the
/// common value is reported next to (dA+dB-1)/(dA dB).
VerificationReport verify_isoentangled(const std::vector<StateVector>& states,
                                       const std::vector<int>& keep, double tol = 1e-9);

std::vector<StateVector> computational_basis(const DimProfile& profile);

/// All states of a basis set flattened in basis-major order.
std::vector<StateVector> flatten(const BasisSet& set, bool include_computational = false);

} // namespace whd
