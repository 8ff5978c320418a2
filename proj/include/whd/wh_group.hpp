#pragma once

#include <utility>
#include <vector>

#include "whd/states.hpp"

namespace whd {

/// Address of one product operator W_k,l = prod_v tau^(k_v l_v) X^k_v Z^l_v
/// with tau_d = -exp(i pi / d).
struct WHIndex {
    std::vector<int> k;
    std::vector<int> l;

    friend bool operator==(const WHIndex& a, const WHIndex& b) { return a.k == b.k && a.l == b.l; }
};

WHIndex wh_index_from_flat(const DimProfile& profile, long kflat, long lflat);

/// tau_d^e as a complex number.
cx tau_power(int d, long e);

/// Full-phase action on a dense state.
StateVector apply_wh(const StateVector& s, const WHIndex& idx);

/// Exact action on a phase state over root lcm(r, d_v); the global phase
/// (tau factors and the shift-induced constant) is dropped.
PhaseState apply_wh(const PhaseState& s, const WHIndex& idx);

/// All d^2 images, iterated row-major over (k, l).
std::vector<std::pair<WHIndex, StateVector>> wh_orbit(const StateVector& s);

cx wh_expectation(const StateVector& s, const WHIndex& idx);
cx wh_expectation(const DensityOperator& rho, const DimProfile& profile, const WHIndex& idx);

/// The d_i + 1 commuting sets of one local group: set j < d_i holds the
/// powers of W_1j as index pairs (k, jk mod d_i), the last set is the
/// diagonal {(0, k)}; identity excluded everywhere.
std::vector<std::vector<std::pair<int, int>>> strata(int di);

/// True iff Tr[W rho] vanishes (within tol) for every W in the product of
/// the selected strata, one selector per subsystem.
bool stratum_overlap_vanishes(const StateVector& s, const std::vector<int>& selector,
                              double tol = 1e-10);

/// Small dense unitary on one subsystem.
struct Gate {
    std::vector<cx> m; // row-major dim x dim
    int dim = 0;

    cx& at(int r, int c) { return m[r * dim + c]; }
    const cx& at(int r, int c) const { return m[r * dim + c]; }
};

Gate fourier_gate(int d);
Gate phase_gate(int d);
/// The discrete Fourier gate and the quadratic phase gate.
std::vector<Gate> clifford_generators(int d);
Gate gate_mul(const Gate& a, const Gate& b);

/// Checks U W U^dag lands on some WH element up to a unimodular phase, for
/// every element of the local group.
bool is_clifford(const Gate& u, int d, double tol = 1e-9);

/// Applies a local gate on one subsystem of a dense state.
StateVector apply_local_gate(const StateVector& s, const Gate& g, int subsystem);

} // namespace whd
