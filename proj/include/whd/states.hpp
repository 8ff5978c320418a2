#pragma once

#include <complex>
#include <vector>

#include "whd/error.hpp"

namespace whd {

using cx = std::complex<double>;

/// Ordered local dimensions of a multi-qudit space. Subsystem 0 is the
/// leftmost tensor factor and carries the most significant index digit.
class DimProfile {
public:
    DimProfile() = default;
    explicit DimProfile(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int subsystems() const { return static_cast<int>(dims_.size()); }
    long total() const { return total_; }

    std::vector<int> digits(long index) const;
    long index(const std::vector<int>& digits) const;

    friend bool operator==(const DimProfile& a, const DimProfile& b) { return a.dims_ == b.dims_; }

private:
    std::vector<int> dims_;
    long total_ = 0;
};

class StateVector;

/// Equimodular state stored exactly: amplitude j is w_root^exps[j] / sqrt(d).
struct PhaseState {
    int root = 1;
    std::vector<int> exps;
    DimProfile profile;

    long dim() const { return profile.total(); }
};

/// Dense normalized pure state.
class StateVector {
public:
    StateVector() = default;
    StateVector(std::vector<cx> amps, DimProfile profile);

    const std::vector<cx>& amps() const { return amps_; }
    std::vector<cx>& amps() { return amps_; }
    const DimProfile& profile() const { return profile_; }
    long dim() const { return profile_.total(); }

private:
    std::vector<cx> amps_;
    DimProfile profile_;
};

/// Dense density operator, row-major d x d.
struct DensityOperator {
    std::vector<cx> entries;
    long dim = 0;

    cx& at(long r, long c) { return entries[r * dim + c]; }
    const cx& at(long r, long c) const { return entries[r * dim + c]; }
};

PhaseState plus_state(const DimProfile& profile);

StateVector to_amplitudes(const PhaseState& s);

/// Inner product <a|b>, conjugate-linear in the first argument.
cx overlap(const StateVector& a, const StateVector& b);
cx overlap(const PhaseState& a, const PhaseState& b);

DensityOperator projector(const StateVector& s);

/// Reduced operator on the kept subsystems (basis order inherited from the
/// global index convention).
DensityOperator partial_trace(const StateVector& s, const std::vector<int>& keep);

/// Eigenvalues (descending) of a Hermitian operator.
std::vector<double> eigenvalues(const DensityOperator& rho);

/// Schmidt coefficients across the bipartition (keep | rest): eigenvalues of
/// either marginal, descending, padded view of the smaller side.
std::vector<double> schmidt_coefficients(const StateVector& s, const std::vector<int>& keep);

double purity(const StateVector& s, const std::vector<int>& keep);
double purity(const DensityOperator& rho);

/// Haar mean of Tr rho_A^2 over pure states: (dA+dB)/(dA dB + 1).
double haar_avg_purity(long da, long db);
/// Mean purity over the d Hadamard bases of a full MUB set: (dA+dB-1)/(dA dB).
double muhm_avg_purity(long da, long db);

/// Largest |<a|b>| over a global phase, i.e. equality up to phase when ~1.
double overlap_up_to_phase(const StateVector& a, const StateVector& b);

} // namespace whd
