#include "whd/states.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace whd {

DimProfile::DimProfile(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) fail(errc::usage_error, "dimension profile must not be empty");
    total_ = 1;
    for (int d : dims_) {
        if (d < 2) fail(errc::usage_error, "every local dimension must be >= 2");
        total_ *= d;
    }
}

std::vector<int> DimProfile::digits(long index) const {
    std::vector<int> dg(dims_.size());
    for (int v = subsystems() - 1; v >= 0; --v) {
        dg[v] = static_cast<int>(index % dims_[v]);
        index /= dims_[v];
    }
    return dg;
}

long DimProfile::index(const std::vector<int>& digits) const {
    long j = 0;
    for (int v = 0; v < subsystems(); ++v) j = j * dims_[v] + digits[v];
    return j;
}

StateVector::StateVector(std::vector<cx> amps, DimProfile profile)
    : amps_(std::move(amps)), profile_(std::move(profile)) {
    if (static_cast<long>(amps_.size()) != profile_.total())
        fail(errc::dim_mismatch, "amplitude count does not match the dimension profile");
    double n2 = 0;
    for (const cx& a : amps_) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-12) {
        if (n2 <= 0) fail(errc::usage_error, "zero state vector");
        double s = 1.0 / std::sqrt(n2);
        for (cx& a : amps_) a *= s;
    }
}

PhaseState plus_state(const DimProfile& profile) {
    return PhaseState{1, std::vector<int>(profile.total(), 0), profile};
}

StateVector to_amplitudes(const PhaseState& s) {
    const long d = s.profile.total();
    if (static_cast<long>(s.exps.size()) != d)
        fail(errc::dim_mismatch, "exponent count does not match the dimension profile");
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<cx> amps(d);
    std::vector<cx> roots(s.root);
    for (int e = 0; e < s.root; ++e) {
        double ang = 2.0 * std::numbers::pi * e / s.root;
        roots[e] = cx(std::cos(ang), std::sin(ang));
    }
    for (long j = 0; j < d; ++j) amps[j] = roots[((s.exps[j] % s.root) + s.root) % s.root] * scale;
    return StateVector(std::move(amps), s.profile);
}

cx overlap(const StateVector& a, const StateVector& b) {
    if (!(a.profile() == b.profile())) fail(errc::dim_mismatch, "overlap of mismatched profiles");
    cx s = 0;
    for (long i = 0; i < a.dim(); ++i) s += std::conj(a.amps()[i]) * b.amps()[i];
    return s;
}

cx overlap(const PhaseState& a, const PhaseState& b) { return overlap(to_amplitudes(a), to_amplitudes(b)); }

DensityOperator projector(const StateVector& s) {
    const long d = s.dim();
    DensityOperator rho{std::vector<cx>(d * d), d};
    for (long r = 0; r < d; ++r)
        for (long c = 0; c < d; ++c) rho.at(r, c) = s.amps()[r] * std::conj(s.amps()[c]);
    return rho;
}

namespace {

// splits indices into (kept, traced) parts and strides
struct Split {
    long dk = 1, dt = 1;
    std::vector<long> keep_stride, trace_stride; // stride of each digit in the global index
    std::vector<int> keep_dim, trace_dim;
};

Split make_split(const DimProfile& profile, const std::vector<int>& keep) {
    const int n = profile.subsystems();
    std::vector<bool> kept(n, false);
    for (int k : keep) {
        if (k < 0 || k >= n) fail(errc::bad_subsystem, "subsystem index out of range");
        if (kept[k]) fail(errc::bad_subsystem, "duplicate subsystem index");
        kept[k] = true;
    }
    if (keep.empty() || static_cast<int>(keep.size()) == n)
        fail(errc::bad_subsystem, "keep set must be a non-empty proper subset");
    std::vector<long> stride(n, 1);
    for (int v = n - 2; v >= 0; --v) stride[v] = stride[v + 1] * profile.dims()[v + 1];
    Split sp;
    for (int v = 0; v < n; ++v) {
        if (kept[v]) {
            sp.dk *= profile.dims()[v];
            sp.keep_stride.push_back(stride[v]);
            sp.keep_dim.push_back(profile.dims()[v]);
        } else {
            sp.dt *= profile.dims()[v];
            sp.trace_stride.push_back(stride[v]);
            sp.trace_dim.push_back(profile.dims()[v]);
        }
    }
    return sp;
}

long expand(long compact, const std::vector<int>& dims, const std::vector<long>& strides) {
    long g = 0;
    for (int v = static_cast<int>(dims.size()) - 1; v >= 0; --v) {
        g += (compact % dims[v]) * strides[v];
        compact /= dims[v];
    }
    return g;
}

} // namespace

DensityOperator partial_trace(const StateVector& s, const std::vector<int>& keep) {
    Split sp = make_split(s.profile(), keep);
    DensityOperator rho{std::vector<cx>(sp.dk * sp.dk, cx(0, 0)), sp.dk};
    std::vector<long> kidx(sp.dk), tidx(sp.dt);
    for (long a = 0; a < sp.dk; ++a) kidx[a] = expand(a, sp.keep_dim, sp.keep_stride);
    for (long t = 0; t < sp.dt; ++t) tidx[t] = expand(t, sp.trace_dim, sp.trace_stride);
    for (long a = 0; a < sp.dk; ++a)
        for (long b = 0; b < sp.dk; ++b) {
            cx acc = 0;
            for (long t = 0; t < sp.dt; ++t)
                acc += s.amps()[kidx[a] + tidx[t]] * std::conj(s.amps()[kidx[b] + tidx[t]]);
            rho.at(a, b) = acc;
        }
    return rho;
}

std::vector<double> eigenvalues(const DensityOperator& rho) {
    using Mat = Eigen::MatrixXcd;
    Eigen::Map<const Mat> m(rho.entries.data(), rho.dim, rho.dim);
    // row-major storage transposed into Eigen's column-major is the matrix
    // transpose; Hermitian spectra are unaffected
    Eigen::SelfAdjointEigenSolver<Mat> solver(m);
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + rho.dim);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

std::vector<double> schmidt_coefficients(const StateVector& s, const std::vector<int>& keep) {
    DensityOperator rho = partial_trace(s, keep);
    return eigenvalues(rho);
}

double purity(const StateVector& s, const std::vector<int>& keep) {
    return purity(partial_trace(s, keep));
}

double purity(const DensityOperator& rho) {
    // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho
    double acc = 0;
    for (const cx& e : rho.entries) acc += std::norm(e);
    return acc;
}

double haar_avg_purity(long da, long db) {
    return static_cast<double>(da + db) / static_cast<double>(da * db + 1);
}

double muhm_avg_purity(long da, long db) {
    return static_cast<double>(da + db - 1) / static_cast<double>(da * db);
}

double overlap_up_to_phase(const StateVector& a, const StateVector& b) {
    return std::abs(overlap(a, b));
}

} // namespace whd
