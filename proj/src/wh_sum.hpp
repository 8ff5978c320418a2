#pragma once

// Shared internals of the WH expectation kernels: per-axis DFT evaluation of
// all d^2 overlaps Tr[W rho] for a fixed displacement k.

#include <cmath>
#include <numbers>
#include <vector>

#include "whd/states.hpp"

namespace whd::detail {

inline std::vector<std::vector<cx>> root_tables(const DimProfile& pr) {
    std::vector<std::vector<cx>> tabs(pr.subsystems());
    for (int v = 0; v < pr.subsystems(); ++v) {
        int dv = pr.dims()[v];
        tabs[v].resize(dv);
        for (int t = 0; t < dv; ++t) {
            double ang = 2.0 * std::numbers::pi * t / dv;
            tabs[v][t] = cx(std::cos(ang), std::sin(ang));
        }
    }
    return tabs;
}

// In-place unnormalized multi-axis DFT with positive sign:
// out[l] = sum_m in[m] prod_v w_{d_v}^(l_v m_v), indices row-major.
inline void multi_dft(std::vector<cx>& c, const DimProfile& pr,
                      const std::vector<std::vector<cx>>& roots, std::vector<cx>& scratch) {
    const int n = pr.subsystems();
    long stride = 1;
    for (int v = n - 1; v >= 0; --v) {
        const int dv = pr.dims()[v];
        const long lines = static_cast<long>(c.size()) / dv;
        for (long line = 0; line < lines; ++line) {
            long lo = line % stride;
            long hi = line / stride;
            long base = hi * stride * dv + lo;
            for (int t = 0; t < dv; ++t) scratch[t] = c[base + t * stride];
            for (int l = 0; l < dv; ++l) {
                cx acc = 0;
                for (int m = 0; m < dv; ++m) acc += scratch[m] * roots[v][(l * m) % dv];
                c[base + l * stride] = acc;
            }
        }
        stride *= dv;
    }
}

inline long shifted_index(const DimProfile& pr, long j, const std::vector<int>& k) {
    auto dg = pr.digits(j);
    for (int v = 0; v < pr.subsystems(); ++v) dg[v] = (dg[v] + k[v]) % pr.dims()[v];
    return pr.index(dg);
}

/// Per-thread evaluator of magick for exponent tuples over a fixed root.
class PhaseMagick {
public:
    PhaseMagick(const DimProfile& pr, int root)
        : pr_(pr), roots_(root_tables(pr)), d_(pr.total()), c_(d_), amps_(d_) {
        int maxd = 2;
        for (int v = 0; v < pr.subsystems(); ++v) maxd = std::max(maxd, pr.dims()[v]);
        scratch_.resize(maxd);
        lut_.resize(root);
        const double s = 1.0 / std::sqrt(static_cast<double>(d_));
        for (int e = 0; e < root; ++e) {
            double ang = 2.0 * std::numbers::pi * e / root;
            lut_[e] = s * cx(std::cos(ang), std::sin(ang));
        }
        shift_.resize(d_ * d_);
        for (long kf = 0; kf < d_; ++kf) {
            auto kd = pr.digits(kf);
            for (long j = 0; j < d_; ++j) shift_[kf * d_ + j] = shifted_index(pr, j, kd);
        }
    }

    double value(const std::vector<int>& exps) {
        for (long j = 0; j < d_; ++j) amps_[j] = lut_[exps[j]];
        double total = 0;
        for (long kf = 0; kf < d_; ++kf) {
            const long* sh = shift_.data() + kf * d_;
            for (long j = 0; j < d_; ++j) c_[j] = amps_[j] * std::conj(amps_[sh[j]]);
            multi_dft(c_, pr_, roots_, scratch_);
            for (long lf = 0; lf < d_; ++lf) total += std::abs(c_[lf]);
        }
        return total;
    }

private:
    DimProfile pr_;
    std::vector<std::vector<cx>> roots_;
    long d_;
    std::vector<cx> c_, amps_, scratch_;
    std::vector<cx> lut_;
    std::vector<long> shift_;
};

} // namespace whd::detail
