#include "whd/wh_group.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace whd {

namespace {

void check_shape(const DimProfile& profile, const WHIndex& idx) {
    const int n = profile.subsystems();
    if (static_cast<int>(idx.k.size()) != n || static_cast<int>(idx.l.size()) != n)
        fail(errc::dim_mismatch, "WH index shape does not match the profile");
    for (int v = 0; v < n; ++v)
        if (idx.k[v] < 0 || idx.k[v] >= profile.dims()[v] || idx.l[v] < 0 || idx.l[v] >= profile.dims()[v])
            fail(errc::dim_mismatch, "WH index entry out of range");
}

cx unit_phase(double turns) { // e^(2 pi i turns)
    double ang = 2.0 * std::numbers::pi * turns;
    return cx(std::cos(ang), std::sin(ang));
}

} // namespace

WHIndex wh_index_from_flat(const DimProfile& profile, long kflat, long lflat) {
    return WHIndex{profile.digits(kflat), profile.digits(lflat)};
}

cx tau_power(int d, long e) {
    // tau_d = -exp(i pi/d) = exp(i pi (d+1)/d); reduce the exponent mod 2d
    long r = ((d + 1) * e) % (2L * d);
    if (r < 0) r += 2L * d;
    return unit_phase(static_cast<double>(r) / (2.0 * d));
}

StateVector apply_wh(const StateVector& s, const WHIndex& idx) {
    const DimProfile& pr = s.profile();
    check_shape(pr, idx);
    const int n = pr.subsystems();
    cx global = 1;
    for (int v = 0; v < n; ++v) global *= tau_power(pr.dims()[v], static_cast<long>(idx.k[v]) * idx.l[v]);
    const long d = pr.total();
    std::vector<cx> out(d);
    std::vector<int> dg(n);
    for (long i = 0; i < d; ++i) {
        dg = pr.digits(i);
        double turns = 0;
        for (int v = 0; v < n; ++v) {
            dg[v] = (dg[v] - idx.k[v] + pr.dims()[v]) % pr.dims()[v];
            turns += static_cast<double>(idx.l[v]) * dg[v] / pr.dims()[v];
        }
        out[i] = global * unit_phase(turns - std::floor(turns)) * s.amps()[pr.index(dg)];
    }
    return StateVector(std::move(out), pr);
}

PhaseState apply_wh(const PhaseState& s, const WHIndex& idx) {
    const DimProfile& pr = s.profile;
    check_shape(pr, idx);
    const int n = pr.subsystems();
    long root = s.root;
    for (int v = 0; v < n; ++v) root = std::lcm(root, static_cast<long>(pr.dims()[v]));
    const long d = pr.total();
    std::vector<int> exps(d);
    std::vector<int> dg(n);
    for (long i = 0; i < d; ++i) {
        dg = pr.digits(i);
        long e = 0;
        for (int v = 0; v < n; ++v) {
            dg[v] = (dg[v] - idx.k[v] + pr.dims()[v]) % pr.dims()[v];
            e += (root / pr.dims()[v]) * idx.l[v] * dg[v];
        }
        e += (root / s.root) * s.exps[pr.index(dg)];
        exps[i] = static_cast<int>(e % root);
    }
    return PhaseState{static_cast<int>(root), std::move(exps), pr};
}

std::vector<std::pair<WHIndex, StateVector>> wh_orbit(const StateVector& s) {
    const long d = s.dim();
    std::vector<std::pair<WHIndex, StateVector>> orbit;
    orbit.reserve(d * d);
    for (long kf = 0; kf < d; ++kf)
        for (long lf = 0; lf < d; ++lf) {
            WHIndex idx = wh_index_from_flat(s.profile(), kf, lf);
            orbit.emplace_back(idx, apply_wh(s, idx));
        }
    return orbit;
}

cx wh_expectation(const StateVector& s, const WHIndex& idx) {
    const DimProfile& pr = s.profile();
    check_shape(pr, idx);
    const int n = pr.subsystems();
    cx global = 1;
    for (int v = 0; v < n; ++v) global *= tau_power(pr.dims()[v], static_cast<long>(idx.k[v]) * idx.l[v]);
    // <psi|W|psi> = tau^kl Sum_m conj(psi_{m+k}) psi_m w^(l.m)
    cx acc = 0;
    std::vector<int> dg(n);
    const long d = pr.total();
    for (long m = 0; m < d; ++m) {
        dg = pr.digits(m);
        double turns = 0;
        for (int v = 0; v < n; ++v) {
            turns += static_cast<double>(idx.l[v]) * dg[v] / pr.dims()[v];
            dg[v] = (dg[v] + idx.k[v]) % pr.dims()[v];
        }
        acc += std::conj(s.amps()[pr.index(dg)]) * s.amps()[m] * unit_phase(turns - std::floor(turns));
    }
    return global * acc;
}

cx wh_expectation(const DensityOperator& rho, const DimProfile& profile, const WHIndex& idx) {
    if (rho.dim != profile.total()) fail(errc::dim_mismatch, "density operator does not match the profile");
    check_shape(profile, idx);
    const int n = profile.subsystems();
    cx global = 1;
    for (int v = 0; v < n; ++v) global *= tau_power(profile.dims()[v], static_cast<long>(idx.k[v]) * idx.l[v]);
    // Tr[W rho] = tau^kl Sum_j w^(l.j) rho_{j, j+k}
    cx acc = 0;
    std::vector<int> dg(n);
    for (long j = 0; j < rho.dim; ++j) {
        dg = profile.digits(j);
        double turns = 0;
        for (int v = 0; v < n; ++v) {
            turns += static_cast<double>(idx.l[v]) * dg[v] / profile.dims()[v];
            dg[v] = (dg[v] + idx.k[v]) % profile.dims()[v];
        }
        acc += rho.at(profile.index(dg), j) * unit_phase(turns - std::floor(turns));
    }
    return global * acc;
}

std::vector<std::vector<std::pair<int, int>>> strata(int di) {
    std::vector<std::vector<std::pair<int, int>>> out(di + 1);
    for (int j = 0; j < di; ++j)
        for (int k = 1; k < di; ++k) out[j].emplace_back(k, j * k % di);
    for (int k = 1; k < di; ++k) out[di].emplace_back(0, k);
    return out;
}

bool stratum_overlap_vanishes(const StateVector& s, const std::vector<int>& selector, double tol) {
    const DimProfile& pr = s.profile();
    const int n = pr.subsystems();
    if (static_cast<int>(selector.size()) != n)
        fail(errc::dim_mismatch, "one stratum selector per subsystem required");
    std::vector<std::vector<std::pair<int, int>>> local(n);
    for (int v = 0; v < n; ++v) {
        auto st = strata(pr.dims()[v]);
        if (selector[v] < 0 || selector[v] > pr.dims()[v]) fail(errc::usage_error, "stratum selector out of range");
        local[v] = st[selector[v]];
    }
    // product over subsystems of the selected member lists
    std::vector<size_t> pos(n, 0);
    WHIndex idx{std::vector<int>(n), std::vector<int>(n)};
    while (true) {
        for (int v = 0; v < n; ++v) {
            idx.k[v] = local[v][pos[v]].first;
            idx.l[v] = local[v][pos[v]].second;
        }
        if (std::abs(wh_expectation(s, idx)) > tol) return false;
        int v = n - 1;
        while (v >= 0 && ++pos[v] == local[v].size()) pos[v--] = 0;
        if (v < 0) break;
    }
    return true;
}

Gate fourier_gate(int d) {
    Gate g{std::vector<cx>(static_cast<size_t>(d) * d), d};
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g.at(r, c) = scale * unit_phase(static_cast<double>(r) * c / d);
    return g;
}

Gate phase_gate(int d) {
    Gate g{std::vector<cx>(static_cast<size_t>(d) * d, cx(0, 0)), d};
    if (d % 2 == 0) {
        for (int j = 0; j < d; ++j) g.at(j, j) = tau_power(d, static_cast<long>(j) * j);
    } else {
        const int inv2 = (d + 1) / 2;
        for (int j = 0; j < d; ++j) {
            long e = static_cast<long>(j) * (j - 1) % d * inv2 % d;
            g.at(j, j) = unit_phase(static_cast<double>(e) / d);
        }
    }
    return g;
}

std::vector<Gate> clifford_generators(int d) { return {fourier_gate(d), phase_gate(d)}; }

Gate gate_mul(const Gate& a, const Gate& b) {
    Gate out{std::vector<cx>(static_cast<size_t>(a.dim) * a.dim, cx(0, 0)), a.dim};
    for (int r = 0; r < a.dim; ++r)
        for (int t = 0; t < a.dim; ++t) {
            cx f = a.at(r, t);
            if (f == cx(0, 0)) continue;
            for (int c = 0; c < a.dim; ++c) out.at(r, c) += f * b.at(t, c);
        }
    return out;
}

namespace {

Gate wh_gate(int d, int k, int l) {
    Gate g{std::vector<cx>(static_cast<size_t>(d) * d, cx(0, 0)), d};
    cx ph = tau_power(d, static_cast<long>(k) * l);
    for (int j = 0; j < d; ++j) g.at((j + k) % d, j) = ph * unit_phase(static_cast<double>(l) * j / d);
    return g;
}

} // namespace

bool is_clifford(const Gate& u, int d, double tol) {
    // conjugate each W and look for a unimodular multiple of some W'
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            Gate w = wh_gate(d, k, l);
            // v = u w u^dag
            Gate udag{std::vector<cx>(static_cast<size_t>(d) * d), d};
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) udag.at(r, c) = std::conj(u.at(c, r));
            Gate v = gate_mul(gate_mul(u, w), udag);
            bool matched = false;
            for (int k2 = 0; k2 < d && !matched; ++k2)
                for (int l2 = 0; l2 < d && !matched; ++l2) {
                    Gate w2 = wh_gate(d, k2, l2);
                    cx c = 0;
                    for (int t = 0; t < d * d; ++t) c += std::conj(w2.m[t]) * v.m[t];
                    c /= static_cast<double>(d);
                    if (std::abs(std::abs(c) - 1.0) > tol) continue;
                    double dev = 0;
                    for (int t = 0; t < d * d; ++t) dev = std::max(dev, std::abs(v.m[t] - c * w2.m[t]));
                    if (dev <= tol) matched = true;
                }
            if (!matched) return false;
        }
    return true;
}

StateVector apply_local_gate(const StateVector& s, const Gate& g, int subsystem) {
    const DimProfile& pr = s.profile();
    if (subsystem < 0 || subsystem >= pr.subsystems()) fail(errc::bad_subsystem, "subsystem out of range");
    if (g.dim != pr.dims()[subsystem]) fail(errc::dim_mismatch, "gate dimension mismatch");
    const long d = pr.total();
    std::vector<cx> out(d, cx(0, 0));
    for (long i = 0; i < d; ++i) {
        auto dg = pr.digits(i);
        int row = dg[subsystem];
        for (int col = 0; col < g.dim; ++col) {
            cx f = g.at(row, col);
            if (f == cx(0, 0)) continue;
            dg[subsystem] = col;
            out[i] += f * s.amps()[pr.index(dg)];
        }
    }
    return StateVector(std::move(out), pr);
}

} // namespace whd
