#include "whd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "whd/wh_group.hpp"

namespace whd {

namespace {

// max-deviation pair scan; deterministic because max is order-free and the
// worst pair is tie-broken by smallest flat index
struct WorstPair {
    double dev = -1;
    long a = -1, b = -1;
};

void merge_worst(WorstPair& into, const WorstPair& other) {
    if (other.dev > into.dev ||
        (other.dev == into.dev && (other.a < into.a || (other.a == into.a && other.b < into.b))))
        into = other;
}

} // namespace

std::vector<StateVector> computational_basis(const DimProfile& profile) {
    const long d = profile.total();
    std::vector<StateVector> out;
    out.reserve(d);
    for (long i = 0; i < d; ++i) {
        std::vector<cx> amps(d, cx(0, 0));
        amps[i] = 1;
        out.emplace_back(std::move(amps), profile);
    }
    return out;
}

BasisSet partition_orbit(const PhaseState& s, Exec exec) {
    const DimProfile& pr = s.profile;
    const long d = pr.total();
    BasisSet set{pr, {}};
    set.bases.resize(d);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long kf = 0; kf < d; ++kf) {
        Basis b;
        b.label = pr.digits(kf);
        b.exact.emplace();
        for (long lf = 0; lf < d; ++lf) {
            WHIndex idx{b.label, pr.digits(lf)};
            PhaseState img = apply_wh(s, idx);
            b.states.push_back(to_amplitudes(img));
            b.exact->push_back(std::move(img));
        }
        set.bases[kf] = std::move(b);
    }
    // each orbit basis is orthonormal for equimodular seeds; checked anyway
    for (const Basis& b : set.bases)
        for (long i = 0; i < d; ++i)
            for (long j = i + 1; j < d; ++j)
                if (std::abs(overlap(b.states[i], b.states[j])) > 1e-9)
                    fail(errc::not_orthonormal, "orbit basis failed orthonormality");
    return set;
}

BasisSet partition_orbit(const StateVector& s, double equimod_tol, Exec exec) {
    const long d = s.dim();
    const double want = 1.0 / std::sqrt(static_cast<double>(d));
    for (const cx& a : s.amps())
        if (std::abs(std::abs(a) - want) > equimod_tol)
            fail(errc::not_equimodular, "input state is not equimodular");
    const DimProfile& pr = s.profile();
    BasisSet set{pr, {}};
    set.bases.resize(d);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long kf = 0; kf < d; ++kf) {
        Basis b;
        b.label = pr.digits(kf);
        for (long lf = 0; lf < d; ++lf) b.states.push_back(apply_wh(s, WHIndex{b.label, pr.digits(lf)}));
        set.bases[kf] = std::move(b);
    }
    for (const Basis& b : set.bases)
        for (long i = 0; i < d; ++i)
            for (long j = i + 1; j < d; ++j)
                if (std::abs(overlap(b.states[i], b.states[j])) > 1e-9)
                    fail(errc::not_orthonormal, "orbit basis failed orthonormality");
    return set;
}

VerificationReport verify_mub(const BasisSet& set, bool include_computational, double tol, Exec exec) {
    std::vector<const std::vector<StateVector>*> bases;
    std::vector<StateVector> comp;
    if (include_computational) {
        comp = computational_basis(set.profile);
        bases.push_back(&comp);
    }
    for (const Basis& b : set.bases) bases.push_back(&b.states);
    const long nb = static_cast<long>(bases.size());
    const long d = set.d();
    // orthonormality first
    for (long bi = 0; bi < nb; ++bi) {
        const auto& b = *bases[bi];
        if (static_cast<long>(b.size()) != d) fail(errc::wrong_count, "basis of wrong size");
        for (long i = 0; i < d; ++i)
            for (long j = i; j < d; ++j) {
                double ov2 = std::norm(overlap(b[i], b[j]));
                if (std::abs(ov2 - (i == j ? 1.0 : 0.0)) > std::max(tol, 1e-9))
                    fail(errc::not_orthonormal, "basis " + std::to_string(bi) + " is not orthonormal");
            }
    }
    const double target = 1.0 / d;
    const long bpairs = nb * (nb - 1) / 2;
    const long items = bpairs * d * d;
    const long nblocks = (items + kBlock - 1) / kBlock;
    std::vector<WorstPair> partial(nblocks);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long blk = 0; blk < nblocks; ++blk) {
        WorstPair w;
        const long lo = blk * kBlock, hi = std::min(items, lo + kBlock);
        for (long t = lo; t < hi; ++t) {
            long pair = t / (d * d), rest = t % (d * d);
            long ba = 0, rem = pair;
            while (rem >= nb - 1 - ba) rem -= nb - 1 - (ba++);
            long bb = ba + 1 + rem;
            double dev =
                std::abs(std::norm(overlap((*bases[ba])[rest / d], (*bases[bb])[rest % d])) - target);
            if (dev > w.dev) w = {dev, ba * d + rest / d, bb * d + rest % d};
        }
        partial[blk] = w;
    }
    WorstPair worst;
    for (const auto& w : partial) merge_worst(worst, w);
    VerificationReport rep;
    rep.tolerance = tol;
    rep.pairs_checked = items;
    rep.max_abs_deviation = std::max(worst.dev, 0.0);
    rep.worst_a = worst.a;
    rep.worst_b = worst.b;
    rep.passed = rep.max_abs_deviation <= tol;
    rep.detail = std::to_string(nb) + " bases of dimension " + std::to_string(d);
    return rep;
}

VerificationReport verify_sic(const std::vector<StateVector>& states, double tol, Exec exec) {
    const long m = static_cast<long>(states.size());
    if (m == 0) fail(errc::wrong_count, "empty state list");
    const long d = states[0].dim();
    if (m != d * d) fail(errc::wrong_count, "a SIC needs exactly d^2 states");
    const double target = 1.0 / (d + 1.0);
    const long pairs = m * (m - 1) / 2;
    const long nblocks = (pairs + kBlock - 1) / kBlock;
    std::vector<WorstPair> partial(nblocks);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long blk = 0; blk < nblocks; ++blk) {
        WorstPair w;
        const long lo = blk * kBlock, hi = std::min(pairs, lo + kBlock);
        long a = 0, rem = lo;
        while (rem >= m - 1 - a) rem -= m - 1 - (a++);
        long b = a + 1 + rem;
        for (long t = lo; t < hi; ++t) {
            double dev = std::abs(std::norm(overlap(states[a], states[b])) - target);
            if (dev > w.dev) w = {dev, a, b};
            if (++b == m) b = ++a + 1;
        }
        partial[blk] = w;
    }
    WorstPair worst;
    for (const auto& w : partial) merge_worst(worst, w);
    VerificationReport rep;
    rep.tolerance = tol;
    rep.pairs_checked = pairs;
    rep.max_abs_deviation = std::max(worst.dev, 0.0);
    rep.worst_a = worst.a;
    rep.worst_b = worst.b;
    rep.passed = rep.max_abs_deviation <= tol;
    rep.detail = std::to_string(m) + " states, target 1/(d+1)";
    return rep;
}

Matrix hadamard_from_basis(const Basis& basis) {
    const long d = static_cast<long>(basis.states.size());
    Matrix h{d, std::vector<cx>(d * d)};
    const double s = std::sqrt(static_cast<double>(d));
    for (long c = 0; c < d; ++c)
        for (long r = 0; r < d; ++r) h.at(r, c) = s * basis.states[c].amps()[r];
    return h;
}

VerificationReport is_complex_hadamard(const Matrix& h, double tol) {
    const long d = h.n;
    VerificationReport rep;
    rep.tolerance = tol;
    double dev = 0;
    for (const cx& e : h.a) dev = std::max(dev, std::abs(std::abs(e) - 1.0));
    // unitarity of H/sqrt(d): columns pairwise orthogonal with norm sqrt(d)
    for (long c1 = 0; c1 < d; ++c1)
        for (long c2 = c1; c2 < d; ++c2) {
            cx acc = 0;
            for (long r = 0; r < d; ++r) acc += std::conj(h.at(r, c1)) * h.at(r, c2);
            acc /= static_cast<double>(d);
            dev = std::max(dev, std::abs(acc - (c1 == c2 ? cx(1, 0) : cx(0, 0))));
        }
    rep.max_abs_deviation = dev;
    rep.pairs_checked = d * (d + 1) / 2;
    rep.passed = dev <= tol;
    rep.detail = "unimodularity and unitarity of H/sqrt(d)";
    return rep;
}

std::optional<int> butson_class(const Matrix& h, int max_root, double tol) {
    for (int r = 1; r <= max_root; ++r) {
        bool ok = true;
        for (const cx& e : h.a) {
            double turns = std::arg(e) / (2.0 * std::numbers::pi);
            double scaled = turns * r;
            double nearest = std::round(scaled);
            double ang = 2.0 * std::numbers::pi * nearest / r;
            if (std::abs(e - cx(std::cos(ang), std::sin(ang))) > tol) {
                ok = false;
                break;
            }
        }
        if (ok) return r;
    }
    return std::nullopt;
}

std::vector<double> overlap_spectrum(const std::vector<StateVector>& set_a,
                                     const std::vector<StateVector>& set_b, double tol) {
    std::vector<double> vals;
    vals.reserve(set_a.size() * set_b.size());
    for (const auto& a : set_a)
        for (const auto& b : set_b) vals.push_back(std::norm(overlap(a, b)));
    std::sort(vals.begin(), vals.end());
    std::vector<double> reps;
    size_t i = 0;
    while (i < vals.size()) {
        size_t j = i;
        double sum = 0;
        while (j < vals.size() && vals[j] - vals[i] <= tol) sum += vals[j++];
        reps.push_back(sum / (j - i));
        i = j;
    }
    return reps;
}

VerificationReport verify_isoentangled(const std::vector<StateVector>& states,
                                       const std::vector<int>& keep, double tol) {
    if (states.empty()) fail(errc::wrong_count, "empty state list");
    std::vector<double> purities;
    purities.reserve(states.size());
    for (const auto& s : states) purities.push_back(purity(s, keep));
    double mean = 0;
    for (double v : purities) mean += v;
    mean /= purities.size();
    double dev = 0;
    long worst = 0;
    for (size_t i = 0; i < purities.size(); ++i)
        if (std::abs(purities[i] - mean) > dev) {
            dev = std::abs(purities[i] - mean);
            worst = static_cast<long>(i);
        }
    long da = 1;
    for (int v : keep) da *= states[0].profile().dims()[v];
    long db = states[0].dim() / da;
    VerificationReport rep;
    rep.tolerance = tol;
    rep.pairs_checked = static_cast<long>(states.size());
    rep.max_abs_deviation = dev;
    rep.worst_a = worst;
    rep.passed = dev <= tol;
    rep.common_value = mean;
    rep.reference_value = muhm_avg_purity(da, db);
    rep.detail = "common purity vs (dA+dB-1)/(dA dB)";
    return rep;
}

std::vector<StateVector> flatten(const BasisSet& set, bool include_computational) {
    std::vector<StateVector> out;
    if (include_computational) {
        auto comp = computational_basis(set.profile);
        out.insert(out.end(), comp.begin(), comp.end());
    }
    for (const Basis& b : set.bases) out.insert(out.end(), b.states.begin(), b.states.end());
    return out;
}

} // namespace whd
