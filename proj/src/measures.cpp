#include "whd/measures.hpp"

#include <cmath>
#include <numbers>

#include "whd/finite_field.hpp"
#include "whd/fiducials.hpp"
#include "wh_sum.hpp"

namespace whd {

namespace {

using detail::multi_dft;
using detail::root_tables;
using detail::shifted_index;

// Sum over all (k, l) of |Tr W rho| given a callback producing
// c_j = rho_{j, j+k}; the per-k inner sums run in fixed order.
template <class FillC>
double wh_abs_sum(const DimProfile& pr, Exec exec, std::vector<double>* per_op, FillC&& fill) {
    const long d = pr.total();
    auto roots = root_tables(pr);
    std::vector<double> per_k(d, 0.0);
    if (per_op) per_op->assign(d * d, 0.0);
#pragma omp parallel if (exec == Exec::Parallel)
    {
        std::vector<cx> c(d), scratch(64);
        int maxd = 0;
        for (int v = 0; v < pr.subsystems(); ++v) maxd = std::max(maxd, pr.dims()[v]);
        if (maxd > static_cast<int>(scratch.size())) scratch.resize(maxd);
#pragma omp for schedule(dynamic)
        for (long kf = 0; kf < d; ++kf) {
            auto kdig = pr.digits(kf);
            fill(kf, kdig, c);
            multi_dft(c, pr, roots, scratch);
            double acc = 0;
            for (long lf = 0; lf < d; ++lf) {
                double v = std::abs(c[lf]);
                acc += v;
                if (per_op) (*per_op)[kf * d + lf] = v;
            }
            per_k[kf] = acc;
        }
    }
    double total = 0;
    for (double v : per_k) total += v;
    return total;
}

MagickReport report_for(long d, double value, std::vector<double>* per_op) {
    MagickReport r;
    r.value = value;
    r.bound_sic = sic_bound(d);
    r.bound_mub = mub_bound(d);
    if (per_op) r.per_operator = std::move(*per_op);
    return r;
}

} // namespace

double sic_bound(long d) { return 1.0 + (d - 1) * std::sqrt(static_cast<double>(d + 1)); }
double mub_bound(long d) { return 1.0 + (d - 1) * std::sqrt(static_cast<double>(d)); }

MagickReport magick(const StateVector& s, Exec exec, bool per_op) {
    const DimProfile& pr = s.profile();
    const long d = pr.total();
    std::vector<double> ops;
    double value = wh_abs_sum(pr, exec, per_op ? &ops : nullptr,
                              [&](long, const std::vector<int>& kdig, std::vector<cx>& c) {
                                  for (long j = 0; j < d; ++j)
                                      c[j] = s.amps()[j] * std::conj(s.amps()[shifted_index(pr, j, kdig)]);
                              });
    return report_for(d, value, per_op ? &ops : nullptr);
}

MagickReport magick(const PhaseState& s, Exec exec, bool per_op) {
    return magick(to_amplitudes(s), exec, per_op);
}

MagickReport magick(const DensityOperator& rho, const DimProfile& profile, Exec exec, bool per_op) {
    if (rho.dim != profile.total()) fail(errc::dim_mismatch, "density operator does not match the profile");
    const long d = rho.dim;
    std::vector<double> ops;
    double value = wh_abs_sum(profile, exec, per_op ? &ops : nullptr,
                              [&](long, const std::vector<int>& kdig, std::vector<cx>& c) {
                                  for (long j = 0; j < d; ++j)
                                      c[j] = rho.at(j, shifted_index(profile, j, kdig));
                              });
    return report_for(d, value, per_op ? &ops : nullptr);
}

double magic_global(const StateVector& s, Exec exec) {
    StateVector flat(s.amps(), DimProfile({static_cast<int>(s.dim())}));
    return magick(flat, exec).value;
}

double magic_global(const DensityOperator& rho, Exec exec) {
    return magick(rho, DimProfile({static_cast<int>(rho.dim)}), exec).value;
}

namespace {

// pair (a, b), a < b, from a flat index into the upper triangle of an N set
std::pair<long, long> pair_from_flat(long t, long n) {
    // row a contributes n-1-a pairs
    long a = 0;
    long rem = t;
    while (rem >= n - 1 - a) {
        rem -= n - 1 - a;
        ++a;
    }
    return {a, a + 1 + rem};
}

} // namespace

double p_sic(const std::vector<StateVector>& states, Exec exec) {
    const long m = static_cast<long>(states.size());
    if (m == 0) fail(errc::wrong_count, "empty state list");
    const long d = states[0].dim();
    if (m != d * d) fail(errc::wrong_count, "a SIC candidate needs exactly d^2 states");
    const double target = 1.0 / std::sqrt(static_cast<double>(d + 1));
    const long pairs = m * (m - 1) / 2;
    return blocked_sum(pairs, exec, [&](long lo, long hi) {
        auto [a, b] = pair_from_flat(lo, m);
        double acc = 0;
        for (long t = lo; t < hi; ++t) {
            double dev = std::abs(overlap(states[a], states[b])) - target;
            acc += dev * dev;
            if (++b == m) {
                ++a;
                b = a + 1;
            }
        }
        return acc;
    });
}

double p_mub(const std::vector<std::vector<StateVector>>& bases, double ortho_tol, Exec exec) {
    const long nb = static_cast<long>(bases.size());
    if (nb < 2) fail(errc::wrong_count, "need at least two bases");
    const long d = bases[0][0].dim();
    for (const auto& b : bases) {
        if (static_cast<long>(b.size()) != d) fail(errc::wrong_count, "basis of wrong size");
        for (long i = 0; i < d; ++i)
            for (long j = i; j < d; ++j) {
                double ov = std::abs(overlap(b[i], b[j]));
                if (std::abs(ov - (i == j ? 1.0 : 0.0)) > ortho_tol)
                    fail(errc::not_orthonormal, "input basis is not orthonormal");
            }
    }
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    const long bpairs = nb * (nb - 1) / 2;
    const long items = bpairs * d * d;
    return blocked_sum(items, exec, [&](long lo, long hi) {
        double acc = 0;
        for (long t = lo; t < hi; ++t) {
            long pair = t / (d * d);
            long rest = t % (d * d);
            auto [ba, bb] = pair_from_flat(pair, nb);
            double dev = std::abs(overlap(bases[ba][rest / d], bases[bb][rest % d])) - target;
            acc += dev * dev;
        }
        return acc;
    });
}

double p_sic_from_magick(long d, double m) {
    double dd = static_cast<double>(d);
    return dd * dd * dd - dd * dd + dd * dd / std::sqrt(dd + 1) * (1.0 - m);
}

double p_mub_from_magick(long d, double m) {
    double dd = static_cast<double>(d);
    return dd * dd * dd - dd * dd + dd * std::sqrt(dd) * (1.0 - m);
}

int smallest_nonresidue(int p) {
    for (int q = 2; q < p; ++q)
        if (jacobi_symbol(q, p) == -1) return q;
    fail(errc::bad_prime, "no quadratic non-residue found");
}

DensityOperator marginal_closed_form(int p, Marginal which) {
    if (p < 5 || !is_prime(p)) fail(errc::bad_prime, "closed-form marginals need a prime p >= 5");
    DensityOperator rho{std::vector<cx>(static_cast<size_t>(p) * p, cx(0, 0)), p};
    if (which == Marginal::Rho2) {
        rho.at(0, 0) = 1.0 / p;
        for (int i = 1; i < p; ++i) {
            rho.at(i, i) += 1.0 / p;
            rho.at(i, (p - i) % p) += 1.0 / p;
        }
        return rho;
    }
    const int q = smallest_nonresidue(p);
    const cx eps = gauss_eps(p);
    const double off = 1.0 / std::pow(static_cast<double>(p), 1.5);
    for (int i = 0; i < p; ++i) {
        rho.at(i, i) = 1.0 / p;
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            long e = (static_cast<long>(i) * i * i - static_cast<long>(j) * j * j) % p;
            if (e < 0) e += p;
            double ang = 2.0 * std::numbers::pi * e / p;
            rho.at(i, j) = off * eps * static_cast<double>(jacobi_symbol(3L * q * (i - j), p)) *
                           cx(std::cos(ang), std::sin(ang));
        }
    }
    return rho;
}

double marginal_hs_overlap(int p, int k, int l, int k2, int l2) {
    if (p < 5 || !is_prime(p)) fail(errc::bad_prime, "needs a prime p >= 5");
    double pp = static_cast<double>(p);
    if ((k - k2) % p != 0) return 1.0 / pp;
    if ((l - l2) % p != 0) return (pp - 1.0) / (pp * pp);
    return (2.0 * pp - 1.0) / (pp * pp);
}

std::pair<double, double> product_magic_comparison(int p, int n) {
    if (n < 1) fail(errc::usage_error, "need n >= 1");
    PhaseState local, global;
    if (p >= 5) {
        local = fiducial_mub_field(p, 1, {1});
        if (n > 1) global = fiducial_mub_field(p, n, {1});
    } else if (p == 3) {
        local = fiducial_mub_ring(1, {1});
        if (n > 1) global = fiducial_mub_ring(n, {1});
    } else if (p == 2) {
        local = fiducial_mub_qubit(1);
        if (n == 2) global = fiducial_mub_qubit(2);
        else if (n > 2) fail(errc::not_available, "no multiqubit fiducial beyond n = 2");
    } else {
        fail(errc::bad_prime, "p must be prime");
    }
    double m_local = magick(local).value;
    if (n == 1) return {m_local, m_local};
    double m_global = magick(global).value;
    return {m_global, std::pow(m_local, n)};
}

} // namespace whd
