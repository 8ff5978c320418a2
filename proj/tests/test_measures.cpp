#include <doctest.h>

#include <cmath>
#include <random>

#include "whd/fiducials.hpp"
#include "whd/measures.hpp"
#include "whd/verify.hpp"

using namespace whd;
using doctest::Approx;

namespace {

StateVector random_state(const DimProfile& pr, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cx> amps(pr.total());
    for (cx& a : amps) a = cx(g(rng), g(rng));
    return StateVector(std::move(amps), pr);
}

StateVector random_equimodular(const DimProfile& pr, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    const double s = 1.0 / std::sqrt(static_cast<double>(pr.total()));
    std::vector<cx> amps(pr.total());
    for (cx& a : amps) {
        double t = u(rng);
        a = s * cx(std::cos(t), std::sin(t));
    }
    return StateVector(std::move(amps), pr);
}

DensityOperator mix(const DensityOperator& a, const DensityOperator& b, double lam) {
    DensityOperator out{std::vector<cx>(a.entries.size()), a.dim};
    for (size_t i = 0; i < a.entries.size(); ++i)
        out.entries[i] = lam * a.entries[i] + (1 - lam) * b.entries[i];
    return out;
}

} // namespace

TEST_CASE("magick extremes") {
    for (DimProfile pr : {DimProfile({2, 2}), DimProfile({3, 3}), DimProfile({2, 2, 2})}) {
        const long d = pr.total();
        DensityOperator id{std::vector<cx>(d * d, cx(0, 0)), d};
        for (long i = 0; i < d; ++i) id.at(i, i) = 1.0 / d;
        CHECK(magick(id, pr).value == Approx(1.0).epsilon(1e-13));

        std::vector<cx> zero(d, cx(0, 0));
        zero[0] = 1;
        CHECK(magick(StateVector(zero, pr)).value == Approx(static_cast<double>(d)).epsilon(1e-12));
    }
    CHECK(magick(hoggar_fiducial()).value == Approx(22.0).epsilon(1e-12));
}

TEST_CASE("per-operator breakdown is optional and consistent") {
    auto f = fiducial_mub_ring(1, {1});
    MagickReport plain = magick(f);
    CHECK_FALSE(plain.per_operator.has_value());
    MagickReport full = magick(f, Exec::Parallel, true);
    REQUIRE(full.per_operator.has_value());
    double sum = 0;
    for (double v : *full.per_operator) sum += v;
    CHECK(sum == Approx(full.value).epsilon(1e-13));
    StateVector dense = to_amplitudes(f);
    const DimProfile& pr = dense.profile();
    for (long kf = 0; kf < 3; ++kf)
        for (long lf = 0; lf < 3; ++lf)
            CHECK((*full.per_operator)[kf * 3 + lf] ==
                  Approx(std::abs(wh_expectation(dense, wh_index_from_flat(pr, kf, lf)))).epsilon(1e-12));
}

TEST_CASE("global magic values") {
    auto f5 = fiducial_mub_field(5, 1, {1});
    CHECK(magic_global(to_amplitudes(f5)) == Approx(1 + 4 * std::sqrt(5.0)).epsilon(1e-12));
    DimProfile pr({5});
    std::vector<cx> zero(5, cx(0, 0));
    zero[0] = 1;
    CHECK(magic_global(StateVector(zero, pr)) == Approx(5.0).epsilon(1e-12));
    DensityOperator id{std::vector<cx>(25, cx(0, 0)), 5};
    for (long i = 0; i < 5; ++i) id.at(i, i) = 0.2;
    CHECK(magic_global(id) == Approx(1.0).epsilon(1e-13));
}

TEST_CASE("magick is invariant under local Clifford generators") {
    std::mt19937_64 rng(99);
    for (DimProfile pr : {DimProfile({2, 2}), DimProfile({3, 3})}) {
        auto gens0 = clifford_generators(pr.dims()[0]);
        auto gens1 = clifford_generators(pr.dims()[1]);
        for (int trial = 0; trial < 100; ++trial) {
            StateVector s = random_state(pr, rng);
            double base = magick(s).value;
            StateVector t = apply_local_gate(s, gens0[rng() % 2], 0);
            t = apply_local_gate(t, gens1[rng() % 2], 1);
            CHECK(magick(t).value == Approx(base).epsilon(1e-9));
        }
    }
}

TEST_CASE("magick is convex") {
    std::mt19937_64 rng(7);
    DimProfile pr({2, 2});
    for (int trial = 0; trial < 25; ++trial) {
        DensityOperator a = projector(random_state(pr, rng));
        DensityOperator b = projector(random_state(pr, rng));
        double lam = 0.25 + 0.5 * (trial / 25.0);
        double lhs = magick(mix(a, b, lam), pr).value;
        double rhs = lam * magick(a, pr).value + (1 - lam) * magick(b, pr).value;
        CHECK(lhs <= rhs + 1e-10);
    }
}

TEST_CASE("magick floors and ceilings on random states") {
    std::mt19937_64 rng(2024);
    for (DimProfile pr : {DimProfile({2, 2}), DimProfile({2, 3}), DimProfile({2, 2, 2}), DimProfile({3, 3})}) {
        const long d = pr.total();
        for (int trial = 0; trial < 1000; ++trial) {
            double m = magick(random_state(pr, rng)).value;
            CHECK(m >= d - 1e-9);
            CHECK(m <= sic_bound(d) + 1e-9);
        }
        for (int trial = 0; trial < 1000; ++trial) {
            double m = magick(random_equimodular(pr, rng)).value;
            CHECK(m <= mub_bound(d) + 1e-9);
        }
        // mixed states stay above 1
        StateVector a = random_state(pr, rng), b = random_state(pr, rng);
        CHECK(magick(mix(projector(a), projector(b), 0.5), pr).value >= 1.0 - 1e-10);
    }
}

TEST_CASE("constructed fiducials attain the equimodular ceiling") {
    CHECK(magick(fiducial_mub_ring(2, {1})).value == Approx(mub_bound(9)).epsilon(1e-12));
    CHECK(magick(fiducial_mub_field(5, 2, {1})).value == Approx(mub_bound(25)).epsilon(1e-12));
    CHECK(magick(fiducial_mub_qubit(2)).value == Approx(mub_bound(4)).epsilon(1e-12));
}

TEST_CASE("divergence closed forms match the direct sums") {
    std::mt19937_64 rng(31337);
    for (DimProfile pr : {DimProfile({2, 2}), DimProfile({3, 3})}) {
        const long d = pr.total();
        for (int seed = 0; seed < 50; ++seed) {
            StateVector psi = random_state(pr, rng);
            double m = magick(psi).value;
            std::vector<StateVector> orbit;
            for (auto& [idx, st] : wh_orbit(psi)) orbit.push_back(st);
            CHECK(p_sic(orbit) == Approx(p_sic_from_magick(d, m)).epsilon(1e-7));

            StateVector theta = random_equimodular(pr, rng);
            double mt = magick(theta).value;
            BasisSet bases = partition_orbit(theta);
            std::vector<std::vector<StateVector>> blist;
            for (const Basis& b : bases.bases) blist.push_back(b.states);
            CHECK(p_mub(blist) == Approx(p_mub_from_magick(d, mt)).epsilon(1e-7));
        }
    }
}

TEST_CASE("p_sic vanishes exactly on the Hoggar orbit") {
    std::vector<StateVector> orbit;
    for (auto& [idx, st] : wh_orbit(hoggar_fiducial())) orbit.push_back(st);
    CHECK(p_sic(orbit) < 1e-8);
    CHECK(verify_sic(orbit, 1e-9).passed);
}

TEST_CASE("p_sic of a stabilizer orbit matches the formula at M = d") {
    DimProfile pr({2, 2});
    std::vector<cx> zero(4, cx(0, 0));
    zero[0] = 1;
    StateVector s(zero, pr);
    std::vector<StateVector> orbit;
    for (auto& [idx, st] : wh_orbit(s)) orbit.push_back(st);
    CHECK(p_sic(orbit) == Approx(p_sic_from_magick(4, 4.0)).epsilon(1e-9));
}

TEST_CASE("p_mub vanishes on the ring construction plus computational") {
    BasisSet set = partition_orbit(fiducial_mub_ring(2, {1}));
    std::vector<std::vector<StateVector>> blist{computational_basis(set.profile)};
    for (const Basis& b : set.bases) blist.push_back(b.states);
    CHECK(p_mub(blist) < 1e-8);
}

TEST_CASE("p_mub counts duplicated bases as maximally biased") {
    DimProfile pr({2, 2});
    const long d = 4;
    auto comp = computational_basis(pr);
    double v = p_mub({comp, comp});
    // per basis pair: d matched pairs at overlap 1, d(d-1) at overlap 0
    double expect = d * std::pow(1 - 1 / std::sqrt(double(d)), 2) + d * (d - 1) * (1.0 / d);
    CHECK(v == Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(p_mub({comp}), error);
}

TEST_CASE("marginal closed forms match the dual-parameter fiducial") {
    for (int p : {5, 7}) {
        const int q = smallest_nonresidue(p);
        FieldSpec f(p, 2, std::vector<int>{(p - q) % p, 0, 1}); // x^2 - q
        auto a = f.dual_element(0);
        StateVector fid = to_amplitudes(fiducial_mub_field(f, a));
        DensityOperator r1 = partial_trace(fid, {0});
        DensityOperator r2 = partial_trace(fid, {1});
        DensityOperator c1 = marginal_closed_form(p, Marginal::Rho1);
        DensityOperator c2 = marginal_closed_form(p, Marginal::Rho2);
        for (long i = 0; i < p; ++i)
            for (long j = 0; j < p; ++j) {
                CHECK(std::abs(r1.at(i, j) - c1.at(i, j)) < 1e-9);
                CHECK(std::abs(r2.at(i, j) - c2.at(i, j)) < 1e-9);
            }
        // spectrum (2,...,2,1,0,...,0)/p
        auto ev = eigenvalues(c2);
        for (int i = 0; i < (p - 1) / 2; ++i) CHECK(ev[i] == Approx(2.0 / p).epsilon(1e-10));
        CHECK(ev[(p - 1) / 2] == Approx(1.0 / p).epsilon(1e-10));
    }
}

TEST_CASE("displaced-marginal overlaps: closed form vs direct computation") {
    for (int p : {5, 7}) {
        DensityOperator r1 = marginal_closed_form(p, Marginal::Rho1);
        DensityOperator r2 = marginal_closed_form(p, Marginal::Rho2);
        DimProfile pr({p});
        auto displaced = [&](const DensityOperator& rho, int k, int l) {
            // W rho W^dag via dense conjugation of columns
            DensityOperator out{std::vector<cx>(static_cast<size_t>(p) * p), static_cast<long>(p)};
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c) {
                    // (W rho W^dag)_{rc} = w^{l(r-k)} rho_{r-k,c-k} w^{-l(c-k)}
                    int rs = ((r - k) % p + p) % p, cs = ((c - k) % p + p) % p;
                    double ang = 2.0 * std::numbers::pi * ((static_cast<long>(l) * (rs - cs)) % p) / p;
                    out.at(r, c) = rho.at(rs, cs) * cx(std::cos(ang), std::sin(ang));
                }
            return out;
        };
        auto hs = [&](const DensityOperator& a, const DensityOperator& b) {
            cx acc = 0;
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c) acc += a.at(r, c) * b.at(c, r);
            return acc.real();
        };
        for (const DensityOperator* rho : {&r1, &r2}) {
            for (auto [k, l, k2, l2] : {std::tuple{1, 0, 2, 0}, {1, 0, 1, 1}, {1, 2, 1, 2},
                                        {0, 1, 3, 4}, {2, 2, 2, 4}}) {
                double direct = hs(displaced(*rho, k, l), displaced(*rho, k2, l2));
                CHECK(direct == Approx(marginal_hs_overlap(p, k, l, k2, l2)).epsilon(1e-10));
            }
        }
        CHECK(marginal_hs_overlap(5, 1, 0, 2, 0) == Approx(1.0 / 5));
        CHECK(marginal_hs_overlap(5, 1, 0, 1, 1) == Approx(4.0 / 25));
        CHECK(marginal_hs_overlap(5, 1, 2, 1, 2) == Approx(9.0 / 25));
    }
}

TEST_CASE("global fiducials carry more magick than local products") {
    auto [g52, l52] = product_magic_comparison(5, 2);
    CHECK(g52 == Approx(121.0).epsilon(1e-12));
    CHECK(l52 == Approx(std::pow(1 + 4 * std::sqrt(5.0), 2)).epsilon(1e-12));
    CHECK(g52 > l52);

    auto [g32, l32] = product_magic_comparison(3, 2);
    CHECK(g32 == Approx(25.0).epsilon(1e-12));
    CHECK(l32 == Approx(std::pow(1 + 2 * std::sqrt(3.0), 2)).epsilon(1e-12));
    CHECK(g32 > l32);

    auto [g33, l33] = product_magic_comparison(3, 3);
    CHECK(g33 > l33);

    auto [g1, l1] = product_magic_comparison(7, 1);
    CHECK(g1 == Approx(l1)); // degenerate, no comparison
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    std::mt19937_64 rng(555);
    for (DimProfile pr : {DimProfile({3, 3}), DimProfile({2, 2, 2})}) {
        StateVector s = random_state(pr, rng);
        CHECK(magick(s, Exec::Serial).value == magick(s, Exec::Parallel).value);
        std::vector<StateVector> orbit;
        for (auto& [idx, st] : wh_orbit(s)) orbit.push_back(st);
        CHECK(p_sic(orbit, Exec::Serial) == p_sic(orbit, Exec::Parallel));
    }
}
