#include <doctest.h>

#include <cmath>
#include <set>

#include "whd/fiducials.hpp"
#include "whd/measures.hpp"
#include "whd/verify.hpp"

using namespace whd;
using doctest::Approx;

TEST_CASE("field fiducial exponents for prime dimensions") {
    CHECK(fiducial_mub_field(5, 1, {1}).exps == std::vector<int>{0, 1, 3, 2, 4});
    CHECK(fiducial_mub_field(5, 1, {1}).root == 5);
    CHECK(fiducial_mub_field(7, 1, {1}).exps == std::vector<int>{0, 1, 1, 6, 1, 6, 6});
    CHECK(fiducial_mub_field(5, 1, {2}).exps == std::vector<int>{0, 2, 1, 4, 3});
}

TEST_CASE("field fiducial rejects bad parameters") {
    CHECK_THROWS_AS(fiducial_mub_field(3, 1, {1}), error); // p < 5
    try {
        fiducial_mub_field(5, 2, {0});
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind() == errc::zero_parameter);
    }
}

TEST_CASE("ring fiducial exponents") {
    auto f = fiducial_mub_ring(1, {1});
    CHECK(f.root == 9);
    CHECK(f.exps == std::vector<int>{0, 1, 8});
    try {
        fiducial_mub_ring(1, {3});
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind() == errc::zero_divisor_parameter);
    }
}

TEST_CASE("ring fiducial matches the published d=9 column") {
    // poly x^2+x+2 over Z9 with a = 2 reproduces the printed matrix exactly
    auto f = fiducial_mub_ring(2, {2}, std::vector<int>{2, 1, 1});
    CHECK(f.exps == std::vector<int>{0, 1, 8, 4, 8, 0, 5, 0, 1});
}

TEST_CASE("field fiducial matches the published d=25 column") {
    // poly x^2+2x+3 with a = 4+4x
    auto f = fiducial_mub_field(5, 2, {4, 4}, std::vector<int>{3, 2, 1});
    std::vector<int> head(f.exps.begin(), f.exps.begin() + 10);
    CHECK(head == std::vector<int>{0, 4, 2, 3, 1, 0, 2, 0, 3, 0});
}

TEST_CASE("qubit fiducials") {
    auto f2 = fiducial_mub_qubit(1);
    CHECK(f2.root == 8);
    CHECK(f2.exps == std::vector<int>{0, 1});
    auto f4 = fiducial_mub_qubit(2);
    CHECK(f4.root == 4);
    CHECK(f4.exps == std::vector<int>{0, 1, 1, 1});
    try {
        fiducial_mub_qubit(3);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind() == errc::not_available);
    }
}

TEST_CASE("hoggar fiducial") {
    StateVector h = hoggar_fiducial();
    double norm = 0;
    for (const cx& a : h.amps()) norm += std::norm(a);
    CHECK(norm == Approx(1.0).epsilon(1e-14));
    CHECK(magick(h).value == Approx(22.0).epsilon(1e-12));
}

TEST_CASE("sporadic triplet vectors") {
    auto t = sporadic_triplet();
    CHECK(t[0].exps == std::vector<int>{0, 1, 1, 1, 1, 0, 1, 1, 0});
    CHECK(t[1].exps == std::vector<int>{0, 0, 1, 0, 0, 1, 0, 1, 0});
    CHECK(t[2].exps == std::vector<int>{0, 0, 0, 0, 0, 0, 1, 2, 0});
    double m0 = magick(t[0]).value;
    for (const auto& psi : t) {
        CHECK(purity(to_amplitudes(psi), {0}) == Approx(5.0 / 9).epsilon(1e-12));
        CHECK(purity(to_amplitudes(psi), {1}) == Approx(5.0 / 9).epsilon(1e-12));
        CHECK(magick(psi).value == Approx(m0).epsilon(1e-12));
    }
}

TEST_CASE("t gate is the fiducial's diagonal") {
    FiducialRecipe r;
    r.kind = FiducialRecipe::Kind::Field;
    r.p = 5;
    r.n = 1;
    r.a = {1};
    auto [root, exps] = t_gate(r);
    CHECK(root == 5);
    CHECK(exps == std::vector<int>{0, 1, 3, 2, 4});
    r.a = {2};
    CHECK(t_gate(r).second == std::vector<int>{0, 2, 1, 4, 3});
    r.kind = FiducialRecipe::Kind::Ring;
    r.p = 3;
    r.a = {1};
    CHECK(t_gate(r).second == std::vector<int>{0, 1, 8});
}

TEST_CASE("field fiducials have flat orbit overlaps") {
    for (auto [p, n, a] : {std::tuple{5, 1, 1}, {7, 1, 1}, {5, 2, 1}, {5, 2, 3}}) {
        auto f = fiducial_mub_field(p, n, {a});
        StateVector dense = to_amplitudes(f);
        const DimProfile& pr = dense.profile();
        const long d = pr.total();
        const double flat = 1.0 / std::sqrt(static_cast<double>(d));
        for (long kf = 0; kf < d; ++kf)
            for (long lf = 0; lf < d; ++lf) {
                double ov = std::abs(wh_expectation(dense, wh_index_from_flat(pr, kf, lf)));
                if (kf == 0)
                    CHECK(std::abs(ov - (lf == 0 ? 1.0 : 0.0)) < 1e-9);
                else
                    CHECK(std::abs(ov - flat) < 1e-9);
            }
    }
}

TEST_CASE("fiducial property for the ring construction") {
    for (auto [n, a] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        auto f = fiducial_mub_ring(n, {a});
        StateVector dense = to_amplitudes(f);
        const DimProfile& pr = dense.profile();
        const long d = pr.total();
        const double flat = 1.0 / std::sqrt(static_cast<double>(d));
        for (long kf = 0; kf < d; ++kf)
            for (long lf = 0; lf < d; ++lf) {
                double ov = std::abs(wh_expectation(dense, wh_index_from_flat(pr, kf, lf)));
                if (kf == 0)
                    CHECK(std::abs(ov - (lf == 0 ? 1.0 : 0.0)) < 1e-9);
                else
                    CHECK(std::abs(ov - flat) < 1e-9);
            }
    }
}

TEST_CASE("every nonzero a gives an Alltop fiducial for n = 1") {
    for (int p : {5, 7, 11}) {
        for (int a = 1; a < p; ++a) {
            auto f = fiducial_mub_field(p, 1, {a});
            CHECK(magick(f).value == Approx(mub_bound(p)).epsilon(1e-11));
        }
    }
}

TEST_CASE("entanglement depends on a at p = 7, n = 2") {
    std::set<std::vector<long>> spectra;
    FieldSpec f49(7, 2);
    for (long j = 1; j < 49; ++j) {
        auto a = f49.from_index(j);
        auto f = fiducial_mub_field(f49, a);
        auto sc = schmidt_coefficients(to_amplitudes(f), {0});
        std::vector<long> key;
        for (double v : sc) key.push_back(std::lround(v * 1e8));
        spectra.insert(key);
    }
    CHECK(spectra.size() >= 2); // reported: two or four structures
    MESSAGE("distinct Schmidt structures at p=7, n=2: ", spectra.size());
}

TEST_CASE("dual-parameter family has the simple Schmidt vector") {
    // over x^2 - q both dual coordinates work; 2(p-1) parameters in total
    FieldSpec f25(5, 2, std::vector<int>{2, 0, 1});
    int found = 0;
    for (int i = 0; i < 2; ++i) {
        auto base = f25.dual_element(i);
        for (int s = 1; s < 5; ++s) {
            auto a = ff_mul(f25.scalar(s), base);
            auto sc = schmidt_coefficients(to_amplitudes(fiducial_mub_field(f25, a)), {0});
            CHECK(sc[0] == Approx(0.4).epsilon(1e-9));
            CHECK(sc[1] == Approx(0.4).epsilon(1e-9));
            CHECK(sc[2] == Approx(0.2).epsilon(1e-9));
            CHECK(std::abs(sc[3]) < 1e-9);
            CHECK(std::abs(sc[4]) < 1e-9);
            ++found;
        }
    }
    CHECK(found == 8);
}
