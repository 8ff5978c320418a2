#include <doctest.h>

#include <cmath>
#include <random>

#include "whd/states.hpp"

using namespace whd;
using doctest::Approx;

namespace {

StateVector random_state(const DimProfile& pr, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cx> amps(pr.total());
    for (cx& a : amps) a = cx(g(rng), g(rng));
    return StateVector(std::move(amps), pr);
}

} // namespace

TEST_CASE("profiles and index digits") {
    DimProfile pr({3, 5});
    CHECK(pr.total() == 15);
    CHECK(pr.digits(7) == std::vector<int>{1, 2});
    CHECK(pr.index({1, 2}) == 7);
    CHECK_THROWS_AS(DimProfile({1, 3}), error);
}

TEST_CASE("plus state and conversion") {
    DimProfile pr({2});
    PhaseState plus = plus_state(pr);
    CHECK(plus.root == 1);
    StateVector v = to_amplitudes(plus);
    CHECK(v.amps()[0].real() == Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(overlap(v, v) - cx(1, 0)) < 1e-14);

    PhaseState d9 = plus_state(DimProfile({3, 3}));
    StateVector v9 = to_amplitudes(d9);
    double norm = 0;
    for (const cx& a : v9.amps()) norm += std::norm(a);
    CHECK(norm == Approx(1.0));

    // (1, i, i, i)/2
    PhaseState f4{4, {0, 1, 1, 1}, DimProfile({2, 2})};
    StateVector vf = to_amplitudes(f4);
    CHECK(std::abs(vf.amps()[0] - cx(0.5, 0)) < 1e-15);
    CHECK(std::abs(vf.amps()[1] - cx(0, 0.5)) < 1e-15);
    CHECK(std::abs(vf.amps()[3] - cx(0, 0.5)) < 1e-15);
}

TEST_CASE("conversion preserves the norm at large roots and dimensions") {
    std::mt19937_64 rng(7);
    for (auto [root, d] : {std::pair{72, 729}, {8, 512}, {9, 243}}) {
        std::vector<int> dims;
        int total = 1;
        while (total < d) {
            dims.push_back(d % 2 == 0 ? 2 : 3);
            total *= dims.back();
        }
        DimProfile pr(dims);
        PhaseState s{root, {}, pr};
        s.exps.resize(pr.total());
        for (int& e : s.exps) e = static_cast<int>(rng() % root);
        StateVector v = to_amplitudes(s);
        // compensated sum so the check measures the amplitudes, not the sum
        double norm = 0, carry = 0;
        for (const cx& a : v.amps()) {
            double y = std::norm(a) - carry;
            double t = norm + y;
            carry = (t - norm) - y;
            norm = t;
        }
        CHECK(std::abs(norm - 1.0) < 1e-14);
    }
}

TEST_CASE("overlap is conjugate-linear in the first slot") {
    DimProfile pr({4});
    StateVector e0({cx(1, 0), 0, 0, 0}, pr);
    StateVector e1({0, cx(1, 0), 0, 0}, pr);
    CHECK(std::abs(overlap(e0, e1)) == 0);
    StateVector mix({cx(0, 1 / std::sqrt(2.0)), cx(1 / std::sqrt(2.0), 0), 0, 0}, pr);
    CHECK(std::abs(overlap(e0, mix) - cx(0, 1 / std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(overlap(mix, e0) - cx(0, -1 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("partial trace basics") {
    DimProfile pr({2, 2});
    StateVector prod({1, 0, 0, 0}, pr);
    DensityOperator r = partial_trace(prod, {0});
    CHECK(std::abs(r.at(0, 0) - cx(1, 0)) < 1e-14);
    CHECK(std::abs(r.at(1, 1)) < 1e-14);
    CHECK(purity(prod, {0}) == Approx(1.0));

    double s = 1 / std::sqrt(2.0);
    StateVector bell({cx(s, 0), 0, 0, cx(s, 0)}, pr);
    DensityOperator rb = partial_trace(bell, {1});
    CHECK(std::abs(rb.at(0, 0) - cx(0.5, 0)) < 1e-14);
    CHECK(std::abs(rb.at(1, 1) - cx(0.5, 0)) < 1e-14);
    CHECK(std::abs(rb.at(0, 1)) < 1e-14);
    auto sc = schmidt_coefficients(bell, {0});
    CHECK(sc[0] == Approx(0.5));
    CHECK(sc[1] == Approx(0.5));

    CHECK_THROWS_AS(partial_trace(bell, {}), error);
    CHECK_THROWS_AS(partial_trace(bell, {0, 1}), error);
    CHECK_THROWS_AS(partial_trace(bell, {2}), error);
}

TEST_CASE("schmidt coefficients of a product state") {
    DimProfile pr({3, 3});
    std::vector<cx> amps(9, 0);
    amps[4] = 1; // |1>|1>
    auto sc = schmidt_coefficients(StateVector(amps, pr), {0});
    CHECK(sc[0] == Approx(1.0));
    CHECK(sc[1] == Approx(0.0));
}

TEST_CASE("marginal spectra agree on random bipartite states") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        DimProfile pr(trial % 2 ? std::vector<int>{3, 4} : std::vector<int>{2, 5});
        StateVector s = random_state(pr, rng);
        auto a = schmidt_coefficients(s, {0});
        auto b = schmidt_coefficients(s, {1});
        size_t m = std::min(a.size(), b.size());
        for (size_t i = 0; i < m; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
        for (size_t i = m; i < std::max(a.size(), b.size()); ++i)
            CHECK(std::abs((a.size() > m ? a : b)[i]) < 1e-9);
    }
}

TEST_CASE("purity range on random states") {
    std::mt19937_64 rng(43);
    DimProfile pr({3, 5});
    for (int trial = 0; trial < 100; ++trial) {
        StateVector s = random_state(pr, rng);
        double g = purity(s, {0});
        CHECK(g >= 1.0 / 3 - 1e-10);
        CHECK(g <= 1.0 + 1e-10);
    }
}

TEST_CASE("reference purity values") {
    CHECK(haar_avg_purity(3, 3) == Approx(0.6));
    CHECK(muhm_avg_purity(3, 3) == Approx(5.0 / 9));
    CHECK(haar_avg_purity(5, 5) == Approx(10.0 / 26));
    CHECK(muhm_avg_purity(5, 5) == Approx(9.0 / 25));
}
