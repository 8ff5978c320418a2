// Times the hot kernels against their serial reference paths and checks the
// two agree bit for bit.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "whd/fiducials.hpp"
#include "whd/measures.hpp"
#include "whd/search.hpp"
#include "whd/verify.hpp"

using namespace whd;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_of(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

StateVector random_state(const DimProfile& pr, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cx> amps(pr.total());
    for (cx& a : amps) a = cx(g(rng), g(rng));
    return StateVector(std::move(amps), pr);
}

void row(const char* name, double serial_s, double parallel_s, double diff) {
    std::printf("%-28s %10.3f ms %10.3f ms   x%-5.2f   max|delta| %.3g\n", name,
                serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s, diff);
}

} // namespace

int main() {
    std::mt19937_64 rng(20240901);
    std::printf("%-28s %13s %13s   %-7s %s\n", "kernel", "serial", "parallel", "speedup",
                "consistency");

    { // magick sum over d^2 operators, d = 729
        DimProfile pr({3, 3, 3, 3, 3, 3});
        StateVector s = random_state(pr, rng);
        auto t0 = clock_type::now();
        double vs = magick(s, Exec::Serial).value;
        double ts = seconds_of(t0);
        t0 = clock_type::now();
        double vp = magick(s, Exec::Parallel).value;
        double tp = seconds_of(t0);
        row("magick d=729", ts, tp, std::abs(vs - vp));
    }

    { // pairwise MUB verification of the d=25 construction
        BasisSet set = partition_orbit(fiducial_mub_field(5, 2, {1}));
        auto t0 = clock_type::now();
        auto rs = verify_mub(set, true, 1e-9, Exec::Serial);
        double ts = seconds_of(t0);
        t0 = clock_type::now();
        auto rp = verify_mub(set, true, 1e-9, Exec::Parallel);
        double tp = seconds_of(t0);
        row("verify_mub d=25", ts, tp, std::abs(rs.max_abs_deviation - rp.max_abs_deviation));
    }

    { // SIC divergence of the Hoggar orbit
        std::vector<StateVector> orbit;
        for (auto& [idx, st] : wh_orbit(hoggar_fiducial())) orbit.push_back(st);
        auto t0 = clock_type::now();
        double vs = p_sic(orbit, Exec::Serial);
        double ts = seconds_of(t0);
        t0 = clock_type::now();
        double vp = p_sic(orbit, Exec::Parallel);
        double tp = seconds_of(t0);
        row("p_sic d=8 orbit", ts, tp, std::abs(vs - vp));
    }

    { // landscape scan, 4^8 candidates on (2,2)
        SearchConfig cfg;
        cfg.profile = DimProfile({2, 2});
        cfg.root = 4;
        cfg.dephase = false;
        cfg.exec = Exec::Serial;
        auto t0 = clock_type::now();
        SearchResult rs = magick_landscape(cfg);
        double ts = seconds_of(t0);
        cfg.exec = Exec::Parallel;
        t0 = clock_type::now();
        SearchResult rp = magick_landscape(cfg);
        double tp = seconds_of(t0);
        row("landscape (2,2) r=4 full", ts, tp, std::abs(rs.best_magick - rp.best_magick));
    }

    { // fiducial scan, 8^5 candidates on (2,2,2) (short variant of the full run)
        SearchConfig cfg;
        cfg.profile = DimProfile({2, 2, 2});
        cfg.root = 4;
        cfg.exec = Exec::Serial;
        auto t0 = clock_type::now();
        SearchResult rs = search_fiducials(cfg);
        double ts = seconds_of(t0);
        cfg.exec = Exec::Parallel;
        t0 = clock_type::now();
        SearchResult rp = search_fiducials(cfg);
        double tp = seconds_of(t0);
        row("fiducial scan (2,2,2) r=4", ts, tp,
            std::abs(rs.best_magick - rp.best_magick) + std::abs(double(rs.hits.size() - rp.hits.size())));
    }

    return 0;
}
