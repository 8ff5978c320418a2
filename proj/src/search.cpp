#include "whd/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "whd/measures.hpp"
#include "whd/wh_group.hpp"
#include "wh_sum.hpp"

namespace whd {

namespace {

long pow_checked(long base, int e, long guard) {
    long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > guard / base) return guard + 1;
        v *= base;
    }
    return v;
}

void fill_exps(long id, int root, bool dephase, std::vector<int>& exps) {
    if (dephase) exps[0] = 0;
    for (long j = static_cast<long>(exps.size()) - 1; j >= (dephase ? 1 : 0); --j) {
        exps[j] = static_cast<int>(id % root);
        id /= root;
    }
}

std::vector<int> exps_of_candidate(long id, int root, long d, bool dephase) {
    std::vector<int> exps(d, 0);
    fill_exps(id, root, dephase, exps);
    return exps;
}

PhaseState reduce_root(PhaseState s) {
    int g = s.root;
    for (int e : s.exps) g = std::gcd(g, e);
    if (g > 1) {
        for (int& e : s.exps) e /= g;
        s.root /= g;
    }
    return s;
}

struct BlockBest {
    double value = -1;
    long id = -1;
};

} // namespace

PhaseState canonical_orbit_form(const PhaseState& s) {
    long root = s.root;
    for (int dv : s.profile.dims()) root = std::lcm(root, static_cast<long>(dv));
    PhaseState base = s;
    if (root != s.root) {
        for (int& e : base.exps) e = static_cast<int>(e * (root / s.root));
        base.root = static_cast<int>(root);
    }
    const long d = base.profile.total();
    std::vector<int> best;
    for (long kf = 0; kf < d; ++kf)
        for (long lf = 0; lf < d; ++lf) {
            PhaseState img = apply_wh(base, wh_index_from_flat(base.profile, kf, lf));
            std::vector<int> e(img.exps.size());
            for (size_t j = 0; j < e.size(); ++j)
                e[j] = ((img.exps[j] - img.exps[0]) % img.root + img.root) % img.root;
            if (best.empty() || e < best) best = std::move(e);
        }
    return reduce_root(PhaseState{static_cast<int>(root), std::move(best), base.profile});
}

bool orbit_equivalent(const PhaseState& a, const PhaseState& b) {
    if (!(a.profile == b.profile)) return false;
    PhaseState ca = canonical_orbit_form(a), cb = canonical_orbit_form(b);
    return ca.root == cb.root && ca.exps == cb.exps;
}

namespace {

// shared scan driver: evaluates magick of every candidate, hands block
// results to the caller; deterministic because blocks merge in order
template <class OnCandidate>
SearchResult scan(const SearchConfig& cfg, bool collect_hits, double hit_threshold,
                  OnCandidate&& want) {
    const long d = cfg.profile.total();
    if (cfg.root < 2) fail(errc::usage_error, "root must be >= 2");
    const long n = pow_checked(cfg.root, static_cast<int>(cfg.dephase ? d - 1 : d), cfg.guard);
    if (n > cfg.guard) fail(errc::search_space_too_large, "enumeration exceeds the guard rail");
    const long nblocks = (n + kBlock - 1) / kBlock;
    std::vector<BlockBest> best(nblocks);
    std::vector<std::vector<long>> block_hits(collect_hits ? nblocks : 0);
#pragma omp parallel if (cfg.exec == Exec::Parallel)
    {
        detail::PhaseMagick eval(cfg.profile, cfg.root);
        std::vector<int> exps(d, 0);
#pragma omp for schedule(dynamic)
        for (long blk = 0; blk < nblocks; ++blk) {
            const long lo = blk * kBlock, hi = std::min(n, lo + kBlock);
            BlockBest bb;
            for (long id = lo; id < hi; ++id) {
                fill_exps(id, cfg.root, cfg.dephase, exps);
                double v = eval.value(exps);
                if (v > bb.value) bb = {v, id};
                if (collect_hits && v >= hit_threshold) block_hits[blk].push_back(id);
            }
            best[blk] = bb;
        }
    }
    SearchResult res;
    res.scanned = n;
    BlockBest tot;
    for (const auto& bb : best)
        if (bb.value > tot.value) tot = bb;
    res.best_magick = tot.value;
    res.best_state = PhaseState{cfg.root, exps_of_candidate(tot.id, cfg.root, d, cfg.dephase), cfg.profile};
    if (collect_hits) {
        for (long blk = 0; blk < nblocks; ++blk)
            for (long id : block_hits[blk])
                want(id, res);
    }
    return res;
}

} // namespace

SearchResult search_fiducials(const SearchConfig& cfg) {
    const long d = cfg.profile.total();
    const double threshold = mub_bound(d) - cfg.reject_margin;
    std::set<std::pair<int, std::vector<int>>> seen;
    return scan(cfg, true, threshold, [&](long id, SearchResult& res) {
        PhaseState cand{cfg.root, exps_of_candidate(id, cfg.root, d, cfg.dephase), cfg.profile};
        // the fast filter is never trusted alone
        BasisSet bases = partition_orbit(cand, cfg.exec);
        if (!verify_mub(bases, true, cfg.verify_tol, cfg.exec).passed) return;
        PhaseState canon = canonical_orbit_form(cand);
        auto key = std::make_pair(canon.root, canon.exps);
        if (seen.insert(key).second) res.hits.push_back(std::move(canon));
    });
}

SearchResult magick_landscape(const SearchConfig& cfg) {
    return scan(cfg, false, 0.0, [](long, SearchResult&) {});
}

namespace {

PhaseState lo_shift(const PhaseState& s, int shift) {
    // X^{-shift} on the last subsystem, exact
    const int n = s.profile.subsystems();
    std::vector<int> k(n, 0), l(n, 0);
    int dv = s.profile.dims()[n - 1];
    k[n - 1] = ((-shift) % dv + dv) % dv;
    return apply_wh(s, WHIndex{k, l});
}

PhaseState hi_shift(const PhaseState& s, int shift) {
    const int n = s.profile.subsystems();
    std::vector<int> k(n, 0), l(n, 0);
    int dv = s.profile.dims()[0];
    k[0] = ((-shift) % dv + dv) % dv;
    return apply_wh(s, WHIndex{k, l});
}

} // namespace

BasisSet sporadic_family(const std::array<PhaseState, 3>& members, int family) {
    const DimProfile& pr = members[0].profile;
    BasisSet set{pr, {}};
    for (int l = 0; l < 3; ++l) {
        PhaseState shifted_member = lo_shift(members[l], family);
        for (int j = 0; j < 3; ++j) {
            Basis b;
            b.label = {l, j};
            b.exact.emplace();
            for (long k = 0; k < 9; ++k) {
                WHIndex z{{0, 0}, pr.digits(k)};
                PhaseState st = hi_shift(apply_wh(shifted_member, z), j);
                b.states.push_back(to_amplitudes(st));
                b.exact->push_back(std::move(st));
            }
            set.bases.push_back(std::move(b));
        }
    }
    return set;
}

std::vector<SporadicTriplet> search_sporadic_triplet(Exec exec) {
    const DimProfile pr({3, 3});
    const long n = 6561; // 3^8 dephased candidates
    const long nblocks = (n + kBlock - 1) / kBlock;
    std::vector<std::vector<long>> block_hits(nblocks);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long blk = 0; blk < nblocks; ++blk) {
        const long lo = blk * kBlock, hi = std::min(n, lo + kBlock);
        for (long id = lo; id < hi; ++id) {
            auto exps = exps_of_candidate(id, 3, 9, true);
            StateVector sv = to_amplitudes(PhaseState{3, exps, pr});
            if (std::abs(purity(sv, {0}) - 5.0 / 9.0) > 1e-9) continue;
            if (std::abs(purity(sv, {1}) - 5.0 / 9.0) > 1e-9) continue;
            block_hits[blk].push_back(id);
        }
    }
    // orbit classes in scan order
    std::map<std::pair<int, std::vector<int>>, int> canon_to_class;
    std::vector<PhaseState> reps;
    std::vector<double> rep_magick;
    for (long blk = 0; blk < nblocks; ++blk)
        for (long id : block_hits[blk]) {
            PhaseState cand{3, exps_of_candidate(id, 3, 9, true), pr};
            PhaseState canon = canonical_orbit_form(cand);
            auto key = std::make_pair(canon.root, canon.exps);
            if (canon_to_class.emplace(key, static_cast<int>(reps.size())).second) {
                rep_magick.push_back(magick(canon, exec).value);
                reps.push_back(std::move(canon));
            }
        }
    // self-consistency: a member's own three bases must be mutually unbiased
    const int nc = static_cast<int>(reps.size());
    std::vector<BasisSet> fam0(nc), fam1(nc), fam2(nc);
    std::vector<bool> self_ok(nc, false);
    for (int i = 0; i < nc; ++i) {
        std::array<PhaseState, 3> solo{reps[i], reps[i], reps[i]};
        fam0[i] = sporadic_family(solo, 0);
        fam0[i].bases.resize(3); // member 0's three bases only
        fam1[i] = fam0[i];
        fam2[i] = fam0[i];
        for (int j = 0; j < 3; ++j) {
            for (long k = 0; k < 9; ++k) {
                (*fam1[i].bases[j].exact)[k] = lo_shift((*fam0[i].bases[j].exact)[k], 1);
                (*fam2[i].bases[j].exact)[k] = lo_shift((*fam0[i].bases[j].exact)[k], 2);
                fam1[i].bases[j].states[k] = to_amplitudes((*fam1[i].bases[j].exact)[k]);
                fam2[i].bases[j].states[k] = to_amplitudes((*fam2[i].bases[j].exact)[k]);
            }
        }
        self_ok[i] = verify_mub(fam0[i], true, 1e-9, exec).passed;
    }
    auto cross_ok = [&](const BasisSet& a, const BasisSet& b) {
        for (const Basis& ba : a.bases)
            for (const Basis& bb : b.bases)
                for (const StateVector& u : ba.states)
                    for (const StateVector& v : bb.states)
                        if (std::abs(std::norm(overlap(u, v)) - 1.0 / 9.0) > 1e-9) return false;
        return true;
    };
    // pair compatibility: which relative low-shifts keep every cross overlap
    // unbiased
    std::map<std::pair<int, int>, std::vector<int>> valid;
    for (int a = 0; a < nc; ++a) {
        if (!self_ok[a]) continue;
        for (int b = a + 1; b < nc; ++b) {
            if (!self_ok[b] || std::abs(rep_magick[a] - rep_magick[b]) > 1e-9) continue;
            std::vector<int> shifts;
            const BasisSet* fb[3] = {&fam0[b], &fam1[b], &fam2[b]};
            for (int s = 0; s < 3; ++s)
                if (cross_ok(fam0[a], *fb[s])) shifts.push_back(s);
            if (!shifts.empty()) valid[{a, b}] = shifts;
        }
    }
    std::vector<SporadicTriplet> out;
    for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
            auto ab = valid.find({a, b});
            if (ab == valid.end()) continue;
            for (int c = b + 1; c < nc; ++c) {
                auto ac = valid.find({a, c});
                auto bc = valid.find({b, c});
                if (ac == valid.end() || bc == valid.end()) continue;
                for (int sb : ab->second)
                    for (int sc : ac->second) {
                        if (std::find(bc->second.begin(), bc->second.end(), ((sc - sb) % 3 + 3) % 3) ==
                            bc->second.end())
                            continue;
                        // aligned representatives: member i carries the low
                        // shift that made its family compatible
                        std::array<PhaseState, 3> members{reps[a], lo_shift(reps[b], sb),
                                                          lo_shift(reps[c], sc)};
                        BasisSet family = sporadic_family(members, 0);
                        if (!verify_mub(family, true, 1e-9, exec).passed) continue;
                        out.push_back(SporadicTriplet{std::move(members), rep_magick[a]});
                    }
            }
        }
    return out;
}

} // namespace whd
