// Command-line front end: construction, verification, orbit partitioning,
// magick evaluation, searches, and LOG import/export. All numeric work lives
// in the library; this file only wires subcommands to it.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "whd/fiducials.hpp"
#include "whd/io.hpp"
#include "whd/measures.hpp"
#include "whd/search.hpp"
#include "whd/verify.hpp"

namespace {

using namespace whd;

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(csv);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) fail(errc::usage_error, "empty integer list: '" + csv + "'");
    return out;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    return read_text_file(path);
}

Endian parse_endian(const std::string& s) {
    if (s == "big") return Endian::Big;
    if (s == "little") return Endian::Little;
    fail(errc::usage_error, "endian must be big or little");
}

int run_construct(const std::string& kind, int p, int n, const std::string& a_csv,
                  const std::string& poly_csv, const std::string& endian_s) {
    Endian endian = parse_endian(endian_s);
    std::optional<std::vector<int>> poly;
    if (!poly_csv.empty()) poly = parse_int_list(poly_csv);
    if (kind == "hoggar") {
        std::cout << write_state_json(hoggar_fiducial()) << "\n";
        return 0;
    }
    if (kind == "sporadic") {
        auto triplet = sporadic_triplet();
        std::vector<AnyState> states(triplet.begin(), triplet.end());
        std::cout << write_states_json(states, triplet[0].profile) << "\n";
        return 0;
    }
    FiducialRecipe r;
    r.p = p;
    r.n = n;
    r.a = a_csv.empty() ? std::vector<int>{1} : parse_int_list(a_csv);
    r.poly = poly;
    r.endian = endian;
    if (kind == "field")
        r.kind = FiducialRecipe::Kind::Field;
    else if (kind == "ring")
        r.kind = FiducialRecipe::Kind::Ring;
    else if (kind == "qubit")
        r.kind = FiducialRecipe::Kind::Qubit;
    else
        fail(errc::usage_error, "unknown kind: " + kind);
    std::cout << write_state_json(make_phase_fiducial(r)) << "\n";
    return 0;
}

int run_verify(const std::string& what, const std::string& in, double tol, bool computational,
               const std::string& keep_csv, int max_root) {
    std::string text = read_input(in);
    // single-state inputs verify the state's own orbit
    auto set_of = [&](const std::string& t) {
        if (t.find("\"bases\"") != std::string::npos) return read_basis_set_json(t);
        AnyState s = read_state_json(t);
        return std::holds_alternative<PhaseState>(s) ? partition_orbit(std::get<PhaseState>(s))
                                                     : partition_orbit(std::get<StateVector>(s));
    };
    VerificationReport rep;
    if (what == "mub") {
        rep = verify_mub(set_of(text), computational, tol);
    } else if (what == "sic") {
        auto states = read_states_json(text);
        std::vector<StateVector> dense;
        if (states.size() == 1) {
            for (auto& [idx, st] : wh_orbit(dense_of(states[0]))) dense.push_back(st);
        } else {
            for (const auto& s : states) dense.push_back(dense_of(s));
        }
        rep = verify_sic(dense, tol);
    } else if (what == "hadamard" || what == "butson") {
        BasisSet set = set_of(text);
        rep.passed = true;
        rep.tolerance = tol;
        std::optional<int> common;
        for (const Basis& b : set.bases) {
            Matrix h = hadamard_from_basis(b);
            VerificationReport one = is_complex_hadamard(h, tol);
            rep.max_abs_deviation = std::max(rep.max_abs_deviation, one.max_abs_deviation);
            rep.pairs_checked += one.pairs_checked;
            rep.passed = rep.passed && one.passed;
            if (what == "butson" && one.passed) {
                auto r = butson_class(h, max_root, tol);
                if (!r) {
                    rep.passed = false;
                } else if (!common) {
                    common = r;
                } else if (*common != *r) {
                    common = std::max(*common, *r);
                }
            }
        }
        if (what == "butson") {
            rep.butson_root = common;
            rep.detail = "smallest common root order over all bases";
        }
    } else if (what == "isoentangled") {
        auto states = read_states_json(text);
        std::vector<StateVector> dense;
        for (const auto& s : states) dense.push_back(dense_of(s));
        rep = verify_isoentangled(dense, parse_int_list(keep_csv), tol);
    } else {
        fail(errc::usage_error, "unknown verification: " + what);
    }
    std::cout << write_report_json(rep) << "\n";
    return rep.passed ? 0 : 1;
}

int run_magick(const std::string& in, const std::string& dims_csv, bool per_op) {
    AnyState s = read_state_json(read_input(in));
    StateVector dense = dense_of(s);
    if (!dims_csv.empty()) {
        DimProfile profile(parse_int_list(dims_csv));
        dense = StateVector(dense.amps(), profile);
    }
    MagickReport rep = magick(dense, Exec::Parallel, per_op);
    std::cout << write_magick_json(rep, dense.profile()) << "\n";
    return 0;
}

int run_orbit(const std::string& in, bool partition) {
    AnyState s = read_state_json(read_input(in));
    if (partition) {
        BasisSet set = std::holds_alternative<PhaseState>(s)
                           ? partition_orbit(std::get<PhaseState>(s))
                           : partition_orbit(std::get<StateVector>(s));
        std::cout << write_basis_set_json(set) << "\n";
        return 0;
    }
    StateVector dense = dense_of(s);
    std::cout << write_orbit_json(wh_orbit(dense), dense.profile()) << "\n";
    return 0;
}

int run_search(const std::string& mode, const std::string& dims_csv, int root, int workers,
               bool dephase) {
    if (workers > 0) set_workers(workers);
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    if (mode == "sporadic") {
        std::cerr << "scanning 6561 third-root candidates on (3,3)\n";
        auto triplets = search_sporadic_triplet();
        std::cerr << "done: " << triplets.size() << " verified triplets in " << elapsed() << " s\n";
        std::cout << write_triplets_json(triplets) << "\n";
        return 0;
    }
    SearchConfig cfg;
    cfg.profile = DimProfile(parse_int_list(dims_csv));
    cfg.root = root;
    cfg.dephase = dephase;
    const long d = cfg.profile.total();
    std::cerr << "scanning root-" << root << " exponent tuples on d=" << d << "\n";
    SearchResult res = mode == "fiducial" ? search_fiducials(cfg) : magick_landscape(cfg);
    std::cerr << "done: " << res.scanned << " candidates in " << elapsed() << " s, best magick "
              << res.best_magick << ", " << res.hits.size() << " hits\n";
    std::cout << write_search_json(res) << "\n";
    return 0;
}

int run_export_log(const std::string& in, int root, int basis_index, bool dephase) {
    BasisSet set = read_basis_set_json(read_input(in));
    if (basis_index < 0 || basis_index >= static_cast<int>(set.bases.size()))
        fail(errc::usage_error, "basis index out of range");
    std::cout << write_log_text(log_from_basis(set.bases[basis_index], root, dephase));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"product Weyl-Heisenberg MUB/SIC construction and verification"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("WHD_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) whd::set_workers(w);
    }

    // construct
    auto* construct = app.add_subcommand("construct", "emit a fiducial state as JSON");
    std::string kind, a_csv, poly_csv, endian_s = "big";
    int p = 0, n = 1;
    construct->add_option("--kind", kind, "field|ring|qubit|hoggar|sporadic")->required();
    construct->add_option("--p", p, "prime");
    construct->add_option("--n", n, "extension degree / qudit count");
    construct->add_option("--a", a_csv, "parameter a, integer or coefficient list");
    construct->add_option("--poly", poly_csv, "defining polynomial, constant term first");
    construct->add_option("--endian", endian_s, "big|little index convention");

    // verify
    auto* verify = app.add_subcommand("verify", "check a design property, exit 0/1");
    std::string what, vin, keep_csv = "0";
    double tol = 1e-9;
    bool no_comp = false;
    int max_root = 72;
    verify->add_option("what", what, "mub|sic|hadamard|butson|isoentangled")->required();
    verify->add_option("--in", vin, "input JSON file (default: stdin)");
    verify->add_option("--tol", tol, "tolerance");
    verify->add_flag("--no-computational", no_comp, "skip prepending the computational basis (mub)");
    verify->add_option("--keep", keep_csv, "kept subsystems for isoentangled");
    verify->add_option("--max-root", max_root, "largest Butson root to try");

    // magick
    auto* mag = app.add_subcommand("magick", "magick report for a state");
    std::string min, mdims;
    bool per_op = false;
    mag->add_option("--in", min, "input state JSON (default: stdin)");
    mag->add_option("--dims", mdims, "override dimension profile, e.g. 3,3");
    mag->add_flag("--per-op", per_op, "include per-operator magnitudes");

    // orbit
    auto* orb = app.add_subcommand("orbit", "product-WH orbit of a state");
    std::string oin;
    bool do_partition = false;
    orb->add_option("--in", oin, "input state JSON (default: stdin)");
    orb->add_flag("--partition", do_partition, "split into d orthonormal bases");

    // search
    auto* sea = app.add_subcommand("search", "roots-of-unity scans");
    std::string smode, sdims;
    int sroot = 2, workers = 0;
    bool no_dephase = false;
    sea->add_option("mode", smode, "fiducial|sporadic|landscape")->required();
    sea->add_option("--dims", sdims, "dimension profile, e.g. 2,2,2");
    sea->add_option("--root", sroot, "root of unity order");
    sea->add_option("--workers", workers, "worker threads (default WHD_WORKERS or OpenMP)");
    sea->add_flag("--no-dephase", no_dephase, "enumerate r^d instead of r^(d-1)");

    // export-log
    auto* exl = app.add_subcommand("export-log", "LOG text of one basis");
    std::string ein;
    int eroot = 1, ebasis = 0;
    bool edephase = false;
    exl->add_option("--in", ein, "basis-set JSON (default: stdin)");
    exl->add_option("--root", eroot, "root of unity order")->required();
    exl->add_option("--basis", ebasis, "basis index (default 0)");
    exl->add_flag("--dephase", edephase, "divide each column by its first entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*construct) return run_construct(kind, p, n, a_csv, poly_csv, endian_s);
        if (*verify) return run_verify(what, vin, tol, !no_comp, keep_csv, max_root);
        if (*mag) return run_magick(min, mdims, per_op);
        if (*orb) return run_orbit(oin, do_partition);
        if (*sea) return run_search(smode, sdims, sroot, workers, !no_dephase);
        if (*exl) return run_export_log(ein, eroot, ebasis, edephase);
    } catch (const whd::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
