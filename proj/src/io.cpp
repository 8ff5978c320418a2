#include "whd/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace whd {

using nlohmann::json;

namespace {

json state_body(const PhaseState& s) {
    return json{{"root", s.root}, {"exps", s.exps}};
}

json state_body(const StateVector& s) {
    json amps = json::array();
    for (const cx& a : s.amps()) amps.push_back(json::array({a.real(), a.imag()}));
    return json{{"amps", std::move(amps)}};
}

json state_body(const AnyState& s) {
    return std::visit([](const auto& v) { return state_body(v); }, s);
}

AnyState state_of_body(const json& j, const DimProfile& profile) {
    if (j.contains("exps")) {
        PhaseState s;
        s.root = j.value("root", 1);
        if (s.root < 1) fail(errc::parse_error, "root must be >= 1");
        s.exps = j.at("exps").get<std::vector<int>>();
        if (static_cast<long>(s.exps.size()) != profile.total())
            fail(errc::parse_error, "exponent count does not match dims");
        for (int& e : s.exps) e = ((e % s.root) + s.root) % s.root;
        s.profile = profile;
        return s;
    }
    if (j.contains("amps")) {
        std::vector<cx> amps;
        for (const auto& pair : j.at("amps")) {
            if (!pair.is_array() || pair.size() != 2) fail(errc::parse_error, "amplitude must be [re, im]");
            amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        if (static_cast<long>(amps.size()) != profile.total())
            fail(errc::parse_error, "amplitude count does not match dims");
        return StateVector(std::move(amps), profile);
    }
    fail(errc::parse_error, "state needs either exps or amps");
}

DimProfile profile_of(const json& j) {
    if (!j.contains("dims")) fail(errc::parse_error, "missing dims");
    return DimProfile(j.at("dims").get<std::vector<int>>());
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
    return j;
}

} // namespace

StateVector dense_of(const AnyState& s) {
    if (std::holds_alternative<PhaseState>(s)) return to_amplitudes(std::get<PhaseState>(s));
    return std::get<StateVector>(s);
}

std::string write_state_json(const PhaseState& s) {
    json j = state_body(s);
    j["dims"] = s.profile.dims();
    return j.dump(2);
}

std::string write_state_json(const StateVector& s) {
    json j = state_body(s);
    j["dims"] = s.profile().dims();
    return j.dump(2);
}

AnyState read_state_json(const std::string& text) {
    json j = parse(text);
    return state_of_body(j, profile_of(j));
}

std::string write_states_json(const std::vector<AnyState>& states, const DimProfile& profile) {
    json j;
    j["dims"] = profile.dims();
    json arr = json::array();
    for (const auto& s : states) arr.push_back(state_body(s));
    j["states"] = std::move(arr);
    return j.dump(2);
}

std::vector<AnyState> read_states_json(const std::string& text) {
    json j = parse(text);
    DimProfile profile = profile_of(j);
    if (!j.contains("states")) {
        // single-state file counts as a one-element list
        return {state_of_body(j, profile)};
    }
    std::vector<AnyState> out;
    for (const auto& body : j.at("states")) out.push_back(state_of_body(body, profile));
    return out;
}

std::string write_basis_set_json(const BasisSet& set) {
    json j;
    j["dims"] = set.profile.dims();
    json bases = json::array();
    for (const Basis& b : set.bases) {
        json jb;
        jb["label"] = b.label;
        json states = json::array();
        for (size_t i = 0; i < b.states.size(); ++i) {
            if (b.exact)
                states.push_back(state_body((*b.exact)[i]));
            else
                states.push_back(state_body(b.states[i]));
        }
        jb["states"] = std::move(states);
        bases.push_back(std::move(jb));
    }
    j["bases"] = std::move(bases);
    return j.dump(2);
}

BasisSet read_basis_set_json(const std::string& text) {
    json j = parse(text);
    DimProfile profile = profile_of(j);
    if (!j.contains("bases")) fail(errc::parse_error, "missing bases");
    BasisSet set{profile, {}};
    for (const auto& jb : j.at("bases")) {
        Basis b;
        if (jb.contains("label")) b.label = jb.at("label").get<std::vector<int>>();
        bool all_exact = true;
        std::vector<PhaseState> exact;
        for (const auto& body : jb.at("states")) {
            AnyState s = state_of_body(body, profile);
            if (std::holds_alternative<PhaseState>(s))
                exact.push_back(std::get<PhaseState>(s));
            else
                all_exact = false;
            b.states.push_back(dense_of(s));
        }
        if (all_exact && !exact.empty()) b.exact = std::move(exact);
        set.bases.push_back(std::move(b));
    }
    return set;
}

std::string write_orbit_json(const std::vector<std::pair<WHIndex, StateVector>>& orbit,
                             const DimProfile& profile) {
    json j;
    j["dims"] = profile.dims();
    json arr = json::array();
    for (const auto& [idx, state] : orbit) {
        json e;
        e["k"] = idx.k;
        e["l"] = idx.l;
        e["state"] = state_body(state);
        arr.push_back(std::move(e));
    }
    j["orbit"] = std::move(arr);
    return j.dump(2);
}

std::string write_report_json(const VerificationReport& rep) {
    json j;
    j["passed"] = rep.passed;
    j["max_abs_deviation"] = rep.max_abs_deviation;
    j["pairs_checked"] = rep.pairs_checked;
    j["tolerance"] = rep.tolerance;
    if (rep.worst_a >= 0) j["worst_pair"] = json::array({rep.worst_a, rep.worst_b});
    if (rep.butson_root) j["butson_root"] = *rep.butson_root;
    if (rep.common_value) j["common_value"] = *rep.common_value;
    if (rep.reference_value) j["reference_value"] = *rep.reference_value;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j.dump(2);
}

std::string write_magick_json(const MagickReport& rep, const DimProfile& profile) {
    json j;
    j["dims"] = profile.dims();
    j["value"] = rep.value;
    j["bound_sic"] = rep.bound_sic;
    j["bound_mub"] = rep.bound_mub;
    if (rep.per_operator) {
        const long d = profile.total();
        json ops = json::array();
        for (long kf = 0; kf < d; ++kf)
            for (long lf = 0; lf < d; ++lf) {
                json e;
                e["k"] = profile.digits(kf);
                e["l"] = profile.digits(lf);
                e["abs"] = (*rep.per_operator)[kf * d + lf];
                ops.push_back(std::move(e));
            }
        j["per_operator"] = std::move(ops);
    }
    return j.dump(2);
}

std::string write_search_json(const SearchResult& res) {
    json j;
    j["scanned"] = res.scanned;
    j["best_magick"] = res.best_magick;
    if (!res.best_state.exps.empty()) {
        j["best_state"] = state_body(res.best_state);
        j["dims"] = res.best_state.profile.dims();
    }
    json hits = json::array();
    for (const PhaseState& h : res.hits) hits.push_back(state_body(h));
    j["hits"] = std::move(hits);
    return j.dump(2);
}

std::string write_triplets_json(const std::vector<SporadicTriplet>& triplets) {
    json j;
    j["dims"] = std::vector<int>{3, 3};
    json arr = json::array();
    for (const auto& t : triplets) {
        json e;
        e["magick"] = t.magick_value;
        json members = json::array();
        for (const PhaseState& m : t.members) members.push_back(state_body(m));
        e["members"] = std::move(members);
        arr.push_back(std::move(e));
    }
    j["triplets"] = std::move(arr);
    return j.dump(2);
}

std::string write_log_text(const LogMatrix& m) {
    std::ostringstream os;
    os << "r=" << m.root << " d=" << m.d << "\n";
    for (long r = 0; r < m.d; ++r) {
        for (long c = 0; c < m.d; ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << "\n";
    }
    return os.str();
}

LogMatrix read_log_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) fail(errc::parse_error, "empty LOG input (line 1)");
    LogMatrix m;
    if (std::sscanf(header.c_str(), "r=%d d=%ld", &m.root, &m.d) != 2 || m.root < 1 || m.d < 1)
        fail(errc::parse_error, "bad LOG header (line 1): expected r=<int> d=<int>");
    m.entries.reserve(m.d * m.d);
    std::string line;
    long row = 0;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (row == m.d) fail(errc::parse_error, "too many rows (line " + std::to_string(row + 2) + ")");
        std::istringstream ls(line);
        std::string tok;
        long col = 0;
        while (ls >> tok) {
            if (col == m.d)
                fail(errc::parse_error, "row too long (line " + std::to_string(row + 2) + ", column " +
                                            std::to_string(col + 1) + ")");
            int v = 0;
            if (tok == "." || tok == "•") {
                v = 0;
            } else {
                try {
                    size_t used = 0;
                    v = std::stoi(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    fail(errc::parse_error, "bad token '" + tok + "' (line " + std::to_string(row + 2) +
                                                ", column " + std::to_string(col + 1) + ")");
                }
            }
            if (v < 0 || v >= m.root)
                fail(errc::parse_error, "entry out of range (line " + std::to_string(row + 2) + ")");
            m.entries.push_back(v);
            ++col;
        }
        if (col != m.d)
            fail(errc::parse_error, "row too short (line " + std::to_string(row + 2) + ")");
        ++row;
    }
    if (row != m.d) fail(errc::parse_error, "expected " + std::to_string(m.d) + " rows");
    return m;
}

LogMatrix log_from_basis(const Basis& basis, int root, bool dephase) {
    const long d = static_cast<long>(basis.states.size());
    LogMatrix m{root, d, std::vector<int>(d * d, 0)};
    for (long c = 0; c < d; ++c) {
        std::vector<int> col(d);
        if (basis.exact) {
            const PhaseState& ps = (*basis.exact)[c];
            if (root % ps.root != 0)
                fail(errc::usage_error, "root " + std::to_string(root) + " cannot express exponents over " +
                                            std::to_string(ps.root));
            int f = root / ps.root;
            for (long r = 0; r < d; ++r) col[r] = ps.exps[r] * f % root;
        } else {
            const double want = 1.0 / std::sqrt(static_cast<double>(d));
            for (long r = 0; r < d; ++r) {
                cx a = basis.states[c].amps()[r];
                if (std::abs(std::abs(a) - want) > 1e-8)
                    fail(errc::not_equimodular, "column " + std::to_string(c) + " is not equimodular");
                double turns = std::arg(a) / (2.0 * std::numbers::pi);
                long e = std::lround(turns * root);
                e = ((e % root) + root) % root;
                double ang = 2.0 * std::numbers::pi * e / root;
                if (std::abs(a - want * cx(std::cos(ang), std::sin(ang))) > 1e-8 * want)
                    fail(errc::parse_error, "entry is not a power of the requested root");
                col[r] = static_cast<int>(e);
            }
        }
        if (dephase) {
            int e0 = col[0];
            for (long r = 0; r < d; ++r) col[r] = ((col[r] - e0) % root + root) % root;
        }
        for (long r = 0; r < d; ++r) m.at(r, c) = col[r];
    }
    return m;
}

std::vector<PhaseState> states_of_log(const LogMatrix& m, const DimProfile& profile) {
    if (profile.total() != m.d) fail(errc::dim_mismatch, "profile does not match the LOG dimension");
    std::vector<PhaseState> out;
    out.reserve(m.d);
    for (long c = 0; c < m.d; ++c) {
        PhaseState s;
        s.root = m.root;
        s.profile = profile;
        s.exps.resize(m.d);
        for (long r = 0; r < m.d; ++r) s.exps[r] = m.at(r, c);
        out.push_back(std::move(s));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(errc::parse_error, "cannot open " + path + " for writing");
    f << content;
}

} // namespace whd
