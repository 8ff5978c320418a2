#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "whd/measures.hpp"
#include "whd/search.hpp"
#include "whd/states.hpp"
#include "whd/verify.hpp"

namespace whd {

/// Integer phase-exponent matrix: printed value v at (r, c) means matrix
/// entry w_root^v / sqrt(d).
struct LogMatrix {
    int root = 1;
    long d = 0;
    std::vector<int> entries; // row-major

    int& at(long r, long c) { return entries[r * d + c]; }
    int at(long r, long c) const { return entries[r * d + c]; }
};

using AnyState = std::variant<PhaseState, StateVector>;

StateVector dense_of(const AnyState& s);

// ---- state JSON ----
// phase state: { "dims": [..], "root": r, "exps": [..] }
// dense state: { "dims": [..], "amps": [[re, im], ..] }
std::string write_state_json(const PhaseState& s);
std::string write_state_json(const StateVector& s);
AnyState read_state_json(const std::string& text);

// multiple states: { "dims": [..], "states": [ <state without dims>, .. ] }
std::string write_states_json(const std::vector<AnyState>& states, const DimProfile& profile);
std::vector<AnyState> read_states_json(const std::string& text);

// basis set: { "dims": [..], "bases": [ { "label": [..], "states": [..] } ] }
std::string write_basis_set_json(const BasisSet& set);
BasisSet read_basis_set_json(const std::string& text);

// orbit: { "dims": [..], "orbit": [ { "k": [..], "l": [..], "state": {..} } ] }
std::string write_orbit_json(const std::vector<std::pair<WHIndex, StateVector>>& orbit,
                             const DimProfile& profile);

std::string write_report_json(const VerificationReport& rep);
std::string write_magick_json(const MagickReport& rep, const DimProfile& profile);
std::string write_search_json(const SearchResult& res);
std::string write_triplets_json(const std::vector<SporadicTriplet>& triplets);

// ---- LOG text ----
// first line "r=<int> d=<int>", then d rows of d integers; "•" and "." parse
// as 0, output prints plain 0
std::string write_log_text(const LogMatrix& m);
LogMatrix read_log_text(const std::string& text);

/// Exponent matrix of a basis: column c holds state c's exponents over the
/// given root. Exact exponents are used when present; dense amplitudes are
/// rounded and validated. Optional dephasing divides each column by its
/// first entry.
LogMatrix log_from_basis(const Basis& basis, int root, bool dephase = false);

/// Recovers the basis column states of a LOG matrix.
std::vector<PhaseState> states_of_log(const LogMatrix& m, const DimProfile& profile);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace whd
