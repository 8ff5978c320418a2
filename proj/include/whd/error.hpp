#pragma once

#include <stdexcept>
#include <string>

namespace whd {

enum class errc {
    not_prime,
    reducible,
    reducible_mod_three,
    spec_mismatch,
    division_by_zero,
    even_modulus,
    dim_mismatch,
    bad_subsystem,
    bad_prime,
    zero_parameter,
    zero_divisor_parameter,
    not_available,
    wrong_count,
    not_orthonormal,
    not_equimodular,
    search_space_too_large,
    parse_error,
    usage_error,
};

/// Library-wide exception carrying a machine-checkable error kind.
class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace whd
