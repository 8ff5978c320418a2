#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "whd/error.hpp"

namespace whd {

/// Which polynomial coefficient carries the most significant basis-index digit.
/// Big: coefficient of x^0 maps to subsystem 0, the leftmost tensor factor
/// (global index J = sum_nu c_nu * p^(n-1-nu)). Little: reversed.
enum class Endian { Big, Little };

class FieldElement;

/// GF(p^n) as Z_p[x] modulo a monic irreducible polynomial.
/// Immutable and cheap to copy; elements hold a handle to their spec.
class FieldSpec {
public:
    /// Builds the field, choosing the lexicographically smallest monic
    /// irreducible polynomial (coefficient list, constant term first) when
    /// none is supplied.
    FieldSpec(int p, int n, std::optional<std::vector<int>> poly = std::nullopt);

    int p() const { return d_->p; }
    int n() const { return d_->n; }
    long order() const { return d_->order; }
    /// Coefficient list of the defining polynomial, constant term first, monic.
    const std::vector<int>& poly() const { return d_->poly; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Embeds an integer as a constant polynomial.
    FieldElement scalar(long v) const;
    FieldElement element(std::vector<int> coeffs) const;
    /// Element whose coefficient tuple encodes the basis index J.
    FieldElement from_index(long j, Endian endian = Endian::Big) const;
    long index_of(const FieldElement& a, Endian endian = Endian::Big) const;

    bool same_as(const FieldSpec& other) const { return d_ == other.d_ || (d_->p == other.d_->p && d_->poly == other.d_->poly); }

    /// a |-> a^3 permutes the field iff gcd(3, p^n - 1) = 1.
    bool cube_is_bijective() const;

    /// Dual basis element a~_i with trace(a~_i * b) = coeffs(b)[i] for all b.
    FieldElement dual_element(int i) const;

private:
    struct Data {
        int p = 0;
        int n = 0;
        long order = 0;
        std::vector<int> poly;
    };
    std::shared_ptr<const Data> d_;
    friend class FieldElement;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldSpec spec, std::vector<int> coeffs);

    const std::vector<int>& coeffs() const { return coeffs_; }
    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.spec_.same_as(b.spec_) && a.coeffs_ == b.coeffs_;
    }

private:
    FieldSpec spec_;
    std::vector<int> coeffs_;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b);
FieldElement ff_neg(const FieldElement& a);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_pow(const FieldElement& a, long e);
FieldElement ff_inv(const FieldElement& a);
inline FieldElement ff_cube(const FieldElement& a) { return ff_pow(a, 3); }

/// Field trace down to Z_p: sum of a^(p^k) for k = 0..n-1.
int ff_trace(const FieldElement& a);

bool is_prime(long v);

/// Legendre/Jacobi symbol (a/p) for odd prime p.
int jacobi_symbol(long a, long p);

/// Normalization of the quadratic Gauss sum: sum_j w_p^(j^2) = gauss_eps(p) * sqrt(p);
/// 1 when p = 1 mod 4, i when p = 3 mod 4.
std::complex<double> gauss_eps(long p);

} // namespace whd
