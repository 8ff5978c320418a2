#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "whd/finite_field.hpp"

namespace whd {

class RingElement;

/// The Galois ring GR(9,n) = (Z/9Z)[x] / P(x) with P monic of degree n and
/// irreducible mod 3. Only the p=3, k=2 ring is needed here.
class RingSpec {
public:
    /// Default polynomial: the canonical {0,1,2}-coefficient lift of the
    /// polynomial make_field(3, n) would choose.
    explicit RingSpec(int n, std::optional<std::vector<int>> poly = std::nullopt);

    int n() const { return d_->n; }
    long order() const { return d_->order; }          // 9^n
    long residue_order() const { return d_->res_order; } // 3^n
    const std::vector<int>& poly() const { return d_->poly; }

    RingElement zero() const;
    RingElement one() const;
    RingElement scalar(long v) const;
    RingElement element(std::vector<int> coeffs) const;

    /// 3^n coset representatives of GR(9,n)/(3), coefficients in {0,1,2},
    /// ordered so the representative with coefficient tuple (j_0..j_{n-1})
    /// sits at basis index J = sum_nu j_nu 3^(n-1-nu) (Big endian).
    std::vector<RingElement> coset_representatives(Endian endian = Endian::Big) const;

    bool same_as(const RingSpec& other) const { return d_ == other.d_ || d_->poly == other.d_->poly; }

private:
    struct Data {
        int n = 0;
        long order = 0;
        long res_order = 0;
        std::vector<int> poly;
    };
    std::shared_ptr<const Data> d_;
    friend class RingElement;
};

class RingElement {
public:
    RingElement() = default;
    RingElement(RingSpec spec, std::vector<int> coeffs);

    const std::vector<int>& coeffs() const { return coeffs_; }
    const RingSpec& spec() const { return spec_; }
    bool is_zero() const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.spec_.same_as(b.spec_) && a.coeffs_ == b.coeffs_;
    }

private:
    RingSpec spec_;
    std::vector<int> coeffs_;
};

RingElement gr_add(const RingElement& a, const RingElement& b);
RingElement gr_neg(const RingElement& a);
RingElement gr_mul(const RingElement& a, const RingElement& b);
RingElement gr_pow(const RingElement& a, long e);
inline RingElement gr_cube(const RingElement& a) { return gr_pow(a, 3); }

/// Trace of the multiplication-by-a matrix over Z/9Z in the power basis.
int gr_trace(const RingElement& a);

/// True iff a lies in the maximal ideal (3), i.e. every coefficient is
/// divisible by 3.
bool is_zero_divisor(const RingElement& a);

/// Reduction mod 3 onto the residue field GF(3^n) (same polynomial mod 3).
FieldElement residue(const RingElement& a, const FieldSpec& field);

} // namespace whd
