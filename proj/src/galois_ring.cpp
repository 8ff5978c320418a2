#include "whd/galois_ring.hpp"

#include <algorithm>

namespace whd {

namespace {

constexpr int kMod = 9;

int mod9(long v) {
    long r = v % kMod;
    return static_cast<int>(r < 0 ? r + kMod : r);
}

std::vector<int> poly_mul_mod9(const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& poly) {
    const int n = static_cast<int>(poly.size()) - 1;
    std::vector<long> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] += static_cast<long>(a[i]) * b[j];
    for (int k = 2 * n - 2; k >= n; --k) {
        long c = prod[k] % kMod;
        if (c == 0) continue;
        prod[k] = 0;
        for (int t = 0; t < n; ++t) prod[k - n + t] -= c * poly[t];
    }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = mod9(prod[i]);
    return out;
}

} // namespace

RingSpec::RingSpec(int n, std::optional<std::vector<int>> poly) {
    if (n < 1) fail(errc::usage_error, "extension degree must be >= 1");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->order = 1;
    d->res_order = 1;
    for (int i = 0; i < n; ++i) {
        d->order *= kMod;
        d->res_order *= 3;
    }
    if (poly) {
        auto& q = *poly;
        if (static_cast<int>(q.size()) != n + 1 || mod9(q[n]) != 1)
            fail(errc::usage_error, "defining polynomial must be monic of degree n");
        for (auto& c : q) c = mod9(c);
        std::vector<int> red(q.size());
        for (size_t i = 0; i < q.size(); ++i) red[i] = q[i] % 3;
        try {
            FieldSpec(3, n, red);
        } catch (const error& e) {
            if (e.kind() == errc::reducible)
                fail(errc::reducible_mod_three, "polynomial reduces mod 3");
            throw;
        }
        d->poly = q;
    } else {
        d->poly = FieldSpec(3, n).poly(); // canonical lift: same {0,1,2} coefficients
    }
    d_ = std::move(d);
}

RingElement::RingElement(RingSpec spec, std::vector<int> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

bool RingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

RingElement RingSpec::zero() const { return RingElement(*this, std::vector<int>(d_->n, 0)); }
RingElement RingSpec::one() const { return scalar(1); }

RingElement RingSpec::scalar(long v) const {
    std::vector<int> c(d_->n, 0);
    c[0] = mod9(v);
    return RingElement(*this, std::move(c));
}

RingElement RingSpec::element(std::vector<int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != d_->n)
        fail(errc::usage_error, "coefficient list must have length n");
    for (auto& c : coeffs) c = mod9(c);
    return RingElement(*this, std::move(coeffs));
}

std::vector<RingElement> RingSpec::coset_representatives(Endian endian) const {
    const int n = d_->n;
    std::vector<RingElement> reps;
    reps.reserve(d_->res_order);
    for (long j = 0; j < d_->res_order; ++j) {
        long v = j;
        std::vector<int> c(n, 0);
        for (int nu = n - 1; nu >= 0; --nu) {
            int digit = static_cast<int>(v % 3);
            v /= 3;
            c[endian == Endian::Big ? nu : n - 1 - nu] = digit;
        }
        reps.emplace_back(*this, std::move(c));
    }
    return reps;
}

namespace {
void check_same(const RingElement& a, const RingElement& b) {
    if (!a.spec().same_as(b.spec())) fail(errc::spec_mismatch, "operands belong to different rings");
}
} // namespace

RingElement gr_add(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    std::vector<int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod9(a.coeffs()[i] + b.coeffs()[i]);
    return RingElement(a.spec(), std::move(c));
}

RingElement gr_neg(const RingElement& a) {
    std::vector<int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod9(-a.coeffs()[i]);
    return RingElement(a.spec(), std::move(c));
}

RingElement gr_mul(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    return RingElement(a.spec(), poly_mul_mod9(a.coeffs(), b.coeffs(), a.spec().poly()));
}

RingElement gr_pow(const RingElement& a, long e) {
    if (e < 0) fail(errc::usage_error, "negative ring power");
    RingElement acc = a.spec().one();
    RingElement base = a;
    while (e > 0) {
        if (e & 1) acc = gr_mul(acc, base);
        base = gr_mul(base, base);
        e >>= 1;
    }
    return acc;
}

int gr_trace(const RingElement& a) {
    const int n = a.spec().n();
    long tr = 0;
    for (int k = 0; k < n; ++k) {
        std::vector<int> xk(n, 0);
        xk[k] = 1;
        auto col = poly_mul_mod9(a.coeffs(), xk, a.spec().poly());
        tr += col[k];
    }
    return mod9(tr);
}

bool is_zero_divisor(const RingElement& a) {
    return std::all_of(a.coeffs().begin(), a.coeffs().end(), [](int c) { return c % 3 == 0; });
}

FieldElement residue(const RingElement& a, const FieldSpec& field) {
    if (field.p() != 3 || field.n() != a.spec().n())
        fail(errc::spec_mismatch, "residue field must be GF(3^n) with matching n");
    std::vector<int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] % 3;
    return field.element(std::move(c));
}

} // namespace whd
