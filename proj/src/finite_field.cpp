#include "whd/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace whd {

namespace {

int mod(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Product of two coefficient vectors reduced modulo (poly, p).
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& poly, int p) {
    const int n = static_cast<int>(poly.size()) - 1;
    std::vector<long> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] += static_cast<long>(a[i]) * b[j];
    // x^n = -poly[0..n-1], applied top-down
    for (int k = 2 * n - 2; k >= n; --k) {
        long c = prod[k] % p;
        if (c == 0) continue;
        prod[k] = 0;
        for (int t = 0; t < n; ++t) prod[k - n + t] -= c * poly[t];
    }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = mod(prod[i], p);
    return out;
}

std::vector<int> poly_pow_mod(std::vector<int> base, long e, const std::vector<int>& poly, int p) {
    const int n = static_cast<int>(poly.size()) - 1;
    std::vector<int> acc(n, 0);
    acc[0] = 1;
    while (e > 0) {
        if (e & 1) acc = poly_mul_mod(acc, base, poly, p);
        base = poly_mul_mod(base, base, poly, p);
        e >>= 1;
    }
    return acc;
}

// gcd of polynomials over Z_p, for the Frobenius irreducibility test
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    auto deg = [](const std::vector<int>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            if (v[i] != 0) return i;
        return -1;
    };
    int db = deg(b);
    int inv_lead = 1;
    for (int t = 1; t < p; ++t)
        if (b[db] * t % p == 1) inv_lead = t;
    while (deg(a) >= db && db >= 0) {
        int da = deg(a);
        int c = a[da] * inv_lead % p;
        for (int i = 0; i <= db; ++i) a[da - db + i] = mod(a[da - db + i] - static_cast<long>(c) * b[i], p);
    }
    a.resize(std::max(db, 1));
    return a;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
    const int n = static_cast<int>(poly.size()) - 1;
    if (n == 1) return true;
    // root scan covers n <= 3 completely for the factor-with-root cases;
    // the gcd(x^(p^k) - x, poly) criterion settles every degree.
    for (int r = 0; r < p; ++r) {
        long v = 0;
        for (int i = n; i >= 0; --i) v = mod(v * r + poly[i], p);
        if (v == 0) return false;
    }
    if (n <= 3) return true; // degree 2 or 3 with no roots is irreducible
    // general: poly is irreducible iff x^(p^n) = x mod poly and
    // gcd(x^(p^(n/q)) - x, poly) = const for each prime divisor q of n
    std::vector<int> x(n, 0);
    if (n > 1) x[1] = 1;
    auto frob_pow = [&](long k) {
        std::vector<int> r = x;
        for (long i = 0; i < k; ++i) r = poly_pow_mod(r, p, poly, p);
        return r;
    };
    std::vector<int> xpn = frob_pow(n);
    if (xpn != x) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool qprime = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) qprime = false;
        if (!qprime) continue;
        std::vector<int> diff = frob_pow(n / q);
        diff[1] = mod(diff[1] - 1, p);
        // gcd(diff, poly) must be constant
        std::vector<int> g = poly;
        std::vector<int> r = diff;
        auto deg = [](const std::vector<int>& v) {
            for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
                if (v[i] != 0) return i;
            return -1;
        };
        while (deg(r) > 0) {
            auto tmp = poly_mod(g, r, p);
            g = r;
            r = tmp;
        }
        if (deg(r) == -1 && deg(g) > 0) return false; // r == 0: nontrivial common factor
    }
    return true;
}

} // namespace

bool is_prime(long v) {
    if (v < 2) return false;
    for (long t = 2; t * t <= v; ++t)
        if (v % t == 0) return false;
    return true;
}

FieldSpec::FieldSpec(int p, int n, std::optional<std::vector<int>> poly) {
    if (!is_prime(p)) fail(errc::not_prime, "field characteristic must be prime: " + std::to_string(p));
    if (n < 1) fail(errc::usage_error, "extension degree must be >= 1");
    auto d = std::make_shared<Data>();
    d->p = p;
    d->n = n;
    d->order = 1;
    for (int i = 0; i < n; ++i) d->order *= p;
    if (poly) {
        auto& q = *poly;
        if (static_cast<int>(q.size()) != n + 1 || q[n] != 1)
            fail(errc::usage_error, "defining polynomial must be monic of degree n");
        for (auto& c : q) c = mod(c, p);
        if (!is_irreducible(q, p))
            fail(errc::reducible, "supplied polynomial factors mod " + std::to_string(p));
        d->poly = q;
    } else if (n == 1) {
        d->poly = {0, 1}; // x
    } else {
        // lexicographically smallest by coefficient list, constant term first,
        // so the highest degree-(n-1) coefficient varies fastest
        std::vector<int> q(n + 1, 0);
        q[n] = 1;
        bool found = false;
        while (!found) {
            if (is_irreducible(q, p)) {
                found = true;
                break;
            }
            int i = n - 1;
            while (i >= 0 && ++q[i] == p) q[i--] = 0;
            if (i < 0) break;
        }
        if (!found) fail(errc::reducible, "no irreducible polynomial found"); // unreachable
        d->poly = q;
    }
    d_ = std::move(d);
}

FieldElement::FieldElement(FieldSpec spec, std::vector<int> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, std::vector<int>(d_->n, 0)); }
FieldElement FieldSpec::one() const { return scalar(1); }

FieldElement FieldSpec::scalar(long v) const {
    std::vector<int> c(d_->n, 0);
    c[0] = mod(v, d_->p);
    return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::element(std::vector<int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != d_->n)
        fail(errc::usage_error, "coefficient list must have length n");
    for (auto& c : coeffs) c = mod(c, d_->p);
    return FieldElement(*this, std::move(coeffs));
}

FieldElement FieldSpec::from_index(long j, Endian endian) const {
    const int p = d_->p, n = d_->n;
    if (j < 0 || j >= d_->order) fail(errc::usage_error, "index out of range");
    std::vector<int> c(n, 0);
    for (int nu = n - 1; nu >= 0; --nu) {
        int digit = static_cast<int>(j % p);
        j /= p;
        // digit significance p^(n-1-nu) belongs to coefficient nu (Big)
        c[endian == Endian::Big ? nu : n - 1 - nu] = digit;
    }
    return FieldElement(*this, std::move(c));
}

long FieldSpec::index_of(const FieldElement& a, Endian endian) const {
    const int p = d_->p, n = d_->n;
    long j = 0;
    for (int nu = 0; nu < n; ++nu) j = j * p + a.coeffs()[endian == Endian::Big ? nu : n - 1 - nu];
    return j;
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.spec().same_as(b.spec())) fail(errc::spec_mismatch, "operands belong to different fields");
}
} // namespace

FieldElement ff_add(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const int p = a.spec().p();
    std::vector<int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod(a.coeffs()[i] + b.coeffs()[i], p);
    return FieldElement(a.spec(), std::move(c));
}

FieldElement ff_sub(const FieldElement& a, const FieldElement& b) { return ff_add(a, ff_neg(b)); }

FieldElement ff_neg(const FieldElement& a) {
    const int p = a.spec().p();
    std::vector<int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod(-a.coeffs()[i], p);
    return FieldElement(a.spec(), std::move(c));
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return FieldElement(a.spec(), poly_mul_mod(a.coeffs(), b.coeffs(), a.spec().poly(), a.spec().p()));
}

FieldElement ff_pow(const FieldElement& a, long e) {
    if (e < 0) return ff_pow(ff_inv(a), -e);
    return FieldElement(a.spec(), poly_pow_mod(a.coeffs(), e, a.spec().poly(), a.spec().p()));
}

FieldElement ff_inv(const FieldElement& a) {
    if (a.is_zero()) fail(errc::division_by_zero, "inverse of zero");
    return ff_pow(a, a.spec().order() - 2);
}

int ff_trace(const FieldElement& a) {
    const int p = a.spec().p(), n = a.spec().n();
    // sum of Frobenius conjugates; coefficients beyond x^0 cancel in the sum
    FieldElement sum = a.spec().zero();
    FieldElement acc = a;
    for (int k = 0; k < n; ++k) {
        sum = ff_add(sum, acc);
        if (k + 1 < n) acc = ff_pow(acc, p);
    }
    return sum.coeffs()[0];
}

bool FieldSpec::cube_is_bijective() const { return std::gcd(3L, order() - 1) == 1; }

FieldElement FieldSpec::dual_element(int i) const {
    const int p = d_->p, n = d_->n;
    if (i < 0 || i >= n) fail(errc::usage_error, "dual index out of range");
    // Solve tr(g * x^nu) = delta_{nu i} over Z_p by Gaussian elimination on
    // the n x n trace form matrix T[nu][mu] = tr(x^nu * x^mu).
    std::vector<std::vector<int>> aug(n, std::vector<int>(n + 1, 0));
    for (int nu = 0; nu < n; ++nu) {
        for (int mu = 0; mu < n; ++mu) {
            std::vector<int> xn(n, 0), xm(n, 0);
            xn[nu] = 1;
            xm[mu] = 1;
            aug[nu][mu] = ff_trace(FieldElement(*this, poly_mul_mod(xn, xm, d_->poly, p)));
        }
        aug[nu][n] = (nu == i) ? 1 : 0;
    }
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(aug[piv], aug[row]);
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (aug[row][col] * t % p == 1) inv = t;
        for (int c = col; c <= n; ++c) aug[row][c] = aug[row][c] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            int f = aug[r][col];
            for (int c = col; c <= n; ++c) aug[r][c] = mod(aug[r][c] - static_cast<long>(f) * aug[row][c], p);
        }
        ++row;
    }
    std::vector<int> g(n);
    for (int r = 0; r < n; ++r) g[r] = aug[r][n];
    return FieldElement(*this, std::move(g));
}

int jacobi_symbol(long a, long p) {
    if (p % 2 == 0) fail(errc::even_modulus, "Jacobi symbol needs an odd modulus");
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler criterion; p prime in all uses here
    long r = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

std::complex<double> gauss_eps(long p) {
    if (p % 2 == 0) fail(errc::even_modulus, "gauss_eps needs an odd prime");
    return p % 4 == 1 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
}

} // namespace whd
