#include "gentle/fields.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace gentle {

/* ------------------------------------------------------------------ */
/* primality / primitive roots                                         */
/* ------------------------------------------------------------------ */

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::uint64_t find_generator(std::uint64_t p) {
    auto fs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : fs)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw Internal("no primitive root found");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/* ------------------------------------------------------------------ */
/* FpCtx                                                               */
/* ------------------------------------------------------------------ */

std::uint64_t FpCtx::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p); }

std::uint64_t FpCtx::inv(std::uint64_t a) const {
    a %= p;
    if (a == 0) throw Internal("inverse of zero in F_p");
    return powmod(a, p - 2, p);
}

std::uint64_t FpCtx::embed_rational(const Rational& q) const {
    std::uint64_t n = q.num >= 0 ? (std::uint64_t)q.num % p : p - ((std::uint64_t)(-q.num) % p);
    n %= p;
    return mulmod(n, inv((std::uint64_t)q.den % p), p);
}

std::uint64_t FpCtx::embed(const CycloScalar& s) const {
    if (s.is_zero()) return 0;
    if (order % s.order != 0)
        throw OrderMismatch("field context supports z(" + std::to_string(order) +
                            "), scalar needs z(" + std::to_string(s.order) + ")");
    std::uint64_t root = pow(zeta, (std::uint64_t)((order / s.order) * s.exponent));
    return mulmod(embed_rational(s.mag), root, p);
}

std::uint64_t FpCtx::discrete_log(std::uint64_t a) const {
    // baby-step giant-step; p stays small (~10^6..10^8) so this is instant
    a %= p;
    if (a == 0) throw Internal("discrete log of zero");
    std::uint64_t m = 1;
    while (m * m < p) ++m;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m * 2);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = mulmod(cur, generator, p);
    }
    std::uint64_t giant = inv(cur);  // generator^{-m}
    cur = a;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) return i * m + it->second;
        cur = mulmod(cur, giant, p);
    }
    throw Internal("discrete log failed");
}

std::uint64_t FpCtx::embed_root(const SymbolicRoot& r) const {
    std::uint64_t a = embed(r.radicand);
    std::uint64_t t = discrete_log(a);
    std::uint64_t k = (std::uint64_t)r.k;
    std::uint64_t m = p - 1;
    std::uint64_t d = std::gcd(k, m);
    if (t % d != 0)
        throw OrderMismatch("no " + std::to_string(r.k) + "-th root of " + r.radicand.str() +
                            " in F_" + std::to_string(p));
    // solve k*s = t (mod m); canonical choice: smallest s
    std::uint64_t m2 = m / d, k2 = (k / d) % m2, t2 = (t / d) % m2;
    // inverse of k2 mod m2 (gcd(k2, m2) == 1)
    std::int64_t x0 = 0, x1 = 1, a0 = (std::int64_t)m2, a1 = (std::int64_t)k2;
    while (a1) {
        std::int64_t q = a0 / a1;
        std::tie(a0, a1) = std::make_pair(a1, a0 - q * a1);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    std::int64_t k2inv = ((x0 % (std::int64_t)m2) + (std::int64_t)m2) % (std::int64_t)m2;
    std::uint64_t s = mulmod(t2, (std::uint64_t)k2inv, m2);
    std::uint64_t root = pow(generator, s);
    if (r.omega_exp != 0) {
        if (m % k != 0) throw OrderMismatch("field lacks z(" + std::to_string(r.k) + ")");
        std::uint64_t zk = pow(generator, m / k);
        std::int64_t e = ((r.omega_exp % (std::int64_t)k) + (std::int64_t)k) % (std::int64_t)k;
        root = mulmod(root, pow(zk, (std::uint64_t)e), p);
    }
    if (r.negative) root = root == 0 ? 0 : p - root;
    return root;
}

std::uint64_t FpCtx::embed_expr(const ScalarExpr& s) const {
    if (std::holds_alternative<CycloScalar>(s)) return embed(std::get<CycloScalar>(s));
    return embed_root(std::get<SymbolicRoot>(s));
}

FpCtx FpCtx::make(std::int64_t order, const std::vector<std::pair<CycloScalar, int>>& needs) {
    std::int64_t N = std::max<std::int64_t>(order, 1);
    for (const auto& [radicand, k] : needs) N = std::lcm(N, radicand.order * (std::int64_t)k);
    for (std::uint64_t p = 1000003;; p += 2) {
        if ((p - 1) % (std::uint64_t)N != 0) continue;
        if (!is_prime_u64(p)) continue;
        FpCtx ctx;
        ctx.p = p;
        ctx.order = N;
        ctx.generator = find_generator(p);
        ctx.zeta = powmod(ctx.generator, (p - 1) / (std::uint64_t)N, p);
        bool ok = true;
        for (const auto& [radicand, k] : needs) {
            std::uint64_t a = ctx.embed(radicand);
            std::uint64_t d = std::gcd((std::uint64_t)k, p - 1);
            if (powmod(a, (p - 1) / d, p) != 1) { ok = false; break; }
        }
        if (ok) return ctx;
    }
}

/* ------------------------------------------------------------------ */
/* cyclotomic polynomials and CycloCtx                                 */
/* ------------------------------------------------------------------ */

namespace {

void poly_trim(QPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

QPoly poly_div_exact(const QPoly& num, const QPoly& den) {
    QPoly r = num, q;
    poly_trim(r);
    QPoly d = den;
    poly_trim(d);
    if (d.empty()) throw Internal("polynomial division by zero");
    if (r.size() < d.size()) return {};
    q.assign(r.size() - d.size() + 1, Rational(0));
    while (r.size() >= d.size() && !r.empty()) {
        Rational c = r.back() / d.back();
        size_t shift = r.size() - d.size();
        q[shift] = c;
        for (size_t i = 0; i < d.size(); ++i)
            r[shift + i] = r[shift + i] - c * d[i];
        poly_trim(r);
    }
    if (!r.empty()) throw Internal("polynomial division not exact");
    return q;
}

}  // namespace

QPoly cyclotomic_polynomial(std::int64_t N) {
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    QPoly num(N + 1, Rational(0));
    num[0] = Rational(-1);
    num[N] = Rational(1);
    for (std::int64_t d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

CycloCtx CycloCtx::make(std::int64_t order) {
    CycloCtx ctx;
    ctx.order = std::max<std::int64_t>(order, 1);
    ctx.phi = cyclotomic_polynomial(ctx.order);
    ctx.deg = (int)ctx.phi.size() - 1;
    return ctx;
}

CycloCtx::Elt CycloCtx::one() const {
    Elt e = zero();
    e[0] = Rational(1);
    return e;
}

CycloCtx::Elt CycloCtx::add(const Elt& a, const Elt& b) const {
    Elt r = a;
    for (int i = 0; i < deg; ++i) r[i] = r[i] + b[i];
    return r;
}

CycloCtx::Elt CycloCtx::sub(const Elt& a, const Elt& b) const {
    Elt r = a;
    for (int i = 0; i < deg; ++i) r[i] = r[i] - b[i];
    return r;
}

CycloCtx::Elt CycloCtx::neg(const Elt& a) const {
    Elt r = a;
    for (auto& c : r) c = -c;
    return r;
}

CycloCtx::Elt CycloCtx::mul(const Elt& a, const Elt& b) const {
    QPoly prod(2 * deg, Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < deg; ++j) {
            if (b[j].is_zero()) continue;
            prod[i + j] = prod[i + j] + a[i] * b[j];
        }
    }
    // reduce modulo monic phi
    for (int i = 2 * deg - 1; i >= deg; --i) {
        if (prod[i].is_zero()) continue;
        Rational c = prod[i];
        prod[i] = Rational(0);
        for (int j = 0; j < deg; ++j)
            prod[i - deg + j] = prod[i - deg + j] - c * phi[j];
    }
    prod.resize(deg, Rational(0));
    return prod;
}

bool CycloCtx::is_zero(const Elt& a) const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

CycloCtx::Elt CycloCtx::inv(const Elt& a) const {
    if (is_zero(a)) throw Internal("inverse of zero cyclotomic element");
    // extended Euclid: s*a + t*phi = gcd (a unit mod phi, so gcd is a constant)
    QPoly r0 = phi, r1 = a;
    poly_trim(r1);
    QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of `a`
    while (true) {
        poly_trim(r1);
        if (r1.empty()) throw Internal("cyclotomic element is a zero divisor");
        if (r1.size() == 1) {  // constant gcd: s1 / r1 is the inverse
            Elt out = zero();
            Rational c = r1[0].inv();
            for (size_t i = 0; i < s1.size() && i < (size_t)deg; ++i) out[i] = s1[i] * c;
            // s1 may exceed deg before reduction; reduce via mul with one()
            if (s1.size() > (size_t)deg) {
                QPoly big = s1;
                for (int i = (int)big.size() - 1; i >= deg; --i) {
                    if (big[i].is_zero()) continue;
                    Rational cc = big[i];
                    big[i] = Rational(0);
                    for (int j = 0; j < deg; ++j) big[i - deg + j] = big[i - deg + j] - cc * phi[j];
                }
                big.resize(deg, Rational(0));
                for (int i = 0; i < deg; ++i) out[i] = big[i] * c;
            }
            return out;
        }
        // r0 = q*r1 + r2
        QPoly r2 = r0, q(r0.size(), Rational(0));
        poly_trim(r2);
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rational c = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            q[shift] = q[shift] + c;
            for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] = r2[shift + i] - c * r1[i];
            poly_trim(r2);
        }
        poly_trim(q);
        // s2 = s0 - q*s1
        QPoly s2 = s0;
        s2.resize(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] = s2[i + j] - q[i] * s1[j];
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
}

CycloCtx::Elt CycloCtx::embed(const CycloScalar& s) const {
    Elt out = zero();
    if (s.is_zero()) return out;
    if (order % s.order != 0)
        throw OrderMismatch("cyclotomic context of order " + std::to_string(order) +
                            " cannot embed z(" + std::to_string(s.order) + ")");
    std::int64_t e = s.exponent * (order / s.order);
    // x^e mod phi
    Elt mono = zero();
    if (e < deg) {
        mono[e] = Rational(1);
    } else {
        QPoly big(e + 1, Rational(0));
        big[e] = Rational(1);
        for (int i = (int)e; i >= deg; --i) {
            if (big[i].is_zero()) continue;
            Rational c = big[i];
            big[i] = Rational(0);
            for (int j = 0; j < deg; ++j) big[i - deg + j] = big[i - deg + j] - c * phi[j];
        }
        big.resize(deg, Rational(0));
        mono = big;
    }
    for (auto& c : mono) c = c * s.mag;
    return mono;
}

std::string CycloCtx::show(const Elt& a) const {
    std::string out;
    for (int i = 0; i < deg; ++i) {
        if (a[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += a[i].str();
        if (i > 0) out += "*z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

/* ------------------------------------------------------------------ */
/* Ops glue                                                            */
/* ------------------------------------------------------------------ */

CycloOps::Elt CycloOps::from_expr(const ScalarExpr& s) const {
    if (std::holds_alternative<CycloScalar>(s)) return ctx->embed(std::get<CycloScalar>(s));
    throw OrderMismatch("symbolic k-th roots require a prime-field context");
}

CycloOps::Elt CycloOps::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> dist(-20, 20);
    Elt e = ctx->zero();
    e[0] = Rational(dist(rng));
    return e;
}

MonomialOps::Elt MonomialOps::add(const Elt& a, const Elt& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.order == b.order && a.exponent == b.exponent)
        return CycloScalar::make(a.mag + b.mag, a.order, a.exponent);
    throw Internal("sum of incompatible monomials " + a.str() + " + " + b.str());
}

MonomialOps::Elt MonomialOps::from_expr(const ScalarExpr& s) const {
    if (std::holds_alternative<CycloScalar>(s)) return std::get<CycloScalar>(s);
    throw Internal("symbolic root has no monomial value");
}

}  // namespace gentle
