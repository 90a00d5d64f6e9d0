#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gentle/scalars.hpp"

namespace gentle {

/* ------------------------------------------------------------------ */
/* Prime field F_p with a fixed primitive N-th root of unity           */
/* ------------------------------------------------------------------ */

struct FpCtx {
    std::uint64_t p = 0;
    std::int64_t order = 1;      // N with N | p-1
    std::uint64_t generator = 0; // smallest primitive root of F_p
    std::uint64_t zeta = 0;      // generator^((p-1)/N), primitive N-th root

    /* Smallest prime p > 10^6 with order | p-1 such that every listed
     * radicand has a k-th root in F_p. */
    static FpCtx make(std::int64_t order,
                      const std::vector<std::pair<CycloScalar, int>>& root_needs = {});

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b % p) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((__uint128_t)a * b % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t embed_rational(const Rational& q) const;
    std::uint64_t embed(const CycloScalar& s) const;        // throws OrderMismatch
    std::uint64_t embed_root(const SymbolicRoot& r) const;  // canonical k-th root
    std::uint64_t embed_expr(const ScalarExpr& s) const;

    std::uint64_t discrete_log(std::uint64_t a) const;  // base `generator`
};

bool is_prime_u64(std::uint64_t n);

/* ------------------------------------------------------------------ */
/* Exact cyclotomic field  Q[x] / Phi_N(x)                             */
/* ------------------------------------------------------------------ */

using QPoly = std::vector<Rational>;  // coefficient list, index = power of x

QPoly cyclotomic_polynomial(std::int64_t N);

struct CycloCtx {
    std::int64_t order = 1;  // N
    QPoly phi;               // Phi_N, monic
    int deg = 1;             // deg Phi_N = euler_phi(N)

    static CycloCtx make(std::int64_t order);

    using Elt = QPoly;  // length == deg, trailing zeros kept

    Elt zero() const { return Elt(deg, Rational(0)); }
    Elt one() const;
    Elt add(const Elt&, const Elt&) const;
    Elt sub(const Elt&, const Elt&) const;
    Elt mul(const Elt&, const Elt&) const;
    Elt neg(const Elt&) const;
    Elt inv(const Elt&) const;  // extended Euclid against Phi_N
    bool is_zero(const Elt&) const;
    Elt embed(const CycloScalar& s) const;  // throws OrderMismatch
    std::string show(const Elt&) const;
};

/* ------------------------------------------------------------------ */
/* Field contexts usable by the templated complex/oracle code.  Each   */
/* Ops value is cheap to copy and exposes the uniform interface the    */
/* templates rely on.                                                  */
/* ------------------------------------------------------------------ */

struct FpOps {
    using Elt = std::uint64_t;
    std::shared_ptr<const FpCtx> ctx;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }
    Elt add(Elt a, Elt b) const { return ctx->add(a, b); }
    Elt sub(Elt a, Elt b) const { return ctx->sub(a, b); }
    Elt mul(Elt a, Elt b) const { return ctx->mul(a, b); }
    Elt neg(Elt a) const { return ctx->neg(a); }
    Elt inv(Elt a) const { return ctx->inv(a); }
    Elt from_scalar(const CycloScalar& s) const { return ctx->embed(s); }
    Elt from_expr(const ScalarExpr& s) const { return ctx->embed_expr(s); }
    Elt random(std::mt19937_64& rng) const {
        return std::uniform_int_distribution<std::uint64_t>(0, ctx->p - 1)(rng);
    }
    std::string show(Elt a) const { return std::to_string(a); }
    std::string name() const { return "F_" + std::to_string(ctx->p); }
};

struct CycloOps {
    using Elt = CycloCtx::Elt;
    std::shared_ptr<const CycloCtx> ctx;

    Elt zero() const { return ctx->zero(); }
    Elt one() const { return ctx->one(); }
    bool is_zero(const Elt& a) const { return ctx->is_zero(a); }
    bool eq(const Elt& a, const Elt& b) const { return ctx->is_zero(ctx->sub(a, b)); }
    Elt add(const Elt& a, const Elt& b) const { return ctx->add(a, b); }
    Elt sub(const Elt& a, const Elt& b) const { return ctx->sub(a, b); }
    Elt mul(const Elt& a, const Elt& b) const { return ctx->mul(a, b); }
    Elt neg(const Elt& a) const { return ctx->neg(a); }
    Elt inv(const Elt& a) const { return ctx->inv(a); }
    Elt from_scalar(const CycloScalar& s) const { return ctx->embed(s); }
    Elt from_expr(const ScalarExpr& s) const;  // symbolic roots need prime mode
    Elt random(std::mt19937_64& rng) const;
    std::string show(const Elt& a) const { return ctx->show(a); }
    std::string name() const { return "Q(z_" + std::to_string(ctx->order) + ")"; }
};

/* Exact monomial "field": supports only the operations string/band complex
 * construction needs (scalar products, no general sums), so complexes can be
 * displayed with exact q*z(N)^e entries.  add() is defined only when one
 * side is zero or the monomials are proportional to the same root of unity;
 * anything else is an internal error by construction. */
struct MonomialOps {
    using Elt = CycloScalar;

    Elt zero() const { return CycloScalar(); }
    Elt one() const { return CycloScalar(Rational(1)); }
    bool is_zero(const Elt& a) const { return a.is_zero(); }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt inv(const Elt& a) const { return a.inv(); }
    Elt from_scalar(const CycloScalar& s) const { return s; }
    Elt from_expr(const ScalarExpr& s) const;
    Elt random(std::mt19937_64&) const { throw Internal("monomial field has no sampling"); }
    std::string show(const Elt& a) const { return a.str(); }
    std::string name() const { return "exact"; }
};

/* Verification field selector (spec `FieldCtx`): cyclotomic(N) or prime(p). */
struct FieldCtx {
    enum class Mode { cyclotomic, prime };
    Mode mode = Mode::prime;
    std::int64_t order = 1;  // N required of the field
    std::vector<std::pair<CycloScalar, int>> root_needs;

    static FieldCtx prime(std::int64_t order,
                          std::vector<std::pair<CycloScalar, int>> needs = {}) {
        return FieldCtx{Mode::prime, order, std::move(needs)};
    }
    static FieldCtx cyclotomic(std::int64_t order) {
        return FieldCtx{Mode::cyclotomic, order, {}};
    }
};

}  // namespace gentle
