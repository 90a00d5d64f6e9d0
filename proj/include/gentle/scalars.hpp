#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "gentle/rational.hpp"

namespace gentle {

/* A nonzero scalar of the form q * zeta_N^e with q rational and zeta_N the
 * primitive N-th root of unity exp(2*pi*i/N); the zero scalar is q = 0.
 * Normal form: q > 0 (signs are folded into the root of unity), 0 <= e < N,
 * gcd(e, N) == 1 unless e == 0, in which case N == 1.  Every scalar the cone
 * theorems produce from monomial inputs is again of this shape; general sums
 * of such monomials appear only inside the verification fields. */
struct CycloScalar {
    Rational mag = 0;          // magnitude q (kept > 0 for nonzero scalars)
    std::int64_t order = 1;    // N
    std::int64_t exponent = 0; // e

    CycloScalar() = default;
    CycloScalar(Rational q) { *this = make(q, 1, 0); }  // NOLINT: implicit by design
    CycloScalar(std::int64_t n) { *this = make(Rational(n), 1, 0); }  // NOLINT
    static CycloScalar make(Rational q, std::int64_t N, std::int64_t e);

    bool is_zero() const { return mag.is_zero(); }
    bool is_one() const { return mag.is_one() && exponent == 0; }
    bool is_rational() const { return exponent == 0 || (order == 2 && exponent == 1); }
    /* The rational value when is_rational(); sign folded back out. */
    Rational rational_value() const;

    CycloScalar operator*(const CycloScalar& o) const;
    CycloScalar operator/(const CycloScalar& o) const;
    CycloScalar operator-() const;
    CycloScalar inv() const;
    CycloScalar pow(int k) const;

    bool operator==(const CycloScalar& o) const {
        return mag == o.mag && order == o.order && exponent == o.exponent;
    }
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    /* Round-trips through parse_scalar: "q", "-q", "q*z(N)^e". */
    std::string str() const;
};

/* k-th root that cannot be written exactly with a rational magnitude:
 * kept symbolic as omega_k^omega_exp * root_of(radicand, k), where root_of
 * denotes the canonical k-th root.  The isomorphism class of a cone does not
 * depend on which k-th root is chosen; verification picks a prime field
 * where the root exists. */
struct SymbolicRoot {
    CycloScalar radicand;
    int k = 1;
    int omega_exp = 0;    // power of zeta_k multiplying the root
    bool negative = false;

    bool operator==(const SymbolicRoot& o) const {
        return radicand == o.radicand && k == o.k && omega_exp == o.omega_exp &&
               negative == o.negative;
    }
    std::string str() const;
};

/* A band-summand scalar: exact monomial when the k-th root is rational,
 * symbolic otherwise. */
using ScalarExpr = std::variant<CycloScalar, SymbolicRoot>;

std::string scalar_expr_str(const ScalarExpr& s);
bool scalar_expr_eq(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr scalar_expr_neg(const ScalarExpr& s);

/* Canonical k-th root of s: magnitude gets its exact rational k-th root
 * (throws IrrationalRoot when none exists), the root-of-unity part becomes
 * zeta_{Nk}^e, and a negative sign contributes zeta_{2k}.  (kth_root(s,k))^k
 * == s exactly. */
CycloScalar kth_root(const CycloScalar& s, int k);

/* kth_root that falls back to a SymbolicRoot instead of throwing. */
ScalarExpr kth_root_expr(const CycloScalar& s, int k);

/* zeta_k. */
CycloScalar primitive_unity_root(std::int64_t k);

/* Scalar grammar: `q`, `-q`, `q*z(N)^e` (q a rational, optionally with
 * denominator: `3/2*z(8)^3`). */
CycloScalar parse_scalar(const std::string& text);

}  // namespace gentle
