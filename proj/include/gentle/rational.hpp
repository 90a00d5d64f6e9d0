#pragma once

#include <cstdint>
#include <string>

#include "gentle/errors.hpp"

namespace gentle {

/* Exact rational arithmetic on int64 numerator/denominator.  All scalars the
 * cone theorems produce stay tiny; intermediates use 128-bit products and any
 * result that no longer fits 64 bits throws Overflow instead of wrapping. */
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0, gcd(|num|, den) == 1

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == 1 && den == 1; }
    bool is_integer() const { return den == 1; }
    bool negative() const { return num < 0; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational inv() const;
    Rational abs() const { return num < 0 ? -*this : *this; }
    Rational pow(int k) const;  // k may be negative

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    std::string str() const;
};

/* Exact integer k-th root: returns r >= 0 with r^k == n (n >= 0), or -1 when
 * none exists. */
std::int64_t exact_iroot(std::int64_t n, int k);

/* Exact rational k-th root of a non-negative rational, or nullopt-like flag
 * via `ok`. */
bool exact_root(const Rational& q, int k, Rational& out);

Rational parse_rational(const std::string& text);

}  // namespace gentle
