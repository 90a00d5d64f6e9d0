#include "gentle/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace gentle {

namespace {

using i128 = __int128;

std::int64_t check64(i128 v, const char* ctx) {
    if (v > INT64_MAX || v < INT64_MIN) throw Overflow(std::string("rational ") + ctx);
    return static_cast<std::int64_t>(v);
}

Rational make(i128 n, i128 d) {
    if (d == 0) throw Overflow("division by zero");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    Rational r;
    r.num = check64(n / a, "reduce");
    r.den = check64(d / a, "reduce");
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

Rational Rational::operator-() const { return make(-(i128)num, den); }

Rational Rational::operator+(const Rational& o) const {
    return make((i128)num * o.den + (i128)o.num * den, (i128)den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return make((i128)num * o.den - (i128)o.num * den, (i128)den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return make((i128)num * o.num, (i128)den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw Overflow("division by zero rational");
    return make((i128)num * o.den, (i128)den * o.num);
}

Rational Rational::inv() const {
    if (num == 0) throw Overflow("inverse of zero");
    return make(den, num);
}

Rational Rational::pow(int k) const {
    Rational base = k < 0 ? inv() : *this;
    int e = k < 0 ? -k : k;
    Rational acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Rational::operator<(const Rational& o) const {
    return (i128)num * o.den < (i128)o.num * den;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t exact_iroot(std::int64_t n, int k) {
    if (n < 0) return -1;
    if (n == 0) return 0;
    if (k == 1) return n;
    std::int64_t lo = 0, hi = 1;
    while (true) {  // find hi with hi^k >= n without overflow
        i128 p = 1;
        bool over = false;
        for (int i = 0; i < k; ++i) {
            p *= hi;
            if (p > n) { over = true; break; }
        }
        if (over || p >= n) break;
        hi *= 2;
    }
    lo = hi / 2;
    while (lo <= hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        i128 p = 1;
        int cmp = 0;
        for (int i = 0; i < k; ++i) {
            p *= mid;
            if (p > n) { cmp = 1; break; }
        }
        if (cmp == 0) cmp = (p == n) ? 0 : -1;
        if (cmp == 0) return mid;
        if (cmp < 0) lo = mid + 1; else hi = mid - 1;
    }
    return -1;
}

bool exact_root(const Rational& q, int k, Rational& out) {
    if (q.num < 0) return false;
    std::int64_t rn = exact_iroot(q.num, k);
    std::int64_t rd = exact_iroot(q.den, k);
    if (rn < 0 || rd < 0) return false;
    out = Rational(rn, rd);
    return true;
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    auto slash = s.find('/');
    auto parse_int = [](const std::string& t) -> std::int64_t {
        if (t.empty()) throw ParseError("empty integer");
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + t + "'");
        }
        if (pos != t.size()) throw ParseError("bad integer '" + t + "'");
        return v;
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace gentle
