#include "gentle/scalars.hpp"

#include <numeric>

namespace gentle {

CycloScalar CycloScalar::make(Rational q, std::int64_t N, std::int64_t e) {
    CycloScalar s;
    if (q.is_zero()) return s;  // zero scalar: (0, 1, 0)
    if (N < 1) throw Internal("root order must be positive");
    e %= N;
    if (e < 0) e += N;
    if (q.negative()) {  // fold the sign into the root of unity
        q = -q;
        if (N % 2 == 0) {
            e = (e + N / 2) % N;
        } else {
            N *= 2;
            e = (2 * e + N / 2) % N;
        }
    }
    std::int64_t g = std::gcd(e, N);
    if (g > 0) { e /= g; N /= g; }
    if (e == 0) N = 1;
    s.mag = q;
    s.order = N;
    s.exponent = e;
    return s;
}

Rational CycloScalar::rational_value() const {
    if (is_zero()) return Rational(0);
    if (exponent == 0) return mag;
    if (order == 2 && exponent == 1) return -mag;
    throw Internal("scalar " + str() + " is not rational");
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
    if (is_zero() || o.is_zero()) return CycloScalar();
    std::int64_t N = std::lcm(order, o.order);
    return make(mag * o.mag, N, exponent * (N / order) + o.exponent * (N / o.order));
}

CycloScalar CycloScalar::operator/(const CycloScalar& o) const { return *this * o.inv(); }

CycloScalar CycloScalar::operator-() const { return make(-mag, order, exponent); }

CycloScalar CycloScalar::inv() const {
    if (is_zero()) throw Overflow("inverse of zero scalar");
    return make(mag.inv(), order, -exponent);
}

CycloScalar CycloScalar::pow(int k) const {
    if (is_zero()) {
        if (k <= 0) throw Overflow("zero scalar to non-positive power");
        return CycloScalar();
    }
    return make(mag.pow(k), order, exponent * k);
}

std::string CycloScalar::str() const {
    if (is_zero()) return "0";
    if (exponent == 0) return mag.str();
    if (order == 2) return (-mag).str();
    std::string out;
    if (!mag.is_one()) out = mag.str() + "*";
    out += "z(" + std::to_string(order) + ")^" + std::to_string(exponent);
    return out;
}

std::string SymbolicRoot::str() const {
    std::string out = "root_of(" + radicand.str() + "," + std::to_string(k) + ")";
    if (omega_exp != 0)
        out = "z(" + std::to_string(k) + ")^" + std::to_string(omega_exp) + "*" + out;
    if (negative) out = "-" + out;
    return out;
}

std::string scalar_expr_str(const ScalarExpr& s) {
    if (std::holds_alternative<CycloScalar>(s)) return std::get<CycloScalar>(s).str();
    return std::get<SymbolicRoot>(s).str();
}

bool scalar_expr_eq(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<CycloScalar>(a))
        return std::get<CycloScalar>(a) == std::get<CycloScalar>(b);
    return std::get<SymbolicRoot>(a) == std::get<SymbolicRoot>(b);
}

ScalarExpr scalar_expr_neg(const ScalarExpr& s) {
    if (std::holds_alternative<CycloScalar>(s)) return -std::get<CycloScalar>(s);
    SymbolicRoot r = std::get<SymbolicRoot>(s);
    r.negative = !r.negative;
    return r;
}

CycloScalar kth_root(const CycloScalar& s, int k) {
    if (k < 1) throw Internal("kth_root needs k >= 1");
    if (s.is_zero()) throw Internal("kth_root of zero");
    if (k == 1) return s;
    Rational rq;
    if (!exact_root(s.mag, k, rq))
        throw IrrationalRoot("no rational " + std::to_string(k) + "-th root of " + s.mag.str());
    // (q * zeta_N^e)^(1/k) = q^(1/k) * zeta_{Nk}^e
    return CycloScalar::make(rq, s.order * k, s.exponent);
}

ScalarExpr kth_root_expr(const CycloScalar& s, int k) {
    try {
        return kth_root(s, k);
    } catch (const IrrationalRoot&) {
        return SymbolicRoot{s, k, 0};
    }
}

CycloScalar primitive_unity_root(std::int64_t k) {
    if (k < 1) throw Internal("root order must be positive");
    return CycloScalar::make(Rational(1), k, 1);
}

CycloScalar parse_scalar(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");
    auto star = s.find("*z(");
    std::string qpart = s, zpart;
    if (star != std::string::npos) {
        qpart = s.substr(0, star);
        zpart = s.substr(star + 1);
    } else if (s.rfind("z(", 0) == 0) {
        qpart = "1";
        zpart = s;
    } else if (s.rfind("-z(", 0) == 0) {
        qpart = "-1";
        zpart = s.substr(1);
    }
    Rational q = parse_rational(qpart);
    if (zpart.empty()) return CycloScalar::make(q, 1, 0);
    auto close = zpart.find(')');
    if (zpart.rfind("z(", 0) != 0 || close == std::string::npos)
        throw ParseError("bad scalar '" + text + "'");
    std::int64_t N = parse_rational(zpart.substr(2, close - 2)).num;
    std::int64_t e = 1;
    std::string rest = zpart.substr(close + 1);
    if (!rest.empty()) {
        if (rest[0] != '^') throw ParseError("bad scalar '" + text + "'");
        e = parse_rational(rest.substr(1)).num;
    }
    if (N < 1) throw ParseError("root order must be positive in '" + text + "'");
    return CycloScalar::make(q, N, e);
}

}  // namespace gentle
