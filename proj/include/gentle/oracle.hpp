#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gentle/cones.hpp"
#include "gentle/fields.hpp"
#include "gentle/linalg.hpp"
#include "gentle/morphisms.hpp"

namespace gentle {

/* ------------------------------------------------------------------ */
/* Matrix-level complexes over a concrete coefficient field            */
/* ------------------------------------------------------------------ */

/* A complex of projectives with fully evaluated coefficients: each
 * differential entry is a formal combination of parallel paths with
 * coefficients in the field Ops provides.  d[k] is the matrix of
 * d : C^(lo+k) -> C^(lo+k+1); rows index slots[k+1], columns slots[k].
 * The entry at (row, col) is the map P_{v(col)} -> P_{v(row)} given by
 * right-composition: each path in it runs from v(row) to v(col). */
template <class Ops>
struct MatrixComplex {
    using Elt = typename Ops::Elt;
    using Entry = std::map<Path, Elt>;

    Ops F;
    int lo = 0;
    std::vector<std::vector<int>> slots;           // vertex of each slot, per degree
    std::vector<std::vector<std::vector<Entry>>> d;  // d.size() == max(#layers - 1, 0)

    int hi() const { return lo + (int)slots.size() - 1; }
    bool empty() const {
        for (const auto& layer : slots)
            if (!layer.empty()) return false;
        return true;
    }
};

/* ------------------------------------------------------------------ */
/* Entry arithmetic                                                    */
/* ------------------------------------------------------------------ */

template <class Ops>
void entry_add_term(const Ops& F, std::map<Path, typename Ops::Elt>& dst, const Path& p,
                    const typename Ops::Elt& c) {
    if (F.is_zero(c)) return;
    auto it = dst.find(p);
    if (it == dst.end()) {
        dst.emplace(p, c);
        return;
    }
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) dst.erase(it);
}

/* Composite of `first` followed by `second` (the matrix product entry
 * second * first): right-composition turns that into path composition
 * first_path o second_path, with relations killing terms. */
template <class Ops>
std::map<Path, typename Ops::Elt> entry_product(const GentleAlgebra& A, const Ops& F,
                                                const std::map<Path, typename Ops::Elt>& second,
                                                const std::map<Path, typename Ops::Elt>& first) {
    std::map<Path, typename Ops::Elt> out;
    for (const auto& [p1, c1] : first)
        for (const auto& [p2, c2] : second) {
            auto pq = compose(A, p1, p2);
            if (!pq) continue;
            entry_add_term(F, out, *pq, F.mul(c1, c2));
        }
    return out;
}

/* Inverse of a unit u = lambda * 1_v + r (r in the radical) inside
 * e_v A e_v, computed by the terminating geometric series. */
template <class Ops>
std::map<Path, typename Ops::Elt> entry_inverse(const GentleAlgebra& A, const Ops& F,
                                                const std::map<Path, typename Ops::Elt>& u,
                                                int vertex) {
    using Entry = std::map<Path, typename Ops::Elt>;
    Path triv{vertex, vertex, {}};
    auto it = u.find(triv);
    if (it == u.end() || F.is_zero(it->second)) throw Internal("entry_inverse: not a unit");
    auto linv = F.inv(it->second);
    Entry n;  // -lambda^{-1} r
    for (const auto& [p, c] : u)
        if (!p.trivial()) n.emplace(p, F.neg(F.mul(linv, c)));
    Entry total{{triv, F.one()}};
    Entry acc = total;
    for (int guard = 0; !n.empty(); ++guard) {
        if (guard > 512) throw Internal("entry_inverse: radical series does not terminate");
        acc = entry_product(A, F, n, acc);
        if (acc.empty()) break;
        for (const auto& [p, c] : acc) entry_add_term(F, total, p, c);
    }
    for (auto& [p, c] : total) c = F.mul(linv, c);
    return total;
}

/* ------------------------------------------------------------------ */
/* Building matrix complexes                                           */
/* ------------------------------------------------------------------ */

/* Evaluate a QPoly written in the basis of Q(zeta_src_order) inside the
 * field Ops provides (which must contain that root of unity). */
template <class Ops>
typename Ops::Elt embed_qpoly(const Ops& F, std::int64_t src_order, const QPoly& q) {
    auto z = F.from_scalar(primitive_unity_root(src_order));
    auto acc = F.zero();
    auto zp = F.one();
    for (const Rational& coef : q) {
        if (!coef.is_zero()) acc = F.add(acc, F.mul(F.from_scalar(CycloScalar(coef)), zp));
        zp = F.mul(zp, z);
    }
    return acc;
}

template <class Ops>
MatrixComplex<Ops> embed_complex(const GentleAlgebra& A, const Complex& c, Ops F) {
    (void)A;
    MatrixComplex<Ops> M;
    M.F = F;
    M.lo = c.lo;
    M.slots = c.slots;
    int layers = (int)c.slots.size();
    M.d.assign(layers > 0 ? layers - 1 : 0, {});
    for (int k = 0; k + 1 < layers; ++k)
        M.d[k].assign(c.slots[k + 1].size(),
                      std::vector<typename MatrixComplex<Ops>::Entry>(c.slots[k].size()));
    for (const DiffEntry& e : c.diff) {
        int k = e.deg - c.lo;
        if (k < 0 || k + 1 >= layers) throw Internal("embed_complex: differential out of range");
        entry_add_term(F, M.d[k][e.row][e.col], e.path, F.from_expr(e.coeff));
    }
    return M;
}

/* Every length-2 composite of differentials, with coefficients evaluated;
 * throws NotAChainMap if any is nonzero. */
template <class Ops>
void check_d_squared(const GentleAlgebra& A, const MatrixComplex<Ops>& C) {
    for (size_t k = 0; k + 1 < C.d.size(); ++k) {
        int rows = (int)C.slots[k + 2].size(), mids = (int)C.slots[k + 1].size(),
            cols = (int)C.slots[k].size();
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                typename MatrixComplex<Ops>::Entry acc;
                for (int m = 0; m < mids; ++m) {
                    if (C.d[k + 1][i][m].empty() || C.d[k][m][j].empty()) continue;
                    auto prod = entry_product(A, C.F, C.d[k + 1][i][m], C.d[k][m][j]);
                    for (const auto& [p, c] : prod) entry_add_term(C.F, acc, p, c);
                }
                if (!acc.empty())
                    throw NotAChainMap("differential does not square to zero at degree " +
                                       std::to_string(C.lo + (int)k) + " entry (" +
                                       std::to_string(i) + ", " + std::to_string(j) + ")");
            }
    }
}

/* The mapping cone of a realized chain map f : X -> Y: degree g carries
 * X^(g+1) first, then Y^g; the differential is -d_X on the first block,
 * d_Y on the second, and the components of f from the first into the
 * second.  Asserts d^2 == 0. */
template <class Ops>
MatrixComplex<Ops> mapping_cone(const GentleAlgebra& A, const RealizedMap& f, Ops F) {
    const Complex& X = f.source;
    const Complex& Y = f.target;
    MatrixComplex<Ops> C;
    C.F = F;
    bool xe = X.empty(), ye = Y.empty();
    if (xe && ye) return C;
    C.lo = xe ? Y.lo : (ye ? X.lo - 1 : std::min(X.lo - 1, Y.lo));
    int hi = xe ? Y.hi() : (ye ? X.hi() - 1 : std::max(X.hi() - 1, Y.hi()));
    int layers = hi - C.lo + 1;
    C.slots.assign(layers, {});
    auto xcount = [&](int g) { return X.slot_count(g + 1); };
    auto ycount = [&](int g) { return Y.slot_count(g); };
    for (int k = 0; k < layers; ++k) {
        int g = C.lo + k;
        for (int j = 0; j < xcount(g); ++j) C.slots[k].push_back(X.slot_vertex(g + 1, j));
        for (int j = 0; j < ycount(g); ++j) C.slots[k].push_back(Y.slot_vertex(g, j));
    }
    C.d.assign(layers > 0 ? layers - 1 : 0, {});
    for (int k = 0; k + 1 < layers; ++k)
        C.d[k].assign(C.slots[k + 1].size(),
                      std::vector<typename MatrixComplex<Ops>::Entry>(C.slots[k].size()));
    auto place = [&](int k, int row, int col, const Path& p, const typename Ops::Elt& c) {
        if (k < 0 || k + 1 >= layers) throw Internal("mapping_cone: entry out of range");
        entry_add_term(F, C.d[k][row][col], p, c);
    };
    for (const DiffEntry& e : X.diff) {  // -d_X : X^(g+1) block of degree g
        int g = e.deg - 1;
        place(g - C.lo, e.row, e.col, e.path, F.neg(F.from_expr(e.coeff)));
    }
    for (const DiffEntry& e : Y.diff)  // d_Y on the Y block
        place(e.deg - C.lo, xcount(e.deg + 1) + e.row, xcount(e.deg) + e.col, e.path,
              F.from_expr(e.coeff));
    for (const MapComponent& m : f.comps) {  // f : X^(g+1) -> Y^(g+1)
        int g = m.deg - 1;
        place(g - C.lo, xcount(g + 1) + m.row, m.col, m.path,
              embed_qpoly(F, f.field->order, m.coeff));
    }
    check_d_squared(A, C);
    return C;
}

/* ------------------------------------------------------------------ */
/* Gaussian minimization                                               */
/* ------------------------------------------------------------------ */

struct ReduceStats {
    int eliminations = 0;
};

template <class Ops>
bool entry_is_unit(const Ops& F, const std::map<Path, typename Ops::Elt>& e) {
    for (const auto& [p, c] : e)
        if (p.trivial() && !F.is_zero(c)) return true;
    return false;
}

template <class Ops>
bool has_unit_entry(const MatrixComplex<Ops>& C) {
    for (const auto& layer : C.d)
        for (const auto& row : layer)
            for (const auto& e : row)
                if (entry_is_unit(C.F, e)) return true;
    return false;
}

/* Drop empty degree layers at both ends. */
template <class Ops>
void trim(MatrixComplex<Ops>& C) {
    while (!C.slots.empty() && C.slots.front().empty()) {
        C.slots.erase(C.slots.begin());
        if (!C.d.empty()) C.d.erase(C.d.begin());
        ++C.lo;
    }
    while (!C.slots.empty() && C.slots.back().empty()) {
        C.slots.pop_back();
        if (!C.d.empty()) C.d.pop_back();
    }
    if (C.slots.empty()) {
        C.lo = 0;
        C.d.clear();
    }
}

/* Eliminate unit entries until the complex is minimal (no differential
 * entry has an invertible scalar part).  Each round picks the unit with
 * the lowest degree, then column, then row -- or uniformly at random when
 * `order_rng` is given -- inverts it inside the vertex algebra, applies
 * the complementary update b1 - b2 u^{-1} b3, and deletes the slot pair
 * together with the adjacent differential row/column.  The result is
 * homotopy equivalent to the input. */
template <class Ops>
ReduceStats reduce_min(const GentleAlgebra& A, MatrixComplex<Ops>& C,
                       std::mt19937_64* order_rng = nullptr) {
    using Entry = typename MatrixComplex<Ops>::Entry;
    const Ops& F = C.F;
    ReduceStats stats;
    for (;;) {
        std::vector<std::tuple<int, int, int>> units;  // (layer, col, row)
        for (int k = 0; k < (int)C.d.size(); ++k)
            for (int j = 0; j < (int)C.slots[k].size(); ++j)
                for (int i = 0; i < (int)C.slots[k + 1].size(); ++i)
                    if (entry_is_unit(F, C.d[k][i][j])) {
                        units.emplace_back(k, j, i);
                        if (!order_rng) goto picked;  // first in scan order
                    }
    picked:
        if (units.empty()) break;
        size_t pick = 0;
        if (order_rng)
            pick = std::uniform_int_distribution<size_t>(0, units.size() - 1)(*order_rng);
        auto [k, j, i] = units[pick];
        Entry uinv = entry_inverse(A, F, C.d[k][i][j], C.slots[k][j]);
        for (int r = 0; r < (int)C.slots[k + 1].size(); ++r) {
            if (r == i || C.d[k][r][j].empty()) continue;
            Entry left = entry_product(A, F, C.d[k][r][j], uinv);  // b2 o u^{-1}
            for (int c = 0; c < (int)C.slots[k].size(); ++c) {
                if (c == j || C.d[k][i][c].empty()) continue;
                Entry upd = entry_product(A, F, left, C.d[k][i][c]);
                for (const auto& [p, coef] : upd)
                    entry_add_term(F, C.d[k][r][c], p, F.neg(coef));
            }
        }
        // delete column j of layer k (and its slot), row i of layer k+1 (and
        // its slot); the homotopy equivalence absorbs the adjacent blocks
        // (d[k-1] row j, d[k+1] column i), which are simply dropped.
        for (auto& row : C.d[k]) row.erase(row.begin() + j);
        C.d[k].erase(C.d[k].begin() + i);
        if (k > 0) C.d[k - 1].erase(C.d[k - 1].begin() + j);
        if (k + 1 < (int)C.d.size())
            for (auto& row : C.d[k + 1]) row.erase(row.begin() + i);
        C.slots[k].erase(C.slots[k].begin() + j);
        C.slots[k + 1].erase(C.slots[k + 1].begin() + i);
        ++stats.eliminations;
    }
    trim(C);
    return stats;
}

/* ------------------------------------------------------------------ */
/* Census and isomorphism probing                                      */
/* ------------------------------------------------------------------ */

/* Multiplicity of each projective per absolute degree: (degree, vertex) ->
 * count.  Zero counts are omitted. */
template <class Ops>
std::map<std::pair<int, int>, int> slot_census(const MatrixComplex<Ops>& C) {
    std::map<std::pair<int, int>, int> out;
    for (int k = 0; k < (int)C.slots.size(); ++k)
        for (int v : C.slots[k]) ++out[{C.lo + k, v}];
    return out;
}

/* Signed per-vertex Euler characteristic (invariant under reduce_min). */
template <class Ops>
std::map<int, int> euler_per_vertex(const MatrixComplex<Ops>& C) {
    std::map<int, int> out;
    for (const auto& [key, count] : slot_census(C)) {
        auto [deg, v] = key;
        out[v] += (deg % 2 == 0 ? 1 : -1) * count;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/* Randomized isomorphism test with one-sided error.  Solves the linear
 * system of chain maps X -> Y exactly, then samples random points of the
 * solution space; a sample is accepted when every degreewise scalar part
 * (the coefficients of trivial paths) is invertible, which certifies an
 * isomorphism of complexes.  `false` is only probabilistic: when an iso
 * exists, each trial misses with probability at most (total slot count)/p
 * by Schwartz-Zippel, so 16 trials over p > 10^6 are decisive in practice.
 * Inputs should be minimal (reduce_min) -- the test is valid regardless,
 * but minimality keeps the systems small. */
template <class Ops>
bool iso_probe(const GentleAlgebra& A, const MatrixComplex<Ops>& X, const MatrixComplex<Ops>& Y,
               int trials, std::mt19937_64& rng, int* trials_used = nullptr) {
    const Ops& F = X.F;
    if (trials_used) *trials_used = 0;
    if (slot_census(X) != slot_census(Y)) return false;
    if (X.empty()) return true;

    // unknowns: one per (degree, Y-slot, X-slot, path from Y-vertex to X-vertex)
    std::map<std::tuple<int, int, int, Path>, int> unknown;
    for (int g = std::max(X.lo, Y.lo); g <= std::min(X.hi(), Y.hi()); ++g)
        for (int r = 0; r < (int)Y.slots[g - Y.lo].size(); ++r)
            for (int c = 0; c < (int)X.slots[g - X.lo].size(); ++c)
                for (const Path& p :
                     paths_between(A, Y.slots[g - Y.lo][r], X.slots[g - X.lo][c], true))
                    unknown.emplace(std::make_tuple(g, r, c, p), (int)unknown.size());
    if (unknown.empty()) return false;  // nonzero complexes, no candidate maps

    // equations: coefficients of d_Y f - f d_X = 0
    std::map<std::tuple<int, int, int, Path>, int> eqn;
    std::vector<std::vector<std::pair<int, typename Ops::Elt>>> eq_terms;
    auto eq_row = [&](int g, int r, int c, const Path& p) -> int {
        auto key = std::make_tuple(g, r, c, p);
        auto [it, fresh] = eqn.emplace(key, (int)eqn.size());
        if (fresh) eq_terms.emplace_back();
        return it->second;
    };
    for (const auto& [key, uidx] : unknown) {
        const auto& [g, r, c, p] = key;
        int yk = g - Y.lo, xk = g - X.lo;
        if (yk < (int)Y.d.size())  // d_Y o f terms at (g, r2, c)
            for (int r2 = 0; r2 < (int)Y.slots[yk + 1].size(); ++r2)
                for (const auto& [q, coef] : Y.d[yk][r2][r]) {
                    auto pq = compose(A, p, q);
                    if (!pq) continue;
                    eq_terms[eq_row(g, r2, c, *pq)].emplace_back(uidx, coef);
                }
        if (xk > 0)  // f o d_X terms at (g-1, r, c2)
            for (int c2 = 0; c2 < (int)X.slots[xk - 1].size(); ++c2)
                for (const auto& [q, coef] : X.d[xk - 1][c][c2]) {
                    auto qp = compose(A, q, p);
                    if (!qp) continue;
                    eq_terms[eq_row(g - 1, r, c2, *qp)].emplace_back(uidx, F.neg(coef));
                }
    }
    Matrix<Ops> M(F, (int)eq_terms.size(), (int)unknown.size());
    for (int row = 0; row < (int)eq_terms.size(); ++row)
        for (const auto& [col, coef] : eq_terms[row]) M.at(row, col) = F.add(M.at(row, col), coef);
    auto basis = nullspace(F, M);
    if (basis.empty()) return false;

    for (int t = 1; t <= trials; ++t) {
        if (trials_used) *trials_used = t;
        std::vector<typename Ops::Elt> sol((size_t)unknown.size(), F.zero());
        for (const auto& vec : basis) {
            auto w = F.random(rng);
            if (F.is_zero(w)) continue;
            for (size_t u = 0; u < sol.size(); ++u) sol[u] = F.add(sol[u], F.mul(w, vec[u]));
        }
        bool invertible = true;
        for (int g = X.lo; g <= X.hi() && invertible; ++g) {
            int n = (int)X.slots[g - X.lo].size();
            if (n == 0) continue;
            Matrix<Ops> S(F, n, n);  // scalar parts: trivial-path coefficients
            for (const auto& [key, uidx] : unknown) {
                const auto& [gg, r, c, p] = key;
                if (gg != g || !p.trivial()) continue;
                S.at(r, c) = sol[uidx];
            }
            invertible = rank(F, std::move(S)) == n;
        }
        if (invertible) return true;
    }
    return false;
}

/* ------------------------------------------------------------------ */
/* End-to-end verification                                             */
/* ------------------------------------------------------------------ */

struct VerifyOptions {
    FieldCtx::Mode mode = FieldCtx::Mode::prime;
    int trials = 16;
    std::uint64_t seed = 0x67656e746c65ULL;
    bool randomize_reduction = false;  // also scramble the elimination order
};

struct VerifyReport {
    bool graded_dims_match = false;
    bool iso = false;
    int trials_used = 0;
    std::string field;
    int eliminated_pairs = 0;
    // extra context (not part of the JSON schema)
    std::uint64_t prime = 0;      // 0 in cyclotomic mode
    std::int64_t field_order = 1; // the root-of-unity order the field carries
};

/* Root-of-unity order every scalar in sight embeds into: the realization
 * field, both differentials, and the claimed summand scalars. */
std::int64_t verification_order(const RealizedMap& f, const ConeDecomposition& claimed);

/* Builds the explicit mapping cone of f, minimizes it, builds and minimizes
 * the realization of the claimed decomposition, and compares: censuses per
 * (degree, vertex), then randomized isomorphism probing.  For oracle_only
 * claims the comparison is a confluence self-check instead: the cone is
 * reduced twice (deterministic and randomized order) and the two minimal
 * complexes are compared. */
VerifyReport verify_cone(const GentleAlgebra& A, const RealizedMap& f,
                         const ConeDecomposition& claimed, const VerifyOptions& opts = {});

}  // namespace gentle
