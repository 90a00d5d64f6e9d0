#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gentle/errors.hpp"

namespace gentle {

/* Dense row-major matrix over any of the Ops field wrappers (FpOps,
 * CycloOps).  Sized for the small systems that arise from word complexes;
 * everything here is classical Gaussian elimination. */
template <class Ops>
struct Matrix {
    using Elt = typename Ops::Elt;
    int rows = 0, cols = 0;
    std::vector<Elt> a;

    Matrix() = default;
    Matrix(const Ops& F, int r, int c) : rows(r), cols(c), a((size_t)r * c, F.zero()) {}

    Elt& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const Elt& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

/* In-place reduced row echelon form; returns the pivot columns in order. */
template <class Ops>
std::vector<int> rref(const Ops& F, Matrix<Ops>& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int sel = -1;
        for (int i = r; i < M.rows; ++i)
            if (!F.is_zero(M.at(i, c))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = c; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        auto lead = F.inv(M.at(r, c));
        for (int j = c; j < M.cols; ++j) M.at(r, j) = F.mul(lead, M.at(r, j));
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || F.is_zero(M.at(i, c))) continue;
            auto f = M.at(i, c);
            for (int j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Ops>
int rank(const Ops& F, Matrix<Ops> M) {
    return (int)rref(F, M).size();
}

/* Basis of the right nullspace of M (each vector has M.cols entries), in the
 * canonical order given by the free columns. */
template <class Ops>
std::vector<std::vector<typename Ops::Elt>> nullspace(const Ops& F, Matrix<Ops> M) {
    std::vector<int> pivots = rref(F, M);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename Ops::Elt>> basis;
    for (int free = 0; free < M.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Ops::Elt> v(M.cols, F.zero());
        v[free] = F.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(M.at((int)r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/* One solution of M x = b when the system is consistent. */
template <class Ops>
std::optional<std::vector<typename Ops::Elt>> solve(const Ops& F, const Matrix<Ops>& M,
                                                    const std::vector<typename Ops::Elt>& b) {
    if ((int)b.size() != M.rows) throw Internal("solve: right-hand side size mismatch");
    Matrix<Ops> aug(F, M.rows, M.cols + 1);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols) = b[i];
    }
    std::vector<int> pivots = rref(F, aug);
    if (!pivots.empty() && pivots.back() == M.cols) return std::nullopt;
    std::vector<typename Ops::Elt> x(M.cols, F.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at((int)r, M.cols);
    return x;
}

/* Incrementally maintained row space (kept in echelon form), used to test
 * membership and grow a spanning set one vector at a time. */
template <class Ops>
struct RowSpan {
    using Elt = typename Ops::Elt;
    Ops F;
    int cols = 0;
    std::vector<std::vector<Elt>> rows;  // echelon rows, unit pivots
    std::vector<int> pivots;             // pivot column of rows[i]

    RowSpan(const Ops& f, int c) : F(f), cols(c) {}

    /* Residue of v after reduction against the stored rows. */
    std::vector<Elt> reduce(std::vector<Elt> v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            const Elt& coef = v[pivots[i]];
            if (F.is_zero(coef)) continue;
            Elt f = coef;
            for (int j = 0; j < cols; ++j) v[j] = F.sub(v[j], F.mul(f, rows[i][j]));
        }
        return v;
    }

    bool contains(const std::vector<Elt>& v) const {
        auto res = reduce(v);
        for (const auto& e : res)
            if (!F.is_zero(e)) return false;
        return true;
    }

    /* Adds v to the span; returns false when v was already contained. */
    bool insert(std::vector<Elt> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < cols; ++j)
            if (!F.is_zero(v[j])) {
                p = j;
                break;
            }
        if (p < 0) return false;
        Elt lead = F.inv(v[p]);
        for (int j = 0; j < cols; ++j) v[j] = F.mul(lead, v[j]);
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }

    int dim() const { return (int)rows.size(); }
};

}  // namespace gentle
