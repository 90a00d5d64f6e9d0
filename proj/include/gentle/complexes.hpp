#pragma once

#include <map>
#include <string>
#include <vector>

#include "gentle/walks.hpp"

namespace gentle {

/* One component of a differential: the map P_{v(col)} -> P_{v(row)} given by
 * right-composition with `path`, scaled by `coeff`.  `deg` is the source
 * degree (the matrix of d^deg : C^deg -> C^{deg+1}). */
struct DiffEntry {
    int deg = 0;
    int row = 0, col = 0;
    Path path;
    ScalarExpr coeff = CycloScalar(1);
};

/* A complex of projectives in slot form.  slots[k] lists the vertex of each
 * projective summand of C^(lo+k).  Band complexes of dimension n carry n
 * consecutive slots per diagram node (copies == n); node_slot maps a node of
 * the defining word to (degree, first slot index). */
struct Complex {
    int lo = 0;
    std::vector<std::vector<int>> slots;
    std::vector<DiffEntry> diff;
    int copies = 1;
    std::vector<std::pair<int, int>> node_slot;

    int hi() const { return lo + (int)slots.size() - 1; }
    bool empty() const { return slots.empty(); }
    int slot_count(int deg) const {
        int k = deg - lo;
        return k >= 0 && k < (int)slots.size() ? (int)slots[k].size() : 0;
    }
    int slot_vertex(int deg, int idx) const { return slots[deg - lo][idx]; }
};

Complex build_string_complex(const GentleAlgebra& A, const HString& s);

/* Band complex B(b, n): n copies of each node, the scalar letter carrying a
 * lower-triangular Jordan block J_n(lambda) (lambda on the diagonal, 1 below
 * it), every other letter an identity block. */
Complex build_band_complex(const GentleAlgebra& A, const HBand& b, int n = 1);

Complex build_complex(const GentleAlgebra& A, const Word& w, int n = 1);

/* Total dimension of each graded piece as a k-vector space. */
std::map<int, int> graded_dims(const GentleAlgebra& A, const Complex& c);

/* X[s]: degrees drop by s, odd s negates the differential. */
Complex shift(const Complex& c, int s);

Complex direct_sum(const Complex& a, const Complex& b);

/* Structural acyclicity: every length-2 composite of differential entries
 * is the zero map path-wise (true for string and band complexes; cones need
 * coefficient arithmetic and are checked in the verification layer). */
bool d_squared_vanishes_pathwise(const GentleAlgebra& A, const Complex& c);

/* Human-readable unfolded diagram of a word (and its complex); set tikz for
 * a TikZ picture instead of plain text. */
std::string emit_unfolded(const GentleAlgebra& A, const Word& w, bool tikz = false);

}  // namespace gentle
