#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gentle/complexes.hpp"
#include "gentle/fields.hpp"
#include "gentle/walks.hpp"

namespace gentle {

/* --------------------------------------------------------------------- */
/* Standard-basis morphism descriptors                                    */
/* --------------------------------------------------------------------- */

/* A graph map: the identity ladder along a degree-aligned maximal common
 * subword, plus the forced division components where both words continue
 * past an end of the overlap.  Realized as a chain map
 * C_source -> shift(C_target, -D) with D the overlap's degree offset
 * (descriptors produced by enumerate_morphisms always have D == 0). */
struct GraphMapDescriptor {
    Word source, target;
    Overlap overlap;
};

/* A quasi-graph map phi: Q_source ~> Sigma^{-1} Q_target, kept as its
 * degree-0 representative f: C_source -> shift(C_target, 1 - D).  Finite
 * overlaps carry D == 1, so f lands in C_target itself; the periodic
 * self-overlap of a band (the Auslander-Reiten case) carries D == 0 and
 * lands in the suspension. */
struct QuasiGraphMapDescriptor {
    Word source, target;
    Overlap overlap;
};

/* A single map: one component M_component from the slot of a source-diagram
 * node to the slot of a target-diagram node of the same degree.  The stored
 * path runs from the target-node vertex to the source-node vertex (the
 * module map P_{v(src_node)} -> P_{v(tgt_node)} is right-composition). */
struct SingleMapDescriptor {
    Word source, target;
    int src_node = 0;
    int tgt_node = 0;
    Path component;
};

/* A double map: components on two consecutive node pairs, `left` at
 * (src_node, tgt_node) and `right` at (src_node + 1, tgt_node + 1), with the
 * relative coefficient fixed by the square between them. */
struct DoubleMapDescriptor {
    Word source, target;
    int src_node = 0;
    int tgt_node = 0;
    Path left, right;
};

using MorphismDescriptor = std::variant<GraphMapDescriptor, QuasiGraphMapDescriptor,
                                        SingleMapDescriptor, DoubleMapDescriptor>;

enum class MorphKind { graph, quasi, single_map, double_map };

MorphKind kind_of(const MorphismDescriptor& d);
std::string kind_name(MorphKind k);  // "graph" / "quasi" / "single" / "double"

const Word& descriptor_source(const MorphismDescriptor& d);
const Word& descriptor_target(const MorphismDescriptor& d);

/* --------------------------------------------------------------------- */
/* Realized chain maps                                                    */
/* --------------------------------------------------------------------- */

/* One component of a degree-0 chain map f: X -> Y: coeff * M_path between
 * the degree-`deg` slots, where M_path: P_{v(col of X)} -> P_{v(row of Y)}
 * is right-composition with `path` (src(path) = row vertex, tgt(path) = col
 * vertex).  coeff is an element of Q(zeta_N) in the CycloCtx basis. */
struct MapComponent {
    int deg = 0;
    int row = 0;
    int col = 0;
    Path path;
    QPoly coeff;
};

struct RealizedMap {
    Complex source, target;
    std::shared_ptr<const CycloCtx> field;
    std::vector<MapComponent> comps;  // coalesced, deterministically sorted
};

/* Realization: builds both complexes, places the components the descriptor
 * dictates, and validates the result (throws NotAChainMap when the candidate
 * does not commute with the differentials, e.g. an overlap that admits no
 * graph map or a quasi overlap with no nonzero representative). */
RealizedMap realize(const GentleAlgebra& A, const GraphMapDescriptor& d);
RealizedMap realize(const GentleAlgebra& A, const QuasiGraphMapDescriptor& d);
RealizedMap realize(const GentleAlgebra& A, const SingleMapDescriptor& d);
RealizedMap realize(const GentleAlgebra& A, const DoubleMapDescriptor& d);
RealizedMap realize(const GentleAlgebra& A, const MorphismDescriptor& d);

/* Exact verification that d_Y f == f d_X; throws NotAChainMap with the
 * offending entry rendered. */
void check_chain_map(const GentleAlgebra& A, const RealizedMap& f);

/* Exact linear solve for f = d_Y h + h d_X over the coefficient field. */
bool is_null_homotopic(const GentleAlgebra& A, const RealizedMap& f);

/* dim Hom_{K(A)}(X, Y): chain maps modulo null-homotopic ones, computed by
 * exact linear algebra over Q(zeta_N) with N = field_order. */
int hom_dimension(const GentleAlgebra& A, const Complex& X, const Complex& Y,
                  std::int64_t field_order = 1);

/* All standard-basis morphisms C_source -> C_target of degree 0 (plus, when
 * both words name the same band with the same scalar, the Auslander-Reiten
 * map into the suspension).  Candidates are generated liberally from maximal
 * overlaps and slot scans, filtered through the chain-map check, and pruned
 * to a set whose classes are linearly independent modulo null-homotopy. */
std::vector<MorphismDescriptor> enumerate_morphisms(const GentleAlgebra& A, const Word& source,
                                                    const Word& target);

}  // namespace gentle
