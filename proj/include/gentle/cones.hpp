#pragma once

#include <string>
#include <vector>

#include "gentle/complexes.hpp"
#include "gentle/morphisms.hpp"

namespace gentle {

/* ------------------------------------------------------------------ */
/* Cone decompositions                                                 */
/* ------------------------------------------------------------------ */

/* An indecomposable string summand.  The homotopy string carries its own
 * degree anchor, so no separate shift is stored. */
struct StringSummand {
    HString word;
};

/* An indecomposable band summand shift(B(letters, scalar, dim), shift).
 * The letters are kept in the canonical rotation and orientation (the one
 * make_band / canonical_band would pick), with the scalar attached to the
 * direct letter at scalar_slot.  The scalar is an exact monomial whenever
 * the k-th root it came from is rational, and a symbolic root otherwise;
 * symbolic scalars always appear in full omega-orbits, so the isomorphism
 * class of the sum does not depend on which concrete root a field picks. */
struct BandSummand {
    std::vector<HLetter> letters;
    int scalar_slot = 0;
    ScalarExpr scalar = CycloScalar(1);
    int dim = 1;
    int shift = 0;
};

/* The claimed decomposition of a mapping cone into indecomposables.  `rule`
 * records which closed-form case produced it.  oracle_only marks inputs for
 * which no closed form is implemented (string-to-string morphisms): the
 * summand lists stay empty and only matrix-level verification applies. */
struct ConeDecomposition {
    std::vector<StringSummand> strings;
    std::vector<BandSummand> bands;
    std::string rule;
    bool oracle_only = false;
};

std::string summand_str(const GentleAlgebra& A, const StringSummand& s);
std::string summand_str(const GentleAlgebra& A, const BandSummand& b);
std::string decomposition_str(const GentleAlgebra& A, const ConeDecomposition& d);

/* ------------------------------------------------------------------ */
/* Splitting powers of bands                                           */
/* ------------------------------------------------------------------ */

/* B(theta^k, s) is isomorphic to the direct sum of B(theta, omega^i * mu)
 * for i = 1..k, where theta is the primitive root of the cyclic word, mu is
 * a k-th root of s and omega a primitive k-th root of unity.  Every summand
 * in the result is primitive; for k == 1 the input band is returned in
 * canonical form.  Irrational roots come back symbolic. */
ConeDecomposition split_band_power(const GentleAlgebra& A, const HBand& b);

/* ------------------------------------------------------------------ */
/* Closed-form mapping cones, one operation per descriptor shape       */
/* ------------------------------------------------------------------ */

/* Each operation implements the combinatorial surgery for its case and
 * throws CaseNotApplicable when the descriptor does not match the required
 * shape (wrong word kinds, band power instead of a primitive band, or an
 * overlap inconsistent with every case).  They do not re-check that the
 * descriptor realizes to a chain map; compute_cone does that. */

/* Source band B(sigma, lambda), target string P(tau).  Either the overlap
 * rho is a proper subword of the band period (cut the band open along the
 * unmatched arc and splice its inverse into tau), or rho covers ell >= 1
 * full periods (remove one period from tau).  Both surgeries can merge or
 * cancel letters at the seams; the result is a single string summand. */
ConeDecomposition cone_graph_band_to_string(const GentleAlgebra& A, const GraphMapDescriptor& d);

/* Mirror case: source string P(sigma), target band B(tau, mu).  The unmatched
 * arc of the band is inverted and spliced into sigma, or one full period is
 * removed from sigma. */
ConeDecomposition cone_graph_string_to_band(const GentleAlgebra& A, const GraphMapDescriptor& d);

/* Both sides bands.  Infinite overlap: the map is an isomorphism and the
 * cone is zero.  One period containing the other: the quotient window is a
 * band power theta^k and the cone splits per split_band_power with total
 * scalar -lambda*mu.  Overlap shorter than both periods: the two unmatched
 * arcs concatenate (target arc inverted) into theta^k with total scalar
 * +lambda*mu when the overlap length is even and -lambda*mu when odd. */
ConeDecomposition cone_graph_band_to_band(const GentleAlgebra& A, const GraphMapDescriptor& d);

/* Quasi-graph maps, any mix of shapes with at least one band.  Band-band
 * with infinite overlap is the Auslander-Reiten case: the cone is the
 * suspension of the dimension-2 band on the same word and scalar.  Finite
 * cases insert one extra copy of the overlap (band-string) or concatenate
 * the two rotated periods (band-band) into theta^k with total scalar
 * -lambda/mu; no letters merge at quasi seams. */
ConeDecomposition cone_quasi(const GentleAlgebra& A, const QuasiGraphMapDescriptor& d);

/* Single map between dimension-1 band complexes: the cone word walks the
 * component, the whole target period backwards, the component backwards and
 * the whole source period forwards; total scalar -lambda/mu. */
ConeDecomposition cone_single_band_band(const GentleAlgebra& A, const SingleMapDescriptor& d);

/* Double map between dimension-1 band complexes: as the single case, but
 * the two letters between the component feet are dropped from the walk. */
ConeDecomposition cone_double_band_band(const GentleAlgebra& A, const DoubleMapDescriptor& d);

/* ------------------------------------------------------------------ */
/* Dispatch and realization                                            */
/* ------------------------------------------------------------------ */

/* Validates the descriptor by realizing it (NotAChainMap propagates), then
 * routes to the operation matching its kind and word shapes.  String-to-
 * string inputs return an oracle_only decomposition. */
ConeDecomposition compute_cone(const GentleAlgebra& A, const MorphismDescriptor& d);

/* The direct sum of the summands' complexes, shifts applied, in listed
 * order (strings first).  Symbolic band scalars are placed on the Jordan
 * diagonal of their scalar letter as ScalarExpr coefficients; the
 * verification layer embeds them into its field.  Throws Internal on an
 * oracle_only decomposition. */
Complex realize_decomposition(const GentleAlgebra& A, const ConeDecomposition& dec);

}  // namespace gentle
