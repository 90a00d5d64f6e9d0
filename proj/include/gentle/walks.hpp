#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/scalars.hpp"

namespace gentle {

enum class Dir { direct, inverse };

/* One homotopy letter: a nonzero nontrivial path, either direct or formally
 * inverted.  In the unfolded diagram (read left to right) a direct letter p
 * runs from tgt(p) to src(p) and raises the cohomological degree by one; an
 * inverse letter runs from src(p) to tgt(p) and lowers it by one. */
struct HLetter {
    Path path;
    Dir dir = Dir::direct;

    bool operator==(const HLetter& o) const = default;
};

/* Open walk; letters[0] is the leftmost letter of the unfolded diagram and
 * `anchor` the degree of the leftmost node.  The empty word is the trivial
 * string: a single node at `trivial_vertex`. */
struct HString {
    std::vector<HLetter> letters;
    int anchor = 0;
    int trivial_vertex = -1;

    bool trivial() const { return letters.empty(); }
    int size() const { return (int)letters.size(); }
};

/* Cyclic walk with a scalar on one direct letter.  letters[0] is a chosen
 * rotation; the underlying complex does not depend on it. */
struct HBand {
    std::vector<HLetter> letters;
    CycloScalar scalar;
    int scalar_slot = 0;

    int size() const { return (int)size_t(letters.size()); }
};

using Word = std::variant<HString, HBand>;

/* letter/node geometry ------------------------------------------------ */

int left_vertex(const GentleAlgebra& A, const HLetter& l);
int right_vertex(const GentleAlgebra& A, const HLetter& l);
inline int degree_step(const HLetter& l) { return l.dir == Dir::direct ? 1 : -1; }
HLetter flip(const HLetter& l);  // formal inverse

std::string letter_str(const GentleAlgebra& A, const HLetter& l);  // "d*b" / "~c"
std::string word_str(const GentleAlgebra& A, const std::vector<HLetter>& letters);
std::string word_str(const GentleAlgebra& A, const HString& s);
std::string word_str(const GentleAlgebra& A, const HBand& b);  // includes "@ scalar"

/* Node vertices of the unfolded diagram: n+1 entries (a band repeats its
 * first vertex at the end).  Throws IllegalJunction on inconsistent words. */
std::vector<int> node_vertices(const GentleAlgebra& A, const std::vector<HLetter>& letters);

/* Validation: every junction satisfies the homotopy-word conditions
 * (direct-direct and inverse-inverse junctions sit on relations, peaks and
 * valleys use distinct arrows); `cyclic` additionally checks the wrap. */
void check_word(const GentleAlgebra& A, const std::vector<HLetter>& letters, bool cyclic);

/* The degrees of the unfolded-diagram nodes, left to right (n+1 entries).
 * Strings start at their anchor.  Bands are anchored so that the canonical
 * representative's leftmost node has degree 0, which makes every rotation
 * and the inverse band produce the same graded complex. */
std::vector<int> degree_profile(const GentleAlgebra& A, const HString& s);
std::vector<int> degree_profile(const GentleAlgebra& A, const HBand& b);

/* parsing -------------------------------------------------------------- */

enum class WordKind { auto_detect, string, band };

/* Grammar: space-separated letters, each `path` or `~path`, a path being
 * arrow names joined by '*'; a band appends `@ scalar`; a trivial string is
 * the empty word or `!vertex`; `^n` (strings only) sets the degree anchor.
 * Errors: UnknownArrow, IllegalJunction (with letter index), NotABand. */
Word parse_word(const std::string& text, const GentleAlgebra& A,
                WordKind kind = WordKind::auto_detect);

/* Band construction with full validation (even length >= 2, equal direct and
 * inverse counts, junctions including the wrap, scalar nonzero and sitting
 * on a direct letter).  Throws NotABand / IllegalJunction. */
HBand make_band(const GentleAlgebra& A, std::vector<HLetter> letters, const CycloScalar& scalar,
                int scalar_slot = -1 /* -1: first direct letter */);

HString make_string(const GentleAlgebra& A, std::vector<HLetter> letters, int anchor = 0,
                    int trivial_vertex = -1);

/* cyclic-word utilities ------------------------------------------------ */

std::vector<HLetter> rotate_letters(const std::vector<HLetter>& letters, int r);
std::vector<HLetter> invert_letters(const std::vector<HLetter>& letters);

/* Smallest period: w == theta^k with theta primitive and k maximal. */
std::pair<std::vector<HLetter>, int> primitive_root(const std::vector<HLetter>& w);

/* Unique representative over all rotations of b and of its inverse (scalar
 * inverted), lexicographically least by rendered letters; the scalar is
 * carried on the first direct letter. */
HBand canonical_band(const GentleAlgebra& A, const HBand& b);

/* Rotation/inversion placement of the canonical representative inside the
 * given word: degrees(b)[i] = raw profile from node 0, plus this offset. */
int band_anchor_offset(const GentleAlgebra& A, const HBand& b);

/* overlaps -------------------------------------------------------------- */

/* A maximal common subword between the unfolded words of two walks (bands
 * unfold to their doubly infinite periodic word).  Node positions index the
 * side's own word; for bands they may exceed one period.  `tgt_inverted`
 * means the target side matches against the inverse word of tau, whose
 * nodes index the inverted word.  degree_offset = deg_src(node) -
 * deg_tgt(aligned node), constant along the overlap. */
struct Overlap {
    int src_start = 0;
    int tgt_start = 0;
    int len = 0;  // letters; 0 = single-node overlap
    bool tgt_inverted = false;
    int degree_offset = 0;
    bool infinite = false;

    bool operator==(const Overlap& o) const = default;
};

enum class OverlapKind { any, graph, quasi };

/* All maximal common subwords, annotated with alignment data.  Whether an
 * overlap carries a graph map or a quasi-graph map is decided by its endpoint
 * conditions, which realization checks; a graph map on an overlap with
 * degree_offset D lands in Hom(C_sigma, shift(C_tau, -D)), a quasi-graph
 * representative in Hom(C_sigma, shift(C_tau, 1-D)).  kind == graph or quasi
 * drops single-node alignments unless both words are strings (where they
 * carry stalk-complex morphisms); `any` reports every alignment. */
std::vector<Overlap> find_overlaps(const GentleAlgebra& A, const Word& sigma, const Word& tau,
                                   OverlapKind kind = OverlapKind::any);

/* True iff both are bands, equal up to rotation and inversion ignoring
 * scalars, and the overlap exceeds the periodicity cutoff
 * lcm(|sigma|,|tau|) + max(|sigma|,|tau|). */
bool is_infinite_overlap(const GentleAlgebra& A, const Word& sigma, const Word& tau,
                         const Overlap& rho);

/* The letters a given overlap matches (from the source side). */
std::vector<HLetter> overlap_letters(const GentleAlgebra& A, const Word& sigma,
                                     const Overlap& rho);

/* Letter at position i of the (doubly infinite, for bands) unfolded word;
 * for strings, i must be in range. */
const HLetter& word_letter(const Word& w, int i);
std::vector<HLetter> word_letters_of(const Word& w);
int word_period(const Word& w);  // letters per period (strings: length)
bool word_is_band(const Word& w);

/* Absolute degree of node i of the word's unfolded diagram (strings: i in
 * [0, n]; bands: any i, periodic). */
int node_degree(const GentleAlgebra& A, const Word& w, int i);
int node_vertex(const GentleAlgebra& A, const Word& w, int i);

}  // namespace gentle
