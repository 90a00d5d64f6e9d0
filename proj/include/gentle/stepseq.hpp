#pragma once

#include <vector>

#include "gentle/walks.hpp"

namespace gentle {

/* Splicing machine for walk surgery.
 *
 * Words are fed in as consecutive pieces (runs of homotopy letters together
 * with the degree of their leftmost node).  The machine expands letters into
 * single-arrow steps, freely cancels backtracking (a step immediately undone
 * by its inverse), regroups the surviving steps into maximal nonzero paths
 * (breaking exactly at relations and direction changes, so every junction of
 * the output is valid by construction), and re-anchors the degrees from the
 * surviving original letter boundaries, cross-checking that all of them
 * agree.
 *
 * Pieces must be continuous: each piece has to start at the vertex and
 * degree where the previous one ended.  Violations throw Internal, as do
 * anchoring inconsistencies; both indicate a bug in the caller.
 */
class Assembler {
public:
    Assembler(const GentleAlgebra& A, bool cyclic);

    /* Record a splice point (used for empty pieces / explicit endpoints). */
    void node(int vertex, int degree);

    /* Append one letter whose left node sits at `left_deg`. */
    void letter(const HLetter& l, int left_deg);

    /* Append a run of letters; the first one's left node sits at `left_deg`. */
    void letters(const std::vector<HLetter>& ls, int left_deg);

    /* Open assembly: an anchored string (possibly trivial, if everything
     * cancels; the collapse point provides its vertex and degree). */
    HString finish_string();

    /* Cyclic assembly: some rotation of the resulting cyclic word plus the
     * degree of its leftmost node.  Throws Internal if nothing survives. */
    struct Cycle {
        std::vector<HLetter> letters;
        int node0_deg = 0;
    };
    Cycle finish_cycle();

private:
    struct Step {
        int arrow;
        bool inv;
        bool first_of_letter, last_of_letter;
        int left_deg, right_deg;  // degrees of the owning letter's end nodes
    };

    const GentleAlgebra& A_;
    bool cyclic_;
    std::vector<Step> steps_;
    bool have_end_ = false;
    int first_vertex_ = -1, first_deg_ = 0;
    int cur_vertex_ = -1, cur_deg_ = 0;

    void reduce_linear();
    void reduce_wrap();
    bool boundary_between(const Step& s, const Step& t) const;
    HLetter run_to_letter(size_t begin, size_t count) const;
};

}  // namespace gentle
