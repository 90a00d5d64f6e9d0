#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gentle/errors.hpp"

namespace gentle {

struct Arrow {
    std::string name;
    int src = -1;  // vertex index
    int tgt = -1;
};

/* A path written in composition (function) order: arrows[0] is applied last,
 * arrows.back() first, so the word "dbc" means d after b after c and runs
 * from src(c) to tgt(d).  A trivial path has no arrows and src == tgt. */
struct Path {
    int src = -1, tgt = -1;
    std::vector<int> arrows;

    bool trivial() const { return arrows.empty(); }
    int length() const { return (int)arrows.size(); }
    bool operator==(const Path& o) const = default;
    bool operator<(const Path& o) const {
        if (src != o.src) return src < o.src;
        return arrows < o.arrows;
    }
};

/* A validated gentle presentation kQ/I.  Relations are stored as arrow-index
 * pairs (x, y) meaning the composite x∘y (x applied after y) is zero. */
struct GentleAlgebra {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::pair<int, int>> relations;  // sorted

    std::vector<std::vector<int>> out_of;  // arrows with src == v
    std::vector<std::vector<int>> into;    // arrows with tgt == v
    int max_path_len = 0;                  // longest nonzero path

    bool is_relation(int x, int y) const;
    int vertex_id(const std::string& name) const;               // -1 if unknown
    int arrow_id(const std::string& name) const;                // -1 if unknown
    const std::string& vertex_name(int v) const { return vertices[v]; }

    std::string path_str(const Path& p) const;  // "d*b*c" / "e_3"

private:
    friend GentleAlgebra validate_gentle(const std::vector<std::string>&,
                                         const std::vector<Arrow>&,
                                         const std::vector<std::pair<int, int>>&);
    std::unordered_map<std::string, int> vindex_, aindex_;
};

/* Named-input convenience used by the JSON loader and tests. */
struct ArrowSpec {
    std::string name, from, to;
};

/* Validates the presentation and returns the algebra; throws ValidationError
 * listing every violated condition (codes: NonComposableRelation,
 * FanOutExceeded, GentlenessViolation, InfiniteDimensional). */
GentleAlgebra validate_gentle(const std::vector<std::string>& vertices,
                              const std::vector<Arrow>& arrows,
                              const std::vector<std::pair<int, int>>& relations);
GentleAlgebra validate_gentle(const std::vector<std::string>& vertices,
                              const std::vector<ArrowSpec>& arrows,
                              const std::vector<std::pair<std::string, std::string>>& relations);

Path trivial_path(int v);
Path arrow_path(const GentleAlgebra& A, int arrow);

/* Parses "d*b*c" / "e_3" / a bare arrow name into a validated nonzero path.
 * Throws UnknownArrow or IllegalJunction. */
Path parse_path(const GentleAlgebra& A, const std::string& text);

/* p∘q (p applied after q): nullopt when the composite hits a relation;
 * throws EndpointMismatch when src(p) != tgt(q). */
std::optional<Path> compose(const GentleAlgebra& A, const Path& p, const Path& q);

/* All nonzero paths with source v, trivial path first, then by (length,
 * lexicographic arrow sequence); this is the chosen basis of P_v. */
std::vector<Path> projective_basis(const GentleAlgebra& A, int v);

/* All nonzero paths from v to w; include_trivial controls whether e_v is
 * listed when v == w. */
std::vector<Path> paths_between(const GentleAlgebra& A, int v, int w, bool include_trivial);

}  // namespace gentle
