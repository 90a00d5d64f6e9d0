#include "gentle/complexes.hpp"

#include <algorithm>

namespace gentle {

namespace {

/* Common builder: place each diagram node (with `copies` slots) into its
 * degree, then wire one block of entries per letter. */
Complex assemble(const std::vector<HLetter>& letters, const std::vector<int>& node_deg,
                 const std::vector<int>& node_vtx, bool cyclic, int copies,
                 const CycloScalar& scalar, int scalar_slot) {
    Complex c;
    c.copies = copies;
    size_t nodes = node_deg.size();
    int lo = *std::min_element(node_deg.begin(), node_deg.end());
    int hi = *std::max_element(node_deg.begin(), node_deg.end());
    c.lo = lo;
    c.slots.assign(hi - lo + 1, {});
    c.node_slot.resize(nodes);
    for (size_t i = 0; i < nodes; ++i) {
        auto& layer = c.slots[node_deg[i] - lo];
        c.node_slot[i] = {node_deg[i], (int)layer.size()};
        for (int j = 0; j < copies; ++j) layer.push_back(node_vtx[i]);
    }
    for (size_t i = 0; i < letters.size(); ++i) {
        const HLetter& l = letters[i];
        size_t a = i, b = cyclic ? (i + 1) % nodes : i + 1;
        // the differential runs toward higher degree
        size_t from = l.dir == Dir::direct ? a : b;
        size_t to = l.dir == Dir::direct ? b : a;
        bool jordan = cyclic && (int)i == scalar_slot;
        for (int j = 0; j < copies; ++j) {
            DiffEntry e;
            e.deg = node_deg[from];
            e.col = c.node_slot[from].second + j;
            e.row = c.node_slot[to].second + j;
            e.path = l.path;
            e.coeff = jordan ? ScalarExpr(scalar) : ScalarExpr(CycloScalar(1));
            c.diff.push_back(e);
            if (jordan && j + 1 < copies) {
                DiffEntry sub = e;
                sub.row += 1;
                sub.coeff = CycloScalar(1);
                c.diff.push_back(sub);
            }
        }
    }
    return c;
}

}  // namespace

Complex build_string_complex(const GentleAlgebra& A, const HString& s) {
    if (s.trivial()) {
        if (s.trivial_vertex < 0) throw Internal("trivial string without a vertex");
        Complex c;
        c.lo = s.anchor;
        c.slots = {{s.trivial_vertex}};
        c.node_slot = {{s.anchor, 0}};
        return c;
    }
    check_word(A, s.letters, /*cyclic=*/false);
    std::vector<int> deg = degree_profile(A, s);
    std::vector<int> vtx = node_vertices(A, s.letters);
    return assemble(s.letters, deg, vtx, /*cyclic=*/false, 1, CycloScalar(1), -1);
}

Complex build_band_complex(const GentleAlgebra& A, const HBand& b, int n) {
    if (n < 1) throw Internal("band complex dimension must be positive");
    check_word(A, b.letters, /*cyclic=*/true);
    std::vector<int> deg = degree_profile(A, b);
    deg.pop_back();  // cyclic: node m == node 0
    std::vector<int> vtx;
    vtx.reserve(b.letters.size());
    for (const auto& l : b.letters) vtx.push_back(left_vertex(A, l));
    return assemble(b.letters, deg, vtx, /*cyclic=*/true, n, b.scalar, b.scalar_slot);
}

Complex build_complex(const GentleAlgebra& A, const Word& w, int n) {
    if (word_is_band(w)) return build_band_complex(A, std::get<HBand>(w), n);
    return build_string_complex(A, std::get<HString>(w));
}

std::map<int, int> graded_dims(const GentleAlgebra& A, const Complex& c) {
    std::map<int, int> out;
    for (size_t k = 0; k < c.slots.size(); ++k) {
        int total = 0;
        for (int v : c.slots[k]) total += (int)projective_basis(A, v).size();
        if (total > 0) out[c.lo + (int)k] = total;
    }
    return out;
}

Complex shift(const Complex& c, int s) {
    Complex out = c;
    out.lo -= s;
    for (auto& [deg, idx] : out.node_slot) deg -= s;
    for (auto& e : out.diff) {
        e.deg -= s;
        if (s % 2 != 0) e.coeff = scalar_expr_neg(e.coeff);
    }
    return out;
}

Complex direct_sum(const Complex& a, const Complex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Complex out;
    out.lo = std::min(a.lo, b.lo);
    int hi = std::max(a.hi(), b.hi());
    out.slots.assign(hi - out.lo + 1, {});
    out.copies = 1;  // mixed summands: slot bookkeeping only
    auto place = [&](const Complex& c, std::vector<int>& off) {
        off.assign(c.slots.size(), 0);
        for (size_t k = 0; k < c.slots.size(); ++k) {
            auto& layer = out.slots[c.lo + (int)k - out.lo];
            off[k] = (int)layer.size();
            layer.insert(layer.end(), c.slots[k].begin(), c.slots[k].end());
        }
    };
    std::vector<int> offa, offb;
    place(a, offa);
    place(b, offb);
    auto wire = [&](const Complex& c, const std::vector<int>& off) {
        for (const auto& e : c.diff) {
            DiffEntry n = e;
            n.col += off[e.deg - c.lo];
            n.row += off[e.deg + 1 - c.lo];
            out.diff.push_back(n);
        }
        for (const auto& [deg, idx] : c.node_slot)
            out.node_slot.push_back({deg, idx + off[deg - c.lo]});
    };
    wire(a, offa);
    wire(b, offb);
    return out;
}

bool d_squared_vanishes_pathwise(const GentleAlgebra& A, const Complex& c) {
    for (const auto& e1 : c.diff)
        for (const auto& e2 : c.diff) {
            if (e2.deg != e1.deg + 1 || e2.col != e1.row) continue;
            if (compose(A, e1.path, e2.path)) return false;
        }
    return true;
}

namespace {

std::string tex_path(const GentleAlgebra& A, const HLetter& l) {
    std::string body;
    for (size_t i = 0; i < l.path.arrows.size(); ++i) {
        if (i) body += "\\cdot ";
        body += A.arrows[l.path.arrows[i]].name;
    }
    if (l.dir == Dir::inverse) body = "\\overline{" + body + "}";
    return body;
}

}  // namespace

std::string emit_unfolded(const GentleAlgebra& A, const Word& w, bool tikz) {
    std::vector<HLetter> letters = word_letters_of(w);
    bool band = word_is_band(w);
    size_t nodes = band ? letters.size() : letters.size() + 1;
    std::string out;

    if (!band && letters.empty()) {
        const HString& s = std::get<HString>(w);
        if (tikz)
            return "\\begin{tikzpicture}\n  \\node (n0) {$P_{" +
                   A.vertex_name(s.trivial_vertex) + "}^{(" + std::to_string(s.anchor) +
                   ")}$};\n\\end{tikzpicture}\n";
        return "n0:P_" + A.vertex_name(s.trivial_vertex) + "@" + std::to_string(s.anchor) + "\n";
    }

    auto node_tag = [&](size_t i) {
        return "P_" + A.vertex_name(node_vertex(A, w, (int)i)) + "@" +
               std::to_string(node_degree(A, w, (int)i));
    };

    if (!tikz) {
        for (size_t i = 0; i < nodes; ++i) {
            if (i) {
                const HLetter& l = letters[i - 1];
                std::string lab = A.path_str(l.path);
                out += l.dir == Dir::direct ? " --" + lab + "--> " : " <--" + lab + "-- ";
            }
            out += "n" + std::to_string(i) + ":" + node_tag(i);
        }
        if (band) {
            const HBand& b = std::get<HBand>(w);
            const HLetter& l = letters.back();
            std::string lab = A.path_str(l.path);
            out += l.dir == Dir::direct ? " --" + lab + "--> " : " <--" + lab + "-- ";
            out += "n0 (cyclic), scalar " + b.scalar.str() + " on letter " +
                   std::to_string(b.scalar_slot);
        }
        out += "\n";
        return out;
    }

    out = "\\begin{tikzpicture}[node distance=2.4cm, auto]\n";
    for (size_t i = 0; i < nodes; ++i) {
        out += "  \\node (n" + std::to_string(i) + ")";
        if (i) out += " [right of=n" + std::to_string(i - 1) + "]";
        out += " {$P_{" + A.vertex_name(node_vertex(A, w, (int)i)) + "}^{(" +
               std::to_string(node_degree(A, w, (int)i)) + ")}$};\n";
    }
    size_t edges = band ? letters.size() : letters.size() > 0 ? letters.size() : 0;
    for (size_t i = 0; i < edges; ++i) {
        const HLetter& l = letters[i];
        size_t a = i, b = (i + 1) % nodes;
        size_t from = l.dir == Dir::direct ? a : b;
        size_t to = l.dir == Dir::direct ? b : a;
        std::string lab = tex_path(A, letters[i]);
        if (band && b == 0 && i + 1 == letters.size()) {
            const HBand& bd = std::get<HBand>(w);
            if ((int)i == bd.scalar_slot) lab += " ,\\; " + bd.scalar.str();
            out += "  \\draw[->] (n" + std::to_string(from) + ") to[bend right=25] node {$" +
                   lab + "$} (n" + std::to_string(to) + ");\n";
        } else {
            const HBand* bd = band ? &std::get<HBand>(w) : nullptr;
            if (bd && (int)i == bd->scalar_slot) lab += " ,\\; " + bd->scalar.str();
            out += "  \\draw[->] (n" + std::to_string(from) + ") -- node {$" + lab +
                   "$} (n" + std::to_string(to) + ");\n";
        }
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace gentle
