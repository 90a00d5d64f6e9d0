#include "gentle/cones.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gentle/errors.hpp"
#include "gentle/stepseq.hpp"

namespace gentle {

namespace {

/* ---------------------------------------------------------------- */
/* word views                                                        */
/* ---------------------------------------------------------------- */

/* Uniform access to a word or its inverse, in the view's own coordinates
 * (matching how overlaps index an inverted target). */
struct View {
    const GentleAlgebra* A = nullptr;
    const Word* w = nullptr;
    bool inverted = false;
    int n = 0;
    bool band = false;

    View(const GentleAlgebra& a, const Word& word, bool inv)
        : A(&a), w(&word), inverted(inv), n(word_period(word)), band(word_is_band(word)) {}

    HLetter letter(int i) const {
        if (band) i = ((i % n) + n) % n;
        return inverted ? flip(word_letter(*w, n - 1 - i)) : word_letter(*w, i);
    }
    int degree(int i) const {  // node degree; bands are periodic
        return node_degree(*A, *w, inverted ? n - i : i);
    }
    int vertex(int i) const { return node_vertex(*A, *w, inverted ? n - i : i); }
    std::vector<HLetter> range(int from, int count) const {
        std::vector<HLetter> out;
        out.reserve((size_t)std::max(count, 0));
        for (int t = 0; t < count; ++t) out.push_back(letter(from + t));
        return out;
    }
};

CycloScalar band_scalar(const Word& w, bool inverted = false) {
    const CycloScalar& s = std::get<HBand>(w).scalar;
    return inverted ? s.inv() : s;
}

/* ---------------------------------------------------------------- */
/* scalar expressions                                                */
/* ---------------------------------------------------------------- */

ScalarExpr expr_inv(const ScalarExpr& s) {
    if (std::holds_alternative<CycloScalar>(s)) return std::get<CycloScalar>(s).inv();
    SymbolicRoot r = std::get<SymbolicRoot>(s);
    r.radicand = r.radicand.inv();
    r.omega_exp = ((-r.omega_exp) % r.k + r.k) % r.k;
    return r;
}

ScalarExpr expr_times_omega(const ScalarExpr& s, int k, int i) {
    if (std::holds_alternative<CycloScalar>(s))
        return std::get<CycloScalar>(s) * primitive_unity_root(k).pow(i);
    SymbolicRoot r = std::get<SymbolicRoot>(s);
    r.omega_exp = ((r.omega_exp + i) % r.k + r.k) % r.k;
    return r;
}

/* ---------------------------------------------------------------- */
/* canonical band summands                                           */
/* ---------------------------------------------------------------- */

/* The rotation/orientation canonical_band would choose, reproduced here so
 * symbolic scalars (which canonical_band cannot carry) follow the same
 * convention: lexicographically least rendered letters; on an orientation
 * tie, whichever direction renders the smaller scalar. */
struct CanonPick {
    std::vector<HLetter> letters;
    int rotation = 0;
    bool inverted = false;
};

CanonPick canonical_pick(const GentleAlgebra& A, const std::vector<HLetter>& ls,
                         const ScalarExpr& scalar) {
    int n = (int)ls.size();
    auto inv = invert_letters(ls);
    auto render = [&](const std::vector<HLetter>& v) {
        std::vector<std::string> r;
        r.reserve(v.size());
        for (const auto& l : v) r.push_back(letter_str(A, l));
        return r;
    };
    std::vector<std::string> best;
    std::vector<std::pair<int, bool>> winners;
    for (int r = 0; r < n; ++r)
        for (int o = 0; o < 2; ++o) {
            auto cand = render(rotate_letters(o ? inv : ls, r));
            if (winners.empty() || cand < best) {
                best = cand;
                winners.clear();
            }
            if (cand == best) winners.emplace_back(r, o != 0);
        }
    bool any_orig = false, any_inv = false;
    for (const auto& wtuple : winners) (wtuple.second ? any_inv : any_orig) = true;
    bool use_inv;
    if (any_orig && any_inv)
        use_inv = scalar_expr_str(expr_inv(scalar)) < scalar_expr_str(scalar);
    else
        use_inv = any_inv;
    CanonPick pick;
    for (const auto& [rot, o] : winners)
        if (o == use_inv) {
            pick.rotation = rot;
            pick.inverted = use_inv;
            break;
        }
    pick.letters = rotate_letters(use_inv ? inv : ls, pick.rotation);
    return pick;
}

/* Canonical band summand from a primitive cyclic word located in a
 * constructed complex: node0_deg is the constructed degree of the node to
 * the left of theta[0]; the stored shift realigns the canonical complex. */
BandSummand make_band_summand(const GentleAlgebra& A, const std::vector<HLetter>& theta,
                              const ScalarExpr& scalar, int dim, int node0_deg) {
    auto pick = canonical_pick(A, theta, scalar);
    ScalarExpr s = pick.inverted ? expr_inv(scalar) : scalar;
    int p = (int)theta.size();
    int a0 = pick.inverted ? (p - pick.rotation) % p : pick.rotation;
    int g0 = node0_deg;
    for (int t = 0; t < a0; ++t) g0 += degree_step(theta[t]);
    CycloScalar placed =
        std::holds_alternative<CycloScalar>(s) ? std::get<CycloScalar>(s) : CycloScalar(1);
    HBand hb = make_band(A, pick.letters, placed);  // validates; slots first direct letter
    int d0 = node_degree(A, Word(hb), 0);
    BandSummand out;
    out.letters = hb.letters;
    out.scalar_slot = hb.scalar_slot;
    out.scalar = s;
    out.dim = dim;
    out.shift = d0 - g0;
    return out;
}

void sort_summands(const GentleAlgebra& A, ConeDecomposition& d) {
    std::sort(d.strings.begin(), d.strings.end(),
              [&](const StringSummand& a, const StringSummand& b) {
                  return summand_str(A, a) < summand_str(A, b);
              });
    std::sort(d.bands.begin(), d.bands.end(), [&](const BandSummand& a, const BandSummand& b) {
        return summand_str(A, a) < summand_str(A, b);
    });
}

/* Split an assembled cycle theta^k at total scalar `total` into its k
 * canonical band summands. */
ConeDecomposition band_cone_from_cycle(const GentleAlgebra& A, const Assembler::Cycle& cyc,
                                       const CycloScalar& total, std::string rule) {
    auto [theta, k] = primitive_root(cyc.letters);
    ScalarExpr base = kth_root_expr(total, k);
    ConeDecomposition out;
    out.rule = std::move(rule);
    for (int i = 1; i <= k; ++i)
        out.bands.push_back(
            make_band_summand(A, theta, expr_times_omega(base, k, i), 1, cyc.node0_deg));
    sort_summands(A, out);
    return out;
}

/* Feed a run into an assembler, asserting the left endpoint. */
void feed(Assembler& as, const View& v, int from, int count, int left_deg) {
    as.node(v.vertex(from), left_deg);
    if (count > 0) as.letters(v.range(from, count), left_deg);
}

bool is_band_word(const Word& w) { return word_is_band(w); }

ConeDecomposition oracle_only(std::string rule) {
    ConeDecomposition d;
    d.rule = std::move(rule);
    d.oracle_only = true;
    return d;
}

}  // namespace

/* ---------------------------------------------------------------- */
/* rendering                                                         */
/* ---------------------------------------------------------------- */

std::string summand_str(const GentleAlgebra& A, const StringSummand& s) {
    return "P(" + word_str(A, s.word) + ")";
}

std::string summand_str(const GentleAlgebra& A, const BandSummand& b) {
    std::string out = "B(" + word_str(A, b.letters) + " @ " + scalar_expr_str(b.scalar);
    if (b.dim != 1) out += ", dim " + std::to_string(b.dim);
    out += ")";
    if (b.shift != 0) out += "[" + std::to_string(b.shift) + "]";
    return out;
}

std::string decomposition_str(const GentleAlgebra& A, const ConeDecomposition& d) {
    if (d.oracle_only) return "(oracle-only: " + d.rule + ")";
    std::string out;
    for (const auto& s : d.strings) {
        if (!out.empty()) out += " (+) ";
        out += summand_str(A, s);
    }
    for (const auto& b : d.bands) {
        if (!out.empty()) out += " (+) ";
        out += summand_str(A, b);
    }
    return out.empty() ? "0" : out;
}

/* ---------------------------------------------------------------- */
/* powers of bands                                                   */
/* ---------------------------------------------------------------- */

ConeDecomposition split_band_power(const GentleAlgebra& A, const HBand& b) {
    Assembler::Cycle cyc;
    cyc.letters = b.letters;
    cyc.node0_deg = node_degree(A, Word(b), 0);
    return band_cone_from_cycle(A, cyc, b.scalar, "band-power");
}

/* ---------------------------------------------------------------- */
/* graph maps                                                        */
/* ---------------------------------------------------------------- */

namespace {

/* One letter of a formal string word together with the frame data of its two
 * endpoint nodes.  Keeping endpoints explicit lets the surgery drop letters
 * from either end of the word (the reduction eats one extra node at every
 * end of the overlap that touches a string boundary) and still recover the
 * surviving node when the whole word collapses. */
struct Tok {
    HLetter l;
    int left_deg, left_vertex;
    int right_deg, right_vertex;
};

void push_view_range(std::vector<Tok>& toks, const View& v, int from, int count,
                     const std::function<int(int)>& deg) {
    for (int i = from; i < from + count; ++i)
        toks.push_back({v.letter(i), deg(i), v.vertex(i), deg(i + 1), v.vertex(i + 1)});
}

/* Inverted arc of a cyclic view: letters flip(v[from+count-1]), ...,
 * flip(v[from]); token m runs from node from+count-m down to from+count-m-1. */
void push_inverted_arc(std::vector<Tok>& toks, const View& v, int from, int count,
                       const std::function<int(int)>& deg) {
    for (int m = 0; m < count; ++m) {
        int hi = from + count - m;
        toks.push_back({flip(v.letter(hi - 1)), deg(hi), v.vertex(hi),
                        deg(hi - 1), v.vertex(hi - 1)});
    }
}

ConeDecomposition finish_tokens(const GentleAlgebra& A, std::vector<Tok> toks,
                                bool drop_front, bool drop_back, std::string rule) {
    ConeDecomposition out;
    out.rule = std::move(rule);
    int triv_vertex = -1, triv_deg = 0;
    if (drop_front && !toks.empty()) {
        triv_vertex = toks.front().right_vertex;
        triv_deg = toks.front().right_deg;
        toks.erase(toks.begin());
    }
    if (drop_back && !toks.empty()) {
        triv_vertex = toks.back().left_vertex;
        triv_deg = toks.back().left_deg;
        toks.pop_back();
    }
    if (toks.empty()) {
        if (triv_vertex < 0) throw Internal("graph surgery emptied the word with no surviving node");
        HString s;
        s.anchor = triv_deg;
        s.trivial_vertex = triv_vertex;
        out.strings.push_back({std::move(s)});
        return out;
    }
    Assembler as(A, /*cyclic=*/false);
    as.node(toks.front().left_vertex, toks.front().left_deg);
    for (const Tok& t : toks) as.letter(t.l, t.left_deg);
    as.node(toks.back().right_vertex, toks.back().right_deg);
    out.strings.push_back({as.finish_string()});
    return out;
}

}  // namespace

ConeDecomposition cone_graph_band_to_string(const GentleAlgebra& A, const GraphMapDescriptor& d) {
    if (!is_band_word(d.source) || is_band_word(d.target))
        throw CaseNotApplicable("expected a band-to-string graph map");
    const Overlap& ov = d.overlap;
    if (ov.len < 1) throw CaseNotApplicable("graph surgery needs a letter overlap");
    View sv(A, d.source, false);
    View tv(A, d.target, ov.tgt_inverted);
    int D = ov.degree_offset;  // target realized as shift(C_target, -D)
    std::function<int(int)> sdeg = [&](int i) { return sv.degree(i) - 1; };
    std::function<int(int)> tdeg = [&](int i) { return tv.degree(i) + D; };
    bool at_left_end = ov.tgt_start == 0;
    bool at_right_end = ov.tgt_start + ov.len == tv.n;

    std::vector<Tok> toks;
    std::string rule;
    if (ov.len < sv.n) {
        // the unmatched arc of the band period, inverted, replaces the overlap
        rule = "graph band->string, arc splice";
        push_view_range(toks, tv, 0, ov.tgt_start, tdeg);
        push_inverted_arc(toks, sv, ov.src_start + ov.len, sv.n - ov.len, sdeg);
        push_view_range(toks, tv, ov.tgt_start + ov.len, tv.n - ov.tgt_start - ov.len, tdeg);
        return finish_tokens(A, std::move(toks), at_left_end, at_right_end, std::move(rule));
    }
    // overlap covers >= 1 full periods: remove one copy from the target
    rule = "graph band->string, period removal";
    push_view_range(toks, tv, 0, ov.tgt_start, tdeg);
    push_view_range(toks, tv, ov.tgt_start, ov.len - sv.n, tdeg);
    push_view_range(toks, tv, ov.tgt_start + ov.len, tv.n - ov.tgt_start - ov.len, tdeg);
    if (toks.empty()) {
        ConeDecomposition out;
        out.rule = std::move(rule);
        HString s;
        s.anchor = tdeg(ov.tgt_start);
        s.trivial_vertex = tv.vertex(ov.tgt_start);
        out.strings.push_back({std::move(s)});
        return out;
    }
    return finish_tokens(A, std::move(toks), false, false, std::move(rule));
}

ConeDecomposition cone_graph_string_to_band(const GentleAlgebra& A, const GraphMapDescriptor& d) {
    if (is_band_word(d.source) || !is_band_word(d.target))
        throw CaseNotApplicable("expected a string-to-band graph map");
    const Overlap& ov = d.overlap;
    if (ov.len < 1) throw CaseNotApplicable("graph surgery needs a letter overlap");
    View sv(A, d.source, false);
    View tv(A, d.target, ov.tgt_inverted);
    int D = ov.degree_offset;
    std::function<int(int)> sdeg = [&](int i) { return sv.degree(i) - 1; };
    std::function<int(int)> tdeg = [&](int i) { return tv.degree(i) + D; };
    bool at_left_end = ov.src_start == 0;
    bool at_right_end = ov.src_start + ov.len == sv.n;

    std::vector<Tok> toks;
    std::string rule;
    if (ov.len < tv.n) {
        rule = "graph string->band, arc splice";
        push_view_range(toks, sv, 0, ov.src_start, sdeg);
        push_inverted_arc(toks, tv, ov.tgt_start + ov.len, tv.n - ov.len, tdeg);
        push_view_range(toks, sv, ov.src_start + ov.len, sv.n - ov.src_start - ov.len, sdeg);
        return finish_tokens(A, std::move(toks), at_left_end, at_right_end, std::move(rule));
    }
    rule = "graph string->band, period removal";
    push_view_range(toks, sv, 0, ov.src_start, sdeg);
    push_view_range(toks, sv, ov.src_start, ov.len - tv.n, sdeg);
    push_view_range(toks, sv, ov.src_start + ov.len, sv.n - ov.src_start - ov.len, sdeg);
    if (toks.empty()) {
        ConeDecomposition out;
        out.rule = std::move(rule);
        HString s;
        s.anchor = sdeg(ov.src_start);
        s.trivial_vertex = sv.vertex(ov.src_start);
        out.strings.push_back({std::move(s)});
        return out;
    }
    return finish_tokens(A, std::move(toks), false, false, std::move(rule));
}

ConeDecomposition cone_graph_band_to_band(const GentleAlgebra& A, const GraphMapDescriptor& d) {
    if (!is_band_word(d.source) || !is_band_word(d.target))
        throw CaseNotApplicable("expected a band-to-band graph map");
    const Overlap& ov = d.overlap;
    CycloScalar lam = band_scalar(d.source);
    // The cone scalar always uses the parameter as stored on the target word;
    // only the isomorphism test below compares in the traversal orientation.
    CycloScalar mu = band_scalar(d.target);
    if (ov.infinite) {
        if (lam != band_scalar(d.target, ov.tgt_inverted))
            throw CaseNotApplicable("infinite overlap carries a graph map only at equal scalars");
        ConeDecomposition out;
        out.rule = "graph band->band, isomorphism";
        return out;
    }
    View sv(A, d.source, false);
    View tv(A, d.target, ov.tgt_inverted);
    int D = ov.degree_offset;
    Assembler as(A, /*cyclic=*/true);
    if (ov.len >= tv.n && sv.n > tv.n) {
        // source period = target period * window: cone is the window power
        as.letters(sv.range(ov.src_start + tv.n, sv.n - tv.n), sv.degree(ov.src_start + tv.n) - 1);
        return band_cone_from_cycle(A, as.finish_cycle(), -(lam * mu),
                                    "graph band->band, source window");
    }
    if (ov.len >= sv.n && tv.n > sv.n) {
        as.letters(tv.range(ov.tgt_start + sv.n, tv.n - sv.n), tv.degree(ov.tgt_start + sv.n) + D);
        return band_cone_from_cycle(A, as.finish_cycle(), -(lam * mu),
                                    "graph band->band, target window");
    }
    if (ov.len < sv.n && ov.len < tv.n) {
        // both unmatched arcs, target arc inverted; sign from overlap parity
        std::vector<HLetter> garc = invert_letters(tv.range(ov.tgt_start + ov.len, tv.n - ov.len));
        as.letters(garc, tv.degree(ov.tgt_start + tv.n) + D);
        as.letters(sv.range(ov.src_start + ov.len, sv.n - ov.len),
                   sv.degree(ov.src_start + ov.len) - 1);
        CycloScalar total = lam * mu;
        if (ov.len % 2 != 0) total = -total;
        return band_cone_from_cycle(A, as.finish_cycle(), total,
                                    "graph band->band, arc concatenation");
    }
    throw CaseNotApplicable("finite overlap shape matches no band-to-band case");
}

/* ---------------------------------------------------------------- */
/* quasi-graph maps                                                  */
/* ---------------------------------------------------------------- */

ConeDecomposition cone_quasi(const GentleAlgebra& A, const QuasiGraphMapDescriptor& d) {
    bool sb = is_band_word(d.source), tb = is_band_word(d.target);
    if (!sb && !tb) throw CaseNotApplicable("string-to-string quasi cones are oracle-only");
    const Overlap& ov = d.overlap;
    View sv(A, d.source, false);
    View tv(A, d.target, ov.tgt_inverted);
    int D = ov.degree_offset;  // target realized as shift(C_target, 1 - D)
    auto sdeg = [&](int i) { return sv.degree(i) - 1; };
    auto tdeg = [&](int i) { return tv.degree(i) + D - 1; };

    if (sb && tb && ov.infinite) {
        CycloScalar lam = band_scalar(d.source);
        CycloScalar mu = band_scalar(d.target, ov.tgt_inverted);
        if (lam != mu)
            throw CaseNotApplicable(
                "infinite overlap carries a quasi-graph map only at equal scalars");
        HBand cb = canonical_band(A, std::get<HBand>(d.source));
        BandSummand ar;
        ar.letters = cb.letters;
        ar.scalar_slot = cb.scalar_slot;
        ar.scalar = cb.scalar;
        ar.dim = 2;
        ar.shift = 1;
        ConeDecomposition out;
        out.rule = "quasi band->band, suspended dimension-2 band";
        out.bands.push_back(std::move(ar));
        return out;
    }
    if (sb && tb) {
        // concatenate the rotated periods, overlap start against overlap start
        Assembler as(A, /*cyclic=*/true);
        as.letters(tv.range(ov.tgt_start, tv.n), tdeg(ov.tgt_start));
        as.letters(sv.range(ov.src_start, sv.n), sdeg(ov.src_start));
        CycloScalar total = -(band_scalar(d.source) / band_scalar(d.target));
        return band_cone_from_cycle(A, as.finish_cycle(), total, "quasi band->band, concatenation");
    }
    // band-and-string: insert one extra copy of the band period at the overlap
    Assembler as(A, /*cyclic=*/false);
    ConeDecomposition out;
    if (sb) {
        out.rule = "quasi band->string, period insertion";
        feed(as, tv, 0, ov.tgt_start, tdeg(0));
        feed(as, sv, ov.src_start, sv.n, sdeg(ov.src_start));
        feed(as, tv, ov.tgt_start, tv.n - ov.tgt_start, tdeg(ov.tgt_start));
    } else {
        out.rule = "quasi string->band, period insertion";
        feed(as, sv, 0, ov.src_start, sdeg(0));
        feed(as, tv, ov.tgt_start, tv.n, tdeg(ov.tgt_start));
        feed(as, sv, ov.src_start, sv.n - ov.src_start, sdeg(ov.src_start));
    }
    out.strings.push_back({as.finish_string()});
    return out;
}

/* ---------------------------------------------------------------- */
/* single and double maps                                            */
/* ---------------------------------------------------------------- */

ConeDecomposition cone_single_band_band(const GentleAlgebra& A, const SingleMapDescriptor& d) {
    if (!is_band_word(d.source) || !is_band_word(d.target))
        throw CaseNotApplicable("single-map cones are implemented for two bands");
    if (d.component.trivial())
        throw CaseNotApplicable("single component must be a nontrivial path");
    View sv(A, d.source, false);
    View tv(A, d.target, false);
    int u = d.src_node, v = d.tgt_node;
    int s = tv.degree(v) - sv.degree(u);  // target realized as shift(C_target, s)
    Assembler as(A, /*cyclic=*/true);
    as.letter(HLetter{d.component, Dir::direct}, sv.degree(u) - 1);
    as.letters(invert_letters(tv.range(v, tv.n)), tv.degree(v) - s);
    as.letter(HLetter{d.component, Dir::inverse}, tv.degree(v) - s);
    as.letters(sv.range(u, sv.n), sv.degree(u) - 1);
    CycloScalar total = -(band_scalar(d.source) / band_scalar(d.target));
    return band_cone_from_cycle(A, as.finish_cycle(), total, "single band->band");
}

ConeDecomposition cone_double_band_band(const GentleAlgebra& A, const DoubleMapDescriptor& d) {
    if (!is_band_word(d.source) || !is_band_word(d.target))
        throw CaseNotApplicable("double-map cones are implemented for two bands");
    if (d.left.trivial() || d.right.trivial())
        throw CaseNotApplicable("double components must be nontrivial paths");
    View sv(A, d.source, false);
    View tv(A, d.target, false);
    int u = d.src_node, v = d.tgt_node;
    int s = tv.degree(v) - sv.degree(u);
    if (tv.degree(v + 1) - sv.degree(u + 1) != s)
        throw CaseNotApplicable("double-map feet are not degree-aligned");
    Assembler as(A, /*cyclic=*/true);
    as.letter(HLetter{d.left, Dir::direct}, sv.degree(u) - 1);
    // walk the target backwards from v around to v+1, skipping the letter
    // between the feet; then return along the right component and walk the
    // source forwards from u+1 around to u, skipping its middle letter.
    as.letters(invert_letters(tv.range(v + 1, tv.n - 1)), tv.degree(v) - s);
    as.letter(HLetter{d.right, Dir::inverse}, tv.degree(v + 1) - s);
    as.letters(sv.range(u + 1, sv.n - 1), sv.degree(u + 1) - 1);
    CycloScalar total = -(band_scalar(d.source) / band_scalar(d.target));
    return band_cone_from_cycle(A, as.finish_cycle(), total, "double band->band");
}

/* ---------------------------------------------------------------- */
/* dispatch and realization                                          */
/* ---------------------------------------------------------------- */

ConeDecomposition compute_cone(const GentleAlgebra& A, const MorphismDescriptor& d) {
    realize(A, d);  // validation only: rejects descriptors that are not chain maps
    const Word& src = descriptor_source(d);
    const Word& tgt = descriptor_target(d);
    bool sb = is_band_word(src), tb = is_band_word(tgt);
    switch (kind_of(d)) {
        case MorphKind::graph: {
            const auto& g = std::get<GraphMapDescriptor>(d);
            if (sb && tb) return cone_graph_band_to_band(A, g);
            if (sb) return cone_graph_band_to_string(A, g);
            if (tb) return cone_graph_string_to_band(A, g);
            return oracle_only("graph string->string");
        }
        case MorphKind::quasi: {
            if (!sb && !tb) return oracle_only("quasi string->string");
            return cone_quasi(A, std::get<QuasiGraphMapDescriptor>(d));
        }
        case MorphKind::single_map: {
            if (sb && tb) return cone_single_band_band(A, std::get<SingleMapDescriptor>(d));
            return oracle_only("single map with a string side");
        }
        case MorphKind::double_map: {
            if (sb && tb) return cone_double_band_band(A, std::get<DoubleMapDescriptor>(d));
            return oracle_only("double map with a string side");
        }
    }
    throw Internal("unhandled descriptor kind");
}

Complex realize_decomposition(const GentleAlgebra& A, const ConeDecomposition& dec) {
    if (dec.oracle_only) throw Internal("an oracle-only decomposition has no realization");
    Complex total;
    bool have = false;
    auto accumulate = [&](Complex c) {
        total = have ? direct_sum(total, c) : std::move(c);
        have = true;
    };
    for (const auto& s : dec.strings) accumulate(build_string_complex(A, s.word));
    for (const auto& b : dec.bands) {
        bool exact = std::holds_alternative<CycloScalar>(b.scalar);
        CycloScalar placed = exact ? std::get<CycloScalar>(b.scalar) : CycloScalar(1);
        HBand hb = make_band(A, b.letters, placed, b.scalar_slot);
        Complex c = build_band_complex(A, hb, b.dim);
        if (!exact) {
            // swap the symbolic scalar onto the Jordan diagonal of the
            // scalar letter (the placeholder built it with coefficient 1)
            int n = (int)b.letters.size();
            auto [ldeg, lfirst] = c.node_slot[b.scalar_slot];
            auto [rdeg, rfirst] = c.node_slot[(b.scalar_slot + 1) % n];
            (void)rdeg;
            int replaced = 0;
            for (auto& e : c.diff)
                for (int j = 0; j < b.dim; ++j)
                    if (e.deg == ldeg && e.col == lfirst + j && e.row == rfirst + j &&
                        e.path == b.letters[b.scalar_slot].path) {
                        e.coeff = b.scalar;
                        ++replaced;
                    }
            if (replaced != b.dim) throw Internal("symbolic scalar slot not found in band complex");
        }
        accumulate(shift(c, b.shift));
    }
    return total;
}

}  // namespace gentle
