#include "gentle/walks.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace gentle {

int left_vertex(const GentleAlgebra&, const HLetter& l) {
    return l.dir == Dir::direct ? l.path.tgt : l.path.src;
}

int right_vertex(const GentleAlgebra&, const HLetter& l) {
    return l.dir == Dir::direct ? l.path.src : l.path.tgt;
}

HLetter flip(const HLetter& l) {
    return HLetter{l.path, l.dir == Dir::direct ? Dir::inverse : Dir::direct};
}

std::string letter_str(const GentleAlgebra& A, const HLetter& l) {
    return (l.dir == Dir::inverse ? "~" : "") + A.path_str(l.path);
}

std::string word_str(const GentleAlgebra& A, const std::vector<HLetter>& letters) {
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty()) out += " ";
        out += letter_str(A, l);
    }
    return out;
}

std::string word_str(const GentleAlgebra& A, const HString& s) {
    if (s.trivial())
        return s.trivial_vertex >= 0 ? "!" + A.vertex_name(s.trivial_vertex) : "";
    std::string out = word_str(A, s.letters);
    if (s.anchor != 0) out += " ^" + std::to_string(s.anchor);
    return out;
}

std::string word_str(const GentleAlgebra& A, const HBand& b) {
    return word_str(A, b.letters) + " @ " + b.scalar.str();
}

std::vector<int> node_vertices(const GentleAlgebra& A, const std::vector<HLetter>& letters) {
    std::vector<int> nodes;
    nodes.reserve(letters.size() + 1);
    for (size_t i = 0; i < letters.size(); ++i) {
        int lv = left_vertex(A, letters[i]);
        if (i == 0) nodes.push_back(lv);
        else if (nodes.back() != lv)
            throw IllegalJunction("letters " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " disagree on their shared vertex");
        nodes.push_back(right_vertex(A, letters[i]));
    }
    return nodes;
}

namespace {

void check_junction(const GentleAlgebra& A, const HLetter& l, const HLetter& r, size_t idx) {
    if (right_vertex(A, l) != left_vertex(A, r))
        throw IllegalJunction("letters " + std::to_string(idx) + " and " +
                              std::to_string(idx + 1) + " disagree on their shared vertex");
    const auto& lp = l.path.arrows;
    const auto& rp = r.path.arrows;
    if (l.dir == Dir::direct && r.dir == Dir::direct) {
        if (!A.is_relation(lp.back(), rp.front()))
            throw IllegalJunction("direct letters at position " + std::to_string(idx) +
                                  " compose without a relation");
    } else if (l.dir == Dir::inverse && r.dir == Dir::inverse) {
        if (!A.is_relation(rp.back(), lp.front()))
            throw IllegalJunction("inverse letters at position " + std::to_string(idx) +
                                  " compose without a relation");
    } else if (l.dir == Dir::direct && r.dir == Dir::inverse) {
        if (lp.back() == rp.back())
            throw IllegalJunction("peak at position " + std::to_string(idx) +
                                  " repeats arrow " + A.arrows[lp.back()].name);
    } else {
        if (lp.front() == rp.front())
            throw IllegalJunction("valley at position " + std::to_string(idx) +
                                  " repeats arrow " + A.arrows[lp.front()].name);
    }
}

}  // namespace

void check_word(const GentleAlgebra& A, const std::vector<HLetter>& letters, bool cyclic) {
    for (const auto& l : letters)
        if (l.path.trivial()) throw IllegalJunction("trivial path used as homotopy letter");
    if (letters.empty()) return;
    node_vertices(A, letters);
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        check_junction(A, letters[i], letters[i + 1], i);
    if (cyclic && !letters.empty())
        check_junction(A, letters.back(), letters.front(), letters.size() - 1);
}

std::vector<int> degree_profile(const GentleAlgebra& A, const HString& s) {
    std::vector<int> out{s.anchor};
    for (const auto& l : s.letters) out.push_back(out.back() + degree_step(l));
    (void)A;
    return out;
}

std::vector<int> degree_profile(const GentleAlgebra& A, const HBand& b) {
    int off = band_anchor_offset(A, b);
    std::vector<int> out{off};
    for (const auto& l : b.letters) out.push_back(out.back() + degree_step(l));
    return out;
}

/* ---------------------------------------------------------------- */
/* parsing                                                           */
/* ---------------------------------------------------------------- */

Word parse_word(const std::string& text, const GentleAlgebra& A, WordKind kind) {
    std::string body = text;
    // optional CLI-style prefix
    for (const char* prefix : {"band:", "string:"}) {
        if (body.rfind(prefix, 0) == 0) {
            if (std::string(prefix) == "band:") {
                if (kind == WordKind::string)
                    throw ParseError("word tagged 'band:' parsed as a string");
                kind = WordKind::band;
            } else {
                if (kind == WordKind::band)
                    throw ParseError("word tagged 'string:' parsed as a band");
                kind = WordKind::string;
            }
            body = body.substr(std::string(prefix).size());
        }
    }

    std::string scalar_text;
    auto at = body.find('@');
    if (at != std::string::npos) {
        scalar_text = body.substr(at + 1);
        body = body.substr(0, at);
        if (kind == WordKind::string)
            throw ParseError("scalar suffix '@' is only valid on bands");
        kind = WordKind::band;
    }

    std::vector<std::string> tokens;
    std::string cur;
    for (char c : body) {
        if (isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);

    int anchor = 0, trivial_vertex = -1;
    std::vector<HLetter> letters;
    for (const auto& tok : tokens) {
        if (tok[0] == '^') {
            anchor = (int)parse_rational(tok.substr(1)).num;
            continue;
        }
        if (tok[0] == '!') {
            trivial_vertex = A.vertex_id(tok.substr(1));
            if (trivial_vertex < 0)
                throw UnknownArrow("unknown vertex in trivial-string token '" + tok + "'");
            continue;
        }
        HLetter l;
        l.dir = tok[0] == '~' ? Dir::inverse : Dir::direct;
        std::string ptext = l.dir == Dir::inverse ? tok.substr(1) : tok;
        try {
            l.path = parse_path(A, ptext);
        } catch (const IllegalJunction& e) {
            throw IllegalJunction("letter " + std::to_string(letters.size()) + ": " + e.what());
        }
        if (l.path.trivial())
            throw IllegalJunction("letter " + std::to_string(letters.size()) + " is trivial");
        letters.push_back(l);
    }

    if (kind == WordKind::band) {
        if (letters.empty()) throw NotABand("a band needs at least two letters");
        CycloScalar scalar = scalar_text.empty() ? CycloScalar(1) : parse_scalar(scalar_text);
        return make_band(A, std::move(letters), scalar);
    }
    if (!letters.empty() && trivial_vertex >= 0)
        throw ParseError("'!vertex' is only valid for the trivial string");
    return make_string(A, std::move(letters), anchor, trivial_vertex);
}

HString make_string(const GentleAlgebra& A, std::vector<HLetter> letters, int anchor,
                    int trivial_vertex) {
    check_word(A, letters, /*cyclic=*/false);
    HString s;
    s.letters = std::move(letters);
    s.anchor = anchor;
    s.trivial_vertex = s.letters.empty() ? trivial_vertex : -1;
    return s;
}

HBand make_band(const GentleAlgebra& A, std::vector<HLetter> letters, const CycloScalar& scalar,
                int scalar_slot) {
    if (letters.size() < 2 || letters.size() % 2 != 0)
        throw NotABand("band length must be even and at least 2, got " +
                       std::to_string(letters.size()));
    int direct = 0;
    for (const auto& l : letters) direct += l.dir == Dir::direct ? 1 : 0;
    if (2 * direct != (int)letters.size())
        throw NotABand("band needs equally many direct and inverse letters");
    try {
        check_word(A, letters, /*cyclic=*/true);
    } catch (const IllegalJunction& e) {
        // the wrap failure is what distinguishes an open word from a band
        check_word(A, letters, /*cyclic=*/false);
        throw NotABand(std::string("cyclic closure fails: ") + e.what());
    }
    if (scalar.is_zero()) throw NotABand("band scalar must be nonzero");
    HBand b;
    b.letters = std::move(letters);
    b.scalar = scalar;
    if (scalar_slot < 0) {
        for (size_t i = 0; i < b.letters.size(); ++i)
            if (b.letters[i].dir == Dir::direct) { scalar_slot = (int)i; break; }
    }
    if (b.letters[scalar_slot].dir != Dir::direct)
        throw NotABand("scalar slot must be a direct letter");
    b.scalar_slot = scalar_slot;
    return b;
}

/* ---------------------------------------------------------------- */
/* cyclic-word utilities                                             */
/* ---------------------------------------------------------------- */

std::vector<HLetter> rotate_letters(const std::vector<HLetter>& letters, int r) {
    int n = (int)letters.size();
    if (n == 0) return letters;
    r = ((r % n) + n) % n;
    std::vector<HLetter> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(letters[(r + i) % n]);
    return out;
}

std::vector<HLetter> invert_letters(const std::vector<HLetter>& letters) {
    std::vector<HLetter> out;
    out.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(flip(*it));
    return out;
}

std::pair<std::vector<HLetter>, int> primitive_root(const std::vector<HLetter>& w) {
    int n = (int)w.size();
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = w[i] == w[(i + p) % n];
        if (ok) return {std::vector<HLetter>(w.begin(), w.begin() + p), n / p};
    }
    return {w, 1};  // unreachable: p == n always matches
}

namespace {

struct BandCandidate {
    std::vector<std::string> rendered;
    int rotation = 0;
    bool inverted = false;
};

std::vector<BandCandidate> canonical_candidates(const GentleAlgebra& A,
                                                const std::vector<HLetter>& letters) {
    int n = (int)letters.size();
    auto inv = invert_letters(letters);
    std::vector<BandCandidate> cands;
    auto render = [&](const std::vector<HLetter>& ls) {
        std::vector<std::string> out;
        out.reserve(ls.size());
        for (const auto& l : ls) out.push_back(letter_str(A, l));
        return out;
    };
    for (int r = 0; r < n; ++r) {
        cands.push_back({render(rotate_letters(letters, r)), r, false});
        cands.push_back({render(rotate_letters(inv, r)), r, true});
    }
    std::vector<std::string> best = cands[0].rendered;
    for (const auto& c : cands) best = std::min(best, c.rendered);
    std::vector<BandCandidate> winners;
    for (auto& c : cands)
        if (c.rendered == best) winners.push_back(std::move(c));
    return winners;
}

}  // namespace

HBand canonical_band(const GentleAlgebra& A, const HBand& b) {
    auto winners = canonical_candidates(A, b.letters);
    // all winners render identically; scalar differs only with orientation
    bool any_orig = false, any_inv = false;
    for (const auto& w : winners) (w.inverted ? any_inv : any_orig) = true;
    CycloScalar lam = b.scalar, lam_inv = b.scalar.inv();
    CycloScalar scal;
    bool inverted;
    if (any_orig && any_inv)  // palindromic word: pick the smaller rendering
        inverted = lam_inv.str() < lam.str();
    else
        inverted = any_inv;
    scal = inverted ? lam_inv : lam;
    const BandCandidate* pick = nullptr;
    for (const auto& w : winners)
        if (w.inverted == inverted && !pick) pick = &w;
    std::vector<HLetter> base = inverted ? invert_letters(b.letters) : b.letters;
    return make_band(A, rotate_letters(base, pick->rotation), scal);
}

int band_anchor_offset(const GentleAlgebra& A, const HBand& b) {
    int n = (int)b.letters.size();
    std::vector<int> raw{0};
    for (const auto& l : b.letters) raw.push_back(raw.back() + degree_step(l));
    auto winners = canonical_candidates(A, b.letters);
    // node (in b's own indexing) where each winning canonical reading starts
    int best = INT_MAX;
    for (const auto& w : winners) {
        int node = w.inverted ? (n - w.rotation) % n : w.rotation;
        best = std::min(best, raw[node]);
    }
    return -best;
}

/* ---------------------------------------------------------------- */
/* word views and overlaps                                           */
/* ---------------------------------------------------------------- */

bool word_is_band(const Word& w) { return std::holds_alternative<HBand>(w); }

std::vector<HLetter> word_letters_of(const Word& w) {
    if (word_is_band(w)) return std::get<HBand>(w).letters;
    return std::get<HString>(w).letters;
}

int word_period(const Word& w) { return (int)word_letters_of(w).size(); }

const HLetter& word_letter(const Word& w, int i) {
    if (word_is_band(w)) {
        const auto& ls = std::get<HBand>(w).letters;
        int n = (int)ls.size();
        return ls[((i % n) + n) % n];
    }
    return std::get<HString>(w).letters.at(i);
}

int node_degree(const GentleAlgebra& A, const Word& w, int i) {
    if (word_is_band(w)) {
        const HBand& b = std::get<HBand>(w);
        int n = b.size();
        int off = band_anchor_offset(A, b);
        int deg = off;
        int j = ((i % n) + n) % n;
        for (int t = 0; t < j; ++t) deg += degree_step(b.letters[t]);
        return deg;  // periodic: a full period nets zero
    }
    const HString& s = std::get<HString>(w);
    int deg = s.anchor;
    for (int t = 0; t < i; ++t) deg += degree_step(s.letters[t]);
    return deg;
}

int node_vertex(const GentleAlgebra& A, const Word& w, int i) {
    if (word_is_band(w)) {
        const HBand& b = std::get<HBand>(w);
        int n = b.size();
        int j = ((i % n) + n) % n;
        return left_vertex(A, b.letters[j]);
    }
    const HString& s = std::get<HString>(w);
    if (s.trivial()) {
        if (i != 0) throw Internal("node index out of range on trivial string");
        return s.trivial_vertex;
    }
    if (i < (int)s.letters.size()) return left_vertex(A, s.letters[i]);
    return right_vertex(A, s.letters.back());
}

namespace {

/* Uniform access to a word or its inverse: letters, node vertices and node
 * degrees, indexed in the view's own coordinates. */
struct WordView {
    const GentleAlgebra& A;
    const Word& w;
    bool inverted;
    int n;          // letters per period
    bool band;
    int node_count; // strings: n + 1 nodes

    WordView(const GentleAlgebra& a, const Word& word, bool inv)
        : A(a), w(word), inverted(inv), n(word_period(word)),
          band(word_is_band(word)), node_count(n + 1) {}

    bool letter_ok(int i) const { return band || (i >= 0 && i < n); }
    bool node_ok(int i) const { return band || (i >= 0 && i <= n); }

    HLetter letter(int i) const {
        if (!inverted) return word_letter(w, i);
        return flip(word_letter(w, n - 1 - i));
    }
    int orig_node(int i) const { return inverted ? n - i : i; }
    int degree(int i) const { return node_degree(A, w, orig_node(i)); }
    int vertex(int i) const { return node_vertex(A, w, orig_node(i)); }
};

bool letters_eq(const WordView& a, int i, const WordView& b, int j) {
    if (!a.letter_ok(i) || !b.letter_ok(j)) return false;
    return a.letter(i) == b.letter(j);
}

void collect_band_band(const WordView& S, const WordView& T, std::vector<Overlap>& out) {
    int m = S.n, n = T.n;
    int L = std::lcm(m, n);
    int cutoff = L + std::max(m, n);
    for (int r = 0; r < L; ++r) {
        auto match = [&](int i) { return letters_eq(S, i, T, i - r); };
        bool all = true;
        for (int i = 0; i < L && all; ++i) all = match(i);
        if (all) {
            Overlap o;
            o.src_start = 0;
            o.tgt_start = ((-r) % n + n) % n;
            o.len = cutoff;
            o.tgt_inverted = T.inverted;
            o.degree_offset = S.degree(0) - T.degree(-r);
            o.infinite = true;
            out.push_back(o);
            continue;
        }
        for (int i = 0; i < L; ++i) {
            if (!match(i) || match(i - 1)) continue;  // not a left end
            int len = 0;
            while (match(i + len)) ++len;
            Overlap o;
            o.src_start = i % m;
            o.tgt_start = (((i - r) % n) + n) % n;
            o.len = len;
            o.tgt_inverted = T.inverted;
            o.degree_offset = S.degree(i) - T.degree(i - r);
            out.push_back(o);
        }
        // single-node alignments maximal on both sides
        for (int i = 0; i < L; ++i) {
            if (match(i) || match(i - 1)) continue;
            if (S.vertex(i) != T.vertex(i - r)) continue;
            Overlap o;
            o.src_start = i % m;
            o.tgt_start = (((i - r) % n) + n) % n;
            o.len = 0;
            o.tgt_inverted = T.inverted;
            o.degree_offset = S.degree(i) - T.degree(i - r);
            out.push_back(o);
        }
    }
}

void collect_general(const WordView& S, const WordView& T, std::vector<Overlap>& out) {
    // at least one side is a string; every common subword is finite
    int sm = S.band ? S.n : S.n;            // letters per period
    int s_nodes = S.band ? S.n : S.n + 1;   // distinct node anchors to try
    int t_nodes = T.band ? T.n : T.n + 1;
    (void)sm;
    for (int a = 0; a < s_nodes; ++a) {
        for (int b = 0; b < t_nodes; ++b) {
            bool here = letters_eq(S, a, T, b);
            bool left = letters_eq(S, a - 1, T, b - 1);
            if (here && !left) {
                int len = 0;
                while (letters_eq(S, a + len, T, b + len)) ++len;
                Overlap o;
                o.src_start = a;
                o.tgt_start = b;
                o.len = len;
                o.tgt_inverted = T.inverted;
                o.degree_offset = S.degree(a) - T.degree(b);
                out.push_back(o);
            } else if (!here && !left) {
                if (!S.node_ok(a) || !T.node_ok(b)) continue;
                if (S.vertex(a) != T.vertex(b)) continue;
                Overlap o;
                o.src_start = a;
                o.tgt_start = b;
                o.len = 0;
                o.tgt_inverted = T.inverted;
                o.degree_offset = S.degree(a) - T.degree(b);
                out.push_back(o);
            }
        }
    }
}

}  // namespace

std::vector<Overlap> find_overlaps(const GentleAlgebra& A, const Word& sigma, const Word& tau,
                                   OverlapKind kind) {
    std::vector<Overlap> out;
    bool sb = word_is_band(sigma), tb = word_is_band(tau);
    WordView S(A, sigma, false);
    for (bool inv : {false, true}) {
        WordView T(A, tau, inv);
        if (sb && tb) collect_band_band(S, T, out);
        else collect_general(S, T, out);
    }
    // drop inverted duplicates of single-node overlaps (they alias the
    // non-inverted ones node-for-node)
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Overlap& o) { return o.len == 0 && o.tgt_inverted; }),
              out.end());
    if (kind != OverlapKind::any) {
        // which of graph/quasi lives on an overlap is decided by the endpoint
        // conditions (realization either succeeds or rejects); here we only
        // drop single-node alignments, which carry maps just between strings
        bool both_strings = !sb && !tb;
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [both_strings](const Overlap& o) {
                                     return o.len == 0 && !both_strings;
                                 }),
                  out.end());
    }
    std::sort(out.begin(), out.end(), [](const Overlap& a, const Overlap& b) {
        return std::tie(a.tgt_inverted, a.src_start, a.tgt_start, a.len) <
               std::tie(b.tgt_inverted, b.src_start, b.tgt_start, b.len);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_infinite_overlap(const GentleAlgebra& A, const Word& sigma, const Word& tau,
                         const Overlap& rho) {
    if (!word_is_band(sigma) || !word_is_band(tau)) return false;
    if (!rho.infinite) return false;
    auto cs = canonical_band(A, std::get<HBand>(sigma));
    auto ct = canonical_band(A, std::get<HBand>(tau));
    return cs.letters == ct.letters;
}

std::vector<HLetter> overlap_letters(const GentleAlgebra& A, const Word& sigma,
                                     const Overlap& rho) {
    (void)A;
    std::vector<HLetter> out;
    out.reserve(rho.len);
    for (int t = 0; t < rho.len; ++t) out.push_back(word_letter(sigma, rho.src_start + t));
    return out;
}

}  // namespace gentle
