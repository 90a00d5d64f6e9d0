#include "gentle/stepseq.hpp"

#include <algorithm>

namespace gentle {

Assembler::Assembler(const GentleAlgebra& A, bool cyclic) : A_(A), cyclic_(cyclic) {}

void Assembler::node(int vertex, int degree) {
    if (!have_end_) {
        first_vertex_ = vertex;
        first_deg_ = degree;
        cur_vertex_ = vertex;
        cur_deg_ = degree;
        have_end_ = true;
        return;
    }
    // vertices must chain up; degrees may jump across pieces taken from
    // different source complexes (they are reconciled by the anchor solve)
    if (vertex != cur_vertex_)
        throw Internal("assembly pieces are not continuous: expected vertex " +
                       A_.vertex_name(cur_vertex_) + ", got " + A_.vertex_name(vertex));
    cur_deg_ = degree;
}

void Assembler::letter(const HLetter& l, int left_deg) {
    node(left_vertex(A_, l), left_deg);
    int right_deg = left_deg + degree_step(l);
    const auto& arrows = l.path.arrows;
    size_t m = arrows.size();
    for (size_t i = 0; i < m; ++i) {
        Step s;
        s.inv = l.dir == Dir::inverse;
        // direct letters traverse their arrows in stored (function) order,
        // inverse letters in the opposite order
        s.arrow = s.inv ? arrows[m - 1 - i] : arrows[i];
        s.first_of_letter = i == 0;
        s.last_of_letter = i + 1 == m;
        s.left_deg = left_deg;
        s.right_deg = right_deg;
        steps_.push_back(s);
    }
    cur_vertex_ = right_vertex(A_, l);
    cur_deg_ = right_deg;
}

void Assembler::letters(const std::vector<HLetter>& ls, int left_deg) {
    int d = left_deg;
    for (const auto& l : ls) {
        letter(l, d);
        d += degree_step(l);
    }
}

void Assembler::reduce_linear() {
    std::vector<Step> out;
    out.reserve(steps_.size());
    for (const auto& s : steps_) {
        if (!out.empty() && out.back().arrow == s.arrow && out.back().inv != s.inv)
            out.pop_back();
        else
            out.push_back(s);
    }
    steps_ = std::move(out);
}

void Assembler::reduce_wrap() {
    while (steps_.size() >= 2 && steps_.back().arrow == steps_.front().arrow &&
           steps_.back().inv != steps_.front().inv) {
        steps_.pop_back();
        steps_.erase(steps_.begin());
    }
}

bool Assembler::boundary_between(const Step& s, const Step& t) const {
    if (s.inv != t.inv) return true;
    if (!s.inv) return A_.is_relation(s.arrow, t.arrow);
    return A_.is_relation(t.arrow, s.arrow);
}

HLetter Assembler::run_to_letter(size_t begin, size_t count) const {
    size_t K = steps_.size();
    std::vector<int> arrows(count);
    bool inv = steps_[begin % K].inv;
    for (size_t i = 0; i < count; ++i) {
        const Step& s = steps_[(begin + i) % K];
        if (s.inv != inv) throw Internal("mixed directions inside an assembled run");
        arrows[inv ? count - 1 - i : i] = s.arrow;
    }
    for (size_t i = 0; i + 1 < count; ++i)
        if (A_.arrows[arrows[i]].src != A_.arrows[arrows[i + 1]].tgt)
            throw Internal("assembled run is not a composable path");
    Path p;
    p.arrows = std::move(arrows);
    p.src = A_.arrows[p.arrows.back()].src;
    p.tgt = A_.arrows[p.arrows.front()].tgt;
    return HLetter{p, inv ? Dir::inverse : Dir::direct};
}

HString Assembler::finish_string() {
    if (cyclic_) throw Internal("finish_string on a cyclic assembly");
    if (!have_end_) throw Internal("empty assembly");
    reduce_linear();
    if (steps_.empty()) {
        HString s;
        s.trivial_vertex = first_vertex_;
        s.anchor = first_deg_;
        return s;
    }

    // letter boundaries (positions between steps; 0 and K are always ends)
    size_t K = steps_.size();
    std::vector<size_t> bounds{0};
    for (size_t i = 0; i + 1 < K; ++i)
        if (boundary_between(steps_[i], steps_[i + 1])) bounds.push_back(i + 1);
    bounds.push_back(K);

    std::vector<HLetter> letters;
    for (size_t b = 0; b + 1 < bounds.size(); ++b)
        letters.push_back(run_to_letter(bounds[b], bounds[b + 1] - bounds[b]));

    // re-anchor from surviving original letter boundaries
    std::vector<int> profile{0};
    for (const auto& l : letters) profile.push_back(profile.back() + degree_step(l));
    bool have_anchor = false;
    int anchor = 0;
    for (size_t b = 0; b < bounds.size(); ++b) {
        size_t pos = bounds[b];
        int prof = profile[b];
        auto take = [&](int deg) {
            if (!have_anchor) {
                anchor = deg - prof;
                have_anchor = true;
            } else if (anchor != deg - prof) {
                throw Internal("assembled word has inconsistent degree anchors");
            }
        };
        if (pos < K && steps_[pos].first_of_letter) take(steps_[pos].left_deg);
        if (pos > 0 && steps_[pos - 1].last_of_letter) take(steps_[pos - 1].right_deg);
    }
    if (!have_anchor) throw Internal("assembled word has no degree anchor");

    check_word(A_, letters, /*cyclic=*/false);
    HString s;
    s.letters = std::move(letters);
    s.anchor = anchor;
    return s;
}

Assembler::Cycle Assembler::finish_cycle() {
    if (!cyclic_) throw Internal("finish_cycle on an open assembly");
    node(first_vertex_, first_deg_);  // the wrap must close up
    reduce_linear();
    reduce_wrap();
    if (steps_.empty()) throw Internal("cyclic assembly cancelled away completely");

    size_t K = steps_.size();
    std::vector<size_t> bounds;
    for (size_t i = 0; i < K; ++i)
        if (boundary_between(steps_[(i + K - 1) % K], steps_[i])) bounds.push_back(i);
    if (bounds.empty()) throw Internal("cyclic assembly has no letter boundary");

    std::vector<HLetter> letters;
    for (size_t b = 0; b < bounds.size(); ++b) {
        size_t begin = bounds[b];
        size_t end = bounds[(b + 1) % bounds.size()];
        size_t count = (end + K - begin) % K;
        if (count == 0) count = K;
        letters.push_back(run_to_letter(begin, count));
    }

    std::vector<int> profile{0};
    for (const auto& l : letters) profile.push_back(profile.back() + degree_step(l));
    if (profile.back() != 0)
        throw Internal("cyclic assembly does not return to its starting degree");

    bool have_anchor = false;
    int anchor = 0;
    for (size_t b = 0; b < bounds.size(); ++b) {
        size_t pos = bounds[b];
        int prof = profile[b];
        auto take = [&](int deg) {
            if (!have_anchor) {
                anchor = deg - prof;
                have_anchor = true;
            } else if (anchor != deg - prof) {
                throw Internal("assembled cycle has inconsistent degree anchors");
            }
        };
        if (steps_[pos].first_of_letter) take(steps_[pos].left_deg);
        if (steps_[(pos + K - 1) % K].last_of_letter)
            take(steps_[(pos + K - 1) % K].right_deg);
    }
    if (!have_anchor) throw Internal("assembled cycle has no degree anchor");

    check_word(A_, letters, /*cyclic=*/true);
    Cycle c;
    c.letters = std::move(letters);
    c.node0_deg = anchor;
    return c;
}

}  // namespace gentle
