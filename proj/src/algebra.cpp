#include "gentle/algebra.hpp"

#include <algorithm>
#include <deque>

namespace gentle {

bool GentleAlgebra::is_relation(int x, int y) const {
    return std::binary_search(relations.begin(), relations.end(), std::make_pair(x, y));
}

int GentleAlgebra::vertex_id(const std::string& name) const {
    auto it = vindex_.find(name);
    return it == vindex_.end() ? -1 : it->second;
}

int GentleAlgebra::arrow_id(const std::string& name) const {
    auto it = aindex_.find(name);
    return it == aindex_.end() ? -1 : it->second;
}

std::string GentleAlgebra::path_str(const Path& p) const {
    if (p.trivial()) return "e_" + vertices[p.src];
    std::string out;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) out += "*";
        out += arrows[p.arrows[i]].name;
    }
    return out;
}

Path trivial_path(int v) {
    Path p;
    p.src = p.tgt = v;
    return p;
}

Path arrow_path(const GentleAlgebra& A, int arrow) {
    Path p;
    p.src = A.arrows[arrow].src;
    p.tgt = A.arrows[arrow].tgt;
    p.arrows = {arrow};
    return p;
}

GentleAlgebra validate_gentle(const std::vector<std::string>& vertices,
                              const std::vector<Arrow>& arrows,
                              const std::vector<std::pair<int, int>>& relations) {
    std::vector<Violation> bad;
    GentleAlgebra A;
    A.vertices = vertices;
    A.arrows = arrows;
    A.relations = relations;
    std::sort(A.relations.begin(), A.relations.end());
    A.relations.erase(std::unique(A.relations.begin(), A.relations.end()), A.relations.end());

    for (int v = 0; v < (int)vertices.size(); ++v) {
        if (A.vindex_.count(vertices[v]))
            bad.push_back({"GentlenessViolation", "duplicate vertex name " + vertices[v]});
        A.vindex_[vertices[v]] = v;
    }
    A.out_of.resize(vertices.size());
    A.into.resize(vertices.size());
    for (int a = 0; a < (int)arrows.size(); ++a) {
        const Arrow& ar = arrows[a];
        if (A.aindex_.count(ar.name))
            bad.push_back({"GentlenessViolation", "duplicate arrow name " + ar.name});
        A.aindex_[ar.name] = a;
        if (ar.src < 0 || ar.src >= (int)vertices.size() || ar.tgt < 0 ||
            ar.tgt >= (int)vertices.size()) {
            bad.push_back({"GentlenessViolation", "arrow " + ar.name + " has undeclared endpoint"});
            continue;
        }
        A.out_of[ar.src].push_back(a);
        A.into[ar.tgt].push_back(a);
    }
    if (!bad.empty()) throw ValidationError(bad);

    // (iv) + composability of relations: (x, y) needs src(x) == tgt(y)
    for (auto [x, y] : A.relations) {
        if (x < 0 || x >= (int)arrows.size() || y < 0 || y >= (int)arrows.size()) {
            bad.push_back({"NonComposableRelation", "relation names an unknown arrow"});
            continue;
        }
        if (arrows[x].src != arrows[y].tgt)
            bad.push_back({"NonComposableRelation",
                           "relation (" + arrows[x].name + "," + arrows[y].name +
                               ") is not a length-2 path: src(" + arrows[x].name + ") != tgt(" +
                               arrows[y].name + ")"});
    }

    // (i) fan-in/fan-out at most 2
    for (int v = 0; v < (int)vertices.size(); ++v) {
        if (A.out_of[v].size() > 2)
            bad.push_back({"FanOutExceeded",
                           "vertex " + vertices[v] + " has " + std::to_string(A.out_of[v].size()) +
                               " outgoing arrows"});
        if (A.into[v].size() > 2)
            bad.push_back({"FanOutExceeded",
                           "vertex " + vertices[v] + " has " + std::to_string(A.into[v].size()) +
                               " incoming arrows"});
    }

    // (ii)/(iii): per arrow at most one relation-free continuation and at
    // most one relation continuation, on both sides
    for (int a = 0; a < (int)arrows.size(); ++a) {
        int freeL = 0, relL = 0;  // arrows b with src(b) == tgt(a): composite b∘a
        for (int b : A.out_of[arrows[a].tgt]) (A.is_relation(b, a) ? relL : freeL)++;
        if (freeL > 1)
            bad.push_back({"GentlenessViolation",
                           "arrow " + arrows[a].name + " has two relation-free continuations"});
        if (relL > 1)
            bad.push_back({"GentlenessViolation",
                           "arrow " + arrows[a].name + " is in two relations on the left"});
        int freeR = 0, relR = 0;  // arrows b with tgt(b) == src(a): composite a∘b
        for (int b : A.into[arrows[a].src]) (A.is_relation(a, b) ? relR : freeR)++;
        if (freeR > 1)
            bad.push_back({"GentlenessViolation",
                           "arrow " + arrows[a].name + " extends two arrows without relation"});
        if (relR > 1)
            bad.push_back({"GentlenessViolation",
                           "arrow " + arrows[a].name + " is in two relations on the right"});
    }

    if (!bad.empty()) throw ValidationError(bad);

    // finite-dimensionality: no relation-free oriented cycle in the
    // composability graph (edge a -> b when b∘a is nonzero)
    std::vector<int> state(arrows.size(), 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> longest(arrows.size(), -1);
    auto dfs = [&](auto&& self, int a) -> int {  // longest nonzero path starting with arrow a
        if (state[a] == 1) throw ValidationError({{"InfiniteDimensional",
            "relation-free oriented cycle through arrow " + arrows[a].name}});
        if (state[a] == 2) return longest[a];
        state[a] = 1;
        int best = 1;
        for (int b : A.out_of[arrows[a].tgt])
            if (!A.is_relation(b, a)) best = std::max(best, 1 + self(self, b));
        state[a] = 2;
        longest[a] = best;
        return best;
    };
    int maxlen = 0;
    for (int a = 0; a < (int)arrows.size(); ++a) maxlen = std::max(maxlen, dfs(dfs, a));
    A.max_path_len = maxlen;
    return A;
}

GentleAlgebra validate_gentle(const std::vector<std::string>& vertices,
                              const std::vector<ArrowSpec>& arrows,
                              const std::vector<std::pair<std::string, std::string>>& relations) {
    std::unordered_map<std::string, int> vid;
    for (int v = 0; v < (int)vertices.size(); ++v) vid.emplace(vertices[v], v);
    std::vector<Arrow> as;
    std::unordered_map<std::string, int> aid;
    std::vector<Violation> bad;
    for (const auto& s : arrows) {
        Arrow a;
        a.name = s.name;
        auto f = vid.find(s.from), t = vid.find(s.to);
        if (f == vid.end())
            bad.push_back({"GentlenessViolation", "arrow " + s.name + " leaves unknown vertex " + s.from});
        if (t == vid.end())
            bad.push_back({"GentlenessViolation", "arrow " + s.name + " enters unknown vertex " + s.to});
        a.src = f == vid.end() ? -1 : f->second;
        a.tgt = t == vid.end() ? -1 : t->second;
        aid.emplace(s.name, (int)as.size());
        as.push_back(a);
    }
    std::vector<std::pair<int, int>> rels;
    for (const auto& [x, y] : relations) {
        auto ix = aid.find(x), iy = aid.find(y);
        if (ix == aid.end() || iy == aid.end()) {
            bad.push_back({"NonComposableRelation",
                           "relation (" + x + "," + y + ") names an unknown arrow"});
            continue;
        }
        rels.emplace_back(ix->second, iy->second);
    }
    if (!bad.empty()) throw ValidationError(bad);
    return validate_gentle(vertices, as, rels);
}

Path parse_path(const GentleAlgebra& A, const std::string& text) {
    if (text.rfind("e_", 0) == 0) {
        int v = A.vertex_id(text.substr(2));
        if (v < 0) throw UnknownArrow("unknown vertex in trivial path '" + text + "'");
        return trivial_path(v);
    }
    std::vector<int> ids;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw ParseError("empty arrow name in path '" + text + "'");
        int a = A.arrow_id(cur);
        if (a < 0) throw UnknownArrow("unknown arrow '" + cur + "'");
        ids.push_back(a);
        cur.clear();
    };
    for (char c : text) {
        if (c == '*') flush();
        else cur += c;
    }
    flush();
    Path p;
    p.arrows = ids;
    p.src = A.arrows[ids.back()].src;
    p.tgt = A.arrows[ids.front()].tgt;
    for (size_t i = 0; i + 1 < ids.size(); ++i) {
        if (A.arrows[ids[i]].src != A.arrows[ids[i + 1]].tgt)
            throw IllegalJunction("arrows " + A.arrows[ids[i]].name + "*" +
                                  A.arrows[ids[i + 1]].name + " do not compose in '" + text + "'");
        if (A.is_relation(ids[i], ids[i + 1]))
            throw IllegalJunction("path '" + text + "' passes through the relation " +
                                  A.arrows[ids[i]].name + "*" + A.arrows[ids[i + 1]].name);
    }
    return p;
}

std::optional<Path> compose(const GentleAlgebra& A, const Path& p, const Path& q) {
    if (p.src != q.tgt)
        throw EndpointMismatch("compose: src(" + A.path_str(p) + ") != tgt(" + A.path_str(q) + ")");
    if (p.trivial()) return q;
    if (q.trivial()) return p;
    if (A.is_relation(p.arrows.back(), q.arrows.front())) return std::nullopt;
    Path r;
    r.src = q.src;
    r.tgt = p.tgt;
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::vector<Path> projective_basis(const GentleAlgebra& A, int v) {
    std::vector<Path> out{trivial_path(v)};
    // grow paths on the left: p -> b∘p; nonzero iff (b, first arrow) not in I
    std::deque<Path> frontier{trivial_path(v)};
    while (!frontier.empty()) {
        Path p = frontier.front();
        frontier.pop_front();
        for (int b : A.out_of[p.tgt]) {
            if (!p.trivial() && A.is_relation(b, p.arrows.front())) continue;
            Path q;
            q.src = v;
            q.tgt = A.arrows[b].tgt;
            q.arrows.reserve(p.arrows.size() + 1);
            q.arrows.push_back(b);
            q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
            out.push_back(q);
            frontier.push_back(q);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        std::vector<std::string> an, bn;
        for (int x : a.arrows) an.push_back(A.arrows[x].name);
        for (int x : b.arrows) bn.push_back(A.arrows[x].name);
        return an < bn;
    });
    return out;
}

std::vector<Path> paths_between(const GentleAlgebra& A, int v, int w, bool include_trivial) {
    std::vector<Path> out;
    for (const Path& p : projective_basis(A, v)) {
        if (p.tgt != w) continue;
        if (p.trivial() && !include_trivial) continue;
        out.push_back(p);
    }
    return out;
}

}  // namespace gentle
