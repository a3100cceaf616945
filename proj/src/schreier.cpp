#include "ssg/schreier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg::schreier {

using selfsim::Element;
using selfsim::Group;
using words::OmegaWord;
using words::Word;

namespace {

// Symmetrized generators restricted to the requested names (base name, without
// the inverse prime). Empty selection means all.
std::vector<std::pair<std::string, Element>>
picked_generators(const Group& g, const std::vector<std::string>& gen_names) {
    auto all = selfsim::symmetrized_generators(g);
    if (gen_names.empty()) return all;
    std::vector<std::pair<std::string, Element>> out;
    for (const auto& [name, e] : all) {
        std::string base = name;
        while (!base.empty() && base.back() == '\'') base.pop_back();
        if (std::find(gen_names.begin(), gen_names.end(), base) != gen_names.end())
            out.push_back({name, e});
    }
    if (out.empty()) throw UnknownEntry("no generator matches the selection");
    return out;
}

} // namespace

std::vector<std::pair<int, int>> simplicial_edges(const LabeledGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [s, t, label] : g.edges) {
        if (s == t) continue;
        out.push_back({std::min(s, t), std::max(s, t)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LabeledGraph level_schreier(const Group& g, const std::vector<std::string>& gen_names,
                            int n, size_t max_points) {
    int d = g->alphabet();
    size_t size = selfsim::level_size_checked(d, n, max_points);
    auto gens = picked_generators(g, gen_names);

    LabeledGraph out;
    out.directed = true;
    out.names.reserve(size);
    for (size_t v = 0; v < size; ++v)
        out.names.push_back(words::render_word(selfsim::index_to_word(v, d, n)));

    for (const auto& [name, e] : gens) {
        std::vector<int> perm = selfsim::act_level(e, n, max_points);
        for (size_t v = 0; v < size; ++v)
            out.edges.push_back({static_cast<int>(v), perm[v], name});
    }
    // Vertex-major order regardless of generator count.
    std::stable_sort(out.edges.begin(), out.edges.end(),
                     [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    return out;
}

LabeledGraph orbit_ball(const Group& g, const std::vector<std::string>& gen_names,
                        const OmegaWord& basepoint, int radius) {
    if (radius < 0) throw Error("radius must be nonnegative");
    auto gens = picked_generators(g, gen_names);
    std::vector<mealy::Initial> automata;
    automata.reserve(gens.size());
    for (const auto& [name, e] : gens) automata.push_back(selfsim::element_automaton(e));

    LabeledGraph out;
    out.directed = true;
    std::map<OmegaWord, int> index;
    std::vector<OmegaWord> verts{basepoint};
    index.emplace(basepoint, 0);
    out.names.push_back(words::render_omega(basepoint));

    std::vector<int> dist{0};
    for (size_t head = 0; head < verts.size(); ++head) {
        if (dist[head] == radius) continue;
        OmegaWord v = verts[head];
        for (size_t s = 0; s < gens.size(); ++s) {
            OmegaWord u = mealy::act_omega(automata[s], v);
            auto [it, fresh] = index.emplace(u, static_cast<int>(verts.size()));
            if (fresh) {
                verts.push_back(u);
                dist.push_back(dist[head] + 1);
                out.names.push_back(words::render_omega(u));
            }
            out.edges.push_back({static_cast<int>(head), it->second, gens[s].first});
        }
    }
    return out;
}

GrowthSeq ball_growth(const LabeledGraph& g, int v, int r_max) {
    if (v < 0 || static_cast<size_t>(v) >= g.vertices())
        throw OutOfDomain("vertex out of range");
    std::vector<std::vector<int>> adj(g.vertices());
    for (auto [a, b] : simplicial_edges(g)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    GrowthSeq seq;
    seq.basepoint = v;
    std::vector<int> dist(g.vertices(), -1);
    std::vector<int> frontier{v};
    dist[v] = 0;
    size_t total = 1;
    seq.sizes.push_back(total);
    for (int r = 1; r <= r_max; ++r) {
        std::vector<int> next;
        for (int p : frontier)
            for (int q : adj[p])
                if (dist[q] < 0) {
                    dist[q] = r;
                    next.push_back(q);
                }
        total += next.size();
        seq.sizes.push_back(total);
        frontier = std::move(next);
    }
    return seq;
}

bool covering_check(const Group& g, const std::vector<std::string>& gen_names,
                    int n, size_t max_points) {
    int d = g->alphabet();
    LabeledGraph fine = level_schreier(g, gen_names, n + 1, max_points);
    LabeledGraph coarse = level_schreier(g, gen_names, n, max_points);
    // One edge per (vertex, label) in a Schreier graph: index the coarse edges.
    std::map<std::pair<int, std::string>, int> target;
    for (const auto& [s, t, label] : coarse.edges) target[{s, label}] = t;
    for (const auto& [s, t, label] : fine.edges) {
        auto it = target.find({s / d, label});
        if (it == target.end() || it->second != t / d) return false;
    }
    return true;
}

namespace {

std::vector<std::tuple<int, int, std::string>> sorted_edges(const LabeledGraph& g) {
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string export_dot(const LabeledGraph& g, bool simplicial) {
    std::ostringstream os;
    bool directed = g.directed && !simplicial;
    os << (directed ? "digraph {\n" : "graph {\n");
    for (size_t v = 0; v < g.names.size(); ++v)
        os << "  v" << v << " [label=" << quoted(g.names[v]) << "];\n";
    if (simplicial) {
        for (auto [a, b] : simplicial_edges(g))
            os << "  v" << a << " -- v" << b << ";\n";
    } else {
        for (const auto& [s, t, label] : sorted_edges(g))
            os << "  v" << s << (directed ? " -> v" : " -- v") << t
               << " [label=" << quoted(label) << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_csv(const LabeledGraph& g) {
    std::ostringstream os;
    os << "src,dst,label\n";
    for (const auto& [s, t, label] : sorted_edges(g))
        os << s << "," << t << "," << label << "\n";
    return os.str();
}

} // namespace ssg::schreier
