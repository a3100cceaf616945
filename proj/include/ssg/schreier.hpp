#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ssg/selfsim.hpp"
#include "ssg/words.hpp"

namespace ssg::schreier {

// Directed labeled multigraph with display names per vertex. The simplicial
// view (loops dropped, parallel edges merged, direction forgotten) is derived
// on demand.
struct LabeledGraph {
    std::vector<std::string> names;
    std::vector<std::tuple<int, int, std::string>> edges;   // (source, target, label)
    bool directed = true;

    size_t vertices() const { return names.size(); }
};

// Sorted unique undirected edge pairs (u < v), loops removed.
std::vector<std::pair<int, int>> simplicial_edges(const LabeledGraph& g);

struct GrowthSeq {
    int basepoint = 0;
    std::vector<size_t> sizes;   // |B(v, k)| for k = 0..r_max
};

// Schreier graph of the action on X^n. Vertices are indexed lexicographically
// with the last letter fastest; one edge (v, v^s, s) per vertex and symmetrized
// generator. An empty gen_names selects all generators.
LabeledGraph level_schreier(const selfsim::Group& g,
                            const std::vector<std::string>& gen_names, int n,
                            size_t max_points = 65536);

// Ball of the orbit Schreier graph of eventually periodic boundary words,
// explored breadth-first from the basepoint and truncated at graph distance
// radius. Edges between known vertices are kept; frontier vertices do not
// expand further.
LabeledGraph orbit_ball(const selfsim::Group& g,
                        const std::vector<std::string>& gen_names,
                        const words::OmegaWord& basepoint, int radius);

// Ball sizes in the simplicial view.
GrowthSeq ball_growth(const LabeledGraph& g, int v, int r_max);

// Whether dropping the last letter maps the level n+1 graph onto the level n
// graph edge-for-edge with labels preserved.
bool covering_check(const selfsim::Group& g,
                    const std::vector<std::string>& gen_names, int n,
                    size_t max_points = 65536);

// Deterministic DOT text: vertices in index order, edges sorted by
// (source, target, label).
std::string export_dot(const LabeledGraph& g, bool simplicial);

// CSV edge list "src,dst,label", one line per edge, sorted the same way.
std::string export_csv(const LabeledGraph& g);

} // namespace ssg::schreier
