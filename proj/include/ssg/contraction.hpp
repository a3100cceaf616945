#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssg/mealy.hpp"
#include "ssg/schreier.hpp"
#include "ssg/selfsim.hpp"
#include "ssg/words.hpp"

namespace ssg::contraction {

struct NucleusElement {
    selfsim::GWord word;        // shortest representative found
    mealy::Initial automaton;   // canonical minimized form
    std::string key;            // canonical serialization, the element identity
};

// A finite set of group elements closed under restriction and inversion and
// containing the identity, together with its restriction graph.
struct Nucleus {
    selfsim::Group group;
    std::vector<NucleusElement> elements;   // identity first, then by word length and key
    std::vector<std::vector<int>> rest;     // rest[i][x] = index of elements[i]|_x
    int identity = 0;

    size_t size() const { return elements.size(); }
    int find(const std::string& key) const;
    int root_image(int i, words::Letter x) const;
    std::string element_name(int i) const;
};

struct NucleusResult {
    bool exceeded = false;          // candidate set passed the cap
    std::optional<Nucleus> value;   // present iff !exceeded
    size_t candidates = 0;          // distinct elements examined
};

// Smallest superset of the seed closed under one-letter restriction; elements
// are identified by automaton equivalence. BFS order, seeds first.
std::vector<selfsim::Element> restriction_closure(const selfsim::Group& g,
                                                  const std::vector<selfsim::Element>& seed,
                                                  size_t cap = 4096);

// Fixpoint iteration: start from the restriction closure of the symmetrized
// generators, repeatedly add the restriction closure of all pairwise products
// and keep the part recurrent under deep restriction (elements on cycles of
// the restriction graph plus everything reachable from those cycles).
NucleusResult nucleus(const selfsim::Group& g, size_t cap = 4096);

struct ContractingResult {
    bool yes = false;                // Inconclusive otherwise: search is capped
    std::optional<Nucleus> value;
    size_t candidates = 0;
};

ContractingResult is_contracting(const selfsim::Group& g, size_t cap = 4096);

// Empirical upper estimate of the contraction coefficient: the maximum over
// sampled random reduced words e of (|e restricted at v| / |e|)^(1/depth) over
// all v of the given depth. Returns 0 when every sample reduces to identity.
double contraction_estimate(const selfsim::Group& g, const Nucleus& n,
                            int samples, int depth, std::uint64_t seed);

// Whether the identity is reachable from every element in the restriction
// graph of the nucleus.
bool open_set_condition(const Nucleus& n);

// Two left-infinite eventually periodic words, each a periodic tail plus a
// finite suffix. Tails must be nonempty.
struct EquivalenceQuery {
    words::LeftWord left;
    words::LeftWord right;
};

// Whether the two boundary words are asymptotically equivalent: existence of a
// left-infinite run in the nucleus Moore diagram reading the letter pairs,
// decided by a greatest fixpoint over the periodic tails followed by forward
// propagation through the suffixes (padded to equal length from the tails).
bool asymptotically_equivalent(const Nucleus& n, const EquivalenceQuery& q);

// Simplicial graph on X^level with an edge {u, v} iff some nucleus element
// maps v to u; equals the simplicial Schreier graph of the nucleus.
schreier::LabeledGraph tile_graph(const selfsim::Group& g, const Nucleus& n,
                                  int level, size_t max_points = 65536);

// Listing of the nucleus as wreath recursions over synthetic element names,
// in the group definition language.
std::string export_nucleus_dsl(const Nucleus& n);

// Moore diagram of the nucleus as a transducer, in DOT.
std::string export_nucleus_dot(const Nucleus& n);

} // namespace ssg::contraction
