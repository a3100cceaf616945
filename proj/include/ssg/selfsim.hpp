#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssg/bigint.hpp"
#include "ssg/mealy.hpp"
#include "ssg/words.hpp"

namespace ssg::selfsim {

using words::Letter;
using words::OmegaWord;
using words::Word;

// One letter of a group word: a generator index, possibly inverted.
struct GenTerm {
    int gen = 0;
    bool inv = false;

    bool operator==(const GenTerm& o) const { return gen == o.gen && inv == o.inv; }
    bool operator<(const GenTerm& o) const {
        return gen != o.gen ? gen < o.gen : inv < o.inv;
    }
};

using GWord = std::vector<GenTerm>;

GWord free_reduce(GWord w);
GWord gword_inverse(const GWord& w);

// A generator given by its wreath recursion: a root permutation alpha and one
// restriction word per letter. The action on words is
//   (x w)^g = x^alpha (w^{g|_x}).
struct Generator {
    std::string name;
    std::vector<int> perm;       // perm[x] = image of letter x
    std::vector<GWord> rest;     // rest[x] = g restricted to the subtree at x
};

// A group (or semigroup of tree automorphisms) presented by wreath recursions.
class GroupDef : public std::enable_shared_from_this<GroupDef> {
public:
    static std::shared_ptr<GroupDef> create(std::string name, int alphabet,
                                            std::vector<Generator> gens);

    const std::string& name() const { return name_; }
    int alphabet() const { return alpha_; }
    const std::vector<Generator>& generators() const { return gens_; }
    int gen_index(const std::string& name) const;

    // Transducer of a single (possibly inverted) generator. States are the
    // freely reduced restriction words reachable from it; the closure is
    // finite for every finite-state generator and capped defensively.
    mealy::Initial generator_automaton(GenTerm t) const;

private:
    GroupDef() = default;
    std::string name_;
    int alpha_ = 2;
    std::vector<Generator> gens_;
    mutable std::map<GenTerm, mealy::Initial> automaton_cache_;
};

using Group = std::shared_ptr<const GroupDef>;

// A group element, carried as a word in the generators.
struct Element {
    Group group;
    GWord word;
};

Element make_element(Group g, GWord w);
Element parse_element(const Group& g, const std::string& text);
std::string render_element(const Element& e);
std::string render_gword(const GroupDef& g, const GWord& w);
GWord parse_gword(const GroupDef& g, const std::string& text);

Element multiply(const Element& a, const Element& b);
Element inverse(const Element& e);

// Image of the letter x under the root permutation of the word.
int root_image(const GroupDef& g, const GWord& w, int x);

// Exact restriction e|_v via letterwise threading, freely reduced.
Element restriction(const Element& e, const Word& v);

// Action on finite and on eventually periodic words.
Word act(const Element& e, const Word& w);
OmegaWord act_omega(const Element& e, const OmegaWord& w);

// Transducer of the element: the generator automata composed in word order,
// reachability-pruned and minimized. Finite by construction.
mealy::Initial element_automaton(const Element& e);

// Word problem: whether the element acts trivially on every word.
bool is_trivial(const Element& e);

struct OrderResult {
    std::optional<int> order;    // empty: no power up to the cap was trivial
    int cap = 0;
};

OrderResult order(const Element& e, int cap);

// The permutation the element induces on X^n. Words are indexed
// lexicographically, last letter fastest: index(x1…xn) = sum xi d^(n-i).
std::vector<int> act_level(const Element& e, int n, size_t max_points = 65536);

size_t level_size_checked(int alphabet, int n, size_t max_points);
Word index_to_word(size_t index, int alphabet, int n);
size_t word_to_index(const Word& w, int alphabet);

// Order of the quotient acting on level n: the permutation group generated by
// the generator actions on X^n, measured by a Schreier-Sims stabilizer chain.
BigUint level_quotient_order(const GroupDef& g, int n, size_t max_points = 65536);

// Same, with the prime factorization of the order (orbit sizes are small, so
// trial division is exact).
BigUint level_quotient_order_factored(const GroupDef& g, int n,
                                      std::map<std::uint64_t, std::uint64_t>& factors,
                                      size_t max_points = 65536);

struct HausdorffEstimate {
    bool exact = false;          // true iff the order is a pure power of d!
    std::int64_t num = 0;        // exact value num/den when exact
    std::int64_t den = 1;
    double value = 0.0;
};

// log_{d!-scaled} density of the level-n quotient inside the full automorphism
// quotient: log_d |G_n| / (sum_{k<n} d^k log_d(d!)).
HausdorffEstimate hausdorff_estimate(const GroupDef& g, int n, size_t max_points = 65536);

// Portrait of depth k: the root permutations of all restrictions at words of
// length < k, keyed by vertex word.
std::map<Word, std::vector<int>> portrait(const Element& e, int depth);

// Substitution on generator words (endomorphism data): gen -> replacement.
using Substitution = std::map<int, GWord>;

GWord apply_substitution(const GroupDef& g, const Substitution& s, const GWord& w);

// Checks that sigma^i(r) is trivial for every base relator r and 0 <= i <= iterations.
bool verify_substitution_relators(const Group& g, const Substitution& sigma,
                                  const std::vector<GWord>& relators, int iterations);

// Generators together with those inverses that are new elements; the labels
// of inverses carry a prime. Deduplication is by action equality.
std::vector<std::pair<std::string, Element>> symmetrized_generators(const Group& g);

std::string perm_cycles(const std::vector<int>& perm);

// Group-definition text format: a `group NAME alphabet d` line, then one line
// per generator `gen = perm(CYCLES) [w0, w1, ..., w_{d-1}]`. CYCLES is a
// product of cycles on 0..d-1 written as `(0 1)(2 3)`; `perm()` is the
// identity. Each w is a generator word, `'` marking an inverse and `1` the
// identity. parse_group_dsl(render_group_dsl(g)) defines the same group.
Group parse_group_dsl(const std::string& text);
std::string render_group_dsl(const GroupDef& g);

// Field-by-field equality of the presentations (names, alphabet, recursions).
bool same_definition(const GroupDef& a, const GroupDef& b);

} // namespace ssg::selfsim
