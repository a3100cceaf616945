#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ssg/errors.hpp"
#include "ssg/words.hpp"

namespace ssg::invsemi {

// One rewriting step: when the upcoming input matches `pattern`, remove the
// first `consume` letters, append `output` to the result, and continue in the
// map named `cont`. The pattern may be longer than `consume` (lookahead); the
// unconsumed letters are read again by the continuation. The reserved name
// "e" continues by copying the rest of the input verbatim.
struct Rule {
    words::Word pattern;
    int consume = 0;
    words::Word output;
    std::string cont;

    bool operator==(const Rule& o) const {
        return pattern == o.pattern && consume == o.consume && output == o.output &&
               cont == o.cont;
    }
};

struct RuleMap {
    std::string name;
    std::set<words::Letter> domain; // admissible first letters the map accepts
    std::vector<Rule> rules;

    bool operator==(const RuleMap& o) const {
        return name == o.name && domain == o.domain && rules == o.rules;
    }
};

// A family of named rewriting maps acting on the eventually periodic words of
// a subshift of finite type. Construction audits the rules: within each map
// the patterns must be pairwise disjoint and, over the admissible two-letter
// lookaheads, match exactly the words whose first letter is in the domain.
class RuleTable {
public:
    RuleTable(std::string name, words::Sft sft, std::string symbols,
              std::vector<RuleMap> maps);

    const std::string& name() const { return name_; }
    const words::Sft& sft() const { return sft_; }
    const std::string& symbols() const { return symbols_; }
    const std::vector<RuleMap>& maps() const { return maps_; }
    const RuleMap& map(const std::string& name) const; // UnknownEntry
    int map_index(const std::string& name) const;      // -1 for "e", UnknownEntry else

    bool operator==(const RuleTable& o) const;

    // One rule per line: `MAP: PATTERN -> OUTPUT CONT`. A dot inside PATTERN
    // separates the consumed prefix from unconsumed lookahead letters.
    std::string dump() const;

private:
    std::string name_;
    words::Sft sft_;
    std::string symbols_;
    std::vector<RuleMap> maps_;
    std::map<std::string, int> index_;

    void audit() const;
};

// Round-trip text form: a `table NAME`, `alphabet SYMBOLS`, `forbid BLOCK...`
// header, then `map NAME domain LETTERS` sections with their rule lines in
// dump() syntax. parse_table(render_table(t)) == t.
std::string render_table(const RuleTable& t);
RuleTable parse_table(const std::string& text);

// Applies the named map to an eventually periodic word. The output is exact:
// once evaluation enters the periodic part of the input, the pair (current
// map, input position modulo the period) must repeat, and the letters emitted
// between the two visits form the output period. Throws OutOfDomain when the
// word is inadmissible, outside the map's domain, or no rule matches.
words::OmegaWord apply_map(const RuleTable& t, const std::string& map,
                           const words::OmegaWord& w);

// Built-in tables.
const RuleTable& fibonacci_table();  // alphabet {0,1}, no factor 11; maps a, b
const RuleTable& penrose_table();    // alphabet {a,b,c}, no factor ba; maps L, M, S
const RuleTable& apollonian_table(); // alphabet {1,2,3,4}, no repeats; maps g1..g4

// Fibonacci numeration: u_1 = 1, u_2 = 2, u_i = u_{i-1} + u_{i-2}. A value is
// encoded least index first as digits a_1 a_2 ... a_length with no adjacent
// ones (so a_1 u_1 + a_2 u_2 + ... recovers it uniquely).
struct ZeckendorfCodec {
    std::vector<std::int64_t> u; // u[i] = u_{i+1}

    explicit ZeckendorfCodec(int length);
    words::Word encode(std::int64_t m) const;       // OverflowError if m needs more digits
    std::int64_t decode(const words::Word& w) const; // rejects adjacent ones
};

// Adds one to m by encoding it, applying the Fibonacci map a or b (a when the
// word starts with 0, b when it starts with 1), and decoding the result.
// `length` bounds the representation; m and m+1 must both fit.
std::int64_t fibonacci_successor(std::int64_t m, int length);

// The inversion indexed by letter i (0-based): strips a leading i, otherwise
// prepends i. The word must be admissible (no equal consecutive letters).
words::OmegaWord apollonian_apply(int i, const words::OmegaWord& w);

// Checks map(map(u)) == u for every admissible word: all admissible prefixes
// of the given depth, each extended by every admissible periodic tail of
// period at most 3. Returns false as soon as one word comes back changed or
// the map runs out of domain.
bool involution_check(const RuleTable& t, const std::string& map, int depth);

// Enumeration helpers (deterministic order).
std::vector<words::Word> admissible_words(const words::Sft& sft, int len);
std::vector<words::OmegaWord> periodic_tail_basis(const words::Sft& sft, int max_period);

} // namespace ssg::invsemi
