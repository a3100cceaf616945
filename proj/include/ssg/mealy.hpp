#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ssg/words.hpp"

namespace ssg::mealy {

using words::Letter;
using words::OmegaWord;
using words::Word;

// Finite Mealy transducer over one alphabet for input and output. A state q
// transforms words letterwise: it outputs out[q][x] and hands the rest of the
// word to state trans[q][x].
struct Machine {
    int alphabet = 2;
    std::vector<std::vector<int>> trans;    // [state][letter] -> state
    std::vector<std::vector<Letter>> out;   // [state][letter] -> letter

    int states() const { return static_cast<int>(trans.size()); }
    void validate() const;
};

// A machine together with a chosen initial state. Machines are shared, so
// copies are cheap and automata stay immutable once built.
struct Initial {
    std::shared_ptr<const Machine> machine;
    int state = 0;

    const Machine& m() const { return *machine; }
};

Initial identity(int alphabet);

Word act(const Initial& a, const Word& w);

// Exact action on an eventually periodic word. The run is simulated until the
// (state, period position) configuration repeats, which bounds the output's
// preperiod and period.
OmegaWord act_omega(const Initial& a, const OmegaWord& w);

// Transducer composition: act(compose(a, b), w) == act(b, act(a, w)).
// States are reachable pairs, numbered breadth-first from the initial pair.
Initial compose(const Initial& a, const Initial& b);

bool is_invertible(const Machine& m);

// Inverse transducer of an invertible machine (letterwise inverse outputs).
Initial invert(const Initial& a);

// All states that act trivially, computed as a greatest fixpoint: states with
// a non-identity output row are removed, then every state with a transition
// into a removed state, until stable.
std::vector<bool> trivial_states(const Machine& m);
bool acts_trivially(const Machine& m, int state);

// Machine minimization by partition refinement (initial split by output rows,
// refined by transition blocks). Blocks are numbered by smallest member.
Machine minimize(const Machine& m);

// Reachable part of the minimized automaton with states renumbered
// breadth-first from the initial state; the canonical representative of the
// state's action. Serialized canonical forms are byte-stable.
Initial canonicalize(const Initial& a);
std::string serialize(const Initial& a);
std::string canonical_key(const Initial& a);

// Whether two initial automata define the same length-preserving map.
bool act_equal(const Initial& a, const Initial& b);

// Moore-diagram DOT export: one node per state, edges labeled "x|y".
std::string to_dot(const Machine& m, const std::vector<std::string>& state_names = {});

} // namespace ssg::mealy
