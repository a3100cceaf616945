#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ssg/errors.hpp"

namespace ssg::words {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

struct Alphabet {
    int size = 2;
    bool valid(Letter x) const { return x < size; }
};

bool valid_word(const Alphabet& a, const Word& w);

// Parses a word over digit letters '0'..'9' (or custom symbols, one char per
// letter). Empty string is the empty word.
Word parse_word(const std::string& s, const Alphabet& a, const std::string& symbols = "");
std::string render_word(const Word& w, const std::string& symbols = "");

// Right-infinite eventually periodic word pre·per·per·…, kept in canonical
// form: minimal period, and no preperiod suffix that could be absorbed by
// rotating the period. Canonical forms are equal iff the words are equal.
class OmegaWord {
public:
    OmegaWord(Word pre, Word per);

    const Word& pre() const { return pre_; }
    const Word& per() const { return per_; }

    Letter at(size_t i) const {
        if (i < pre_.size()) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }

    // Word with the first letter removed.
    OmegaWord shifted() const;
    // First n letters as a finite word.
    Word prefix(size_t n) const;

    bool operator==(const OmegaWord& o) const { return pre_ == o.pre_ && per_ == o.per_; }
    bool operator!=(const OmegaWord& o) const { return !(*this == o); }
    bool operator<(const OmegaWord& o) const {
        return pre_ != o.pre_ ? pre_ < o.pre_ : per_ < o.per_;
    }

private:
    Word pre_, per_;
};

bool omega_eq(const OmegaWord& a, const OmegaWord& b);

// Parses "PRE(PERIOD)" as well as the pure-period shorthand "(PERIOD)".
OmegaWord parse_omega(const std::string& s, const Alphabet& a, const std::string& symbols = "");
std::string render_omega(const OmegaWord& w, const std::string& symbols = "");

// Left-infinite eventually periodic word …ttt·suffix. The tail word lists its
// letters from the suffix boundary outward: tail = t0 t1 … means the word is
// … t2 t1 t0 suffix when read left to right. The suffix is written left to
// right as usual; the letter at position 1 (innermost) is suffix.back().
struct LeftWord {
    Word tail;
    Word suffix;
};

// Parses "(TAIL)SUFFIX", the tail block written left to right as it repeats
// leftward: "(10)01" is the word ...101010 01. The tail must be nonempty.
LeftWord parse_left(const std::string& s, const Alphabet& a, const std::string& symbols = "");
std::string render_left(const LeftWord& w, const std::string& symbols = "");

// Subshift of finite type: the words over the alphabet none of whose length-m
// factors is forbidden. Stored by its admissible block set.
class Sft {
public:
    Sft(Alphabet a, int m, std::set<Word> admissible);

    static Sft full_shift(Alphabet a);
    static Sft forbidding(Alphabet a, int m, const std::vector<Word>& blocks);

    const Alphabet& alphabet() const { return alpha_; }
    int block_length() const { return m_; }
    const std::set<Word>& admissible_blocks() const { return blocks_; }

    bool is_admissible(const Word& w) const;
    bool is_admissible(const OmegaWord& w) const;

private:
    Alphabet alpha_;
    int m_;
    std::set<Word> blocks_;
};

} // namespace ssg::words
