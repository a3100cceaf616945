#include "doctest.h"

#include <random>

#include "ssg/errors.hpp"
#include "ssg/words.hpp"

using namespace ssg;
using namespace ssg::words;

namespace {

OmegaWord ow(const std::string& s, int d = 2, const std::string& sym = "") {
    return parse_omega(s, Alphabet{d}, sym);
}

} // namespace

TEST_CASE("word parse and render round-trip") {
    Alphabet a{2};
    CHECK(render_word(parse_word("0110", a)) == "0110");
    CHECK(parse_word("", a).empty());
    CHECK_THROWS_AS(parse_word("012", a), ParseError);

    Alphabet p{3};
    Word w = parse_word("cba", p, "abc");
    CHECK(w == Word{2, 1, 0});
    CHECK(render_word(w, "abc") == "cba");
    CHECK_THROWS_AS(parse_word("abd", p, "abc"), ParseError);
}

TEST_CASE("subshift admissibility") {
    Alphabet a2{2};
    Sft fib = Sft::forbidding(a2, 2, {parse_word("11", a2)});
    CHECK(fib.is_admissible(parse_word("0101", a2)));
    CHECK_FALSE(fib.is_admissible(parse_word("110", a2)));
    CHECK(fib.is_admissible(Word{}));

    Alphabet a3{3};
    Sft pen = Sft::forbidding(a3, 2, {parse_word("ba", a3, "abc")});
    CHECK_FALSE(pen.is_admissible(parse_word("cba", a3, "abc")));
    CHECK(pen.is_admissible(parse_word("abc", a3, "abc")));

    Sft full = Sft::full_shift(a2);
    CHECK(full.is_admissible(parse_word("110011", a2)));
}

TEST_CASE("subshift admissibility of periodic words") {
    Alphabet a2{2};
    Sft fib = Sft::forbidding(a2, 2, {parse_word("11", a2)});
    CHECK(fib.is_admissible(ow("(01)")));
    CHECK_FALSE(fib.is_admissible(ow("(1)")));
    // the forbidden block only appears across the period wraparound
    CHECK_FALSE(fib.is_admissible(ow("(10)1")));
    CHECK(fib.is_admissible(ow("00(10)")));
}

TEST_CASE("omega word canonical form") {
    CHECK(ow("11(1)") == ow("(1)"));
    CHECK(ow("0(10)") == ow("(01)"));
    CHECK(ow("(0101)") == ow("(01)"));
    CHECK(ow("(01)").pre().empty());
    CHECK(ow("(01)").per() == Word{0, 1});
    CHECK(render_omega(ow("010(1010)")) == "0(10)");
}

TEST_CASE("omega word shift") {
    CHECK(ow("1(0)").shifted() == ow("(0)"));
    CHECK(ow("(01)").shifted() == ow("(10)"));

    // shifting |pre|+|per| times lands where |pre| shifts land
    OmegaWord w = ow("011(010)");
    OmegaWord u = w, v = w;
    for (size_t i = 0; i < w.pre().size() + w.per().size(); ++i) u = u.shifted();
    for (size_t i = 0; i < w.pre().size(); ++i) v = v.shifted();
    CHECK(u == v);
}

TEST_CASE("omega word letters and prefixes") {
    OmegaWord w = ow("01(10)");
    CHECK(w.at(0) == 0);
    CHECK(w.at(1) == 1);
    CHECK(w.at(2) == 1);
    CHECK(w.at(3) == 0);
    CHECK(w.at(4) == 1);
    CHECK(w.prefix(6) == parse_word("011010", Alphabet{2}));
}

TEST_CASE("omega equality") {
    CHECK(omega_eq(ow("0(10)"), ow("01(01)")));
    CHECK_FALSE(omega_eq(ow("(0)"), ow("(1)")));
    CHECK(omega_eq(ow("110(10)"), ow("1(10)")));
}

TEST_CASE("canonicalization is idempotent and equality is an equivalence") {
    std::mt19937_64 rng(11);
    Alphabet a{2};
    auto random_omega = [&]() {
        Word pre, per;
        int np = (int)(rng() % 4), nq = 1 + (int)(rng() % 3);
        for (int i = 0; i < np; ++i) pre.push_back((Letter)(rng() % 2));
        for (int i = 0; i < nq; ++i) per.push_back((Letter)(rng() % 2));
        return OmegaWord(pre, per);
    };
    for (int i = 0; i < 200; ++i) {
        OmegaWord w = random_omega();
        OmegaWord again(w.pre(), w.per());
        CHECK(w == again); // constructor output is a fixed point
        CHECK(omega_eq(w, w));
        OmegaWord u = random_omega();
        CHECK(omega_eq(w, u) == omega_eq(u, w));
        if (omega_eq(w, u)) CHECK(w == u);
    }
}

TEST_CASE("shift preserves admissibility") {
    Alphabet a2{2};
    Sft fib = Sft::forbidding(a2, 2, {parse_word("11", a2)});
    std::mt19937_64 rng(12);
    int seen = 0;
    for (int i = 0; i < 400 && seen < 100; ++i) {
        Word pre, per;
        int np = (int)(rng() % 4), nq = 1 + (int)(rng() % 3);
        for (int j = 0; j < np; ++j) pre.push_back((Letter)(rng() % 2));
        for (int j = 0; j < nq; ++j) per.push_back((Letter)(rng() % 2));
        OmegaWord w(pre, per);
        if (!fib.is_admissible(w)) continue;
        ++seen;
        CHECK(fib.is_admissible(w.shifted()));
    }
    CHECK(seen == 100);
}

TEST_CASE("left word syntax") {
    Alphabet a{2};
    LeftWord w = parse_left("(10)01", a);
    // ...101010 01: innermost tail letter first
    CHECK(w.tail == Word{0, 1});
    CHECK(w.suffix == Word{0, 1});
    CHECK(render_left(w) == "(10)01");

    LeftWord v = parse_left("(1)", a);
    CHECK(v.tail == Word{1});
    CHECK(v.suffix.empty());

    CHECK_THROWS_AS(parse_left("()01", a), ParseError);
    CHECK_THROWS_AS(parse_left("101", a), ParseError);
}

TEST_CASE("omega parse errors") {
    Alphabet a{2};
    CHECK_THROWS_AS(parse_omega("01()", a), ParseError);
    CHECK_THROWS_AS(parse_omega("2(0)", a), ParseError);
    CHECK_THROWS_AS(parse_omega("01", a), ParseError);
}
