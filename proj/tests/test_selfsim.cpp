#include "doctest.h"

#include <map>
#include <random>

#include "ssg/catalog.hpp"
#include "ssg/selfsim.hpp"

using namespace ssg;
using namespace ssg::selfsim;
using words::Alphabet;
using words::Letter;
using words::Word;

namespace {

Group cat(const std::string& name) { return catalog::lookup(name).group(); }

Element el(const Group& g, const std::string& text) { return parse_element(g, text); }

Word w2(const std::string& s) { return words::parse_word(s, Alphabet{2}); }

bool same_action(const Element& a, const Element& b) {
    return is_trivial(multiply(a, inverse(b)));
}

GWord random_gword(const GroupDef& g, std::mt19937_64& rng, int maxlen) {
    GWord w;
    int n = (int)(rng() % (maxlen + 1));
    for (int i = 0; i < n; ++i)
        w.push_back({(int)(rng() % g.generators().size()), rng() % 2 == 0});
    return w;
}

} // namespace

TEST_CASE("group definition language round-trip") {
    for (const auto& e : catalog::entries()) {
        if (!e.is_group()) continue;
        Group g = e.group();
        Group back = parse_group_dsl(render_group_dsl(*g));
        CHECK(same_definition(*g, *back));
    }
}

TEST_CASE("parse errors in the definition language") {
    CHECK_THROWS_AS(parse_group_dsl("group x alphabet 2\na = perm(0 2) [1, 1]\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_group_dsl("group x alphabet 2\na = perm() [b, 1]\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_group_dsl("group x\n"), ParseError);
}

TEST_CASE("restrictions of the odometer and Grigorchuk generators") {
    Group add = cat("adding_machine");
    Element a = el(add, "a");
    CHECK(is_trivial(restriction(a, w2("0"))));
    CHECK(same_action(restriction(a, w2("1")), a));

    Group gr = cat("grigorchuk");
    CHECK(same_action(restriction(el(gr, "b"), w2("0")), el(gr, "a")));
    CHECK(same_action(restriction(el(gr, "b"), w2("1")), el(gr, "c")));
    CHECK(same_action(restriction(el(gr, "c"), w2("1")), el(gr, "d")));
    CHECK(same_action(restriction(el(gr, "d"), w2("1")), el(gr, "b")));
    CHECK(is_trivial(restriction(el(gr, "d"), w2("0"))));
}

TEST_CASE("restriction composes along products") {
    Group gr = cat("grigorchuk");
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 25; ++rep) {
        Element g = make_element(gr, random_gword(*gr, rng, 5));
        Element h = make_element(gr, random_gword(*gr, rng, 5));
        int depth = 1 + (int)(rng() % 4);
        Word v;
        for (int i = 0; i < depth; ++i) v.push_back((Letter)(rng() % 2));
        Element lhs = restriction(multiply(g, h), v);
        Element rhs = multiply(restriction(g, v), restriction(h, act(g, v)));
        CHECK(same_action(lhs, rhs));
    }
}

TEST_CASE("restriction splits the action on concatenations") {
    Group gr = cat("grigorchuk");
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 25; ++rep) {
        Element g = make_element(gr, random_gword(*gr, rng, 6));
        Word v, u;
        for (int i = 0; i < 3; ++i) v.push_back((Letter)(rng() % 2));
        for (int i = 0; i < 4; ++i) u.push_back((Letter)(rng() % 2));
        Word vu = v;
        vu.insert(vu.end(), u.begin(), u.end());
        Word expect = act(g, v);
        Word rest = act(restriction(g, v), u);
        expect.insert(expect.end(), rest.begin(), rest.end());
        CHECK(act(g, vu) == expect);
    }
}

TEST_CASE("element automata") {
    Group gr = cat("grigorchuk");
    auto b = element_automaton(el(gr, "b"));
    CHECK(mealy::act(b, w2("00")) == w2("00"));
    CHECK(mealy::act(b, w2("01")) == w2("01"));
    CHECK(mealy::act(b, w2("10")) == w2("11"));

    auto e = element_automaton(el(gr, ""));
    CHECK(e.m().states() == 1);
    CHECK(mealy::acts_trivially(e.m(), e.state));

    Group add = cat("adding_machine");
    auto aa = element_automaton(el(add, "aa"));
    CHECK(mealy::act(aa, w2("00")) == w2("01"));
}

TEST_CASE("word problem basics") {
    Group gr = cat("grigorchuk");
    CHECK(is_trivial(el(gr, "aa")));
    CHECK(is_trivial(el(gr, "adadadad")));
    CHECK_FALSE(is_trivial(el(gr, "ab")));
    CHECK(is_trivial(el(gr, "bcd")));
}

TEST_CASE("orders") {
    Group gr = cat("grigorchuk");
    auto r = order(el(gr, "d"), 16);
    REQUIRE(r.order.has_value());
    CHECK(*r.order == 2);
    CHECK(order(el(gr, ""), 16).order.value() == 1);

    Group add = cat("adding_machine");
    auto u = order(el(add, "a"), 64);
    CHECK_FALSE(u.order.has_value());
    CHECK(u.cap == 64);
}

TEST_CASE("level permutations") {
    Group add = cat("adding_machine");
    auto perm = act_level(el(add, "a"), 2);
    CHECK(perm == std::vector<int>{2, 3, 1, 0});
    CHECK(perm_cycles(perm) == "(0 2 1 3)");

    Group gr = cat("grigorchuk");
    CHECK(act_level(el(gr, "a"), 1) == std::vector<int>{1, 0});
    CHECK(act_level(el(gr, ""), 3) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("level permutations project to lower levels") {
    std::mt19937_64 rng(33);
    for (const char* name : {"grigorchuk", "adding_machine", "img_z2_minus_1"}) {
        Group g = cat(name);
        for (int rep = 0; rep < 5; ++rep) {
            Element e = make_element(g, random_gword(*g, rng, 5));
            for (int n = 1; n <= 3; ++n) {
                auto big = act_level(e, n + 1);
                auto small = act_level(e, n);
                int d = g->alphabet();
                for (size_t i = 0; i < big.size(); ++i)
                    CHECK(big[i] / d == small[i / d]);
            }
        }
    }
}

TEST_CASE("level quotient orders") {
    Group gr = cat("grigorchuk");
    CHECK(level_quotient_order(*gr, 3).str() == "128");
    CHECK(level_quotient_order(*gr, 5).str() == "4194304");

    Group add = cat("adding_machine");
    for (int n = 1; n <= 6; ++n)
        CHECK(level_quotient_order(*add, n) == BigUint::pow(2, n));

    std::map<std::uint64_t, std::uint64_t> f;
    CHECK(level_quotient_order_factored(*gr, 4, f).str() == "4096");
    REQUIRE(f.size() == 1);
    CHECK(f[2] == 12);
}

TEST_CASE("level quotient orders divide up the tower") {
    for (const char* name : {"grigorchuk", "fabrykowski_gupta", "img_z2_minus_1"}) {
        Group g = cat(name);
        std::map<std::uint64_t, std::uint64_t> prev, cur;
        level_quotient_order_factored(*g, 1, prev);
        for (int n = 2; n <= 4; ++n) {
            cur.clear();
            level_quotient_order_factored(*g, n, cur);
            for (auto& [p, e] : prev) CHECK(cur[p] >= e);
            prev = cur;
        }
    }
}

TEST_CASE("hausdorff estimates") {
    Group gr = cat("grigorchuk");
    auto h3 = hausdorff_estimate(*gr, 3);
    CHECK(h3.exact);
    CHECK(h3.num == 1);
    CHECK(h3.den == 1);

    auto h6 = hausdorff_estimate(*gr, 6);
    CHECK(h6.exact);
    CHECK(h6.num == 2);
    CHECK(h6.den == 3);
    CHECK(h6.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    Group triv = parse_group_dsl("group trivial alphabet 2\ne = perm() [1, 1]\n");
    auto h0 = hausdorff_estimate(*triv, 4);
    CHECK(h0.exact);
    CHECK(h0.num == 0);
    CHECK(h0.value == 0.0);
}

TEST_CASE("portraits") {
    Group add = cat("adding_machine");
    auto p = portrait(el(add, "a"), 2);
    REQUIRE(p.size() == 3);
    CHECK(p[Word{}] == std::vector<int>{1, 0});
    CHECK(p[Word{0}] == std::vector<int>{0, 1});
    CHECK(p[Word{1}] == std::vector<int>{1, 0});

    Group gr = cat("grigorchuk");
    auto pb = portrait(el(gr, "b"), 2);
    CHECK(pb[Word{}] == std::vector<int>{0, 1});
    CHECK(pb[Word{0}] == std::vector<int>{1, 0});
    CHECK(pb[Word{1}] == std::vector<int>{0, 1});

    auto pe = portrait(el(gr, ""), 3);
    for (auto& [v, perm] : pe) CHECK(perm == std::vector<int>{0, 1});
}

TEST_CASE("portraits reconstruct the action") {
    Group gr = cat("grigorchuk");
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 15; ++rep) {
        Element e = make_element(gr, random_gword(*gr, rng, 6));
        int depth = 4;
        auto p = portrait(e, depth);
        for (size_t idx = 0; idx < (size_t(1) << depth); ++idx) {
            Word v = index_to_word(idx, 2, depth);
            Word img;
            Word prefix;
            for (Letter x : v) {
                img.push_back((Letter)p.at(prefix)[x]);
                prefix.push_back(x);
            }
            CHECK(img == act(e, v));
        }
    }
}

TEST_CASE("substitution relators") {
    Group gr = cat("grigorchuk");
    auto pres = catalog::grigorchuk_presentation(gr);
    CHECK(verify_substitution_relators(gr, pres.sigma, pres.relators, 2));

    Group img = cat("img_z2_minus_1");
    GWord r = parse_gword(*img, "b'b'a'a'bbaab'b'a'a'b'b'aabbbb");
    CHECK(verify_substitution_relators(img, {}, {r}, 0));
    CHECK(verify_substitution_relators(img, {}, {GWord{}}, 2));
}

TEST_CASE("inverses cancel in every catalog group") {
    std::mt19937_64 rng(35);
    for (const auto& entry : catalog::entries()) {
        if (!entry.is_group()) continue;
        Group g = entry.group();
        for (int rep = 0; rep < 100; ++rep) {
            Element e = make_element(g, random_gword(*g, rng, 8));
            CHECK(is_trivial(multiply(e, inverse(e))));
        }
    }
}

TEST_CASE("torsion orders divide out") {
    Group gr = cat("grigorchuk");
    for (const char* name : {"a", "b", "c", "d", "ab"}) {
        auto r = order(el(gr, name), 64);
        REQUIRE(r.order.has_value());
        GWord pow;
        for (int i = 0; i < *r.order; ++i) {
            GWord w = parse_gword(*gr, name);
            pow.insert(pow.end(), w.begin(), w.end());
        }
        CHECK(is_trivial(make_element(gr, pow)));
    }
    Group fg = cat("fabrykowski_gupta");
    auto r = order(el(fg, "a"), 16);
    CHECK(r.order.value() == 3);
}

TEST_CASE("free reduction and rendering") {
    Group gr = cat("grigorchuk");
    GWord w = parse_gword(*gr, "ab'ba");
    CHECK(free_reduce(w).size() == 2);
    CHECK(render_gword(*gr, free_reduce(w)) == "aa");
    CHECK(render_gword(*gr, GWord{}) == "1");
    CHECK(render_element(el(gr, "ad'")) == "ad'");
    CHECK_THROWS_AS(parse_gword(*gr, "ax"), ParseError);
}

TEST_CASE("symmetrized generators") {
    Group gr = cat("grigorchuk");
    auto sym = symmetrized_generators(gr);
    CHECK(sym.size() == 4); // all four are involutions

    Group add = cat("adding_machine");
    auto sa = symmetrized_generators(add);
    REQUIRE(sa.size() == 2);
    CHECK(sa[0].first == "a");
    CHECK(sa[1].first == "a'");
}
