#include "ssg/invsemi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

namespace ssg::invsemi {

using words::Letter;
using words::OmegaWord;
using words::Sft;
using words::Word;

namespace {

bool matches(const Word& pattern, Letter x, Letter y) {
    if (pattern[0] != x) return false;
    return pattern.size() == 1 || pattern[1] == y;
}

} // namespace

RuleTable::RuleTable(std::string name, Sft sft, std::string symbols,
                     std::vector<RuleMap> maps)
    : name_(std::move(name)),
      sft_(std::move(sft)),
      symbols_(std::move(symbols)),
      maps_(std::move(maps)) {
    if (name_.empty()) throw Error("rule table needs a name");
    if (!symbols_.empty() &&
        static_cast<int>(symbols_.size()) != sft_.alphabet().size)
        throw Error("rule table symbols must cover the alphabet");
    for (size_t j = 0; j < maps_.size(); ++j) {
        const auto& m = maps_[j];
        if (m.name.empty() || m.name == "e")
            throw Error("map name '" + m.name + "' is empty or reserved");
        if (!index_.emplace(m.name, static_cast<int>(j)).second)
            throw Error("duplicate map name " + m.name);
    }
    audit();
}

const RuleMap& RuleTable::map(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownEntry("table " + name_ + " has no map named " + name);
    return maps_[it->second];
}

int RuleTable::map_index(const std::string& name) const {
    if (name == "e") return -1;
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownEntry("table " + name_ + " has no map named " + name);
    return it->second;
}

bool RuleTable::operator==(const RuleTable& o) const {
    return name_ == o.name_ && symbols_ == o.symbols_ && maps_ == o.maps_ &&
           sft_.alphabet().size == o.sft_.alphabet().size &&
           sft_.block_length() == o.sft_.block_length() &&
           sft_.admissible_blocks() == o.sft_.admissible_blocks();
}

void RuleTable::audit() const {
    const int d = sft_.alphabet().size;
    std::vector<Word> looks;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            Word w{static_cast<Letter>(x), static_cast<Letter>(y)};
            if (sft_.is_admissible(w)) looks.push_back(w);
        }

    for (const auto& m : maps_) {
        for (Letter x : m.domain)
            if (!sft_.alphabet().valid(x))
                throw Error("map " + m.name + " domain letter out of range");
        std::vector<int> hits(m.rules.size(), 0);
        for (const auto& r : m.rules) {
            if (r.pattern.empty() || r.pattern.size() > 2)
                throw Error("map " + m.name + ": pattern must have 1 or 2 letters");
            if (r.consume < 1 || r.consume > static_cast<int>(r.pattern.size()))
                throw Error("map " + m.name + ": rule must consume 1..|pattern| letters");
            if (r.output.empty())
                throw Error("map " + m.name + ": rule must emit at least one letter");
            if (!words::valid_word(sft_.alphabet(), r.pattern) ||
                !words::valid_word(sft_.alphabet(), r.output))
                throw Error("map " + m.name + ": rule letters out of range");
            map_index(r.cont); // UnknownEntry on a dangling continuation
        }
        for (const auto& look : looks) {
            int n = 0;
            for (size_t k = 0; k < m.rules.size(); ++k)
                if (matches(m.rules[k].pattern, look[0], look[1])) {
                    ++n;
                    ++hits[k];
                }
            bool in_domain = m.domain.count(look[0]) > 0;
            if (in_domain && n != 1)
                throw Error("map " + m.name + ": lookahead " +
                            words::render_word(look, symbols_) + " matches " +
                            std::to_string(n) + " rules, expected exactly one");
            if (!in_domain && n != 0)
                throw Error("map " + m.name + ": lookahead " +
                            words::render_word(look, symbols_) +
                            " outside the domain matches a rule");
        }
        for (size_t k = 0; k < m.rules.size(); ++k)
            if (hits[k] == 0)
                throw Error("map " + m.name + ": rule " + std::to_string(k) +
                            " never matches an admissible lookahead");
    }
}

namespace {

std::string pattern_str(const Rule& r, const std::string& symbols) {
    Word consumed(r.pattern.begin(), r.pattern.begin() + r.consume);
    std::string s = words::render_word(consumed, symbols);
    if (r.consume < static_cast<int>(r.pattern.size())) {
        Word look(r.pattern.begin() + r.consume, r.pattern.end());
        s += "." + words::render_word(look, symbols);
    }
    return s;
}

std::string rule_line(const std::string& map, const Rule& r, const std::string& symbols) {
    return map + ": " + pattern_str(r, symbols) + " -> " +
           words::render_word(r.output, symbols) + " " + r.cont;
}

} // namespace

std::string RuleTable::dump() const {
    std::string out;
    for (const auto& m : maps_)
        for (const auto& r : m.rules) out += rule_line(m.name, r, symbols_) + "\n";
    return out;
}

std::string render_table(const RuleTable& t) {
    const auto& sft = t.sft();
    const int d = sft.alphabet().size;
    const int m = sft.block_length();
    std::string symbols = t.symbols();
    if (symbols.empty()) symbols = std::string("0123456789").substr(0, d);

    std::ostringstream out;
    out << "table " << t.name() << "\n";
    out << "alphabet " << symbols << "\n";

    std::vector<Word> forbidden;
    Word w(m, 0);
    for (;;) {
        if (!sft.admissible_blocks().count(w)) forbidden.push_back(w);
        int i = m - 1;
        while (i >= 0 && w[i] == d - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    if (forbidden.empty()) {
        out << "shift full\n";
    } else {
        out << "forbid";
        for (const auto& b : forbidden) out << " " << words::render_word(b, symbols);
        out << "\n";
    }

    for (const auto& rm : t.maps()) {
        out << "map " << rm.name << " domain ";
        for (Letter x : rm.domain) out << symbols[x];
        out << "\n";
        for (const auto& r : rm.rules) out << rule_line(rm.name, r, symbols) << "\n";
    }
    return out.str();
}

RuleTable parse_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name, symbols;
    bool full_shift = false;
    std::vector<Word> forbidden;
    std::vector<RuleMap> maps;
    std::map<std::string, size_t> map_pos;
    words::Alphabet alpha;
    bool have_alphabet = false;

    auto need_alphabet = [&]() {
        if (!have_alphabet) throw ParseError("rule table: alphabet line must come first");
    };

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&]() { return " (line " + std::to_string(lineno) + ")"; };
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;

        if (tok == "table") {
            if (!(ls >> name)) throw ParseError("rule table: missing name" + where());
        } else if (tok == "alphabet") {
            if (!(ls >> symbols)) throw ParseError("rule table: missing symbols" + where());
            alpha.size = static_cast<int>(symbols.size());
            have_alphabet = true;
        } else if (tok == "shift") {
            if (!(ls >> tok) || tok != "full")
                throw ParseError("rule table: expected 'shift full'" + where());
            full_shift = true;
        } else if (tok == "forbid") {
            need_alphabet();
            while (ls >> tok) forbidden.push_back(words::parse_word(tok, alpha, symbols));
            if (forbidden.empty())
                throw ParseError("rule table: forbid line lists no blocks" + where());
        } else if (tok == "map") {
            need_alphabet();
            RuleMap rm;
            std::string dom;
            if (!(ls >> rm.name >> dom) || dom != "domain" || !(ls >> dom))
                throw ParseError("rule table: expected 'map NAME domain LETTERS'" + where());
            for (Letter x : words::parse_word(dom, alpha, symbols)) rm.domain.insert(x);
            if (!map_pos.emplace(rm.name, maps.size()).second)
                throw ParseError("rule table: duplicate map " + rm.name + where());
            maps.push_back(std::move(rm));
        } else if (!tok.empty() && tok.back() == ':') {
            need_alphabet();
            std::string mname = tok.substr(0, tok.size() - 1);
            auto it = map_pos.find(mname);
            if (it == map_pos.end())
                throw ParseError("rule table: rule for undeclared map " + mname + where());
            std::string pat, arrow, outw, cont;
            if (!(ls >> pat >> arrow >> outw >> cont) || arrow != "->")
                throw ParseError("rule table: expected 'MAP: PATTERN -> OUTPUT CONT'" + where());
            Rule r;
            auto dot = pat.find('.');
            if (dot == std::string::npos) {
                r.pattern = words::parse_word(pat, alpha, symbols);
                r.consume = static_cast<int>(r.pattern.size());
            } else {
                Word head = words::parse_word(pat.substr(0, dot), alpha, symbols);
                Word look = words::parse_word(pat.substr(dot + 1), alpha, symbols);
                r.consume = static_cast<int>(head.size());
                head.insert(head.end(), look.begin(), look.end());
                r.pattern = std::move(head);
            }
            r.output = words::parse_word(outw, alpha, symbols);
            r.cont = cont;
            maps[it->second].rules.push_back(std::move(r));
        } else {
            throw ParseError("rule table: unrecognized line '" + line + "'" + where());
        }
    }

    if (name.empty()) throw ParseError("rule table: missing 'table NAME' line");
    need_alphabet();
    if (!full_shift && forbidden.empty())
        throw ParseError("rule table: needs a 'forbid' or 'shift full' line");
    for (const auto& b : forbidden)
        if (b.size() != forbidden[0].size())
            throw ParseError("rule table: forbidden blocks must share one length");
    Sft sft = full_shift ? Sft::full_shift(alpha)
                         : Sft::forbidding(alpha, static_cast<int>(forbidden[0].size()),
                                           forbidden);
    return RuleTable(name, std::move(sft), symbols, std::move(maps));
}

words::OmegaWord apply_map(const RuleTable& t, const std::string& map,
                           const words::OmegaWord& w) {
    if (!t.sft().is_admissible(w))
        throw OutOfDomain("word " + words::render_omega(w, t.symbols()) +
                          " is not admissible in the " + t.name() + " subshift");
    int mi = t.map_index(map);

    // Resolve continuation names once; the evaluator then runs on indices.
    std::vector<std::vector<int>> cont(t.maps().size());
    for (size_t j = 0; j < t.maps().size(); ++j)
        for (const auto& r : t.maps()[j].rules)
            cont[j].push_back(t.map_index(r.cont));

    const size_t P = w.pre().size();
    const size_t Q = w.per().size();
    Word out;
    size_t i = 0;
    // First output length at which each (map, position mod period) state was
    // entered inside the periodic part; a repeat closes the output period.
    std::map<std::pair<int, size_t>, size_t> seen;
    const size_t step_cap = P + t.maps().size() * Q + 2;

    for (size_t step = 0; step <= step_cap; ++step) {
        if (mi < 0) {
            // Identity continuation: the rest of the input is copied verbatim.
            if (i < P) {
                out.insert(out.end(), w.pre().begin() + i, w.pre().end());
                return OmegaWord(out, w.per());
            }
            size_t r = (i - P) % Q;
            Word per(w.per().begin() + r, w.per().end());
            per.insert(per.end(), w.per().begin(), w.per().begin() + r);
            return OmegaWord(out, per);
        }
        if (i >= P) {
            auto key = std::make_pair(mi, (i - P) % Q);
            auto it = seen.find(key);
            if (it != seen.end()) {
                Word pre(out.begin(), out.begin() + it->second);
                Word per(out.begin() + it->second, out.end());
                return OmegaWord(pre, per);
            }
            seen.emplace(key, out.size());
        }
        const RuleMap& rm = t.maps()[mi];
        Letter x = w.at(i), y = w.at(i + 1);
        int found = -1;
        for (size_t k = 0; k < rm.rules.size(); ++k)
            if (matches(rm.rules[k].pattern, x, y)) {
                found = static_cast<int>(k);
                break;
            }
        if (found < 0) {
            Word look{x, y};
            throw OutOfDomain("map " + rm.name + " of table " + t.name() +
                              " has no rule for '" +
                              words::render_word(look, t.symbols()) +
                              "' at position " + std::to_string(i));
        }
        const Rule& r = rm.rules[found];
        out.insert(out.end(), r.output.begin(), r.output.end());
        i += r.consume;
        mi = cont[static_cast<size_t>(mi)][found];
    }
    throw Error("rewriting evaluator failed to cycle; rule table is inconsistent");
}

const RuleTable& fibonacci_table() {
    static const RuleTable t = [] {
        words::Alphabet a{2};
        Sft sft = Sft::forbidding(a, 2, {{1, 1}});
        std::vector<RuleMap> maps;
        maps.push_back({"a",
                        {0},
                        {
                            {{0, 0}, 2, {1, 0}, "e"},
                            {{0, 1}, 2, {0, 0}, "a"},
                        }});
        maps.push_back({"b",
                        {1},
                        {
                            {{1}, 1, {0}, "a"},
                        }});
        return RuleTable("fibonacci", std::move(sft), "01", std::move(maps));
    }();
    return t;
}

const RuleTable& penrose_table() {
    static const RuleTable t = [] {
        words::Alphabet al{3};
        Sft sft = Sft::forbidding(al, 2, {{1, 0}}); // no factor "ba"
        const Letter a = 0, b = 1, c = 2;
        std::vector<RuleMap> maps;
        maps.push_back({"L",
                        {a, b, c},
                        {
                            {{a, a}, 2, {b, c}, "e"},
                            {{a, b}, 2, {a, c}, "e"},
                            {{a, c}, 1, {a}, "M"},
                            {{b, b}, 2, {b, b}, "M"},
                            {{b, c}, 2, {a, a}, "e"},
                            {{c}, 1, {c}, "L"},
                        }});
        maps.push_back({"M",
                        {a, b, c},
                        {
                            {{a}, 1, {a}, "L"},
                            {{b}, 1, {c}, "e"},
                            {{c, a}, 2, {c, a}, "L"},
                            {{c, b}, 2, {b, b}, "e"},
                            {{c, c}, 2, {b, c}, "e"},
                        }});
        maps.push_back({"S",
                        {a, b, c},
                        {
                            {{a}, 1, {c}, "e"},
                            {{b}, 1, {b}, "M"},
                            {{c}, 1, {a}, "e"},
                        }});
        return RuleTable("penrose", std::move(sft), "abc", std::move(maps));
    }();
    return t;
}

const RuleTable& apollonian_table() {
    static const RuleTable t = [] {
        words::Alphabet al{4};
        std::vector<Word> doubles;
        for (int x = 0; x < 4; ++x)
            doubles.push_back({static_cast<Letter>(x), static_cast<Letter>(x)});
        Sft sft = Sft::forbidding(al, 2, doubles);
        std::vector<RuleMap> maps;
        for (int i = 0; i < 4; ++i) {
            RuleMap rm;
            rm.name = "g" + std::to_string(i + 1);
            rm.domain = {0, 1, 2, 3};
            for (int x = 0; x < 4; ++x) {
                if (x == i) continue;
                // strip a leading i: i x w -> x w
                rm.rules.push_back({{static_cast<Letter>(i), static_cast<Letter>(x)},
                                    2,
                                    {static_cast<Letter>(x)},
                                    "e"});
            }
            for (int x = 0; x < 4; ++x) {
                if (x == i) continue;
                // otherwise prepend i: x w -> i x w
                rm.rules.push_back({{static_cast<Letter>(x)},
                                    1,
                                    {static_cast<Letter>(i), static_cast<Letter>(x)},
                                    "e"});
            }
            maps.push_back(std::move(rm));
        }
        return RuleTable("apollonian", std::move(sft), "1234", std::move(maps));
    }();
    return t;
}

ZeckendorfCodec::ZeckendorfCodec(int length) {
    if (length < 1) throw Error("Fibonacci representation needs at least one digit");
    u.assign(static_cast<size_t>(length) + 1, 0);
    u[0] = 1;
    u[1] = 2;
    for (size_t i = 2; i < u.size(); ++i) {
        if (u[i - 1] > INT64_MAX - u[i - 2])
            throw OverflowError("Fibonacci numbers exceed 64 bits at this length");
        u[i] = u[i - 1] + u[i - 2];
    }
}

Word ZeckendorfCodec::encode(std::int64_t m) const {
    if (m < 0) throw Error("cannot encode a negative value");
    const int length = static_cast<int>(u.size()) - 1;
    if (m > u[length] - 1)
        throw OverflowError(std::to_string(m) + " does not fit in " +
                            std::to_string(length) + " Fibonacci digits");
    Word w(length, 0);
    std::int64_t rest = m;
    for (int i = length - 1; i >= 0; --i)
        if (u[i] <= rest) {
            w[i] = 1;
            rest -= u[i];
        }
    return w; // greedy picks non-adjacent indices: u_i + u_{i+1} = u_{i+2}
}

std::int64_t ZeckendorfCodec::decode(const Word& w) const {
    if (w.size() > u.size()) throw Error("representation longer than the codec");
    std::int64_t m = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 1) throw Error("Fibonacci digits are 0 or 1");
        if (w[i] == 1 && i + 1 < w.size() && w[i + 1] == 1)
            throw Error("Fibonacci representation has adjacent ones");
        if (w[i]) m += u[i];
    }
    return m;
}

std::int64_t fibonacci_successor(std::int64_t m, int length) {
    ZeckendorfCodec codec(length);
    if (m < 0) throw Error("fibonacci_successor needs a nonnegative value");
    if (m + 1 > codec.u[static_cast<size_t>(length)] - 1)
        throw OverflowError("m+1 does not fit in " + std::to_string(length) +
                            " Fibonacci digits");
    Word w = codec.encode(m);
    OmegaWord in(w, {0});
    const std::string map = in.at(0) == 0 ? "a" : "b";
    OmegaWord out = apply_map(fibonacci_table(), map, in);
    if (out.per() != Word{0})
        throw Error("Fibonacci carry did not terminate; table is inconsistent");
    ZeckendorfCodec wide(std::max<int>(length + 1, static_cast<int>(out.pre().size())));
    return wide.decode(out.pre());
}

words::OmegaWord apollonian_apply(int i, const words::OmegaWord& w) {
    if (i < 0 || i >= 4) throw Error("inversion index must be one of 0..3");
    return apply_map(apollonian_table(), "g" + std::to_string(i + 1), w);
}

std::vector<Word> admissible_words(const Sft& sft, int len) {
    std::vector<Word> out;
    const int d = sft.alphabet().size;
    const int m = sft.block_length();
    Word cur;
    auto ok_tail = [&]() {
        if (static_cast<int>(cur.size()) < m) return true;
        Word block(cur.end() - m, cur.end());
        return sft.admissible_blocks().count(block) > 0;
    };
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x < d; ++x) {
            cur.push_back(static_cast<Letter>(x));
            if (ok_tail()) rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<OmegaWord> periodic_tail_basis(const Sft& sft, int max_period) {
    std::set<OmegaWord> basis;
    const int d = sft.alphabet().size;
    for (int p = 1; p <= max_period; ++p) {
        Word t(p, 0);
        for (;;) {
            OmegaWord om({}, t);
            if (sft.is_admissible(om)) basis.insert(om);
            int i = p - 1;
            while (i >= 0 && t[i] == d - 1) t[i--] = 0;
            if (i < 0) break;
            ++t[i];
        }
    }
    return {basis.begin(), basis.end()};
}

bool involution_check(const RuleTable& t, const std::string& map, int depth) {
    t.map(map); // UnknownEntry early
    auto prefixes = admissible_words(t.sft(), depth);
    auto tails = periodic_tail_basis(t.sft(), 3);
    for (const auto& w : prefixes)
        for (const auto& tail : tails) {
            OmegaWord full(w, tail.per());
            if (!t.sft().is_admissible(full)) continue;
            try {
                OmegaWord once = apply_map(t, map, full);
                if (apply_map(t, map, once) != full) return false;
            } catch (const OutOfDomain&) {
                return false;
            }
        }
    return true;
}

} // namespace ssg::invsemi
