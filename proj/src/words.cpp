#include "ssg/words.hpp"

#include <algorithm>

namespace ssg::words {

bool valid_word(const Alphabet& a, const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](Letter x) { return a.valid(x); });
}

Word parse_word(const std::string& s, const Alphabet& a, const std::string& symbols) {
    Word w;
    w.reserve(s.size());
    for (char ch : s) {
        int x;
        if (symbols.empty()) {
            if (ch < '0' || ch > '9') throw ParseError(std::string("bad letter '") + ch + "'");
            x = ch - '0';
        } else {
            auto pos = symbols.find(ch);
            if (pos == std::string::npos)
                throw ParseError(std::string("bad letter '") + ch + "'");
            x = static_cast<int>(pos);
        }
        if (!a.valid(static_cast<Letter>(x)))
            throw ParseError(std::string("letter '") + ch + "' outside alphabet");
        w.push_back(static_cast<Letter>(x));
    }
    return w;
}

std::string render_word(const Word& w, const std::string& symbols) {
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) s += symbols.empty() ? static_cast<char>('0' + x) : symbols.at(x);
    return s;
}

namespace {

// Smallest p such that per is the p-prefix repeated. Any period of a purely
// periodic infinite word divides the given one, so only divisors are checked.
size_t minimal_period(const Word& per) {
    for (size_t p = 1; p <= per.size(); ++p) {
        if (per.size() % p != 0) continue;
        bool ok = true;
        for (size_t i = p; i < per.size() && ok; ++i) ok = per[i] == per[i - p];
        if (ok) return p;
    }
    return per.size();
}

} // namespace

OmegaWord::OmegaWord(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {
    if (per_.empty()) throw Error("omega word needs a nonempty period");
    per_.resize(minimal_period(per_));
    // pre·(qx)·(qx)·… = (pre minus x)·(xq)·(xq)·… whenever pre ends in x.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.begin(), per_.end() - 1, per_.end());
    }
}

OmegaWord OmegaWord::shifted() const {
    if (!pre_.empty()) return OmegaWord(Word(pre_.begin() + 1, pre_.end()), per_);
    Word p = per_;
    std::rotate(p.begin(), p.begin() + 1, p.end());
    return OmegaWord({}, p);
}

Word OmegaWord::prefix(size_t n) const {
    Word w;
    w.reserve(n);
    for (size_t i = 0; i < n; ++i) w.push_back(at(i));
    return w;
}

bool omega_eq(const OmegaWord& a, const OmegaWord& b) { return a == b; }

OmegaWord parse_omega(const std::string& s, const Alphabet& a, const std::string& symbols) {
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw ParseError("omega word must look like PRE(PERIOD): '" + s + "'");
    Word pre = parse_word(s.substr(0, open), a, symbols);
    Word per = parse_word(s.substr(open + 1, s.size() - open - 2), a, symbols);
    return OmegaWord(std::move(pre), std::move(per));
}

std::string render_omega(const OmegaWord& w, const std::string& symbols) {
    return render_word(w.pre(), symbols) + "(" + render_word(w.per(), symbols) + ")";
}

LeftWord parse_left(const std::string& s, const Alphabet& a, const std::string& symbols) {
    auto close = s.find(')');
    if (s.empty() || s.front() != '(' || close == std::string::npos)
        throw ParseError("left word must look like (TAIL)SUFFIX: '" + s + "'");
    Word block = parse_word(s.substr(1, close - 1), a, symbols);
    if (block.empty()) throw ParseError("left word tail must be nonempty: '" + s + "'");
    LeftWord w;
    w.tail.assign(block.rbegin(), block.rend());
    w.suffix = parse_word(s.substr(close + 1), a, symbols);
    return w;
}

std::string render_left(const LeftWord& w, const std::string& symbols) {
    Word block(w.tail.rbegin(), w.tail.rend());
    return "(" + render_word(block, symbols) + ")" + render_word(w.suffix, symbols);
}

Sft::Sft(Alphabet a, int m, std::set<Word> admissible)
    : alpha_(a), m_(m), blocks_(std::move(admissible)) {
    if (m < 1) throw Error("block length must be at least 1");
    for (const auto& b : blocks_)
        if (static_cast<int>(b.size()) != m || !valid_word(alpha_, b))
            throw Error("bad admissible block");
}

Sft Sft::full_shift(Alphabet a) {
    std::set<Word> all;
    for (int x = 0; x < a.size; ++x) all.insert(Word{static_cast<Letter>(x)});
    return Sft(a, 1, std::move(all));
}

Sft Sft::forbidding(Alphabet a, int m, const std::vector<Word>& blocks) {
    std::set<Word> bad(blocks.begin(), blocks.end());
    std::set<Word> good;
    Word w(m, 0);
    // Enumerate all d^m blocks odometer-style.
    while (true) {
        if (!bad.count(w)) good.insert(w);
        int i = m - 1;
        while (i >= 0 && w[i] == a.size - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    return Sft(a, m, std::move(good));
}

bool Sft::is_admissible(const Word& w) const {
    if (!valid_word(alpha_, w)) return false;
    if (static_cast<int>(w.size()) < m_) return true;
    for (size_t i = 0; i + m_ <= w.size(); ++i)
        if (!blocks_.count(Word(w.begin() + i, w.begin() + i + m_))) return false;
    return true;
}

bool Sft::is_admissible(const OmegaWord& w) const {
    // Windows starting beyond |pre|+|per| repeat earlier ones, so a prefix of
    // length |pre| + |per| + m - 1 sees every factor of the infinite word.
    return is_admissible(w.prefix(w.pre().size() + w.per().size() + m_ - 1));
}

} // namespace ssg::words
