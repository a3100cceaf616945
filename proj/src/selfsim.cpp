#include "ssg/selfsim.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace ssg::selfsim {

GWord free_reduce(GWord w) {
    GWord out;
    for (const GenTerm& t : w) {
        if (!out.empty() && out.back().gen == t.gen && out.back().inv != t.inv)
            out.pop_back();
        else
            out.push_back(t);
    }
    return out;
}

GWord gword_inverse(const GWord& w) {
    GWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, !it->inv});
    return out;
}

std::shared_ptr<GroupDef> GroupDef::create(std::string name, int alphabet,
                                           std::vector<Generator> gens) {
    if (alphabet < 1) throw Error("alphabet must be nonempty");
    auto g = std::shared_ptr<GroupDef>(new GroupDef());
    g->name_ = std::move(name);
    g->alpha_ = alphabet;
    g->gens_ = std::move(gens);
    for (const Generator& gen : g->gens_) {
        if (gen.name.empty() || gen.name == "1")
            throw Error("generator needs a name other than '1'");
        if (static_cast<int>(gen.perm.size()) != alphabet ||
            static_cast<int>(gen.rest.size()) != alphabet)
            throw Error("generator '" + gen.name + "' has wrong arity");
        std::vector<bool> hit(alphabet, false);
        for (int x : gen.perm) {
            if (x < 0 || x >= alphabet || hit[x])
                throw Error("generator '" + gen.name + "' root permutation is not a bijection");
            hit[x] = true;
        }
        for (const GWord& w : gen.rest)
            for (const GenTerm& t : w)
                if (t.gen < 0 || t.gen >= static_cast<int>(g->gens_.size()))
                    throw Error("generator '" + gen.name + "' restriction references unknown generator");
    }
    std::set<std::string> names;
    for (const Generator& gen : g->gens_)
        if (!names.insert(gen.name).second) throw Error("duplicate generator name " + gen.name);
    return g;
}

int GroupDef::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    throw UnknownEntry("no generator named '" + name + "'");
}

namespace {

// One threading step: image letter of x under w and the restriction word w|_x.
std::pair<int, GWord> thread_letter(const GroupDef& g, const GWord& w, int x) {
    GWord rest;
    int cur = x;
    for (const GenTerm& t : w) {
        const Generator& gen = g.generators()[t.gen];
        if (!t.inv) {
            for (const GenTerm& r : gen.rest[cur]) rest.push_back(r);
            cur = gen.perm[cur];
        } else {
            // g^{-1}|_x = (g|_{x^{g^{-1}}})^{-1}
            int pre = -1;
            for (int y = 0; y < g.alphabet(); ++y)
                if (gen.perm[y] == cur) { pre = y; break; }
            assert(pre >= 0);
            GWord inv = gword_inverse(gen.rest[pre]);
            for (const GenTerm& r : inv) rest.push_back(r);
            cur = pre;
        }
    }
    return {cur, free_reduce(std::move(rest))};
}

constexpr size_t kGeneratorClosureCap = 1 << 16;

} // namespace

mealy::Initial GroupDef::generator_automaton(GenTerm t) const {
    auto cached = automaton_cache_.find(t);
    if (cached != automaton_cache_.end()) return cached->second;

    auto machine = std::make_shared<mealy::Machine>();
    machine->alphabet = alpha_;
    std::map<GWord, int> index;
    std::vector<GWord> queue{free_reduce({t})};
    index[queue[0]] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        GWord w = queue[head];
        std::vector<int> trow(alpha_);
        std::vector<Letter> orow(alpha_);
        for (int x = 0; x < alpha_; ++x) {
            auto [img, rest] = thread_letter(*this, w, x);
            orow[x] = static_cast<Letter>(img);
            auto [it, fresh] = index.emplace(std::move(rest), static_cast<int>(queue.size()));
            if (fresh) {
                queue.push_back(it->first);
                if (queue.size() > kGeneratorClosureCap)
                    throw SizeBoundExceeded("generator '" + gens_[t.gen].name +
                                            "' has no finite restriction closure");
            }
            trow[x] = it->second;
        }
        machine->trans.push_back(std::move(trow));
        machine->out.push_back(std::move(orow));
    }
    mealy::Initial a = mealy::canonicalize(mealy::Initial{std::move(machine), 0});
    automaton_cache_.emplace(t, a);
    return a;
}

Element make_element(Group g, GWord w) {
    return Element{std::move(g), free_reduce(std::move(w))};
}

Element multiply(const Element& a, const Element& b) {
    if (a.group != b.group) throw Error("elements of different groups");
    GWord w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return make_element(a.group, std::move(w));
}

Element inverse(const Element& e) { return Element{e.group, gword_inverse(e.word)}; }

GWord parse_gword(const GroupDef& g, const std::string& text) {
    GWord w;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*') {
            ++i;
            continue;
        }
        if (text[i] == '1') {
            ++i;
            continue;
        }
        // Longest generator name match at position i.
        int best = -1;
        size_t best_len = 0;
        for (size_t k = 0; k < g.generators().size(); ++k) {
            const std::string& name = g.generators()[k].name;
            if (name.size() > best_len && text.compare(i, name.size(), name) == 0) {
                best = static_cast<int>(k);
                best_len = name.size();
            }
        }
        if (best < 0) throw ParseError("cannot read generator at '" + text.substr(i) + "'");
        i += best_len;
        bool inv = false;
        if (i < text.size() && text[i] == '\'') {
            inv = true;
            ++i;
        }
        w.push_back({best, inv});
    }
    return free_reduce(std::move(w));
}

Element parse_element(const Group& g, const std::string& text) {
    return Element{g, parse_gword(*g, text)};
}

std::string render_gword(const GroupDef& g, const GWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const GenTerm& t : w) {
        s += g.generators()[t.gen].name;
        if (t.inv) s += '\'';
    }
    return s;
}

std::string render_element(const Element& e) { return render_gword(*e.group, e.word); }

int root_image(const GroupDef& g, const GWord& w, int x) {
    int cur = x;
    for (const GenTerm& t : w) {
        const Generator& gen = g.generators()[t.gen];
        if (!t.inv) {
            cur = gen.perm[cur];
        } else {
            for (int y = 0; y < g.alphabet(); ++y)
                if (gen.perm[y] == cur) { cur = y; break; }
        }
    }
    return cur;
}

Element restriction(const Element& e, const Word& v) {
    GWord w = e.word;
    for (Letter x : v) {
        if (x >= e.group->alphabet()) throw AlphabetMismatch("vertex letter outside alphabet");
        w = thread_letter(*e.group, w, x).second;
    }
    return Element{e.group, std::move(w)};
}

Word act(const Element& e, const Word& w) {
    GWord cur = e.word;
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (x >= e.group->alphabet()) throw AlphabetMismatch("letter outside alphabet");
        out.push_back(static_cast<Letter>(root_image(*e.group, cur, x)));
        cur = thread_letter(*e.group, cur, x).second;
    }
    return out;
}

OmegaWord act_omega(const Element& e, const OmegaWord& w) {
    return mealy::act_omega(element_automaton(e), w);
}

mealy::Initial element_automaton(const Element& e) {
    if (e.word.empty()) return mealy::identity(e.group->alphabet());
    mealy::Initial acc = e.group->generator_automaton(e.word[0]);
    for (size_t i = 1; i < e.word.size(); ++i) {
        acc = mealy::compose(acc, e.group->generator_automaton(e.word[i]));
        acc = mealy::canonicalize(acc);
    }
    return acc;
}

bool is_trivial(const Element& e) {
    mealy::Initial a = element_automaton(e);
    return mealy::acts_trivially(a.m(), a.state);
}

OrderResult order(const Element& e, int cap) {
    mealy::Initial base = element_automaton(e);
    if (mealy::acts_trivially(base.m(), base.state)) return {1, cap};
    mealy::Initial pow = base;
    for (int k = 2; k <= cap; ++k) {
        pow = mealy::canonicalize(mealy::compose(pow, base));
        if (mealy::acts_trivially(pow.m(), pow.state)) return {k, cap};
    }
    return {std::nullopt, cap};
}

size_t level_size_checked(int alphabet, int n, size_t max_points) {
    if (n < 0) throw Error("negative level");
    size_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<size_t>(alphabet);
        if (size > max_points)
            throw SizeBoundExceeded("level " + std::to_string(n) + " exceeds the point bound " +
                                    std::to_string(max_points));
    }
    return size;
}

Word index_to_word(size_t index, int alphabet, int n) {
    Word w(n);
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<Letter>(index % alphabet);
        index /= alphabet;
    }
    return w;
}

size_t word_to_index(const Word& w, int alphabet) {
    size_t idx = 0;
    for (Letter x : w) idx = idx * alphabet + x;
    return idx;
}

std::vector<int> act_level(const Element& e, int n, size_t max_points) {
    int d = e.group->alphabet();
    size_t size = level_size_checked(d, n, max_points);
    mealy::Initial a = element_automaton(e);
    const mealy::Machine& m = a.m();
    std::vector<int> perm(size);
    // Depth-first over the tree, carrying the automaton state, so each edge
    // of X^<=n is traversed once.
    std::vector<int> st{a.state};
    std::vector<size_t> in{0}, out{0};
    Word stack;
    if (n == 0) {
        perm[0] = 0;
        return perm;
    }
    std::vector<int> letter{0};
    while (!letter.empty()) {
        int depth = static_cast<int>(letter.size()) - 1;
        int x = letter.back();
        if (x == d) {
            letter.pop_back();
            st.pop_back();
            in.pop_back();
            out.pop_back();
            if (!letter.empty()) ++letter.back();
            continue;
        }
        int q = st.back();
        size_t in_idx = in.back() * d + static_cast<size_t>(x);
        size_t out_idx = out.back() * d + static_cast<size_t>(m.out[q][x]);
        if (depth + 1 == n) {
            perm[in_idx] = static_cast<int>(out_idx);
            ++letter.back();
        } else {
            st.push_back(m.trans[q][x]);
            in.push_back(in_idx);
            out.push_back(out_idx);
            letter.push_back(0);
        }
    }
    return perm;
}

namespace {

using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

// Deterministic Schreier-Sims with nested generator sets: level i holds every
// strong generator fixing the first i base points, and closure is verified
// bottom-up, restarting at the deepest level a repair touches.
class StabilizerChain {
public:
    explicit StabilizerChain(int degree) : deg_(degree) {}

    void add(const Perm& g) {
        if (!perm_is_identity(g)) input_.push_back(g);
    }

    std::vector<size_t> orbit_sizes() {
        build();
        std::vector<size_t> sizes;
        for (const Level& lv : levels_) sizes.push_back(lv.orbit.size());
        return sizes;
    }

private:
    struct Level {
        int base = 0;
        std::vector<Perm> gens;
        std::vector<int> orbit;            // BFS order
        std::vector<Perm> transversal;     // aligned with orbit; maps base -> point
        std::vector<int> where;            // point -> orbit position or -1
    };

    int deg_;
    std::vector<Perm> input_;
    std::vector<Level> levels_;

    void recompute_orbit(size_t i) {
        Level& lv = levels_[i];
        lv.orbit.assign(1, lv.base);
        lv.transversal.assign(1, identity_perm());
        lv.where.assign(deg_, -1);
        lv.where[lv.base] = 0;
        for (size_t head = 0; head < lv.orbit.size(); ++head) {
            int p = lv.orbit[head];
            for (const Perm& s : lv.gens) {
                int q = s[p];
                if (lv.where[q] < 0) {
                    lv.where[q] = static_cast<int>(lv.orbit.size());
                    lv.orbit.push_back(q);
                    lv.transversal.push_back(perm_compose(lv.transversal[head], s));
                }
            }
        }
    }

    Perm identity_perm() const {
        Perm p(deg_);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    // Appends g to every level from `from` down to the first level whose base
    // point it moves, growing the base when it fixes all existing points.
    // Returns that deepest level.
    size_t place(const Perm& g, size_t from) {
        for (size_t l = from;; ++l) {
            if (l == levels_.size()) {
                int base = 0;
                while (g[base] == base) ++base;
                levels_.push_back(Level{base, {}, {}, {}, {}});
            }
            levels_[l].gens.push_back(g);
            recompute_orbit(l);
            if (g[levels_[l].base] != levels_[l].base) return l;
        }
    }

    // Strips g through levels from..end; stops where the base image leaves the
    // orbit. Returns the residue and the level reached.
    std::pair<Perm, size_t> strip(Perm g, size_t from) const {
        for (size_t l = from; l < levels_.size(); ++l) {
            if (perm_is_identity(g)) return {std::move(g), l};
            const Level& lv = levels_[l];
            int img = g[lv.base];
            if (lv.where[img] < 0) return {std::move(g), l};
            g = perm_compose(g, perm_inverse(lv.transversal[lv.where[img]]));
        }
        return {std::move(g), levels_.size()};
    }

    // Checks Schreier closure at level i. On a violation the residue is placed
    // at levels i+1.. and the deepest changed level is reported for re-entry.
    bool verify_level(size_t i, size_t& redo) {
        const Level& lv = levels_[i];
        for (size_t pos = 0; pos < lv.orbit.size(); ++pos) {
            for (const Perm& s : lv.gens) {
                int img = s[lv.orbit[pos]];
                Perm schreier = perm_compose(perm_compose(lv.transversal[pos], s),
                                             perm_inverse(lv.transversal[lv.where[img]]));
                if (perm_is_identity(schreier)) continue;
                auto [res, at] = strip(std::move(schreier), i + 1);
                if (!perm_is_identity(res)) {
                    redo = place(res, i + 1);
                    return false;
                }
            }
        }
        return true;
    }

    void build() {
        levels_.clear();
        for (const Perm& g : input_) place(g, 0);
        if (levels_.empty()) return;
        size_t i = levels_.size();
        while (i > 0) {
            size_t redo = 0;
            if (verify_level(i - 1, redo))
                --i;
            else
                i = redo + 1;
        }
    }
};

std::map<std::uint64_t, std::uint64_t> factor_small(std::uint64_t n) {
    std::map<std::uint64_t, std::uint64_t> f;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

} // namespace

BigUint level_quotient_order_factored(const GroupDef& g, int n,
                                      std::map<std::uint64_t, std::uint64_t>& factors,
                                      size_t max_points) {
    size_t size = level_size_checked(g.alphabet(), n, max_points);
    StabilizerChain chain(static_cast<int>(size));
    auto self = g.shared_from_this();
    for (size_t i = 0; i < g.generators().size(); ++i) {
        Element gen{self, {{static_cast<int>(i), false}}};
        chain.add(act_level(gen, n, max_points));
    }
    BigUint ord(1);
    factors.clear();
    for (size_t s : chain.orbit_sizes()) {
        ord.mul_small(s);
        for (auto [p, k] : factor_small(s)) factors[p] += k;
    }
    return ord;
}

BigUint level_quotient_order(const GroupDef& g, int n, size_t max_points) {
    std::map<std::uint64_t, std::uint64_t> factors;
    return level_quotient_order_factored(g, n, factors, max_points);
}

HausdorffEstimate hausdorff_estimate(const GroupDef& g, int n, size_t max_points) {
    if (n < 1) throw Error("level must be positive");
    std::map<std::uint64_t, std::uint64_t> factors;
    BigUint ord = level_quotient_order_factored(g, n, factors, max_points);
    int d = g.alphabet();
    std::uint64_t dfact = 1;
    for (int i = 2; i <= d; ++i) dfact *= static_cast<std::uint64_t>(i);
    auto base = factor_small(dfact);

    // denominator sum_{k<n} d^k, in units of log(d!).
    std::int64_t den = 0;
    std::int64_t dpow = 1;
    for (int k = 0; k < n; ++k) {
        den += dpow;
        dpow *= d;
    }

    HausdorffEstimate h;
    // Exact when the order is (d!)^k: factor exponents proportional to d!'s.
    std::optional<std::uint64_t> k;
    std::uint64_t kk = 0;
    if (!factors.empty()) {
        auto it = base.find(factors.begin()->first);
        kk = it == base.end() ? 0 : factors.begin()->second / it->second;
    }
    std::map<std::uint64_t, std::uint64_t> expect;
    if (kk > 0)
        for (auto [p, e] : base) expect[p] = e * kk;
    if (expect == factors) k = kk;
    if (k) {
        std::int64_t num = static_cast<std::int64_t>(*k);
        std::int64_t gg = std::gcd(num, den);
        h.exact = true;
        h.num = num / gg;
        h.den = den / gg;
        h.value = static_cast<double>(h.num) / static_cast<double>(h.den);
        return h;
    }
    h.exact = false;
    h.value = ord.log2() / std::log2(static_cast<double>(dfact)) / static_cast<double>(den);
    return h;
}

std::map<Word, std::vector<int>> portrait(const Element& e, int depth) {
    std::map<Word, std::vector<int>> labels;
    struct Item { Word v; GWord w; };
    std::vector<Item> stack{{Word{}, e.word}};
    int d = e.group->alphabet();
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        std::vector<int> perm(d);
        for (int x = 0; x < d; ++x) perm[x] = root_image(*e.group, it.w, x);
        if (static_cast<int>(it.v.size()) + 1 < depth) {
            for (int x = 0; x < d; ++x) {
                Word v = it.v;
                v.push_back(static_cast<Letter>(x));
                stack.push_back({std::move(v), thread_letter(*e.group, it.w, x).second});
            }
        }
        labels.emplace(std::move(it.v), std::move(perm));
    }
    return labels;
}

GWord apply_substitution(const GroupDef& g, const Substitution& s, const GWord& w) {
    GWord out;
    for (const GenTerm& t : w) {
        auto it = s.find(t.gen);
        if (it == s.end())
            throw UnknownEntry("substitution undefined on generator '" +
                               g.generators()[t.gen].name + "'");
        GWord img = t.inv ? gword_inverse(it->second) : it->second;
        out.insert(out.end(), img.begin(), img.end());
    }
    return free_reduce(std::move(out));
}

bool verify_substitution_relators(const Group& g, const Substitution& sigma,
                                  const std::vector<GWord>& relators, int iterations) {
    for (GWord r : relators) {
        for (int i = 0; i <= iterations; ++i) {
            if (!is_trivial(Element{g, r})) return false;
            if (i < iterations) r = apply_substitution(*g, sigma, r);
        }
    }
    return true;
}

std::vector<std::pair<std::string, Element>> symmetrized_generators(const Group& g) {
    std::vector<std::pair<std::string, Element>> out;
    std::vector<std::string> keys;
    for (size_t i = 0; i < g->generators().size(); ++i) {
        Element e{g, {{static_cast<int>(i), false}}};
        keys.push_back(mealy::canonical_key(element_automaton(e)));
        out.emplace_back(g->generators()[i].name, std::move(e));
    }
    for (size_t i = 0; i < g->generators().size(); ++i) {
        Element e{g, {{static_cast<int>(i), true}}};
        std::string key = mealy::canonical_key(element_automaton(e));
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(key);
        out.emplace_back(g->generators()[i].name + "'", std::move(e));
    }
    return out;
}

namespace {

std::vector<int> parse_cycles(const std::string& text, int d) {
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::vector<bool> used(d, false);
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in permutation '" + text + "'");
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i >= text.size()) throw ParseError("unterminated cycle in '" + text + "'");
            if (text[i] == ')') {
                ++i;
                break;
            }
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw ParseError("expected a point in cycle '" + text + "'");
            int p = std::stoi(text.substr(i, j - i));
            if (p < 0 || p >= d || used[p])
                throw ParseError("cycle point " + std::to_string(p) +
                                 " out of range or repeated in '" + text + "'");
            used[p] = true;
            cycle.push_back(p);
            i = j;
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    return perm;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Group parse_group_dsl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string gname;
    int d = 0;
    bool have_header = false;
    struct RawGen {
        std::string name;
        std::string cycles;
        std::vector<std::string> wordtexts;
    };
    std::vector<RawGen> raw;

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&]() { return " (line " + std::to_string(lineno) + ")"; };
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_header) {
            std::istringstream ls(t);
            std::string kw, akw;
            if (!(ls >> kw >> gname >> akw >> d) || kw != "group" || akw != "alphabet" || d < 1)
                throw ParseError("expected 'group NAME alphabet d'" + where());
            have_header = true;
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'gen = perm(...) [...]'" + where());
        RawGen rg;
        rg.name = trim(t.substr(0, eq));
        std::string rhs = trim(t.substr(eq + 1));
        if (rhs.rfind("perm", 0) != 0)
            throw ParseError("expected 'perm(...)' after '='" + where());
        auto lb = rhs.find('[');
        auto rb = rhs.rfind(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw ParseError("expected '[w0, ..., w" + std::to_string(d - 1) + "]'" + where());
        rg.cycles = trim(rhs.substr(4, lb - 4));
        if (rg.cycles == "()") rg.cycles = "";
        std::string inner = rhs.substr(lb + 1, rb - lb - 1);
        std::string cur;
        for (char ch : inner) {
            if (ch == ',') {
                rg.wordtexts.push_back(trim(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        rg.wordtexts.push_back(trim(cur));
        if (static_cast<int>(rg.wordtexts.size()) != d)
            throw ParseError("generator " + rg.name + " lists " +
                             std::to_string(rg.wordtexts.size()) + " restrictions, alphabet has " +
                             std::to_string(d) + where());
        raw.push_back(std::move(rg));
    }
    if (!have_header) throw ParseError("missing 'group NAME alphabet d' line");

    std::vector<Generator> gens;
    for (const auto& rg : raw) {
        Generator gen;
        gen.name = rg.name;
        gen.perm = parse_cycles(rg.cycles, d);
        gen.rest.assign(d, GWord{});
        gens.push_back(std::move(gen));
    }
    Group shell = GroupDef::create(gname, d, gens);
    for (size_t i = 0; i < raw.size(); ++i)
        for (int x = 0; x < d; ++x) gens[i].rest[x] = parse_gword(*shell, raw[i].wordtexts[x]);
    return GroupDef::create(gname, d, std::move(gens));
}

std::string render_group_dsl(const GroupDef& g) {
    std::ostringstream out;
    out << "group " << g.name() << " alphabet " << g.alphabet() << "\n";
    for (const Generator& gen : g.generators()) {
        std::string cycles = perm_cycles(gen.perm);
        out << gen.name << " = perm" << (cycles == "id" ? "()" : cycles) << " [";
        for (int x = 0; x < g.alphabet(); ++x) {
            if (x) out << ", ";
            out << render_gword(g, gen.rest[x]);
        }
        out << "]\n";
    }
    return out.str();
}

bool same_definition(const GroupDef& a, const GroupDef& b) {
    if (a.name() != b.name() || a.alphabet() != b.alphabet()) return false;
    if (a.generators().size() != b.generators().size()) return false;
    for (size_t i = 0; i < a.generators().size(); ++i) {
        const Generator& x = a.generators()[i];
        const Generator& y = b.generators()[i];
        if (x.name != y.name || x.perm != y.perm || x.rest != y.rest) return false;
    }
    return true;
}

std::string perm_cycles(const std::vector<int>& perm) {
    std::string s;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        s += '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += ' ';
            s += std::to_string(j);
            first = false;
            j = static_cast<size_t>(perm[j]);
        }
        s += ')';
    }
    return s.empty() ? "id" : s;
}

} // namespace ssg::selfsim
