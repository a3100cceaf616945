#include "ssg/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg::contraction {

using mealy::Initial;
using selfsim::Element;
using selfsim::GenTerm;
using selfsim::Group;
using selfsim::GWord;
using words::Letter;
using words::Word;

int Nucleus::find(const std::string& key) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].key == key) return static_cast<int>(i);
    return -1;
}

int Nucleus::root_image(int i, Letter x) const {
    const Initial& a = elements[i].automaton;
    return a.machine->out[a.state][x];
}

std::string Nucleus::element_name(int i) const {
    return selfsim::render_gword(*group, elements[i].word);
}

namespace {

// Interned candidate elements, identified by the canonical automaton form,
// with restriction edges filled in by breadth-first closure.
class Pool {
public:
    Pool(Group g, size_t cap) : group_(std::move(g)), cap_(cap) {}

    size_t size() const { return items_.size(); }
    bool exceeded() const { return exceeded_; }
    const NucleusElement& item(int i) const { return items_[i]; }
    const std::vector<int>& rest(int i) const { return rest_[i]; }

    int intern(GWord w, Initial aut) {
        std::string key = mealy::serialize(aut);
        auto it = index_.find(key);
        if (it != index_.end()) {
            if (w.size() < items_[it->second].word.size())
                items_[it->second].word = std::move(w);
            return it->second;
        }
        if (items_.size() >= cap_) {
            exceeded_ = true;
            return -1;
        }
        int id = static_cast<int>(items_.size());
        index_.emplace(key, id);
        items_.push_back({std::move(w), std::move(aut), std::move(key)});
        return id;
    }

    int intern_element(const Element& e) {
        return intern(e.word, selfsim::element_automaton(e));
    }

    // Fills restriction rows for every item added so far; new restrictions are
    // interned in turn. Stops early once the cap is passed.
    void close() {
        int d = group_->alphabet();
        while (closed_ < items_.size() && !exceeded_) {
            int i = static_cast<int>(closed_++);
            std::vector<int> row(d, -1);
            for (int x = 0; x < d; ++x) {
                const Initial& a = items_[i].automaton;
                Initial child = mealy::canonicalize({a.machine, a.machine->trans[a.state][x]});
                GWord w = selfsim::restriction(Element{group_, items_[i].word},
                                               {static_cast<Letter>(x)}).word;
                row[x] = intern(std::move(w), std::move(child));
                if (exceeded_) return;
            }
            rest_.push_back(std::move(row));
        }
    }

    Group group() const { return group_; }

private:
    Group group_;
    size_t cap_;
    size_t closed_ = 0;
    bool exceeded_ = false;
    std::vector<NucleusElement> items_;
    std::vector<std::vector<int>> rest_;
    std::map<std::string, int> index_;
};

// Everything reachable from the set along restriction edges, as a sorted list.
std::vector<int> reachable_closure(const Pool& p, std::vector<int> seed) {
    std::set<int> seen(seed.begin(), seed.end());
    for (size_t head = 0; head < seed.size(); ++head)
        for (int j : p.rest(seed[head]))
            if (seen.insert(j).second) seed.push_back(j);
    return {seen.begin(), seen.end()};
}

// Elements on cycles of the restriction graph induced on the set, plus
// everything reachable from those cycles. The set must be restriction-closed.
std::vector<int> recurrent_part(const Pool& p, const std::vector<int>& set) {
    std::vector<int> cycle_nodes;
    for (int i : set) {
        // Self-reachability through at least one edge.
        std::set<int> seen;
        std::vector<int> stack(p.rest(i).begin(), p.rest(i).end());
        bool hit = false;
        while (!stack.empty() && !hit) {
            int j = stack.back();
            stack.pop_back();
            if (j == i) hit = true;
            if (!seen.insert(j).second) continue;
            for (int k : p.rest(j)) stack.push_back(k);
        }
        if (hit) cycle_nodes.push_back(i);
    }
    return reachable_closure(p, std::move(cycle_nodes));
}

Nucleus assemble(const Pool& p, const std::vector<int>& members) {
    std::vector<int> order = members;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ea = p.item(a);
        const auto& eb = p.item(b);
        if (ea.word.size() != eb.word.size()) return ea.word.size() < eb.word.size();
        return ea.key < eb.key;
    });
    // Identity first.
    std::string idkey = mealy::serialize(mealy::canonicalize(mealy::identity(p.group()->alphabet())));
    for (size_t i = 0; i < order.size(); ++i)
        if (p.item(order[i]).key == idkey) {
            std::rotate(order.begin(), order.begin() + i, order.begin() + i + 1);
            break;
        }

    Nucleus n;
    n.group = p.group();
    std::map<int, int> renumber;
    for (size_t i = 0; i < order.size(); ++i) renumber[order[i]] = static_cast<int>(i);
    for (int i : order) n.elements.push_back(p.item(i));
    for (int i : order) {
        std::vector<int> row;
        for (int j : p.rest(i)) row.push_back(renumber.at(j));
        n.rest.push_back(std::move(row));
    }
    n.identity = 0;
    return n;
}

} // namespace

std::vector<Element> restriction_closure(const Group& g, const std::vector<Element>& seed,
                                         size_t cap) {
    Pool p(g, cap);
    for (const Element& e : seed) {
        if (e.group != g) throw OutOfDomain("seed element from a different group");
        p.intern_element(e);
    }
    p.close();
    if (p.exceeded()) throw SizeBoundExceeded("restriction closure passed the cap");
    std::vector<Element> out;
    for (size_t i = 0; i < p.size(); ++i)
        out.push_back(Element{g, p.item(static_cast<int>(i)).word});
    return out;
}

NucleusResult nucleus(const Group& g, size_t cap) {
    Pool p(g, cap);
    p.intern_element(Element{g, {}});
    for (const auto& [name, e] : selfsim::symmetrized_generators(g)) p.intern_element(e);
    p.close();
    if (p.exceeded()) return {true, std::nullopt, p.size()};

    std::vector<int> n(p.size());
    std::iota(n.begin(), n.end(), 0);
    std::set<std::vector<int>> seen{n};
    for (int round = 0; round < 256; ++round) {
        std::vector<int> cand = n;
        for (int i : n)
            for (int j : n) {
                Initial prod = mealy::canonicalize(
                    mealy::compose(p.item(i).automaton, p.item(j).automaton));
                GWord w = p.item(i).word;
                w.insert(w.end(), p.item(j).word.begin(), p.item(j).word.end());
                int id = p.intern(selfsim::free_reduce(std::move(w)), std::move(prod));
                if (p.exceeded()) return {true, std::nullopt, p.size()};
                cand.push_back(id);
            }
        p.close();
        if (p.exceeded()) return {true, std::nullopt, p.size()};
        std::vector<int> next = recurrent_part(p, reachable_closure(p, std::move(cand)));
        if (next == n) return {false, assemble(p, n), p.size()};
        if (!seen.insert(next).second) return {true, std::nullopt, p.size()};
        n = std::move(next);
    }
    return {true, std::nullopt, p.size()};
}

ContractingResult is_contracting(const Group& g, size_t cap) {
    NucleusResult r = nucleus(g, cap);
    return {!r.exceeded, std::move(r.value), r.candidates};
}

namespace {

// Words over nucleus indices with greedy shortening: identity letters drop and
// adjacent pairs whose product lies in the nucleus merge into one letter. The
// result length upper-bounds the nucleus word norm.
class NucleusWords {
public:
    explicit NucleusWords(const Nucleus& n) : n_(n) {
        size_t k = n.size();
        prod_.assign(k, std::vector<int>(k, -1));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                Initial p = mealy::canonicalize(
                    mealy::compose(n.elements[i].automaton, n.elements[j].automaton));
                prod_[i][j] = n.find(mealy::serialize(p));
            }
    }

    // -1 when some generator is not a nucleus element.
    int index_of_term(const selfsim::Group& g, GenTerm t) const {
        Element e{g, {t}};
        return n_.find(mealy::canonical_key(selfsim::element_automaton(e)));
    }

    std::vector<int> merge(const std::vector<int>& w) const {
        std::vector<int> m;
        for (int idx : w) {
            m.push_back(idx);
            for (;;) {
                if (!m.empty() && m.back() == n_.identity) {
                    m.pop_back();
                    continue;
                }
                if (m.size() >= 2) {
                    int p = prod_[m[m.size() - 2]][m.back()];
                    if (p >= 0) {
                        m.pop_back();
                        m.back() = p;
                        continue;
                    }
                }
                break;
            }
        }
        return m;
    }

    // One-letter restriction of a nucleus word, merged.
    std::vector<int> restrict(const std::vector<int>& w, Letter x) const {
        std::vector<int> out;
        int cur = x;
        for (int h : w) {
            out.push_back(n_.rest[h][cur]);
            cur = n_.root_image(h, static_cast<Letter>(cur));
        }
        return merge(out);
    }

private:
    const Nucleus& n_;
    std::vector<std::vector<int>> prod_;
};

} // namespace

double contraction_estimate(const Group& g, const Nucleus& n, int samples, int depth,
                            std::uint64_t seed) {
    if (depth < 1) throw OutOfDomain("depth must be positive");
    if (n.group != g) throw OutOfDomain("nucleus belongs to a different group");
    std::vector<GenTerm> terms;
    for (size_t i = 0; i < g->generators().size(); ++i) {
        terms.push_back({static_cast<int>(i), false});
        terms.push_back({static_cast<int>(i), true});
    }
    if (terms.empty()) return 0.0;

    // Lengths are measured in nucleus letters when every generator lies in the
    // nucleus (the usual case); otherwise in freely reduced generator letters.
    NucleusWords nw(n);
    std::vector<int> term_index;
    bool in_nucleus = true;
    for (GenTerm t : terms) {
        int idx = nw.index_of_term(g, t);
        if (idx < 0) in_nucleus = false;
        term_index.push_back(idx);
    }

    std::mt19937_64 rng(seed);
    double best = 0.0;
    bool any = false;
    for (int s = 0; s < samples; ++s) {
        // Non-backtracking draw: never the inverse of the previous term, so the
        // word is freely reduced at its full length.
        size_t len = 8 + 4 * (s % 4);
        GWord w;
        std::vector<size_t> picks;
        while (w.size() < len) {
            size_t pick = rng() % terms.size();
            GenTerm t = terms[pick];
            if (!w.empty() && t.gen == w.back().gen && t.inv != w.back().inv) continue;
            w.push_back(t);
            picks.push_back(pick);
        }

        size_t base = 0;
        size_t longest = 0;
        if (in_nucleus) {
            std::vector<int> e;
            for (size_t pick : picks) e.push_back(term_index[pick]);
            e = nw.merge(e);
            base = e.size();
            // A handful of nucleus letters cannot witness contraction (single
            // letters restrict to nucleus letters forever); skip collapsed draws.
            if (base < 4) continue;
            struct Item { std::vector<int> w; int k; };
            std::vector<Item> stack{{std::move(e), 0}};
            while (!stack.empty()) {
                Item it = std::move(stack.back());
                stack.pop_back();
                if (it.k == depth) {
                    longest = std::max(longest, it.w.size());
                    continue;
                }
                for (int x = 0; x < g->alphabet(); ++x)
                    stack.push_back({nw.restrict(it.w, static_cast<Letter>(x)), it.k + 1});
            }
        } else {
            base = w.size();
            struct Item { GWord w; int k; };
            std::vector<Item> stack{{w, 0}};
            while (!stack.empty()) {
                Item it = std::move(stack.back());
                stack.pop_back();
                if (it.k == depth) {
                    longest = std::max(longest, it.w.size());
                    continue;
                }
                for (int x = 0; x < g->alphabet(); ++x)
                    stack.push_back({selfsim::restriction(Element{g, it.w},
                                                          {static_cast<Letter>(x)}).word,
                                     it.k + 1});
            }
        }
        any = true;
        double ratio = static_cast<double>(longest) / static_cast<double>(base);
        best = std::max(best, std::pow(ratio, 1.0 / depth));
    }
    return any ? best : 0.0;
}

bool open_set_condition(const Nucleus& n) {
    std::vector<std::vector<int>> back(n.size());
    for (size_t i = 0; i < n.size(); ++i)
        for (int j : n.rest[i]) back[j].push_back(static_cast<int>(i));
    std::vector<char> ok(n.size(), 0);
    std::vector<int> stack{n.identity};
    ok[n.identity] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : back[i])
            if (!ok[j]) {
                ok[j] = 1;
                stack.push_back(j);
            }
    }
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool asymptotically_equivalent(const Nucleus& n, const EquivalenceQuery& q) {
    int d = n.group->alphabet();
    words::LeftWord L = q.left;
    words::LeftWord R = q.right;
    if (L.tail.empty() || R.tail.empty()) throw OutOfDomain("periodic tails must be nonempty");
    for (const Word* w : {&L.tail, &L.suffix, &R.tail, &R.suffix})
        for (Letter x : *w)
            if (x >= d) throw AlphabetMismatch("letter outside the group's alphabet");

    // Pad the shorter suffix from its tail; the innermost tail letter moves to
    // the suffix front and the tail rotates one step.
    auto pad = [](words::LeftWord& w) {
        w.suffix.insert(w.suffix.begin(), w.tail.front());
        std::rotate(w.tail.begin(), w.tail.begin() + 1, w.tail.end());
    };
    while (L.suffix.size() < R.suffix.size()) pad(L);
    while (R.suffix.size() < L.suffix.size()) pad(R);

    size_t period = std::lcm(L.tail.size(), R.tail.size());
    auto tail_pair = [&](size_t j) -> std::pair<Letter, Letter> {
        return {L.tail[j % L.tail.size()], R.tail[j % R.tail.size()]};
    };

    // Greatest fixpoint: states able to read the tail pair at residue j with an
    // infinite backward continuation.
    std::vector<std::set<int>> live(period);
    for (size_t j = 0; j < period; ++j) {
        auto [x, y] = tail_pair(j);
        for (size_t i = 0; i < n.size(); ++i)
            if (n.root_image(static_cast<int>(i), x) == y) live[j].insert(static_cast<int>(i));
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t j = 0; j < period; ++j) {
            size_t up = (j + 1) % period;
            auto [x_up, y_up] = tail_pair(up);
            std::set<int> keep;
            for (int h : live[up])
                keep.insert(n.rest[h][x_up]);
            size_t before = live[j].size();
            std::set<int> inter;
            std::set_intersection(live[j].begin(), live[j].end(), keep.begin(), keep.end(),
                                  std::inserter(inter, inter.begin()));
            live[j] = std::move(inter);
            if (live[j].size() != before) changed = true;
        }
    }

    // Hand off to the suffix and propagate rightward.
    std::set<int> states;
    {
        auto [x0, y0] = tail_pair(0);
        for (int h : live[0]) states.insert(n.rest[h][x0]);
    }
    for (size_t k = 0; k < L.suffix.size(); ++k) {
        Letter x = L.suffix[k];
        Letter y = R.suffix[k];
        std::set<int> next;
        for (int h : states)
            if (n.root_image(h, x) == y) next.insert(n.rest[h][x]);
        states = std::move(next);
        if (states.empty()) return false;
    }
    return !states.empty();
}

schreier::LabeledGraph tile_graph(const Group& g, const Nucleus& n, int level,
                                  size_t max_points) {
    if (n.group != g) throw OutOfDomain("nucleus belongs to a different group");
    int d = g->alphabet();
    size_t size = selfsim::level_size_checked(d, level, max_points);

    schreier::LabeledGraph out;
    out.directed = false;
    for (size_t v = 0; v < size; ++v)
        out.names.push_back(words::render_word(selfsim::index_to_word(v, d, level)));

    std::set<std::pair<int, int>> have;
    for (size_t i = 0; i < n.size(); ++i) {
        if (static_cast<int>(i) == n.identity) continue;
        std::vector<int> perm = selfsim::act_level(Element{g, n.elements[i].word}, level,
                                                   max_points);
        for (size_t v = 0; v < size; ++v) {
            int u = perm[v];
            if (u == static_cast<int>(v)) continue;
            std::pair<int, int> e{std::min<int>(u, static_cast<int>(v)),
                                  std::max<int>(u, static_cast<int>(v))};
            if (have.insert(e).second)
                out.edges.push_back({e.first, e.second, n.element_name(static_cast<int>(i))});
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::string export_nucleus_dsl(const Nucleus& n) {
    std::ostringstream os;
    os << "group nucleus_of_" << n.group->name() << " alphabet " << n.group->alphabet()
       << "\n";
    auto ref = [&](int j) -> std::string {
        return j == n.identity ? "1" : "n" + std::to_string(j);
    };
    for (size_t i = 0; i < n.size(); ++i) {
        if (static_cast<int>(i) == n.identity) continue;
        const Initial& a = n.elements[i].automaton;
        std::vector<int> perm(n.group->alphabet());
        for (int x = 0; x < n.group->alphabet(); ++x) perm[x] = a.machine->out[a.state][x];
        std::string cycles = selfsim::perm_cycles(perm);
        os << "n" << i << " = perm" << (cycles == "id" ? "()" : cycles) << " [";
        for (int x = 0; x < n.group->alphabet(); ++x) {
            if (x) os << ", ";
            os << ref(n.rest[i][x]);
        }
        os << "]\n";
    }
    return os.str();
}

std::string export_nucleus_dot(const Nucleus& n) {
    mealy::Machine m;
    m.alphabet = n.group->alphabet();
    for (size_t i = 0; i < n.size(); ++i) {
        std::vector<int> trans(m.alphabet);
        std::vector<Letter> out(m.alphabet);
        for (int x = 0; x < m.alphabet; ++x) {
            trans[x] = n.rest[i][x];
            out[x] = static_cast<Letter>(n.root_image(static_cast<int>(i), x));
        }
        m.trans.push_back(std::move(trans));
        m.out.push_back(std::move(out));
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < n.size(); ++i) names.push_back(n.element_name(static_cast<int>(i)));
    return mealy::to_dot(m, names);
}

} // namespace ssg::contraction
