#include "ssg/mealy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ssg::mealy {

void Machine::validate() const {
    if (alphabet < 1) throw Error("alphabet must be nonempty");
    if (trans.size() != out.size()) throw Error("machine tables disagree");
    for (size_t q = 0; q < trans.size(); ++q) {
        if (static_cast<int>(trans[q].size()) != alphabet ||
            static_cast<int>(out[q].size()) != alphabet)
            throw Error("machine row has wrong arity");
        for (int x = 0; x < alphabet; ++x) {
            if (trans[q][x] < 0 || trans[q][x] >= states())
                throw Error("machine transition out of range");
            if (out[q][x] >= alphabet) throw Error("machine output out of range");
        }
    }
}

Initial identity(int alphabet) {
    auto m = std::make_shared<Machine>();
    m->alphabet = alphabet;
    m->trans = {std::vector<int>(alphabet, 0)};
    m->out.emplace_back(alphabet);
    for (int x = 0; x < alphabet; ++x) m->out[0][x] = static_cast<Letter>(x);
    return Initial{std::move(m), 0};
}

Word act(const Initial& a, const Word& w) {
    const Machine& m = a.m();
    Word res;
    res.reserve(w.size());
    int q = a.state;
    for (Letter x : w) {
        if (!words::Alphabet{m.alphabet}.valid(x)) throw AlphabetMismatch("letter outside alphabet");
        res.push_back(m.out[q][x]);
        q = m.trans[q][x];
    }
    return res;
}

OmegaWord act_omega(const Initial& a, const OmegaWord& w) {
    const Machine& m = a.m();
    const Word& pre = w.pre();
    const Word& per = w.per();
    Word out;
    int q = a.state;
    for (Letter x : pre) {
        out.push_back(m.out[q][x]);
        q = m.trans[q][x];
    }
    // Inside the periodic part, a repeat of (state, phase) closes the output
    // period. There are at most |Q|·|per| configurations.
    std::map<std::pair<int, size_t>, size_t> seen;
    size_t phase = 0;
    while (true) {
        auto key = std::make_pair(q, phase);
        auto it = seen.find(key);
        if (it != seen.end()) {
            Word opre(out.begin(), out.begin() + static_cast<long>(it->second));
            Word oper(out.begin() + static_cast<long>(it->second), out.end());
            return OmegaWord(std::move(opre), std::move(oper));
        }
        seen.emplace(key, out.size());
        for (size_t i = 0; i < per.size(); ++i) {
            Letter x = per[(phase + i) % per.size()];
            out.push_back(m.out[q][x]);
            q = m.trans[q][x];
        }
    }
}

Initial compose(const Initial& a, const Initial& b) {
    const Machine& ma = a.m();
    const Machine& mb = b.m();
    if (ma.alphabet != mb.alphabet) throw AlphabetMismatch("composition needs equal alphabets");
    auto prod = std::make_shared<Machine>();
    prod->alphabet = ma.alphabet;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> queue{{a.state, b.state}};
    index[queue[0]] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [s, r] = queue[head];
        std::vector<int> trow(ma.alphabet);
        std::vector<Letter> orow(ma.alphabet);
        for (int x = 0; x < ma.alphabet; ++x) {
            Letter y = ma.out[s][x];
            orow[x] = mb.out[r][y];
            std::pair<int, int> nxt{ma.trans[s][x], mb.trans[r][y]};
            auto [it, fresh] = index.emplace(nxt, static_cast<int>(queue.size()));
            if (fresh) queue.push_back(nxt);
            trow[x] = it->second;
        }
        prod->trans.push_back(std::move(trow));
        prod->out.push_back(std::move(orow));
    }
    return Initial{std::move(prod), 0};
}

bool is_invertible(const Machine& m) {
    for (int q = 0; q < m.states(); ++q) {
        std::vector<bool> hit(m.alphabet, false);
        for (int x = 0; x < m.alphabet; ++x) {
            if (hit[m.out[q][x]]) return false;
            hit[m.out[q][x]] = true;
        }
    }
    return true;
}

Initial invert(const Initial& a) {
    const Machine& m = a.m();
    if (!is_invertible(m)) throw NotInvertible("some state is not letterwise bijective");
    auto inv = std::make_shared<Machine>();
    inv->alphabet = m.alphabet;
    inv->trans.assign(m.states(), std::vector<int>(m.alphabet));
    inv->out.assign(m.states(), std::vector<Letter>(m.alphabet));
    for (int q = 0; q < m.states(); ++q)
        for (int y = 0; y < m.alphabet; ++y) {
            Letter x = m.out[q][y];
            inv->out[q][x] = static_cast<Letter>(y);
            inv->trans[q][x] = m.trans[q][y];
        }
    return Initial{std::move(inv), a.state};
}

std::vector<bool> trivial_states(const Machine& m) {
    std::vector<std::vector<int>> rev(m.states());
    std::vector<bool> bad(m.states(), false);
    std::vector<int> work;
    for (int q = 0; q < m.states(); ++q)
        for (int x = 0; x < m.alphabet; ++x) {
            rev[m.trans[q][x]].push_back(q);
            if (m.out[q][x] != x && !bad[q]) {
                bad[q] = true;
                work.push_back(q);
            }
        }
    while (!work.empty()) {
        int q = work.back();
        work.pop_back();
        for (int p : rev[q])
            if (!bad[p]) {
                bad[p] = true;
                work.push_back(p);
            }
    }
    std::vector<bool> res(m.states());
    for (int q = 0; q < m.states(); ++q) res[q] = !bad[q];
    return res;
}

bool acts_trivially(const Machine& m, int state) { return trivial_states(m)[state]; }

namespace {

// Partition refinement; also reports the state -> block map.
Machine minimize_mapped(const Machine& m, std::vector<int>& block) {
    int n = m.states();
    // Initial partition: states with equal output rows share a block.
    std::map<std::vector<Letter>, int> rowid;
    block.assign(n, 0);
    for (int q = 0; q < n; ++q) {
        auto it = rowid.emplace(m.out[q], static_cast<int>(rowid.size())).first;
        block[q] = it->second;
    }
    int count = static_cast<int>(rowid.size());
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> sig;
        std::vector<int> next(n);
        for (int q = 0; q < n; ++q) {
            std::vector<int> succ(m.alphabet);
            for (int x = 0; x < m.alphabet; ++x) succ[x] = block[m.trans[q][x]];
            auto it = sig.emplace(std::make_pair(block[q], std::move(succ)),
                                  static_cast<int>(sig.size()))
                          .first;
            next[q] = it->second;
        }
        block = next;
        if (static_cast<int>(sig.size()) == count) break;
        count = static_cast<int>(sig.size());
    }
    // Renumber blocks by their smallest member so the result is deterministic.
    std::vector<int> order(count, -1);
    int fresh = 0;
    for (int q = 0; q < n; ++q)
        if (order[block[q]] < 0) order[block[q]] = fresh++;
    for (int q = 0; q < n; ++q) block[q] = order[block[q]];
    Machine res;
    res.alphabet = m.alphabet;
    res.trans.assign(count, {});
    res.out.assign(count, {});
    for (int q = 0; q < n; ++q) {
        int b = block[q];
        if (!res.trans[b].empty()) continue;
        res.trans[b].resize(m.alphabet);
        res.out[b] = m.out[q];
        for (int x = 0; x < m.alphabet; ++x) res.trans[b][x] = block[m.trans[q][x]];
    }
    return res;
}

} // namespace

Machine minimize(const Machine& m) {
    std::vector<int> block;
    return minimize_mapped(m, block);
}

namespace {

// Reachable restriction renumbered breadth-first from the initial state.
Initial prune_bfs(const Initial& a) {
    const Machine& m = a.m();
    std::vector<int> newid(m.states(), -1);
    std::vector<int> bfs{a.state};
    newid[a.state] = 0;
    for (size_t head = 0; head < bfs.size(); ++head) {
        int q = bfs[head];
        for (int x = 0; x < m.alphabet; ++x) {
            int t = m.trans[q][x];
            if (newid[t] < 0) {
                newid[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    }
    auto res = std::make_shared<Machine>();
    res->alphabet = m.alphabet;
    res->trans.assign(bfs.size(), std::vector<int>(m.alphabet));
    res->out.assign(bfs.size(), {});
    for (size_t i = 0; i < bfs.size(); ++i) {
        res->out[i] = m.out[bfs[i]];
        for (int x = 0; x < m.alphabet; ++x) res->trans[i][x] = newid[m.trans[bfs[i]][x]];
    }
    return Initial{std::move(res), 0};
}

} // namespace

Initial canonicalize(const Initial& a) {
    Initial reach = prune_bfs(a);
    std::vector<int> block;
    auto mm = std::make_shared<Machine>(minimize_mapped(reach.m(), block));
    return prune_bfs(Initial{std::move(mm), block[reach.state]});
}

std::string serialize(const Initial& a) {
    const Machine& m = a.m();
    std::ostringstream os;
    os << m.alphabet << ';' << a.state << ';';
    for (int q = 0; q < m.states(); ++q)
        for (int x = 0; x < m.alphabet; ++x)
            os << m.trans[q][x] << ',' << static_cast<int>(m.out[q][x]) << ';';
    return os.str();
}

std::string canonical_key(const Initial& a) { return serialize(canonicalize(a)); }

bool act_equal(const Initial& a, const Initial& b) {
    const Machine& ma = a.m();
    const Machine& mb = b.m();
    if (ma.alphabet != mb.alphabet) return false;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{{a.state, b.state}};
    seen.insert(stack[0]);
    while (!stack.empty()) {
        auto [s, r] = stack.back();
        stack.pop_back();
        for (int x = 0; x < ma.alphabet; ++x) {
            if (ma.out[s][x] != mb.out[r][x]) return false;
            std::pair<int, int> nxt{ma.trans[s][x], mb.trans[r][x]};
            if (seen.insert(nxt).second) stack.push_back(nxt);
        }
    }
    return true;
}

std::string to_dot(const Machine& m, const std::vector<std::string>& state_names) {
    std::ostringstream os;
    os << "digraph moore {\n";
    for (int q = 0; q < m.states(); ++q) {
        std::string name = q < static_cast<int>(state_names.size())
                               ? state_names[q]
                               : "q" + std::to_string(q);
        os << "  " << q << " [label=\"" << name << "\"];\n";
    }
    for (int q = 0; q < m.states(); ++q)
        for (int x = 0; x < m.alphabet; ++x)
            os << "  " << q << " -> " << m.trans[q][x] << " [label=\"" << x << "|"
               << static_cast<int>(m.out[q][x]) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace ssg::mealy
