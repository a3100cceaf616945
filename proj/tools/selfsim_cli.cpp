#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssg/abelian.hpp"
#include "ssg/catalog.hpp"
#include "ssg/contraction.hpp"
#include "ssg/invsemi.hpp"
#include "ssg/schreier.hpp"
#include "ssg/selfsim.hpp"
#include "ssg/spectra.hpp"
#include "ssg/words.hpp"

using nlohmann::ordered_json;
using namespace ssg;

namespace {

struct Options {
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::size_t cap = 4096;
    int max_level = 20;
    std::string format = "json";
    std::string out;
};

Options opt;

void emit(const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw Error("cannot open output file " + opt.out);
    f << text;
}

void emit_json(const ordered_json& j) { emit(j.dump(2) + "\n"); }

// Single-value results: the bare value under --format text, a one-field JSON
// object otherwise.
void emit_scalar(const char* key, const ordered_json& value) {
    if (opt.format == "text") {
        if (value.is_string())
            emit(value.get<std::string>() + "\n");
        else
            emit(value.dump() + "\n");
        return;
    }
    ordered_json j;
    j[key] = value;
    emit_json(j);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot read file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Sources are either catalog:NAME or a path to a definition file.
const catalog::CatalogEntry* catalog_source(const std::string& src) {
    if (src.rfind("catalog:", 0) == 0) return &catalog::lookup(src.substr(8));
    return nullptr;
}

selfsim::Group load_group(const std::string& src) {
    if (const auto* e = catalog_source(src)) return e->group();
    return selfsim::parse_group_dsl(read_file(src));
}

abelian::DigitSystem load_system(const std::string& src) {
    if (const auto* e = catalog_source(src)) return e->digit_system();
    return catalog::parse_digit_system(read_file(src));
}

invsemi::RuleTable load_table(const std::string& src) {
    if (const auto* e = catalog_source(src)) return e->rule_table();
    return invsemi::parse_table(read_file(src));
}

words::Alphabet group_alphabet(const selfsim::Group& g) {
    return words::Alphabet{g->alphabet()};
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::int64_t> parse_int_vector(const std::string& s) {
    std::vector<std::int64_t> v;
    for (const auto& part : split_names(s)) v.push_back(std::stoll(part));
    return v;
}

void check_level(int level) {
    if (level < 0) throw Error("level must be nonnegative");
    if (level > opt.max_level)
        throw Error("level " + std::to_string(level) + " above --max-level " +
                    std::to_string(opt.max_level));
}

ordered_json graph_json(const schreier::LabeledGraph& g) {
    ordered_json j;
    j["vertices"] = g.names;
    auto edges = ordered_json::array();
    for (const auto& [u, v, label] : g.edges)
        edges.push_back(ordered_json::array({u, v, label}));
    j["directed"] = g.directed;
    j["edges"] = std::move(edges);
    return j;
}

void emit_graph(const schreier::LabeledGraph& g) {
    if (opt.format == "dot") {
        emit(schreier::export_dot(g, !g.directed));
    } else if (opt.format == "csv") {
        emit(schreier::export_csv(g));
    } else {
        emit_json(graph_json(g));
    }
}

contraction::Nucleus need_nucleus(const selfsim::Group& g) {
    auto r = contraction::nucleus(g, opt.cap);
    if (r.exceeded)
        throw SizeBoundExceeded("nucleus candidate set passed the cap of " +
                                std::to_string(opt.cap) + " (" +
                                std::to_string(r.candidates) + " candidates)");
    return *r.value;
}

ordered_json machine_json(const mealy::Initial& a,
                          const std::vector<std::string>& names) {
    const auto& m = a.m();
    ordered_json j;
    j["alphabet"] = m.alphabet;
    j["states"] = m.states();
    j["initial"] = a.state;
    if (!names.empty()) j["names"] = names;
    auto rows = ordered_json::array();
    for (int q = 0; q < m.states(); ++q) {
        auto row = ordered_json::array();
        for (int x = 0; x < m.alphabet; ++x)
            row.push_back(ordered_json::array({m.trans[q][x], m.out[q][x]}));
        rows.push_back(std::move(row));
    }
    j["transitions"] = std::move(rows);
    return j;
}

int run(CLI::App& app, int argc, char** argv);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with self-similar groups and semigroups "
                 "defined by finite automata"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

int run(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", opt.seed, "random seed for sampled checks");
    app.add_option("--tol", opt.tol, "numeric tolerance");
    app.add_option("--cap", opt.cap, "search cap for nucleus/order computations");
    app.add_option("--max-level", opt.max_level, "largest accepted tree level");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "csv", "pgm", "text"}));
    app.add_option("--out", opt.out, "output file (default stdout)");

    // Shared flag storage; each subcommand binds the subset it uses.
    std::string group_src, system_src, table_src;
    std::string word, element, at, left, right, point, map_name, vec, name;
    std::string sub_text, relators_text, gens_text, word_input, omega_input;
    int level = 1, depth = 4, radius = 3, k = 1, samples = 10, resolution = 256;
    int iterations = 3, length = 32;
    std::int64_t m_value = 0;
    bool unnormalized = false, factored = false, simplicial = false;

    auto add_group = [&](CLI::App* c) {
        c->add_option("--group", group_src,
                      "group source: catalog:NAME or a .ssg definition file")
            ->required();
    };
    auto add_system = [&](CLI::App* c) {
        c->add_option("--system", system_src,
                      "digit system source: catalog:NAME or a .ds.json file")
            ->required();
    };
    auto add_table = [&](CLI::App* c) {
        c->add_option("--table", table_src,
                      "rule table source: catalog:NAME or a table file")
            ->required();
    };

    // act: apply a group element to a finite or eventually periodic word.
    {
        auto* c = app.add_subcommand("act", "act by an element on a word");
        add_group(c);
        c->add_option("--element", element, "group word, ' marks inverses")->required();
        c->add_option("--word-input", word_input, "finite word over 0..d-1");
        c->add_option("--omega", omega_input, "eventually periodic word PRE(PERIOD)");
        c->callback([&] {
            auto g = load_group(group_src);
            auto e = selfsim::parse_element(g, element);
            if (word_input.empty() == omega_input.empty())
                throw CLI::ValidationError("act",
                                           "exactly one of --word-input and --omega");
            if (!word_input.empty()) {
                auto w = words::parse_word(word_input, group_alphabet(g));
                emit_scalar("output", words::render_word(selfsim::act(e, w)));
            } else {
                auto w = words::parse_omega(omega_input, group_alphabet(g));
                emit_scalar("output", words::render_omega(selfsim::act_omega(e, w)));
            }
        });
    }

    // restrict: the section of an element at a tree vertex.
    {
        auto* c = app.add_subcommand("restrict", "restriction of an element at a vertex");
        add_group(c);
        c->add_option("--element", element, "group word")->required();
        c->add_option("--at", at, "vertex: finite word over 0..d-1")->required();
        c->callback([&] {
            auto g = load_group(group_src);
            auto e = selfsim::parse_element(g, element);
            auto v = words::parse_word(at, group_alphabet(g));
            auto r = selfsim::restriction(e, v);
            emit_scalar("restriction", selfsim::render_element(r));
        });
    }

    // is-trivial: the word problem.
    {
        auto* c = app.add_subcommand("is-trivial", "whether a group word acts trivially");
        add_group(c);
        c->add_option("--word", word, "group word")->required();
        c->callback([&] {
            auto g = load_group(group_src);
            emit_scalar("trivial",
                        selfsim::is_trivial(selfsim::parse_element(g, word)));
        });
    }

    // order: smallest trivial power up to the cap.
    {
        auto* c = app.add_subcommand("order", "order of an element, up to --cap");
        add_group(c);
        c->add_option("--word", word, "group word")->required();
        c->callback([&] {
            auto g = load_group(group_src);
            auto r = selfsim::order(selfsim::parse_element(g, word),
                                    static_cast<int>(opt.cap));
            if (opt.format == "text") {
                emit(r.order ? std::to_string(*r.order) + "\n" : "exceeds_cap\n");
                return;
            }
            ordered_json j;
            if (r.order)
                j["order"] = *r.order;
            else
                j["order"] = "exceeds_cap";
            j["cap"] = r.cap;
            emit_json(j);
        });
    }

    // portrait: root permutations of all restrictions down to a depth.
    {
        auto* c = app.add_subcommand("portrait", "restriction portrait of an element");
        add_group(c);
        c->add_option("--element", element, "group word")->required();
        c->add_option("--depth", depth, "portrait depth")->required();
        c->callback([&] {
            auto g = load_group(group_src);
            auto e = selfsim::parse_element(g, element);
            auto p = selfsim::portrait(e, depth);
            ordered_json j;
            for (const auto& [v, perm] : p) j[words::render_word(v)] = perm;
            emit_json(j);
        });
    }

    // level-order: size of the quotient acting on X^n.
    {
        auto* c = app.add_subcommand("level-order",
                                     "order of the permutation group induced on level n");
        add_group(c);
        c->add_option("--level", level, "tree level n")->required();
        c->add_flag("--factored", factored, "include the prime factorization");
        c->callback([&] {
            check_level(level);
            auto g = load_group(group_src);
            ordered_json j;
            j["level"] = level;
            if (factored) {
                std::map<std::uint64_t, std::uint64_t> fac;
                j["order"] = selfsim::level_quotient_order_factored(*g, level, fac).str();
                ordered_json f;
                for (auto [p, e] : fac) f[std::to_string(p)] = e;
                j["factors"] = std::move(f);
            } else {
                j["order"] = selfsim::level_quotient_order(*g, level).str();
            }
            if (opt.format == "text")
                emit(j["order"].get<std::string>() + "\n");
            else
                emit_json(j);
        });
    }

    // hausdorff: density of the closure in the full automorphism group.
    {
        auto* c = app.add_subcommand(
            "hausdorff", "level-n Hausdorff dimension estimate of the closure");
        add_group(c);
        c->add_option("--level", level, "tree level n")->required();
        c->callback([&] {
            check_level(level);
            auto g = load_group(group_src);
            auto h = selfsim::hausdorff_estimate(*g, level);
            ordered_json j;
            j["level"] = level;
            j["value"] = h.value;
            if (h.exact) {
                j["num"] = h.num;
                j["den"] = h.den;
            }
            emit_json(j);
        });
    }

    // verify-relators: substitution-periodic presentation check.
    {
        auto* c = app.add_subcommand(
            "verify-relators",
            "check that substitution images of the base relators act trivially");
        add_group(c);
        c->add_option("--sub", sub_text,
                      "substitution as gen=word;gen=word (defaults to the "
                      "stored presentation for catalog:grigorchuk)");
        c->add_option("--relators", relators_text, "base relators, ; separated");
        c->add_option("--iterations", iterations, "largest substitution power");
        c->callback([&] {
            auto g = load_group(group_src);
            selfsim::Substitution sigma;
            std::vector<selfsim::GWord> relators;
            if (sub_text.empty() && relators_text.empty() &&
                g->name() == "grigorchuk") {
                auto p = catalog::grigorchuk_presentation(g);
                sigma = std::move(p.sigma);
                relators = std::move(p.relators);
            } else {
                if (sub_text.empty() || relators_text.empty())
                    throw CLI::ValidationError(
                        "verify-relators", "--sub and --relators are both needed");
                std::string item;
                std::istringstream ss(sub_text);
                while (std::getline(ss, item, ';')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw Error("substitution item needs gen=word: " + item);
                    sigma[g->gen_index(item.substr(0, eq))] =
                        selfsim::parse_gword(*g, item.substr(eq + 1));
                }
                std::istringstream rs(relators_text);
                while (std::getline(rs, item, ';'))
                    relators.push_back(selfsim::parse_gword(*g, item));
            }
            bool ok = selfsim::verify_substitution_relators(g, sigma, relators,
                                                            iterations);
            if (opt.format == "text") {
                emit(ok ? "true\n" : "false\n");
                return;
            }
            ordered_json j;
            j["verified"] = ok;
            j["relators"] = relators.size();
            j["iterations"] = iterations;
            emit_json(j);
        });
    }

    // nucleus: the minimal restriction-closed recurrent set.
    {
        auto* c = app.add_subcommand("nucleus", "nucleus of a contracting action");
        add_group(c);
        c->callback([&] {
            auto g = load_group(group_src);
            auto n = need_nucleus(g);
            if (opt.format == "dot") {
                emit(contraction::export_nucleus_dot(n));
                return;
            }
            if (opt.format == "text") {
                emit(contraction::export_nucleus_dsl(n));
                return;
            }
            ordered_json j;
            j["size"] = n.size();
            auto elems = ordered_json::array();
            for (const auto& e : n.elements)
                elems.push_back(selfsim::render_gword(*g, e.word));
            j["elements"] = std::move(elems);
            emit_json(j);
        });
    }

    // contracting: bounded search for a nucleus.
    {
        auto* c = app.add_subcommand("contracting",
                                     "whether the action is contracting, up to --cap");
        add_group(c);
        c->callback([&] {
            auto g = load_group(group_src);
            auto r = contraction::is_contracting(g, opt.cap);
            ordered_json j;
            if (r.yes) {
                j["contracting"] = true;
                j["nucleus_size"] = r.value->size();
            } else {
                j["contracting"] = "inconclusive";
                j["cap"] = opt.cap;
            }
            j["candidates"] = r.candidates;
            if (opt.format == "text")
                emit(r.yes ? "true\n" : "inconclusive\n");
            else
                emit_json(j);
        });
    }

    // osc: open set condition on the nucleus restriction graph.
    {
        auto* c = app.add_subcommand(
            "osc", "open set condition: identity reachable from every nucleus element");
        add_group(c);
        c->callback([&] {
            auto g = load_group(group_src);
            emit_scalar("open_set_condition",
                        contraction::open_set_condition(need_nucleus(g)));
        });
    }

    // equiv: asymptotic equivalence of boundary words via the nucleus.
    {
        auto* c = app.add_subcommand(
            "equiv", "asymptotic equivalence of two left-infinite boundary words");
        add_group(c);
        c->add_option("--left", left, "left word (TAIL)SUFFIX")->required();
        c->add_option("--right", right, "right word (TAIL)SUFFIX")->required();
        c->callback([&] {
            auto g = load_group(group_src);
            auto a = group_alphabet(g);
            contraction::EquivalenceQuery q{words::parse_left(left, a),
                                            words::parse_left(right, a)};
            emit_scalar("equivalent",
                        contraction::asymptotically_equivalent(need_nucleus(g), q));
        });
    }

    // tile-graph: nucleus-defined adjacency on level words.
    {
        auto* c = app.add_subcommand("tile-graph",
                                     "tile adjacency graph on level-n words");
        add_group(c);
        c->add_option("--level", level, "tree level n")->required();
        c->callback([&] {
            check_level(level);
            auto g = load_group(group_src);
            emit_graph(contraction::tile_graph(g, need_nucleus(g), level));
        });
    }

    // schreier: the labeled action graph on a level.
    {
        auto* c = app.add_subcommand("schreier", "Schreier graph of the level-n action");
        add_group(c);
        c->add_option("--level", level, "tree level n")->required();
        c->add_option("--gens", gens_text, "generator subset, comma separated");
        c->add_flag("--simplicial", simplicial,
                    "merge parallel edges and drop loops in dot output");
        c->callback([&] {
            check_level(level);
            auto g = load_group(group_src);
            auto graph = schreier::level_schreier(g, split_names(gens_text), level);
            if (opt.format == "dot") {
                emit(schreier::export_dot(graph, simplicial));
                return;
            }
            emit_graph(graph);
        });
    }

    // orbit-ball: truncated orbit Schreier graph of a boundary point.
    {
        auto* c = app.add_subcommand(
            "orbit-ball", "ball in the orbit Schreier graph of a boundary word");
        add_group(c);
        c->add_option("--point", point, "basepoint PRE(PERIOD)")->required();
        c->add_option("--radius", radius, "graph distance cutoff")->required();
        c->add_option("--gens", gens_text, "generator subset, comma separated");
        c->callback([&] {
            auto g = load_group(group_src);
            auto base = words::parse_omega(point, group_alphabet(g));
            emit_graph(schreier::orbit_ball(g, split_names(gens_text), base, radius));
        });
    }

    // growth: ball sizes around a boundary point.
    {
        auto* c = app.add_subcommand("growth",
                                     "orbit ball sizes |B(point, k)| for k = 0..radius");
        add_group(c);
        c->add_option("--point", point, "basepoint PRE(PERIOD)")->required();
        c->add_option("--radius", radius, "largest radius")->required();
        c->add_option("--gens", gens_text, "generator subset, comma separated");
        c->callback([&] {
            auto g = load_group(group_src);
            auto base = words::parse_omega(point, group_alphabet(g));
            auto ball = schreier::orbit_ball(g, split_names(gens_text), base, radius);
            auto growth = schreier::ball_growth(ball, 0, radius);
            if (opt.format == "csv") {
                std::string s = "radius,size\n";
                for (size_t i = 0; i < growth.sizes.size(); ++i)
                    s += std::to_string(i) + "," + std::to_string(growth.sizes[i]) + "\n";
                emit(s);
                return;
            }
            ordered_json j;
            j["point"] = words::render_omega(base);
            j["sizes"] = growth.sizes;
            emit_json(j);
        });
    }

    // cover-check: level n+1 projects onto level n.
    {
        auto* c = app.add_subcommand(
            "cover-check", "check the level n+1 -> n Schreier graph covering");
        add_group(c);
        c->add_option("--level", level, "base level n")->required();
        c->add_option("--gens", gens_text, "generator subset, comma separated");
        c->callback([&] {
            check_level(level + 1);
            auto g = load_group(group_src);
            emit_scalar("covers",
                        schreier::covering_check(g, split_names(gens_text), level));
        });
    }

    // spectrum: eigenvalues of the level-n Hecke-type operator.
    {
        auto* c = app.add_subcommand(
            "spectrum", "spectrum of the level-n sum of symmetrized generators");
        add_group(c);
        c->add_option("--level", level, "tree level n")->required();
        c->add_option("--gens", gens_text, "generator subset, comma separated");
        c->add_flag("--unnormalized", unnormalized,
                    "plain sum instead of the Markov normalization");
        c->callback([&] {
            check_level(level);
            auto g = load_group(group_src);
            auto mat = spectra::hecke_matrix(g, split_names(gens_text), level,
                                             !unnormalized);
            auto sp = spectra::eigenvalues_sym(mat, opt.tol);
            if (opt.format == "csv") {
                std::string s = "value,multiplicity\n";
                for (size_t i = 0; i < sp.values.size(); ++i)
                    s += std::to_string(sp.values[i]) + "," +
                         std::to_string(sp.multiplicity[i]) + "\n";
                emit(s);
                return;
            }
            ordered_json j;
            j["level"] = level;
            j["normalized"] = !unnormalized;
            j["dimension"] = sp.dimension;
            j["tol"] = sp.tol;
            j["values"] = sp.values;
            j["multiplicities"] = sp.multiplicity;
            emit_json(j);
        });
    }

    // fg-closed: closed-form ternary-tree spectrum.
    {
        auto* c = app.add_subcommand(
            "fg-closed",
            "closed-form level spectrum of the Fabrykowski-Gupta operator");
        c->add_option("--level", level, "tree level n")->required();
        c->callback([&] {
            check_level(level);
            auto sp = spectra::fg_spectrum_closed(level);
            ordered_json j;
            j["level"] = level;
            j["values"] = sp.values;
            emit_json(j);
        });
    }

    // detq-check: sampled determinant recursion identity.
    {
        auto* c = app.add_subcommand(
            "detq-check",
            "sampled check of the Fabrykowski-Gupta determinant recursion");
        c->add_option("--level", level, "tree level n")->required();
        c->add_option("--samples", samples, "sample count");
        c->callback([&] {
            check_level(level);
            bool ok = spectra::fg_detq_check(level, samples, opt.seed, opt.tol);
            ordered_json j;
            j["holds"] = ok;
            j["level"] = level;
            j["samples"] = samples;
            j["seed"] = opt.seed;
            j["tol"] = opt.tol;
            if (opt.format == "text")
                emit(ok ? "true\n" : "false\n");
            else
                emit_json(j);
        });
    }

    // phi-check: two-parameter determinant recursion for the z^2-1 action.
    {
        auto* c = app.add_subcommand(
            "phi-check",
            "sampled check of the two-parameter determinant recursion");
        c->add_option("--k", k, "recursion step")->required();
        c->add_option("--samples", samples, "sample count");
        c->callback([&] {
            check_level(k + 1);
            bool ok = spectra::img_phi_recursion_check(k, samples, opt.seed, opt.tol);
            ordered_json j;
            j["holds"] = ok;
            j["k"] = k;
            j["samples"] = samples;
            j["seed"] = opt.seed;
            j["tol"] = opt.tol;
            if (opt.format == "text")
                emit(ok ? "true\n" : "false\n");
            else
                emit_json(j);
        });
    }

    // digit-automaton: adding machine of a vector in a digit system.
    {
        auto* c = app.add_subcommand(
            "digit-automaton", "transducer of adding a vector in a digit system");
        add_system(c);
        c->add_option("--vector", vec, "group element of Z^n, comma separated")
            ->required();
        c->callback([&] {
            auto ds = load_system(system_src);
            auto r = abelian::digit_automaton(ds, parse_int_vector(vec), opt.cap);
            if (r.exceeded)
                throw SizeBoundExceeded("state set passed the cap of " +
                                        std::to_string(r.cap));
            std::vector<std::string> names;
            for (const auto& s : r.states) {
                std::string n = "(";
                for (size_t i = 0; i < s.size(); ++i)
                    n += (i ? "," : "") + std::to_string(s[i]);
                names.push_back(n + ")");
            }
            if (opt.format == "dot") {
                emit(mealy::to_dot(r.machine.m(), names));
                return;
            }
            emit_json(machine_json(r.machine, names));
        });
    }

    // finite-state: spectral radius test of the matrix.
    {
        auto* c = app.add_subcommand(
            "finite-state", "whether the digit-system action is finite-state");
        add_system(c);
        c->callback([&] {
            auto ds = load_system(system_src);
            emit_scalar("finite_state", abelian::is_finite_state(ds.A));
        });
    }

    // tile-render: raster of the depth-level fraction points.
    {
        auto* c = app.add_subcommand("tile-render",
                                     "raster image of the digit-system tile");
        add_system(c);
        c->add_option("--depth", depth, "word length")->required();
        c->add_option("--resolution", resolution, "pixels across the box");
        c->callback([&] {
            auto ds = load_system(system_src);
            auto t = abelian::render_tile(ds, depth, resolution);
            if (opt.format == "json") {
                ordered_json j;
                j["width"] = t.width;
                j["height"] = t.height;
                j["filled"] = t.filled();
                auto lo = ordered_json::array(), hi = ordered_json::array();
                for (const auto& r : t.lo) lo.push_back(r.str());
                for (const auto& r : t.hi) hi.push_back(r.str());
                j["lo"] = std::move(lo);
                j["hi"] = std::move(hi);
                emit_json(j);
                return;
            }
            emit(abelian::export_pgm(t));
        });
    }

    // abelian-equiv: exact series-sum equivalence in Z^n.
    {
        auto* c = app.add_subcommand(
            "abelian-equiv",
            "asymptotic equivalence of boundary words of a digit system");
        add_system(c);
        c->add_option("--left", left, "left word (TAIL)SUFFIX")->required();
        c->add_option("--right", right, "right word (TAIL)SUFFIX")->required();
        c->callback([&] {
            auto ds = load_system(system_src);
            words::Alphabet a{ds.alphabet()};
            emit_scalar("equivalent",
                        abelian::abelian_asymptotic_eq(ds, words::parse_left(left, a),
                                                       words::parse_left(right, a)));
        });
    }

    // semigroup: partial rule-table actions on the subshift.
    {
        auto* sg = app.add_subcommand("semigroup",
                                      "rule-table actions on subshift words");
        sg->require_subcommand(1);

        auto* ap = sg->add_subcommand("apply", "apply a named map to a word");
        add_table(ap);
        ap->add_option("--map", map_name, "map name from the table")->required();
        ap->add_option("--word", word, "input word PRE(PERIOD)")->required();
        ap->callback([&] {
            auto t = load_table(table_src);
            auto w = words::parse_omega(word, t.sft().alphabet(), t.symbols());
            auto out = invsemi::apply_map(t, map_name, w);
            emit_scalar("output", words::render_omega(out, t.symbols()));
        });

        auto* su = sg->add_subcommand(
            "successor", "next integer in the Fibonacci numeration");
        su->add_option("--m", m_value, "integer to increment")->required();
        su->add_option("--length", length, "digit word length");
        su->callback([&] {
            auto s = invsemi::fibonacci_successor(m_value, length);
            if (opt.format == "text") {
                emit(std::to_string(s) + "\n");
                return;
            }
            ordered_json j;
            j["m"] = m_value;
            j["successor"] = s;
            emit_json(j);
        });

        auto* in = sg->add_subcommand(
            "involution", "check a map is an involution on its domain");
        add_table(in);
        in->add_option("--map", map_name, "map name from the table")->required();
        in->add_option("--depth", depth, "prefix depth to exhaust");
        in->callback([&] {
            auto t = load_table(table_src);
            bool ok = invsemi::involution_check(t, map_name, depth);
            if (opt.format == "text") {
                emit(ok ? "true\n" : "false\n");
                return;
            }
            ordered_json j;
            j["involution"] = ok;
            j["map"] = map_name;
            j["depth"] = depth;
            emit_json(j);
        });
    }

    // catalog: the built-in examples.
    {
        auto* cat = app.add_subcommand("catalog", "built-in groups, digit systems "
                                                  "and rule tables");
        cat->require_subcommand(1);

        auto* ls = cat->add_subcommand("list", "names of all entries");
        ls->callback([&] {
            if (opt.format == "text") {
                std::string s;
                for (const auto& n : catalog::names()) s += n + "\n";
                emit(s);
                return;
            }
            ordered_json j = catalog::names();
            emit(j.dump(2) + "\n");
        });

        auto* sh = cat->add_subcommand("show", "definition, note and facts of an entry");
        sh->add_option("name", name, "entry name")->required();
        sh->callback([&] {
            const auto& e = catalog::lookup(name);
            if (opt.format == "text") {
                emit(catalog::render_entry(e));
                return;
            }
            ordered_json j;
            j["name"] = e.name;
            j["kind"] = e.is_group() ? "group"
                        : e.is_digit_system() ? "digit_system"
                                              : "rule_table";
            j["note"] = e.note;
            j["definition"] = catalog::render_entry(e);
            auto facts = ordered_json::array();
            for (const auto& f : e.facts) {
                ordered_json fj;
                fj["kind"] = f.kind;
                if (!f.arg.empty()) fj["arg"] = f.arg;
                fj["value"] = f.value;
                facts.push_back(std::move(fj));
            }
            j["facts"] = std::move(facts);
            emit_json(j);
        });
    }

    app.parse(argc, argv);
    return 0;
}

} // namespace
