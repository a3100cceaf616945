#include "ssg/catalog.hpp"

#include <json.hpp>

namespace ssg::catalog {

using abelian::DigitSystem;
using invsemi::RuleTable;
using selfsim::Group;

const Group& CatalogEntry::group() const {
    if (!is_group()) throw Error("entry " + name + " is not a group");
    return std::get<Group>(payload);
}

const DigitSystem& CatalogEntry::digit_system() const {
    if (!is_digit_system()) throw Error("entry " + name + " is not a digit system");
    return std::get<DigitSystem>(payload);
}

const RuleTable& CatalogEntry::rule_table() const {
    if (!is_rule_table()) throw Error("entry " + name + " is not a rule table");
    return std::get<RuleTable>(payload);
}

namespace {

CatalogEntry group_entry(const char* dsl, std::string note, std::vector<Fact> facts) {
    Group g = selfsim::parse_group_dsl(dsl);
    return {g->name(), g, std::move(note), std::move(facts)};
}

DigitSystem dyadic_system() {
    RatMat a(1, 1);
    a.at(0, 0) = Rat(1, 2);
    return abelian::make_digit_system("dyadic", a, {{0}, {1}});
}

DigitSystem dragon_system() {
    RatMat a(2, 2);
    a.at(0, 0) = Rat(1, 2);
    a.at(0, 1) = Rat(-1, 2);
    a.at(1, 0) = Rat(1, 2);
    a.at(1, 1) = Rat(1, 2);
    return abelian::make_digit_system("dragon", a, {{0, 0}, {1, 0}});
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> es;

    es.push_back(group_entry(
        "group adding_machine alphabet 2\n"
        "a = perm(0 1) [1, a]\n",
        "(0w)^a = 1w, (1w)^a = 0w^a; adds 1 to a dyadic integer",
        {{"nucleus", "", "a',1,a"}, {"order", "a", "exceeds_cap"}}));

    es.push_back(group_entry(
        "group dihedral alphabet 2\n"
        "a = perm(0 1) [1, 1]\n"
        "b = perm() [a, b]\n",
        "(0w)^a = 1w, (1w)^a = 0w; (0w)^b = 0w^a, (1w)^b = 1w^b; the infinite "
        "dihedral group",
        {{"order", "a", "2"}, {"order", "b", "2"}, {"order", "ab", "exceeds_cap"}}));

    es.push_back(group_entry(
        "group grigorchuk alphabet 2\n"
        "a = perm(0 1) [1, 1]\n"
        "b = perm() [a, c]\n"
        "c = perm() [a, d]\n"
        "d = perm() [1, b]\n",
        "(0w)^a = 1w, (1w)^a = 0w; (0w)^b = 0w^a, (1w)^b = 1w^c; (0w)^c = 0w^a, "
        "(1w)^c = 1w^d; (0w)^d = 0w, (1w)^d = 1w^b; infinite torsion group of "
        "intermediate growth",
        {{"nucleus", "", "1,a,b,c,d"},
         {"order", "a", "2"},
         {"order", "b", "2"},
         {"order", "c", "2"},
         {"order", "d", "2"},
         {"order", "ab", "16"},
         {"trivial", "adadadad", "true"},
         {"level_order", "4", "4096"}}));

    es.push_back(group_entry(
        "group lamplighter alphabet 2\n"
        "a = perm(0 1) [b, a]\n"
        "b = perm() [b, a]\n",
        "(0w)^a = 1w^b, (1w)^a = 0w^a; (0w)^b = 0w^b, (1w)^b = 1w^a; the wreath "
        "product (Z/2Z) wr Z, a non-contracting action",
        {{"nucleus_exceeded", "50", "true"}}));

    es.push_back(group_entry(
        "group fabrykowski_gupta alphabet 3\n"
        "a = perm(0 1 2) [1, 1, 1]\n"
        "s = perm() [a, 1, s]\n",
        "a is the rooted cycle (0 1 2); s = (a, 1, s); a group of intermediate "
        "growth acting on the ternary tree",
        {{"order", "a", "3"}, {"order", "s", "3"}, {"contracting", "", "true"}}));

    es.push_back(group_entry(
        "group sierpinski_gasket alphabet 3\n"
        "b0 = perm(1 2) [b0, 1, 1]\n"
        "b1 = perm(0 2) [1, b1, 1]\n"
        "b2 = perm(0 1) [1, 1, b2]\n",
        "(iw)^{b_i} = i(w^{b_i}) and (jw)^{b_i} = kw for {i,j,k} = {0,1,2}; the "
        "limit space is the gasket",
        {{"order", "b0", "2"},
         {"order", "b1", "2"},
         {"order", "b2", "2"},
         {"contracting", "", "true"}}));

    // Degree-d Chebyshev actions: two involutions generating the infinite
    // dihedral group; the cycle structure alternates with the parity of d.
    es.push_back(group_entry(
        "group chebyshev_2 alphabet 2\n"
        "a = perm(0 1) [1, 1]\n"
        "b = perm() [a, b]\n",
        "d even: a = (1, ..., 1)s1, b = (a, 1, ..., 1, b)s2 with s1 = "
        "(1 2)(3 4)... and s2 = (2 3)(4 5)... on {1..d}",
        {{"order", "a", "2"}, {"order", "b", "2"}, {"order", "ab", "exceeds_cap"}}));
    es.push_back(group_entry(
        "group chebyshev_3 alphabet 3\n"
        "a = perm(1 2) [a, 1, 1]\n"
        "b = perm(0 1) [1, 1, b]\n",
        "d odd: a = (a, 1, ..., 1)s1, b = (1, ..., 1, b)s2 with s1 = "
        "(2 3)(4 5)... and s2 = (1 2)(3 4)... on {1..d}",
        {{"order", "a", "2"}, {"order", "b", "2"}, {"order", "ab", "exceeds_cap"}}));
    es.push_back(group_entry(
        "group chebyshev_4 alphabet 4\n"
        "a = perm(0 1)(2 3) [1, 1, 1, 1]\n"
        "b = perm(1 2) [a, 1, 1, b]\n",
        "d even: a = (1, ..., 1)s1, b = (a, 1, ..., 1, b)s2 with s1 = "
        "(1 2)(3 4)... and s2 = (2 3)(4 5)... on {1..d}",
        {{"order", "a", "2"}, {"order", "b", "2"}, {"order", "ab", "exceeds_cap"}}));
    es.push_back(group_entry(
        "group chebyshev_5 alphabet 5\n"
        "a = perm(1 2)(3 4) [a, 1, 1, 1, 1]\n"
        "b = perm(0 1)(2 3) [1, 1, 1, 1, b]\n",
        "d odd: a = (a, 1, ..., 1)s1, b = (1, ..., 1, b)s2 with s1 = "
        "(2 3)(4 5)... and s2 = (1 2)(3 4)... on {1..d}",
        {{"order", "a", "2"}, {"order", "b", "2"}, {"order", "ab", "exceeds_cap"}}));
    es.push_back(group_entry(
        "group chebyshev_6 alphabet 6\n"
        "a = perm(0 1)(2 3)(4 5) [1, 1, 1, 1, 1, 1]\n"
        "b = perm(1 2)(3 4) [a, 1, 1, 1, 1, b]\n",
        "d even: a = (1, ..., 1)s1, b = (a, 1, ..., 1, b)s2 with s1 = "
        "(1 2)(3 4)... and s2 = (2 3)(4 5)... on {1..d}",
        {{"order", "a", "2"}, {"order", "b", "2"}, {"order", "ab", "exceeds_cap"}}));

    // Iterated monodromy recursions of the quadratic rational maps with
    // postcritical set of size at most 3.
    es.push_back(group_entry(
        "group img_z2 alphabet 2\n"
        "tau = perm(0 1) [1, tau]\n",
        "z^2: tau = (1, tau)s; the adding machine",
        {{"nucleus", "", "tau',1,tau"}, {"order", "tau", "exceeds_cap"}}));
    es.push_back(group_entry(
        "group img_1_over_z2 alphabet 2\n"
        "mu = perm(0 1) [1, mu']\n",
        "z^-2: mu = (1, mu^-1)s; a conjugate of the adding machine",
        {{"order", "mu", "exceeds_cap"}, {"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_1 alphabet 2\n"
        "a = perm(0 1) [b, 1]\n"
        "b = perm() [a, 1]\n",
        "z^2-1: a = (b, 1)s, b = (a, 1); torsion free, exponential growth, "
        "just non-solvable",
        {{"order", "a", "exceeds_cap"},
         {"order", "b", "exceeds_cap"},
         {"order", "ab", "exceeds_cap"},
         {"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_1_over_z2 alphabet 2\n"
        "a = perm() [1, b]\n"
        "b = perm(0 1) [a', 1]\n",
        "(z^2-1)/z^2: a = (1, b), b = (a^-1, 1)s",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_2 alphabet 2\n"
        "a = perm(0 1) [1, 1]\n"
        "b = perm() [a, b]\n",
        "z^2-2: a = s, b = (a, b); infinite dihedral, conjugate to the degree-2 "
        "Chebyshev action",
        {{"order", "a", "2"}, {"order", "b", "2"}, {"order", "ab", "exceeds_cap"}}));
    es.push_back(group_entry(
        "group img_z2_plus_c_real alphabet 2\n"
        "a = perm(0 1) [1, b]\n"
        "b = perm() [1, c]\n"
        "c = perm() [a, 1]\n",
        "z^2+c with c the real root of c^3+2c^2+c+1 = 0: a = (1, b)s, "
        "b = (1, c), c = (a, 1)",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_plus_c_complex alphabet 2\n"
        "a = perm(0 1) [1, b]\n"
        "b = perm() [c, 1]\n"
        "c = perm() [a, 1]\n",
        "z^2+c with c a non-real root of c^3+2c^2+c+1 = 0: a = (1, b)s, "
        "b = (c, 1), c = (a, 1); not conjugate to the real-root action, the "
        "closures of the two groups in the tree automorphisms coincide, their "
        "isomorphism is open",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_2_over_z2 alphabet 2\n"
        "a = perm() [b, a]\n"
        "b = perm(0 1) [b', a']\n",
        "(z^2-2)/z^2: a = (b, a), b = (b^-1, a^-1)s; isomorphic to "
        "Z^2 x| (Z/4Z) with Z/4Z acting by a quarter turn",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_phi2_over_z2_plus alphabet 2\n"
        "a = perm() [b, 1]\n"
        "b = perm() [1, c]\n"
        "c = perm(0 1) [a', b']\n",
        "(z^2-phi^2)/z^2 with phi = (1+sqrt5)/2: a = (b, 1), b = (1, c), "
        "c = (a^-1, b^-1)s",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_phi2_over_z2_minus alphabet 2\n"
        "a = perm() [1, b]\n"
        "b = perm() [1, c]\n"
        "c = perm(0 1) [a', 1]\n",
        "(z^2-phi^2)/z^2 with phi = (1-sqrt5)/2: a = (1, b), b = (1, c), "
        "c = (a^-1, 1)s",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_1_over_z2_plus_1 alphabet 2\n"
        "a = perm(0 1) [1, b]\n"
        "b = perm() [a, a']\n",
        "(z^2-1)/(z^2+1): a = (1, b)s, b = (a, a^-1)",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_minus_1_over_z2_minus_omega alphabet 2\n"
        "a = perm(0 1) [1, b]\n"
        "b = perm() [c, 1]\n"
        "c = perm(0 1) [c'b', a']\n",
        "(z^2-1)/(z^2-w) with w^3 = 1, w != 1: a = (1, b)s, b = (c, 1), "
        "c = (c^-1 b^-1, a^-1)s",
        {{"contracting", "", "true"}}));
    es.push_back(group_entry(
        "group img_z2_plus_i alphabet 2\n"
        "a = perm(0 1) [1, 1]\n"
        "b = perm() [a, c]\n"
        "c = perm() [b, 1]\n",
        "z^2+i: a = s, b = (a, c), c = (b, 1); intermediate growth",
        {{"order", "a", "2"},
         {"order", "b", "2"},
         {"order", "c", "2"},
         {"contracting", "", "true"}}));

    es.push_back({"dyadic",
                  dyadic_system(),
                  "A = (1/2), digits {0, 1}; base-2 fractions, tile [0, 1]",
                  {{"finite_state", "", "true"}, {"automaton_states", "1", "2"}}});
    es.push_back({"dragon",
                  dragon_system(),
                  "A = [[1/2, -1/2], [1/2, 1/2]], digits {(0,0), (1,0)}; the "
                  "twindragon tile",
                  {{"finite_state", "", "true"}, {"automaton_states", "1,0", "7"}}});

    es.push_back({"fibonacci",
                  invsemi::fibonacci_table(),
                  "(00w)^a = 10w, (01w)^a = 0(1w)^b, (1w)^b = 0(w^a) on the "
                  "no-11 shift; adding 1 in the Fibonacci numeration",
                  {{"successor", "0 8", "1"},
                   {"successor", "4 8", "5"},
                   {"apply", "a (01)", "(0)"}}});
    es.push_back({"penrose",
                  invsemi::penrose_table(),
                  "(aw)^S = cw, (bw)^S = b(w)^M, (cw)^S = aw; (aw)^M = a(w)^L, "
                  "(bw)^M = cw, (caw)^M = c(aw)^M, (cbw)^M = bbw, (ccw)^M = bcw; "
                  "(aaw)^L = b(aw)^S, (abw)^L = a(bw)^M, (acw)^L = a(cw)^M, "
                  "(bbw)^L = b(bw)^S, (bcw)^L = a(cw)^S, (cw)^L = c(w)^L on the "
                  "no-ba shift; neighbor moves of the tilings",
                  {{"involution", "L 8", "true"},
                   {"involution", "M 8", "true"},
                   {"involution", "S 8", "true"},
                   {"fixed", "M (ca)", "true"},
                   {"fixed", "L (ca)", "true"}}});
    es.push_back({"apollonian",
                  invsemi::apollonian_table(),
                  "(iw)^{g_i} = w and (w)^{g_i} = iw when w does not start "
                  "with i, on words with no equal consecutive letters",
                  {{"involution", "g1 6", "true"}, {"apply", "g1 12(34)", "2(34)"}}});

    return es;
}

} // namespace

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> es = build();
    return es;
}

const CatalogEntry& lookup(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw UnknownEntry("no catalog entry named '" + name + "'");
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

std::string render_digit_system(const DigitSystem& ds) {
    nlohmann::ordered_json j;
    j["name"] = ds.name;
    auto& mat = j["matrix"] = nlohmann::ordered_json::array();
    for (int i = 0; i < ds.A.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < ds.A.cols(); ++k) row.push_back(ds.A.at(i, k).str());
        mat.push_back(row);
    }
    auto& dig = j["digits"] = nlohmann::ordered_json::array();
    for (const auto& r : ds.digits) {
        auto v = nlohmann::ordered_json::array();
        for (auto c : r) v.push_back(c);
        dig.push_back(v);
    }
    return j.dump(2) + "\n";
}

DigitSystem parse_digit_system(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("digit system JSON: ") + e.what());
    }
    if (!j.contains("name") || !j.contains("matrix") || !j.contains("digits"))
        throw ParseError("digit system JSON needs name, matrix and digits");
    const auto& mat = j["matrix"];
    int rows = static_cast<int>(mat.size());
    if (rows == 0) throw ParseError("digit system matrix is empty");
    int cols = static_cast<int>(mat[0].size());
    RatMat a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(mat[i].size()) != cols)
            throw ParseError("digit system matrix rows differ in length");
        for (int k = 0; k < cols; ++k) {
            const auto& cell = mat[i][k];
            if (cell.is_string())
                a.at(i, k) = Rat::parse(cell.get<std::string>());
            else
                a.at(i, k) = Rat(cell.get<std::int64_t>());
        }
    }
    std::vector<abelian::IntVec> digits;
    for (const auto& row : j["digits"]) {
        abelian::IntVec v;
        for (const auto& c : row) v.push_back(c.get<std::int64_t>());
        digits.push_back(std::move(v));
    }
    return abelian::make_digit_system(j["name"].get<std::string>(), std::move(a),
                                      std::move(digits));
}

std::string render_entry(const CatalogEntry& e) {
    if (e.is_group()) return selfsim::render_group_dsl(*e.group());
    if (e.is_digit_system()) return render_digit_system(e.digit_system());
    return invsemi::render_table(e.rule_table());
}

Payload parse_payload(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw ParseError("empty catalog payload");
    if (text[i] == '{') return parse_digit_system(text);
    if (text.compare(i, 6, "group ") == 0) return selfsim::parse_group_dsl(text);
    if (text.compare(i, 6, "table ") == 0) return invsemi::parse_table(text);
    throw ParseError("catalog payload must start with 'group', 'table' or '{'");
}

bool payload_equal(const Payload& a, const Payload& b) {
    if (a.index() != b.index()) return false;
    if (a.index() == 0)
        return selfsim::same_definition(*std::get<Group>(a), *std::get<Group>(b));
    if (a.index() == 1) return std::get<DigitSystem>(a) == std::get<DigitSystem>(b);
    return std::get<RuleTable>(a) == std::get<RuleTable>(b);
}

SubstitutionPresentation grigorchuk_presentation(const Group& g) {
    SubstitutionPresentation p;
    p.sigma[g->gen_index("a")] = selfsim::parse_gword(*g, "aca");
    p.sigma[g->gen_index("c")] = selfsim::parse_gword(*g, "cd");
    p.sigma[g->gen_index("d")] = selfsim::parse_gword(*g, "c");
    p.relators.push_back(selfsim::parse_gword(*g, "aa"));
    p.relators.push_back(selfsim::parse_gword(*g, "adadadad"));
    p.relators.push_back(selfsim::parse_gword(*g, "adacacadacacadacacadacac"));
    return p;
}

} // namespace ssg::catalog
