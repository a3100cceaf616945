#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ssg/abelian.hpp"
#include "ssg/invsemi.hpp"
#include "ssg/selfsim.hpp"

namespace ssg::catalog {

// A checkable statement about an entry. The test suite executes every fact;
// `catalog show` prints them. kind selects the check, arg its parameters,
// value the expected result, all in the entry's own notation.
struct Fact {
    std::string kind;
    std::string arg;
    std::string value;
};

using Payload = std::variant<selfsim::Group, abelian::DigitSystem, invsemi::RuleTable>;

struct CatalogEntry {
    std::string name;
    Payload payload;
    std::string note; // the defining rules, quoted verbatim
    std::vector<Fact> facts;

    bool is_group() const { return payload.index() == 0; }
    bool is_digit_system() const { return payload.index() == 1; }
    bool is_rule_table() const { return payload.index() == 2; }
    const selfsim::Group& group() const;
    const abelian::DigitSystem& digit_system() const;
    const invsemi::RuleTable& rule_table() const;
};

const std::vector<CatalogEntry>& entries();
const CatalogEntry& lookup(const std::string& name); // UnknownEntry
std::vector<std::string> names();

// Digit-system JSON: {"name": ..., "matrix": [["1/2", "-1/2"], ...],
// "digits": [[0, 0], [1, 0]]} with rational matrix entries as strings.
std::string render_digit_system(const abelian::DigitSystem& ds);
abelian::DigitSystem parse_digit_system(const std::string& text);

// Text form of the payload: group DSL, digit-system JSON, or rule-table text.
std::string render_entry(const CatalogEntry& e);
// Inverse of render_entry, detecting the format from the leading byte/token.
Payload parse_payload(const std::string& text);
bool payload_equal(const Payload& a, const Payload& b);

// The recursive presentation of the Grigorchuk group: the substitution
// sigma(a) = aca, sigma(c) = cd, sigma(d) = c together with the base relators
// a^2, (ad)^4, (adacac)^4, as words over the given group's generators.
struct SubstitutionPresentation {
    selfsim::Substitution sigma;
    std::vector<selfsim::GWord> relators;
};
SubstitutionPresentation grigorchuk_presentation(const selfsim::Group& g);

} // namespace ssg::catalog
