"""Exact computation with self-similar groups and semigroups defined by
finite automata: word problem, nucleus and contraction analysis, Schreier
graphs and spectra, abelian digit systems, and partial rule-table actions."""

from ._core import (
    DigitSystem,
    DomainError,
    Group,
    RuleTable,
    abelian_equiv,
    act,
    apply_map,
    asymptotic_equiv,
    catalog_entry,
    catalog_names,
    catalog_note,
    digit_automaton,
    digit_system_text,
    fibonacci_successor,
    finite_state,
    group_text,
    hausdorff,
    involution_check,
    is_contracting,
    is_trivial,
    level_order,
    nucleus,
    order,
    parse_digit_system,
    parse_group,
    parse_rule_table,
    restrict,
    rule_table_text,
    schreier_edges,
    spectrum,
)

__all__ = [
    "DigitSystem",
    "DomainError",
    "Group",
    "RuleTable",
    "abelian_equiv",
    "act",
    "apply_map",
    "asymptotic_equiv",
    "catalog_entry",
    "catalog_names",
    "catalog_note",
    "digit_automaton",
    "digit_system_text",
    "fibonacci_successor",
    "finite_state",
    "group_text",
    "hausdorff",
    "involution_check",
    "is_contracting",
    "is_trivial",
    "level_order",
    "nucleus",
    "order",
    "parse_digit_system",
    "parse_group",
    "parse_rule_table",
    "restrict",
    "rule_table_text",
    "schreier_edges",
    "spectrum",
]
