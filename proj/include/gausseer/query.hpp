#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gausseer/record.hpp"
#include "gausseer/taxonomy.hpp"

namespace gausseer {

enum class ElementMode { Exact, Contains };
enum class Connective { And, Or };

std::string_view to_string(ElementMode mode);
std::string_view to_string(Connective connective);

/// "exact"/"contains", case-insensitive; empty means Contains. Throws Error(BadMode).
ElementMode parse_element_mode(std::string_view s);
/// "and"/"or", case-insensitive; empty means And. Throws Error(BadConnective).
Connective parse_connective(std::string_view s);

/// A facet click: records whose `kind` tokens categorize to `value`.
struct Refinement {
  AttributeKind field;
  std::string value;

  friend bool operator==(const Refinement&, const Refinement&) = default;
};

/// Parses "field:value" as carried in refine= parameters. Throws Error(InvalidField).
Refinement parse_refinement(std::string_view field_colon_value);

struct Query {
  std::set<std::string> elements;
  ElementMode element_mode = ElementMode::Contains;
  std::optional<std::string> method_clause;
  std::optional<std::string> job_clause;
  std::optional<std::string> basis_clause;
  Connective connective = Connective::And;
  std::vector<Refinement> refinements;

  const std::optional<std::string>& clause(AttributeKind kind) const;
  std::optional<std::string>& clause(AttributeKind kind);

  /// Same query with refinements cleared ("All Results").
  Query without_refinements() const;

  friend bool operator==(const Query&, const Query&) = default;
};

/// Record tokens of the given kind.
const std::set<std::string>& tokens_of(const GaussianRecord& record, AttributeKind kind);

/// True when `token` is one of `expanded` or its keyword base is
/// ("opt(calcfc)" hits {opt}).
bool token_hits(std::string_view token, const std::set<std::string>& expanded);

/// Linear, record-level evaluation. Element predicate is always conjunctive;
/// the connective spans the present attribute clauses only; refinements are
/// conjunctive with everything.
bool matches(const Query& query, const GaussianRecord& record, const Taxonomy& taxonomy);

/// Copy with (field, value) appended unless already present.
Query refine(const Query& query, AttributeKind field, std::string_view value);
/// As above with the field given by name. Throws Error(InvalidField).
Query refine(const Query& query, std::string_view field, std::string_view value);

/// Normalizes raw UI/CLI/API input. Element symbols are canonicalized,
/// "Any" or blank clauses become absent. Throws Error(EmptyElements),
/// Error(UnknownElement) or Error(BadConnective).
Query build_query(const std::vector<std::string>& raw_elements, ElementMode mode,
                  std::string_view method, std::string_view job, std::string_view basis,
                  std::string_view connective);

}  // namespace gausseer
