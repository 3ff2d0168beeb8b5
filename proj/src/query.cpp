#include "gausseer/query.hpp"

#include <algorithm>

#include "gausseer/elements.hpp"
#include "gausseer/error.hpp"
#include "gausseer/text.hpp"

namespace gausseer {

std::string_view to_string(ElementMode mode) {
  return mode == ElementMode::Exact ? "exact" : "contains";
}

std::string_view to_string(Connective connective) {
  return connective == Connective::And ? "and" : "or";
}

ElementMode parse_element_mode(std::string_view s) {
  const auto t = text::to_lower(text::trim(s));
  if (t.empty() || t == "contains") return ElementMode::Contains;
  if (t == "exact") return ElementMode::Exact;
  throw Error(ErrorKind::BadMode, "mode must be 'exact' or 'contains', got '" + t + "'");
}

Connective parse_connective(std::string_view s) {
  const auto t = text::to_lower(text::trim(s));
  if (t.empty() || t == "and") return Connective::And;
  if (t == "or") return Connective::Or;
  throw Error(ErrorKind::BadConnective, "op must be 'and' or 'or', got '" + t + "'");
}

namespace {

AttributeKind refinable_field(std::string_view field) {
  if (auto kind = try_parse_kind(text::trim(field))) return *kind;
  throw Error(ErrorKind::InvalidField,
              "refinement field must be job_type, method or basis_set, got '" +
                  std::string(field) + "'");
}

bool clause_holds(const std::string& clause, AttributeKind kind, const GaussianRecord& record,
                  const Taxonomy& taxonomy) {
  const auto expanded = taxonomy.expand(kind, clause);
  const auto& tokens = tokens_of(record, kind);
  return std::any_of(tokens.begin(), tokens.end(),
                     [&](const std::string& t) { return token_hits(t, expanded); });
}

}  // namespace

Refinement parse_refinement(std::string_view field_colon_value) {
  const auto colon = field_colon_value.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidField,
                "refinement must be 'field:value', got '" + std::string(field_colon_value) + "'");
  }
  return {refinable_field(field_colon_value.substr(0, colon)),
          std::string(field_colon_value.substr(colon + 1))};
}

const std::optional<std::string>& Query::clause(AttributeKind kind) const {
  switch (kind) {
    case AttributeKind::JobType: return job_clause;
    case AttributeKind::Method: return method_clause;
    case AttributeKind::BasisSet: break;
  }
  return basis_clause;
}

std::optional<std::string>& Query::clause(AttributeKind kind) {
  return const_cast<std::optional<std::string>&>(std::as_const(*this).clause(kind));
}

Query Query::without_refinements() const {
  Query q = *this;
  q.refinements.clear();
  return q;
}

const std::set<std::string>& tokens_of(const GaussianRecord& record, AttributeKind kind) {
  switch (kind) {
    case AttributeKind::JobType: return record.job_types;
    case AttributeKind::Method: return record.methods;
    case AttributeKind::BasisSet: break;
  }
  return record.basis_sets;
}

bool token_hits(std::string_view token, const std::set<std::string>& expanded) {
  if (expanded.contains(std::string(token))) return true;
  const auto base = keyword_base(token);
  return base.size() != token.size() && expanded.contains(std::string(base));
}

bool matches(const Query& query, const GaussianRecord& record, const Taxonomy& taxonomy) {
  const bool element_ok =
      query.element_mode == ElementMode::Exact
          ? record.elements == query.elements
          : std::includes(record.elements.begin(), record.elements.end(),
                          query.elements.begin(), query.elements.end());
  if (!element_ok) return false;

  std::vector<bool> clauses;
  for (auto kind : kAttributeKinds) {
    const auto& clause = query.clause(kind);
    if (!clause || taxonomy.expand(kind, *clause).empty()) continue;
    clauses.push_back(clause_holds(*clause, kind, record, taxonomy));
  }
  if (!clauses.empty()) {
    const bool attrs_ok = query.connective == Connective::And
                              ? std::all_of(clauses.begin(), clauses.end(), [](bool b) { return b; })
                              : std::any_of(clauses.begin(), clauses.end(), [](bool b) { return b; });
    if (!attrs_ok) return false;
  }

  return std::all_of(query.refinements.begin(), query.refinements.end(), [&](const Refinement& r) {
    const auto& tokens = tokens_of(record, r.field);
    return std::any_of(tokens.begin(), tokens.end(), [&](const std::string& t) {
      return taxonomy.categorize_token(r.field, t) == r.value;
    });
  });
}

Query refine(const Query& query, AttributeKind field, std::string_view value) {
  Query out = query;
  Refinement r{field, std::string(value)};
  if (std::find(out.refinements.begin(), out.refinements.end(), r) == out.refinements.end()) {
    out.refinements.push_back(std::move(r));
  }
  return out;
}

Query refine(const Query& query, std::string_view field, std::string_view value) {
  return refine(query, refinable_field(field), value);
}

Query build_query(const std::vector<std::string>& raw_elements, ElementMode mode,
                  std::string_view method, std::string_view job, std::string_view basis,
                  std::string_view connective) {
  Query q;
  for (const auto& raw : raw_elements) {
    const auto t = text::trim(raw);
    if (t.empty()) continue;
    auto sym = elements::canonicalize(t);
    if (!sym) throw Error(ErrorKind::UnknownElement, std::string(t));
    q.elements.insert(std::move(*sym));
  }
  if (q.elements.empty()) {
    throw Error(ErrorKind::EmptyElements, "at least one element is required");
  }
  q.element_mode = mode;
  auto clause = [](std::string_view raw) -> std::optional<std::string> {
    const auto t = text::trim(raw);
    if (t.empty() || text::iequals(t, "any")) return std::nullopt;
    return std::string(t);
  };
  q.method_clause = clause(method);
  q.job_clause = clause(job);
  q.basis_clause = clause(basis);
  q.connective = parse_connective(connective);
  return q;
}

}  // namespace gausseer
