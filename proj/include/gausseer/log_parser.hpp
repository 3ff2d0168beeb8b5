#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gausseer/record.hpp"
#include "gausseer/taxonomy.hpp"

namespace gausseer {

struct RouteTokens {
  std::set<std::string> methods;
  std::set<std::string> basis_sets;
  std::set<std::string> job_types;

  friend bool operator==(const RouteTokens&, const RouteTokens&) = default;
};

/// Splits a route ("#p b3lyp/6-31g(d) opt freq") into method, basis and job
/// tokens. Job keywords and bare method keywords are recognized through the
/// taxonomy; "kw=opts" is rewritten to "kw(opts)"; other tokens are ignored.
/// Throws Error(MalformedRoute) when the route does not start with '#'.
RouteTokens parse_route(std::string_view route, const Taxonomy& taxonomy = default_taxonomy());

/// Sites of the last "Standard orientation:" block, or of the last
/// "Input orientation:" block when no standard block has rows. Dummy and
/// ghost centers (atomic number <= 0) are skipped.
std::vector<AtomSite> extract_elements(std::string_view text);

/// Title card (first non-empty line between the route and the charge line),
/// falling back to the stem of record.file_path.
std::string record_title(const GaussianRecord& record, std::string_view source_text);

/// Parses a whole log. `id` is left 0. Throws Error(EmptyInput) or
/// Error(NoRouteSection); every other gap is recorded in `missing`.
GaussianRecord parse_document(std::string_view text, std::string_view path,
                              const Taxonomy& taxonomy = default_taxonomy());

}  // namespace gausseer
