#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gausseer/index.hpp"
#include "gausseer/query.hpp"

namespace httplib {
class Server;
}

namespace gausseer {

inline constexpr std::size_t kPageSize = 10;

/// Decoded query-string parameters; keys may repeat (refine=...).
using Params = std::multimap<std::string, std::string>;

struct ResultSummary {
  DocId id = 0;
  std::string title;
  std::string summary;
};

struct SearchResponse {
  std::size_t total = 0;
  std::size_t page = 1;
  std::vector<ResultSummary> results;
  std::map<AttributeKind, std::vector<FacetCount>> facets;
  std::vector<Refinement> applied_refinements;
  Query query;
};

/// Elements plus the categorized attributes of a record on one line.
std::string one_line_summary(const GaussianRecord& record, const Taxonomy& taxonomy);

/// Canonical query string (no leading '?') for `query` at `page`.
std::string encode_query_string(const Query& query, std::size_t page = 1);

/// Builds a query from API parameters. Throws Error with EmptyElements,
/// UnknownElement, BadMode, BadConnective or InvalidField.
Query query_from_params(const Params& params);

/// 1-based page from the "page" parameter; throws Error(BadPage).
std::size_t page_from_params(const Params& params);

/// One page of results plus facets over the whole current result set.
SearchResponse search_page(const IndexSnapshot& snapshot, const Query& query, std::size_t page);

nlohmann::ordered_json to_json(const SearchResponse& response);

/// Record JSON plus categories and a pointer to the source file.
nlohmann::ordered_json doc_detail_json(const GaussianRecord& record, const Taxonomy& taxonomy);

struct ApiResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

/// HTTP-independent request handling over a swappable snapshot.
class SearchService {
 public:
  explicit SearchService(std::shared_ptr<const IndexSnapshot> snapshot);

  /// Atomically replaces the active snapshot and bumps the version counter.
  /// Requests already holding the old snapshot finish on it.
  void swap_snapshot(std::shared_ptr<const IndexSnapshot> snapshot);

  std::uint64_t snapshot_version() const;

  ApiResponse search(const Params& params) const;
  ApiResponse document(std::string_view id_text) const;
  ApiResponse meta() const;

 private:
  std::pair<std::shared_ptr<const IndexSnapshot>, std::uint64_t> current() const;

  mutable std::mutex mutex_;
  std::shared_ptr<const IndexSnapshot> snapshot_;
  std::uint64_t version_ = 1;
};

/// Registers /api/search, /api/doc/{id}, /api/meta and /healthz, plus static
/// files under "/" when `static_dir` is set. Returns false if the static
/// directory cannot be mounted.
bool install_routes(httplib::Server& server, SearchService& service,
                    const std::optional<std::string>& static_dir);

}  // namespace gausseer
