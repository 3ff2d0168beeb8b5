#include "gausseer/service.hpp"

#include <charconv>

#include <httplib.h>

#include "gausseer/error.hpp"
#include "gausseer/snapshot_io.hpp"
#include "gausseer/text.hpp"

namespace gausseer {

namespace {

constexpr std::string_view kSearchPath = "/api/search";

std::string join(const std::set<std::string>& values, std::string_view sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out.append(sep);
    out.append(v);
  }
  return out;
}

std::set<std::string> categories_of(const GaussianRecord& record, AttributeKind kind,
                                    const Taxonomy& taxonomy) {
  std::set<std::string> out;
  for (const auto& t : tokens_of(record, kind)) out.insert(taxonomy.categorize_token(kind, t));
  return out;
}

std::optional<std::string> first_param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::string param_or_empty(const Params& params, const std::string& key) {
  return first_param(params, key).value_or("");
}

// Query-string name of each clause.
std::string_view clause_param(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::JobType: return "jobtype";
    case AttributeKind::Method: return "method";
    case AttributeKind::BasisSet: break;
  }
  return "basis";
}

ApiResponse error_response(int status, const Error& e) {
  return {status, {{"code", to_string(e.kind())}, {"message", e.what()}}};
}

nlohmann::ordered_json facet_json(const FacetCount& f, const Query& query) {
  return {{"field", to_string(f.field)},
          {"value", f.value},
          {"count", f.count},
          {"link", std::string(kSearchPath) + "?" +
                       encode_query_string(refine(query, f.field, f.value))}};
}

}  // namespace

std::string one_line_summary(const GaussianRecord& record, const Taxonomy& taxonomy) {
  std::string out = join(record.elements, ", ");
  for (auto [kind, label] : {std::pair{AttributeKind::Method, "method"},
                             std::pair{AttributeKind::BasisSet, "basis"},
                             std::pair{AttributeKind::JobType, "job"}}) {
    const auto cats = categories_of(record, kind, taxonomy);
    if (cats.empty()) continue;
    out.append("; ").append(label).append(": ").append(join(cats, ", "));
  }
  return out;
}

std::string encode_query_string(const Query& query, std::size_t page) {
  using httplib::detail::encode_query_param;
  std::string out = "elements=";
  bool first = true;
  for (const auto& e : query.elements) {
    if (!first) out.push_back(',');
    out.append(encode_query_param(e));
    first = false;
  }
  out.append("&mode=").append(to_string(query.element_mode));
  for (auto kind : {AttributeKind::Method, AttributeKind::JobType, AttributeKind::BasisSet}) {
    if (const auto& clause = query.clause(kind)) {
      out.append("&").append(clause_param(kind)).append("=").append(encode_query_param(*clause));
    }
  }
  out.append("&op=").append(to_string(query.connective));
  for (const auto& r : query.refinements) {
    out.append("&refine=").append(
        encode_query_param(std::string(to_string(r.field)) + ":" + r.value));
  }
  if (page != 1) out.append("&page=").append(std::to_string(page));
  return out;
}

Query query_from_params(const Params& params) {
  std::vector<std::string> elements;
  for (auto [it, end] = params.equal_range("elements"); it != end; ++it) {
    for (auto& piece : text::split_top_level(it->second, ',')) elements.push_back(std::move(piece));
  }
  auto query = build_query(elements, parse_element_mode(param_or_empty(params, "mode")),
                           param_or_empty(params, "method"), param_or_empty(params, "jobtype"),
                           param_or_empty(params, "basis"), param_or_empty(params, "op"));
  for (auto [it, end] = params.equal_range("refine"); it != end; ++it) {
    const auto r = parse_refinement(it->second);
    query = refine(query, r.field, r.value);
  }
  return query;
}

std::size_t page_from_params(const Params& params) {
  const auto raw = first_param(params, "page");
  if (!raw) return 1;
  const auto t = text::trim(*raw);
  std::size_t page = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), page);
  if (ec != std::errc{} || ptr != t.data() + t.size() || page == 0) {
    throw Error(ErrorKind::BadPage, "page must be a positive integer, got '" + *raw + "'");
  }
  return page;
}

SearchResponse search_page(const IndexSnapshot& snapshot, const Query& query, std::size_t page) {
  const auto& taxonomy = snapshot.taxonomy();
  const auto ids = search(snapshot, query, taxonomy);

  SearchResponse resp;
  resp.total = ids.size();
  resp.page = page;
  resp.query = query;
  resp.applied_refinements = query.refinements;
  const auto begin = std::min(ids.size(), (page - 1) * kPageSize);
  const auto end = std::min(ids.size(), begin + kPageSize);
  for (auto i = begin; i < end; ++i) {
    const auto& record = get_document(snapshot, ids[i]);
    resp.results.push_back({record.id, record.title, one_line_summary(record, taxonomy)});
  }
  for (auto kind : kAttributeKinds) resp.facets[kind] = facet_counts(snapshot, ids, kind, taxonomy);
  return resp;
}

nlohmann::ordered_json to_json(const SearchResponse& r) {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& s : r.results) {
    results.push_back({{"id", s.id},
                       {"title", s.title},
                       {"summary", s.summary},
                       {"link", "/api/doc/" + std::to_string(s.id)}});
  }
  nlohmann::ordered_json facets = nlohmann::ordered_json::object();
  for (auto kind : kAttributeKinds) {
    auto& list = facets[std::string(to_string(kind))] = nlohmann::ordered_json::array();
    if (auto it = r.facets.find(kind); it != r.facets.end()) {
      for (const auto& f : it->second) list.push_back(facet_json(f, r.query));
    }
  }
  nlohmann::ordered_json applied = nlohmann::ordered_json::array();
  for (const auto& ref : r.applied_refinements) {
    applied.push_back({{"field", to_string(ref.field)}, {"value", ref.value}});
  }
  nlohmann::ordered_json j;
  j["total"] = r.total;
  j["page"] = r.page;
  j["page_size"] = kPageSize;
  j["results"] = std::move(results);
  j["facets"] = std::move(facets);
  j["applied_refinements"] = std::move(applied);
  j["all_results_link"] =
      std::string(kSearchPath) + "?" + encode_query_string(r.query.without_refinements());
  return j;
}

nlohmann::ordered_json doc_detail_json(const GaussianRecord& record, const Taxonomy& taxonomy) {
  auto j = to_json(record);
  nlohmann::ordered_json cats;
  for (auto kind : kAttributeKinds) {
    cats[std::string(to_string(kind))] = categories_of(record, kind, taxonomy);
  }
  j["categories"] = std::move(cats);
  j["summary"] = one_line_summary(record, taxonomy);
  j["source_path"] = record.file_path;
  return j;
}

SearchService::SearchService(std::shared_ptr<const IndexSnapshot> snapshot)
    : snapshot_(std::move(snapshot)) {}

void SearchService::swap_snapshot(std::shared_ptr<const IndexSnapshot> snapshot) {
  std::lock_guard lock(mutex_);
  snapshot_ = std::move(snapshot);
  ++version_;
}

std::uint64_t SearchService::snapshot_version() const { return current().second; }

std::pair<std::shared_ptr<const IndexSnapshot>, std::uint64_t> SearchService::current() const {
  std::lock_guard lock(mutex_);
  return {snapshot_, version_};
}

ApiResponse SearchService::search(const Params& params) const {
  const auto snapshot = current().first;
  try {
    const auto query = query_from_params(params);
    const auto page = page_from_params(params);
    return {200, to_json(search_page(*snapshot, query, page))};
  } catch (const Error& e) {
    return error_response(400, e);
  }
}

ApiResponse SearchService::document(std::string_view id_text) const {
  const auto snapshot = current().first;
  DocId id = 0;
  auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
  if (ec != std::errc{} || ptr != id_text.data() + id_text.size()) {
    return error_response(404, Error(ErrorKind::NotFound, "no document '" + std::string(id_text) + "'"));
  }
  try {
    return {200, doc_detail_json(get_document(*snapshot, id), snapshot->taxonomy())};
  } catch (const Error& e) {
    return error_response(404, e);
  }
}

ApiResponse SearchService::meta() const {
  const auto [snapshot, version] = current();
  nlohmann::ordered_json taxonomy;
  for (auto kind : kAttributeKinds) {
    auto options = nlohmann::ordered_json::array({"Any"});
    for (const auto& c : snapshot->taxonomy().categories(kind)) options.push_back(c.name);
    taxonomy[std::string(to_string(kind))] = std::move(options);
  }
  nlohmann::ordered_json j;
  j["doc_count"] = snapshot->doc_count();
  j["format_version"] = kSnapshotVersion;
  j["snapshot_version"] = version;
  j["taxonomy"] = std::move(taxonomy);
  return {200, std::move(j)};
}

bool install_routes(httplib::Server& server, SearchService& service,
                    const std::optional<std::string>& static_dir) {
  auto reply = [](httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body.dump(), "application/json; charset=utf-8");
  };
  server.Get(std::string(kSearchPath), [&service, reply](const httplib::Request& req,
                                                         httplib::Response& res) {
    reply(res, service.search(Params(req.params.begin(), req.params.end())));
  });
  server.Get(R"(/api/doc/([^/]+))", [&service, reply](const httplib::Request& req,
                                                      httplib::Response& res) {
    reply(res, service.document(req.matches[1].str()));
  });
  server.Get("/api/meta", [&service, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, service.meta());
  });
  server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });
  if (static_dir) return server.set_mount_point("/", *static_dir);
  return true;
}

}  // namespace gausseer
