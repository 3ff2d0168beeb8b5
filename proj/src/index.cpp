#include "gausseer/index.hpp"

#include <algorithm>
#include <iterator>

#include "gausseer/error.hpp"

namespace gausseer {

std::string_view to_string(PostingField field) {
  switch (field) {
    case PostingField::Element: return "element";
    case PostingField::MethodToken: return "method_token";
    case PostingField::JobToken: return "job_token";
    case PostingField::BasisToken: return "basis_token";
    case PostingField::MethodCategory: return "method_cat";
    case PostingField::JobCategory: return "job_cat";
    case PostingField::BasisCategory: return "basis_cat";
  }
  return "";
}

PostingField token_field(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::JobType: return PostingField::JobToken;
    case AttributeKind::Method: return PostingField::MethodToken;
    case AttributeKind::BasisSet: break;
  }
  return PostingField::BasisToken;
}

PostingField category_field(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::JobType: return PostingField::JobCategory;
    case AttributeKind::Method: return PostingField::MethodCategory;
    case AttributeKind::BasisSet: break;
  }
  return PostingField::BasisCategory;
}

std::string signature_key(const std::set<std::string>& elements) {
  std::string key;
  for (const auto& e : elements) {
    if (!key.empty()) key.push_back('|');
    key.append(e);
  }
  return key;
}

namespace {

PostingList intersect(const PostingList& a, const PostingList& b) {
  PostingList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PostingList unite(const PostingList& a, const PostingList& b) {
  PostingList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

const PostingList& lookup(const PostingMap& map, std::string_view term) {
  static const PostingList kEmpty;
  auto it = map.find(term);
  return it == map.end() ? kEmpty : it->second;
}

// Documents with a token equal to `term` or carrying options on it ("term(...)").
PostingList term_with_options(const PostingMap& map, const std::string& term) {
  PostingList out = lookup(map, term);
  const std::string prefix = term + "(";
  for (auto it = map.lower_bound(prefix); it != map.end() && it->first.starts_with(prefix); ++it) {
    out = unite(out, it->second);
  }
  return out;
}

PostingList all_ids(const IndexSnapshot& snapshot) {
  PostingList out;
  out.reserve(snapshot.doc_count());
  for (const auto& [id, _] : snapshot.docs()) out.push_back(id);
  return out;
}

std::set<std::string> categories_of(const GaussianRecord& record, AttributeKind kind,
                                    const Taxonomy& taxonomy) {
  std::set<std::string> out;
  for (const auto& t : tokens_of(record, kind)) out.insert(taxonomy.categorize_token(kind, t));
  return out;
}

}  // namespace

IndexSnapshot build_index(std::vector<GaussianRecord> records, const Taxonomy& taxonomy) {
  IndexSnapshot snap;
  snap.taxonomy_ = taxonomy;
  for (auto& record : records) {
    const auto id = record.id;
    if (snap.docs_.contains(id)) {
      throw Error(ErrorKind::DuplicateId, "duplicate document id " + std::to_string(id));
    }
    snap.docs_.emplace(id, std::move(record));
  }
  // Walking docs in id order keeps every posting list ascending.
  for (const auto& [id, record] : snap.docs_) {
    auto post = [&](PostingField field, const std::string& term) {
      auto& list = snap.postings_[static_cast<std::size_t>(field)][term];
      if (list.empty() || list.back() != id) list.push_back(id);
    };
    for (const auto& e : record.elements) post(PostingField::Element, e);
    for (auto kind : kAttributeKinds) {
      for (const auto& t : tokens_of(record, kind)) {
        post(token_field(kind), t);
        post(category_field(kind), taxonomy.categorize_token(kind, t));
      }
    }
    snap.signatures_[signature_key(record.elements)].push_back(id);
  }
  return snap;
}

IndexSnapshot assemble_snapshot(std::map<DocId, GaussianRecord> docs,
                                std::array<PostingMap, kPostingFieldCount> postings,
                                PostingMap signatures, Taxonomy taxonomy) {
  for (const auto& [id, record] : docs) {
    if (record.id != id) throw Error(ErrorKind::FormatError, "document key/id mismatch");
  }
  std::vector<GaussianRecord> records;
  records.reserve(docs.size());
  for (const auto& [_, record] : docs) records.push_back(record);
  auto rebuilt = build_index(std::move(records), taxonomy);
  if (rebuilt.postings_ != postings || rebuilt.signatures_ != signatures) {
    throw Error(ErrorKind::FormatError, "stored postings disagree with stored documents");
  }
  return rebuilt;
}

std::vector<DocId> search(const IndexSnapshot& snapshot, const Query& query,
                          const Taxonomy& taxonomy) {
  PostingList result;
  if (query.element_mode == ElementMode::Exact) {
    result = lookup(snapshot.element_signatures(), signature_key(query.elements));
  } else if (query.elements.empty()) {
    result = all_ids(snapshot);
  } else {
    const auto& element_postings = snapshot.postings(PostingField::Element);
    std::vector<const PostingList*> lists;
    for (const auto& e : query.elements) lists.push_back(&lookup(element_postings, e));
    std::sort(lists.begin(), lists.end(),
              [](const PostingList* a, const PostingList* b) { return a->size() < b->size(); });
    result = *lists.front();
    for (std::size_t i = 1; i < lists.size() && !result.empty(); ++i) {
      result = intersect(result, *lists[i]);
    }
  }

  std::vector<PostingList> clause_hits;
  for (auto kind : kAttributeKinds) {
    const auto& clause = query.clause(kind);
    if (!clause) continue;
    const auto expanded = taxonomy.expand(kind, *clause);
    if (expanded.empty()) continue;
    PostingList hits;
    for (const auto& term : expanded) {
      hits = unite(hits, term_with_options(snapshot.postings(token_field(kind)), term));
    }
    clause_hits.push_back(std::move(hits));
  }
  if (!clause_hits.empty()) {
    PostingList combined = clause_hits.front();
    for (std::size_t i = 1; i < clause_hits.size(); ++i) {
      combined = query.connective == Connective::And ? intersect(combined, clause_hits[i])
                                                     : unite(combined, clause_hits[i]);
    }
    result = intersect(result, combined);
  }

  for (const auto& r : query.refinements) {
    if (result.empty()) break;
    result = intersect(result, lookup(snapshot.postings(category_field(r.field)), r.value));
  }
  return result;
}

std::vector<FacetCount> facet_counts(const IndexSnapshot& snapshot,
                                     std::span<const DocId> result_ids, AttributeKind field,
                                     const Taxonomy& taxonomy) {
  std::map<std::string, std::size_t> counts;
  for (const auto id : result_ids) {
    for (auto& cat : categories_of(get_document(snapshot, id), field, taxonomy)) {
      ++counts[std::move(cat)];
    }
  }
  std::vector<FacetCount> out;
  out.reserve(counts.size());
  for (auto& [value, count] : counts) out.push_back({field, value, count});
  std::stable_sort(out.begin(), out.end(), [](const FacetCount& a, const FacetCount& b) {
    return a.count > b.count;
  });
  return out;
}

const GaussianRecord& get_document(const IndexSnapshot& snapshot, DocId id) {
  const auto it = snapshot.docs().find(id);
  if (it == snapshot.docs().end()) {
    throw Error(ErrorKind::NotFound, "no document with id " + std::to_string(id));
  }
  return it->second;
}

}  // namespace gausseer
