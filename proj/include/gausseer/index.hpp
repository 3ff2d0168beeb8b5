#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gausseer/query.hpp"
#include "gausseer/record.hpp"
#include "gausseer/taxonomy.hpp"

namespace gausseer {

enum class PostingField {
  Element,
  MethodToken,
  JobToken,
  BasisToken,
  MethodCategory,
  JobCategory,
  BasisCategory,
};

inline constexpr std::size_t kPostingFieldCount = 7;

std::string_view to_string(PostingField field);
PostingField token_field(AttributeKind kind);
PostingField category_field(AttributeKind kind);

using PostingList = std::vector<DocId>;  // strictly ascending
using PostingMap = std::map<std::string, PostingList, std::less<>>;

/// "|"-joined sorted symbols, e.g. {O,H} -> "H|O".
std::string signature_key(const std::set<std::string>& elements);

struct FacetCount {
  AttributeKind field;
  std::string value;
  std::size_t count = 0;

  friend bool operator==(const FacetCount&, const FacetCount&) = default;
};

/// Immutable document store plus inverted postings. Built once, then only read.
class IndexSnapshot {
 public:
  IndexSnapshot() = default;

  std::size_t doc_count() const noexcept { return docs_.size(); }
  const std::map<DocId, GaussianRecord>& docs() const noexcept { return docs_; }
  const PostingMap& postings(PostingField field) const noexcept {
    return postings_[static_cast<std::size_t>(field)];
  }
  const PostingMap& element_signatures() const noexcept { return signatures_; }

  /// Taxonomy the category postings were built with.
  const Taxonomy& taxonomy() const noexcept { return taxonomy_; }

  friend bool operator==(const IndexSnapshot&, const IndexSnapshot&) = default;

 private:
  friend IndexSnapshot build_index(std::vector<GaussianRecord> records, const Taxonomy& taxonomy);
  friend IndexSnapshot assemble_snapshot(std::map<DocId, GaussianRecord> docs,
                                         std::array<PostingMap, kPostingFieldCount> postings,
                                         PostingMap signatures, Taxonomy taxonomy);

  std::map<DocId, GaussianRecord> docs_;
  std::array<PostingMap, kPostingFieldCount> postings_;
  PostingMap signatures_;
  Taxonomy taxonomy_;
};

/// Throws Error(DuplicateId) when two records share an id.
IndexSnapshot build_index(std::vector<GaussianRecord> records,
                          const Taxonomy& taxonomy = default_taxonomy());

/// Reassembles a snapshot from stored parts, rejecting (Error(FormatError))
/// any postings that differ from a rebuild over `docs`.
IndexSnapshot assemble_snapshot(std::map<DocId, GaussianRecord> docs,
                                std::array<PostingMap, kPostingFieldCount> postings,
                                PostingMap signatures, Taxonomy taxonomy);

/// Ids of matching documents, ascending. Same result as filtering docs with
/// `matches`, computed from postings.
std::vector<DocId> search(const IndexSnapshot& snapshot, const Query& query,
                          const Taxonomy& taxonomy);

/// Per-category counts among `result_ids`, count descending then value ascending.
std::vector<FacetCount> facet_counts(const IndexSnapshot& snapshot,
                                     std::span<const DocId> result_ids, AttributeKind field,
                                     const Taxonomy& taxonomy);

/// Throws Error(NotFound).
const GaussianRecord& get_document(const IndexSnapshot& snapshot, DocId id);

}  // namespace gausseer
