#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gausseer {

/// The three faceted attribute kinds.
enum class AttributeKind { JobType, Method, BasisSet };

inline constexpr std::array<AttributeKind, 3> kAttributeKinds{
    AttributeKind::JobType, AttributeKind::Method, AttributeKind::BasisSet};

/// "job_type", "method", "basis_set".
std::string_view to_string(AttributeKind kind);

/// Parses a kind name; throws Error(UnknownKind) otherwise.
AttributeKind parse_kind(std::string_view name);
std::optional<AttributeKind> try_parse_kind(std::string_view name);

/// Lowercase and trim; inner characters are kept as-is.
std::string normalize_token(std::string_view raw);

/// Route keyword without its option list: "opt(calcfc)" -> "opt".
/// Tokens without a '(' after the first character are returned unchanged.
std::string_view keyword_base(std::string_view token);

struct Category {
  std::string name;
  std::vector<std::string> tokens;  // insertion order, unique
};

/// Category -> sub-category token maps for each attribute kind. Immutable
/// once loaded.
class Taxonomy {
 public:
  Taxonomy() = default;

  /// Categories of `kind` in config order.
  const std::vector<Category>& categories(AttributeKind kind) const;

  /// Tokens searched for `category_name` (case-insensitive). "Any" and blank
  /// names give the empty set, meaning unconstrained. Unknown names give
  /// {normalize_token(category_name)}.
  std::set<std::string> expand(AttributeKind kind, std::string_view category_name) const;

  /// Category containing the token, else the normalized token itself. A token
  /// with an option list falls back to its keyword base before passing through.
  std::string categorize_token(AttributeKind kind, std::string_view token) const;

  /// True when `token` is a sub-category token of any category of `kind`.
  bool is_known_token(AttributeKind kind, std::string_view token) const;

  /// Canonical config text; `load_taxonomy(to_config_text())` reproduces this.
  std::string to_config_text() const;

  friend bool operator==(const Taxonomy& a, const Taxonomy& b) { return a.kinds_ == b.kinds_; }

 private:
  friend Taxonomy load_taxonomy(std::string_view config_text);

  struct KindMap {
    std::vector<Category> categories;
    std::map<std::string, std::size_t> by_lower_name;
    std::map<std::string, std::size_t> by_token;

    friend bool operator==(const KindMap& a, const KindMap& b) {
      return a.by_token == b.by_token && a.by_lower_name == b.by_lower_name &&
             a.categories.size() == b.categories.size() &&
             std::equal(a.categories.begin(), a.categories.end(), b.categories.begin(),
                        [](const Category& x, const Category& y) {
                          return x.name == y.name && x.tokens == y.tokens;
                        });
    }
  };

  const KindMap& kind_map(AttributeKind kind) const;

  std::array<KindMap, 3> kinds_;
};

/// Parses the tab-separated config format. Throws ConfigError.
Taxonomy load_taxonomy(std::string_view config_text);

/// Reads and parses a config file. Throws Error(IoError) or ConfigError.
Taxonomy load_taxonomy_file(const std::string& path);

/// Text of the bundled default config (data/taxonomy.tsv).
std::string_view default_taxonomy_text();

/// Shared instance parsed from default_taxonomy_text().
const Taxonomy& default_taxonomy();

}  // namespace gausseer
