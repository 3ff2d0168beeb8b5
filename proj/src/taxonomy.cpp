#include "gausseer/taxonomy.hpp"

#include <fstream>
#include <sstream>

#include "gausseer/error.hpp"
#include "gausseer/text.hpp"

namespace gausseer {

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::JobType: return "job_type";
    case AttributeKind::Method: return "method";
    case AttributeKind::BasisSet: return "basis_set";
  }
  return "";
}

std::optional<AttributeKind> try_parse_kind(std::string_view name) {
  for (auto kind : kAttributeKinds) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

AttributeKind parse_kind(std::string_view name) {
  if (auto kind = try_parse_kind(name)) return *kind;
  throw Error(ErrorKind::UnknownKind, "unknown attribute kind '" + std::string(name) + "'");
}

std::string normalize_token(std::string_view raw) { return text::to_lower(text::trim(raw)); }

std::string_view keyword_base(std::string_view token) {
  const auto paren = token.find('(');
  if (paren == std::string_view::npos || paren == 0) return token;
  return token.substr(0, paren);
}

const Taxonomy::KindMap& Taxonomy::kind_map(AttributeKind kind) const {
  return kinds_[static_cast<std::size_t>(kind)];
}

const std::vector<Category>& Taxonomy::categories(AttributeKind kind) const {
  return kind_map(kind).categories;
}

std::set<std::string> Taxonomy::expand(AttributeKind kind, std::string_view category_name) const {
  const auto key = normalize_token(category_name);
  if (key.empty() || key == "any") return {};
  const auto& map = kind_map(kind);
  if (auto it = map.by_lower_name.find(key); it != map.by_lower_name.end()) {
    const auto& tokens = map.categories[it->second].tokens;
    return {tokens.begin(), tokens.end()};
  }
  return {key};
}

std::string Taxonomy::categorize_token(AttributeKind kind, std::string_view token) const {
  const auto key = normalize_token(token);
  const auto& map = kind_map(kind);
  if (auto it = map.by_token.find(key); it != map.by_token.end()) {
    return map.categories[it->second].name;
  }
  const auto base = keyword_base(key);
  if (base.size() != key.size()) {
    if (auto it = map.by_token.find(std::string(base)); it != map.by_token.end()) {
      return map.categories[it->second].name;
    }
  }
  return key;
}

bool Taxonomy::is_known_token(AttributeKind kind, std::string_view token) const {
  return kind_map(kind).by_token.contains(normalize_token(token));
}

std::string Taxonomy::to_config_text() const {
  std::string out;
  for (auto kind : kAttributeKinds) {
    for (const auto& cat : categories(kind)) {
      out.append(to_string(kind));
      out.push_back('\t');
      out.append(cat.name);
      out.push_back('\t');
      for (std::size_t i = 0; i < cat.tokens.size(); ++i) {
        if (i) out.push_back(',');
        out.append(cat.tokens[i]);
      }
      out.push_back('\n');
    }
  }
  return out;
}

Taxonomy load_taxonomy(std::string_view config_text) {
  Taxonomy tax;
  std::size_t line_no = 0;
  for (auto raw : text::lines(config_text)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = text::split_top_level(line, '\t');
    if (fields.size() != 3) {
      throw ConfigError(line_no, "expected 3 tab-separated fields, got " +
                                     std::to_string(fields.size()));
    }
    const auto kind_name = text::trim(fields[0]);
    const auto kind = try_parse_kind(kind_name);
    if (!kind) throw ConfigError(line_no, "unknown kind '" + std::string(kind_name) + "'");
    const std::string name(text::trim(fields[1]));
    if (name.empty()) throw ConfigError(line_no, "empty category name");
    const auto lower_name = text::to_lower(name);
    if (lower_name == "any") throw ConfigError(line_no, "'Any' is implicit and cannot be a category");

    auto& map = tax.kinds_[static_cast<std::size_t>(*kind)];
    std::size_t cat_index = map.categories.size();
    if (auto it = map.by_lower_name.find(lower_name); it != map.by_lower_name.end()) {
      if (map.categories[it->second].name != name) {
        throw ConfigError(line_no, "category '" + name + "' differs only in case from '" +
                                       map.categories[it->second].name + "'");
      }
      cat_index = it->second;
    } else {
      map.categories.push_back({name, {}});
      map.by_lower_name.emplace(lower_name, cat_index);
    }

    for (const auto& raw_token : text::split_top_level(fields[2], ',')) {
      auto token = normalize_token(raw_token);
      if (token.empty()) throw ConfigError(line_no, "empty token in category '" + name + "'");
      if (auto it = map.by_token.find(token); it != map.by_token.end()) {
        throw ConfigError(line_no, "duplicate token '" + token + "' (already under '" +
                                       map.categories[it->second].name + "')");
      }
      map.by_token.emplace(token, cat_index);
      map.categories[cat_index].tokens.push_back(std::move(token));
    }
  }
  return tax;
}

Taxonomy load_taxonomy_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open taxonomy file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_taxonomy(text::sanitize_utf8(buf.str()));
}

const Taxonomy& default_taxonomy() {
  static const Taxonomy kDefault = load_taxonomy(default_taxonomy_text());
  return kDefault;
}

}  // namespace gausseer
