#include "gausseer/log_parser.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <optional>

#include "gausseer/elements.hpp"
#include "gausseer/error.hpp"
#include "gausseer/text.hpp"

namespace gausseer {

namespace {

constexpr std::string_view kStandardOrientation = "Standard orientation:";
constexpr std::string_view kInputOrientation = "Input orientation:";
constexpr std::string_view kChargeMarker = "Charge =";
constexpr std::string_view kMultiplicityMarker = "Multiplicity =";
constexpr std::string_view kScfMarker = "SCF Done:";
constexpr std::string_view kDofMarker = "Deg. of freedom";
constexpr std::string_view kZMatrixMarker = "Symbolic Z-matrix:";

bool contains(std::string_view line, std::string_view needle) {
  return line.find(needle) != std::string_view::npos;
}

// Lines at or after this one can no longer belong to the job header.
bool ends_header(std::string_view line) {
  return contains(line, kChargeMarker) || contains(line, kStandardOrientation) ||
         contains(line, kInputOrientation) || contains(line, kScfMarker);
}

struct RouteSection {
  std::size_t first = 0;  // line index of the '#' line
  std::size_t end = 0;    // one past the last continuation line
  std::string text;
};

std::optional<RouteSection> locate_route(const std::vector<std::string_view>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = text::trim(lines[i]);
    if (ends_header(lines[i])) return std::nullopt;
    if (line.empty() || line.front() != '#') continue;

    RouteSection route{i, i + 1, std::string(line)};
    while (route.end < lines.size()) {
      const auto next = text::trim(lines[route.end]);
      if (next.empty() || text::is_dashed_rule(next) || ends_header(lines[route.end])) break;
      route.text.push_back(' ');
      route.text.append(next);
      ++route.end;
    }
    return route;
  }
  return std::nullopt;
}

// Gaussian link directives printed after the route, e.g. "1/18=20,19=15/1,3;".
bool is_link_directive(std::string_view line) {
  return !line.empty() && std::isdigit(static_cast<unsigned char>(line.front())) &&
         line.back() == ';' && contains(line, "/") && !contains(line, " ");
}

// Splits on whitespace outside parentheses, so "opt=(calcfc, ts)" stays whole.
std::vector<std::string> split_route_words(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else if (depth > 0 && std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

// "opt=(calcfc,ts)" -> "opt(calcfc,ts)", "freq=noraman" -> "freq(noraman)".
std::string fold_keyword_options(std::string token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0) return token;
  const auto first_special = token.find_first_of("(/");
  if (first_special != std::string::npos && first_special < eq) return token;
  const auto base = token.substr(0, eq);
  const auto opts = token.substr(eq + 1);
  if (opts.empty()) return base;
  if (opts.front() == '(') return base + opts;
  return base + "(" + opts + ")";
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = text::trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr == s.data()) return std::nullopt;
  return value;
}

std::optional<double> parse_fortran_double(std::string_view s) {
  std::string buf(text::trim(s));
  for (auto& c : buf) {
    if (c == 'D' || c == 'd') c = 'E';
  }
  return parse_number<double>(buf);
}

// Integer right after `marker` on `line`, skipping blanks.
std::optional<int> int_after(std::string_view line, std::string_view marker) {
  const auto pos = line.find(marker);
  if (pos == std::string_view::npos) return std::nullopt;
  const auto rest = text::split_ws(line.substr(pos + marker.size()));
  if (rest.empty()) return std::nullopt;
  return parse_number<int>(rest.front());
}

std::optional<double> scf_energy(std::string_view line) {
  const auto pos = line.find(kScfMarker);
  const auto eq = line.find('=', pos);
  if (eq == std::string_view::npos) return std::nullopt;
  const auto rest = text::split_ws(line.substr(eq + 1));
  if (rest.empty()) return std::nullopt;
  return parse_fortran_double(rest.front());
}

std::vector<AtomSite> read_orientation_block(const std::vector<std::string_view>& lines,
                                             std::size_t marker) {
  std::vector<AtomSite> sites;
  int rules_seen = 0;
  for (std::size_t i = marker + 1; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (text::is_dashed_rule(line)) {
      if (++rules_seen == 3) break;
      continue;
    }
    if (rules_seen < 2) continue;
    if (text::trim(line).empty()) break;
    const auto cols = text::split_ws(line);
    if (cols.size() != 6) continue;
    const auto z = parse_number<int>(cols[1]);
    const auto x = parse_fortran_double(cols[3]);
    const auto y = parse_fortran_double(cols[4]);
    const auto zc = parse_fortran_double(cols[5]);
    if (!z || !x || !y || !zc) continue;
    const auto sym = elements::symbol(*z);
    if (sym.empty()) continue;
    sites.push_back({std::string(sym), *x, *y, *zc});
  }
  return sites;
}

// Element symbol at the start of a molecule-specification label such as
// "C1", "Cl", "O-OH" or a bare atomic number.
std::optional<std::string> label_element(std::string_view label) {
  if (label.empty()) return std::nullopt;
  if (std::isdigit(static_cast<unsigned char>(label.front()))) {
    if (auto z = parse_number<int>(label)) {
      const auto sym = elements::symbol(*z);
      if (!sym.empty()) return std::string(sym);
    }
    return std::nullopt;
  }
  std::size_t letters = 0;
  while (letters < label.size() && std::isalpha(static_cast<unsigned char>(label[letters]))) {
    ++letters;
  }
  for (std::size_t len = std::min<std::size_t>(letters, 2); len >= 1; --len) {
    if (auto sym = elements::canonicalize(label.substr(0, len))) return sym;
  }
  return std::nullopt;
}

// Elements of the input molecule specification that follows the first
// charge/multiplicity line. Only consulted when no orientation block exists.
std::set<std::string> molecule_spec_elements(const std::vector<std::string_view>& lines) {
  std::set<std::string> out;
  std::size_t i = 0;
  while (i < lines.size() && !contains(lines[i], kChargeMarker)) ++i;
  for (++i; i < lines.size(); ++i) {
    const auto line = text::trim(lines[i]);
    if (line.empty() || text::is_dashed_rule(line)) break;
    const auto cols = text::split_ws(line);
    auto sym = label_element(cols.front());
    if (!sym) break;
    out.insert(std::move(*sym));
  }
  return out;
}

std::string file_stem(std::string_view path) {
  return std::filesystem::path(std::string(path)).stem().string();
}

}  // namespace

RouteTokens parse_route(std::string_view route, const Taxonomy& taxonomy) {
  auto body = text::trim(route);
  if (body.empty() || body.front() != '#') {
    throw Error(ErrorKind::MalformedRoute, "route does not start with '#'");
  }
  body.remove_prefix(1);
  if (!body.empty() && std::string_view("nNpPtT").find(body.front()) != std::string_view::npos &&
      (body.size() == 1 || std::isspace(static_cast<unsigned char>(body[1])))) {
    body.remove_prefix(1);
  }

  RouteTokens out;
  for (auto& word : split_route_words(text::to_lower(body))) {
    auto token = fold_keyword_options(std::move(word));
    if (taxonomy.is_known_token(AttributeKind::JobType, keyword_base(token))) {
      out.job_types.insert(std::move(token));
      continue;
    }
    const auto segments = text::split_top_level(token, '/');
    if (segments.size() > 1) {
      for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].empty()) continue;
        (i == 1 ? out.basis_sets : out.methods).insert(segments[i]);
      }
      continue;
    }
    if (taxonomy.is_known_token(AttributeKind::Method, token) ||
        taxonomy.is_known_token(AttributeKind::Method, keyword_base(token))) {
      out.methods.insert(std::move(token));
    }
  }
  if (out.job_types.empty()) out.job_types.insert("sp");
  return out;
}

std::vector<AtomSite> extract_elements(std::string_view text) {
  const auto lines = text::lines(text);
  std::optional<std::size_t> last_standard;
  std::optional<std::size_t> last_input;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (contains(lines[i], kStandardOrientation)) last_standard = i;
    if (contains(lines[i], kInputOrientation)) last_input = i;
  }
  if (last_standard) {
    auto sites = read_orientation_block(lines, *last_standard);
    if (!sites.empty()) return sites;
  }
  if (last_input) return read_orientation_block(lines, *last_input);
  return {};
}

std::string record_title(const GaussianRecord& record, std::string_view source_text) {
  const auto lines = text::lines(source_text);
  if (auto route = locate_route(lines)) {
    for (std::size_t i = route->end; i < lines.size(); ++i) {
      const auto line = text::trim(lines[i]);
      if (ends_header(lines[i]) || line == kZMatrixMarker) break;
      if (line.empty() || text::is_dashed_rule(line) || is_link_directive(line)) continue;
      return std::string(line);
    }
  }
  return file_stem(record.file_path);
}

GaussianRecord parse_document(std::string_view text, std::string_view path,
                              const Taxonomy& taxonomy) {
  if (text.empty()) throw Error(ErrorKind::EmptyInput, "empty input");
  const auto lines = text::lines(text);
  const auto route = locate_route(lines);
  if (!route) throw Error(ErrorKind::NoRouteSection, "no '#' route line in the header");

  GaussianRecord r;
  r.file_path = std::string(path);
  auto tokens = parse_route(route->text, taxonomy);
  r.methods = std::move(tokens.methods);
  r.basis_sets = std::move(tokens.basis_sets);
  r.job_types = std::move(tokens.job_types);

  r.atom_sites = extract_elements(text);
  if (!r.atom_sites.empty()) {
    for (const auto& site : r.atom_sites) r.elements.insert(site.element);
  } else {
    r.elements = molecule_spec_elements(lines);
  }

  for (const auto line : lines) {
    if (!r.charge && contains(line, kChargeMarker)) r.charge = int_after(line, kChargeMarker);
    if (!r.multiplicity && contains(line, kMultiplicityMarker)) {
      if (auto m = int_after(line, kMultiplicityMarker); m && *m >= 1) r.multiplicity = m;
    }
    if (contains(line, kScfMarker)) {
      if (auto e = scf_energy(line)) r.energy = e;
    }
    if (contains(line, kDofMarker)) {
      if (auto d = int_after(line, kDofMarker); d && *d >= 0) r.degrees_of_freedom = d;
    }
    for (const auto& [flag, trigger] : kFlagTriggers) {
      if (contains(line, trigger)) r.flags.emplace(flag);
    }
  }

  r.title = record_title(r, text);

  if (!r.charge) r.missing.emplace(attr::kCharge);
  if (!r.multiplicity) r.missing.emplace(attr::kMultiplicity);
  if (!r.energy) r.missing.emplace(attr::kEnergy);
  if (!r.degrees_of_freedom) r.missing.emplace(attr::kDegreesOfFreedom);
  if (r.atom_sites.empty()) {
    // A marker without readable rows does not count as a located orientation.
    r.flags.erase(std::string(attr::kInputOrientation));
    r.missing.emplace(attr::kInputOrientation);
  }

  assert(r.atom_sites.empty() || [&] {
    std::set<std::string> from_sites;
    for (const auto& s : r.atom_sites) from_sites.insert(s.element);
    return from_sites == r.elements;
  }());
  return r;
}

}  // namespace gausseer
