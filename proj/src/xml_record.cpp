#include "gausseer/xml_record.hpp"

#include <array>
#include <charconv>

namespace gausseer {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out.append("&amp;"); break;
      case '<': out.append("&lt;"); break;
      case '>': out.append("&gt;"); break;
      case '"': out.append("&quot;"); break;
      case '\'': out.append("&apos;"); break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string emit_xml_record(const GaussianRecord& r) {
  std::string out = "<doc>\n";
  auto field = [&out](std::string_view name, std::string_view value) {
    out.append("  <field name=\"");
    out.append(name);
    out.append("\">");
    out.append(xml_escape(value));
    out.append("</field>\n");
  };
  auto each = [&](std::string_view name, const std::set<std::string>& values) {
    for (const auto& v : values) field(name, v);
  };

  field("id", std::to_string(r.id));
  field("title", r.title);
  field("file_path", r.file_path);
  each("element", r.elements);
  each("method", r.methods);
  each("basis_set", r.basis_sets);
  each("job_type", r.job_types);
  if (r.charge) field("charge", std::to_string(*r.charge));
  if (r.multiplicity) field("multiplicity", std::to_string(*r.multiplicity));
  if (r.energy) field("energy", format_double(*r.energy));
  if (r.degrees_of_freedom) field("degrees_of_freedom", std::to_string(*r.degrees_of_freedom));
  each("flag", r.flags);
  out.append("</doc>\n");
  return out;
}

}  // namespace gausseer
