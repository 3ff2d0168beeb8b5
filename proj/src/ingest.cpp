#include "gausseer/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gausseer/log_parser.hpp"
#include "gausseer/snapshot_io.hpp"
#include "gausseer/text.hpp"
#include "gausseer/xml_record.hpp"

namespace gausseer {

namespace fs = std::filesystem;

nlohmann::ordered_json to_json(const IngestReport& report) {
  nlohmann::ordered_json failed = nlohmann::ordered_json::array();
  for (const auto& f : report.failed) {
    failed.push_back({{"path", f.path}, {"error", to_string(f.kind)}});
  }
  nlohmann::ordered_json j;
  j["total_files"] = report.total_files;
  j["indexed"] = report.indexed;
  j["failed"] = std::move(failed);
  j["missing_attribute_tally"] = report.missing_attribute_tally;
  return j;
}

std::vector<fs::path> scan_corpus(const fs::path& root, const std::vector<std::string>& extensions) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorKind::IoError, "corpus root '" + root.string() + "' is not a directory");
  }
  std::vector<std::string> wanted;
  for (const auto& e : extensions) {
    auto ext = text::to_lower(text::trim(e));
    if (ext.empty()) continue;
    if (ext.front() != '.') ext.insert(ext.begin(), '.');
    wanted.push_back(std::move(ext));
  }

  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot read '" + root.string() + "': " + ec.message());
  for (const auto end = fs::recursive_directory_iterator(); it != end; it.increment(ec)) {
    if (ec) throw Error(ErrorKind::IoError, "scan failed: " + ec.message());
    if (!it->is_regular_file(ec)) continue;
    const auto ext = text::to_lower(it->path().extension().string());
    if (std::find(wanted.begin(), wanted.end(), ext) != wanted.end()) files.push_back(it->path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  return files;
}

std::vector<GaussianRecord> parse_corpus(const fs::path& root,
                                         const std::vector<std::string>& extensions,
                                         const Taxonomy& taxonomy, IngestReport& report) {
  const auto files = scan_corpus(root, extensions);
  report = IngestReport{};
  report.total_files = files.size();

  std::vector<GaussianRecord> records;
  for (const auto& file : files) {
    const auto path = file.generic_string();
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      report.failed.push_back({path, ErrorKind::IoError});
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      auto record = parse_document(text::sanitize_utf8(buf.str()), path, taxonomy);
      record.id = records.size() + 1;
      for (const auto& m : record.missing) ++report.missing_attribute_tally[m];
      records.push_back(std::move(record));
    } catch (const Error& e) {
      report.failed.push_back({path, e.kind()});
    }
  }
  report.indexed = records.size();
  return records;
}

IngestReport ingest_corpus(const IngestOptions& options, const Taxonomy& taxonomy) {
  IngestReport report;
  auto records = parse_corpus(options.root_dir, options.extensions, taxonomy, report);

  const auto xml_dir = options.xml_out_dir.value_or(
      options.index_path.parent_path() / (options.index_path.stem().string() + "_xml"));
  std::error_code ec;
  fs::create_directories(xml_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create '" + xml_dir.string() + "': " + ec.message());
  for (const auto& record : records) {
    const auto target = xml_dir / (std::to_string(record.id) + ".xml");
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    out << emit_xml_record(record);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + target.string() + "'");
  }

  if (!options.index_path.parent_path().empty()) {
    fs::create_directories(options.index_path.parent_path(), ec);
  }
  save_snapshot(build_index(std::move(records), taxonomy), options.index_path.string());
  return report;
}

}  // namespace gausseer
