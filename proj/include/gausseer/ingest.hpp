#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gausseer/error.hpp"
#include "gausseer/index.hpp"
#include "gausseer/taxonomy.hpp"

namespace gausseer {

struct IngestOptions {
  std::filesystem::path root_dir;
  std::filesystem::path index_path;
  /// Defaults to "<index dir>/<index stem>_xml".
  std::optional<std::filesystem::path> xml_out_dir;
  /// Matched case-insensitively against the file extension, with the dot.
  std::vector<std::string> extensions{".log", ".out"};
};

struct FailedFile {
  std::string path;
  ErrorKind kind;

  friend bool operator==(const FailedFile&, const FailedFile&) = default;
};

struct IngestReport {
  std::size_t total_files = 0;
  std::size_t indexed = 0;
  std::vector<FailedFile> failed;
  std::map<std::string, std::size_t> missing_attribute_tally;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

nlohmann::ordered_json to_json(const IngestReport& report);

/// Regular files under `root` with a matching extension, sorted by their
/// generic path string. Throws Error(IoError) when `root` is not a readable
/// directory.
std::vector<std::filesystem::path> scan_corpus(const std::filesystem::path& root,
                                               const std::vector<std::string>& extensions);

/// Parses every matching file, assigns ids 1..N in path order to the files
/// that parse, writes one XML record per document, builds the index and
/// saves it to options.index_path. Per-file failures land in the report.
IngestReport ingest_corpus(const IngestOptions& options, const Taxonomy& taxonomy);

/// Parses the corpus and returns the records with ids assigned, without
/// writing anything. Shared by ingest_corpus.
std::vector<GaussianRecord> parse_corpus(const std::filesystem::path& root,
                                         const std::vector<std::string>& extensions,
                                         const Taxonomy& taxonomy, IngestReport& report);

}  // namespace gausseer
