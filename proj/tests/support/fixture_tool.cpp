// Regenerates checked-in test fixtures:
//   fixture_tool generate <dir> <count> <seed>   synthetic logs
//   fixture_tool golden <log dir> <golden dir>   golden records for every log
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gausseer/error.hpp"
#include "gausseer/ingest.hpp"
#include "gausseer/log_parser.hpp"
#include "gausseer/text.hpp"
#include "synth.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  const std::string cmd = argc > 1 ? argv[1] : "";
  if (cmd == "generate" && argc == 5) {
    gausseer::testing::LogGenerator gen(std::stoull(argv[4]));
    for (int i = std::stoi(argv[3]); i > 0; --i) {
      const auto log = gen.next();
      std::ofstream(fs::path(argv[2]) / log.path, std::ios::binary) << log.text;
    }
    return 0;
  }
  if (cmd == "golden" && argc == 4) {
    for (const auto& file : gausseer::scan_corpus(argv[2], {".log", ".out"})) {
      std::ifstream in(file, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      const auto name = file.filename().string();
      std::ofstream out(fs::path(argv[3]) / (name + ".json"), std::ios::binary);
      try {
        out << gausseer::canonical_serialization(
            gausseer::parse_document(gausseer::text::sanitize_utf8(buf.str()), name));
      } catch (const gausseer::Error& e) {
        out << "{\n  \"error\": \"" << gausseer::to_string(e.kind()) << "\"\n}\n";
      }
    }
    return 0;
  }
  std::cerr << "usage: fixture_tool generate <dir> <count> <seed> | golden <logs> <goldens>\n";
  return 2;
}
