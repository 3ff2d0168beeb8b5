#include <doctest.h>

#include "gausseer/error.hpp"
#include "gausseer/snapshot_io.hpp"
#include "oracle.hpp"
#include "synth.hpp"
#include "temp_dir.hpp"

using namespace gausseer;

namespace {

ErrorKind decode_error(std::string_view bytes) {
  try {
    decode_snapshot(bytes);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::EmptyInput;
}

std::uint32_t read_u32(std::string_view b, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[at + i]);
  return v;
}

}  // namespace

TEST_CASE("framing") {
  const auto bytes = encode_snapshot(build_index({}, default_taxonomy()));
  CHECK(bytes.substr(0, 4) == "GXSI");
  CHECK(read_u32(bytes, 4) == kSnapshotVersion);
  std::uint64_t len = 0;
  for (int i = 7; i >= 0; --i) len = (len << 8) | static_cast<unsigned char>(bytes[16 - 8 + i]);
  CHECK(bytes.size() == 16 + len + 4);
}

TEST_CASE("round trip preserves search results") {
  const auto& tax = default_taxonomy();
  const auto corpus = testing::synthetic_corpus(80, 21);
  const auto snap = build_index(corpus, tax);
  const auto bytes = encode_snapshot(snap);
  CHECK(encode_snapshot(snap) == bytes);

  const auto back = decode_snapshot(bytes);
  CHECK(back == snap);
  CHECK(encode_snapshot(back) == bytes);

  testing::QueryGenerator gen(22, corpus, tax);
  for (int i = 0; i < 100; ++i) {
    const auto q = gen.next_with_refinements();
    CHECK(search(back, q, back.taxonomy()) == search(snap, q, tax));
  }
}

TEST_CASE("empty snapshot round trips") {
  const auto snap = build_index({}, default_taxonomy());
  const auto back = decode_snapshot(encode_snapshot(snap));
  CHECK(back.doc_count() == 0);
  CHECK(back == snap);
}

TEST_CASE("snapshot carries its taxonomy") {
  const auto tax = load_taxonomy("job_type\tRelax\topt\nmethod\tAb initio\thf\n");
  const auto snap = build_index(testing::synthetic_corpus(10, 1), tax);
  const auto back = decode_snapshot(encode_snapshot(snap));
  CHECK(back.taxonomy() == tax);
  CHECK(back.taxonomy().categories(AttributeKind::JobType).size() == 1);
}

TEST_CASE("corruption is a FormatError") {
  const auto bytes = encode_snapshot(build_index(testing::synthetic_corpus(20, 4), default_taxonomy()));
  CHECK(decode_error("") == ErrorKind::FormatError);
  CHECK(decode_error(bytes.substr(0, 10)) == ErrorKind::FormatError);
  CHECK(decode_error(bytes.substr(0, bytes.size() - 1)) == ErrorKind::FormatError);
  CHECK(decode_error(bytes + "x") == ErrorKind::FormatError);

  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK(decode_error(bad_magic) == ErrorKind::FormatError);

  auto bad_version = bytes;
  bad_version[4] = 2;
  CHECK(decode_error(bad_version) == ErrorKind::FormatError);

  for (std::size_t at : {std::size_t{16}, bytes.size() / 2, bytes.size() - 5, bytes.size() - 1}) {
    auto flipped = bytes;
    flipped[at] = static_cast<char>(flipped[at] ^ 0x10);
    CAPTURE(at);
    CHECK(decode_error(flipped) == ErrorKind::FormatError);
  }
  for (std::size_t n = 0; n < bytes.size(); n += 97) {
    CHECK(decode_error(bytes.substr(0, n)) == ErrorKind::FormatError);
  }
}

TEST_CASE("files") {
  testing::TempDir dir;
  const auto snap = build_index(testing::synthetic_corpus(15, 8), default_taxonomy());
  const auto path = (dir / "idx.gxsi").string();
  save_snapshot(snap, path);
  CHECK(load_snapshot(path) == snap);
  CHECK(testing::read_file(path) == encode_snapshot(snap));

  auto bytes = testing::read_file(path);
  testing::write_file(path, bytes.substr(0, bytes.size() / 2));
  try {
    load_snapshot(path);
    FAIL("expected FormatError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FormatError);
  }
  try {
    load_snapshot((dir / "absent.gxsi").string());
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
  try {
    save_snapshot(snap, (dir / "no/such/dir/x.gxsi").string());
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
}
