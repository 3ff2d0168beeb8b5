#include "gausseer/snapshot_io.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gausseer/error.hpp"

namespace gausseer {

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }

  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }

  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }

  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  void str(std::string_view s) {
    u64(s.size());
    out_.append(s);
  }

  void str_set(const std::set<std::string>& s) {
    u64(s.size());
    for (const auto& v : s) str(v);
  }

  template <typename T, typename F>
  void opt(const std::optional<T>& v, F&& write) {
    u8(v ? 1 : 0);
    if (v) write(*v);
  }

  void postings(const PostingMap& map) {
    u64(map.size());
    for (const auto& [term, ids] : map) {
      str(term);
      u64(ids.size());
      for (auto id : ids) u64(id);
    }
  }

  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(in_[pos_++]);
  }

  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{u8()} << (8 * i);
    return v;
  }

  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{u8()} << (8 * i);
    return v;
  }

  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }

  std::string str() {
    const auto n = count();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }

  std::set<std::string> str_set() {
    std::set<std::string> s;
    for (auto n = count(); n > 0; --n) s.insert(str());
    return s;
  }

  template <typename F>
  auto opt(F&& read) -> std::optional<decltype(read())> {
    const auto present = u8();
    if (present > 1) fail("bad optional marker");
    if (!present) return std::nullopt;
    return read();
  }

  PostingMap postings() {
    PostingMap map;
    for (auto terms = count(); terms > 0; --terms) {
      auto term = str();
      PostingList ids(count());
      for (auto& id : ids) id = u64();
      map.emplace(std::move(term), std::move(ids));
    }
    return map;
  }

  // Element counts are bounded by the bytes left, so a corrupt length cannot
  // trigger a huge allocation.
  std::uint64_t count() {
    const auto n = u64();
    if (n > in_.size() - pos_) fail("length field exceeds payload");
    return n;
  }

  bool at_end() const { return pos_ == in_.size(); }

  [[noreturn]] static void fail(const std::string& what) {
    throw Error(ErrorKind::FormatError, "corrupt snapshot: " + what);
  }

 private:
  void need(std::uint64_t n) const {
    if (n > in_.size() - pos_) fail("unexpected end of payload");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

std::uint32_t crc32_of(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

void write_record(Writer& w, const GaussianRecord& r) {
  w.u64(r.id);
  w.str(r.title);
  w.str(r.file_path);
  w.str_set(r.elements);
  w.u64(r.atom_sites.size());
  for (const auto& s : r.atom_sites) {
    w.str(s.element);
    w.f64(s.x);
    w.f64(s.y);
    w.f64(s.z);
  }
  w.str_set(r.methods);
  w.str_set(r.basis_sets);
  w.str_set(r.job_types);
  w.opt(r.charge, [&](int v) { w.i32(v); });
  w.opt(r.multiplicity, [&](int v) { w.i32(v); });
  w.opt(r.energy, [&](double v) { w.f64(v); });
  w.opt(r.degrees_of_freedom, [&](int v) { w.i32(v); });
  w.str_set(r.flags);
  w.str_set(r.missing);
}

GaussianRecord read_record(Reader& rd) {
  GaussianRecord r;
  r.id = rd.u64();
  r.title = rd.str();
  r.file_path = rd.str();
  r.elements = rd.str_set();
  for (auto n = rd.count(); n > 0; --n) {
    AtomSite s;
    s.element = rd.str();
    s.x = rd.f64();
    s.y = rd.f64();
    s.z = rd.f64();
    r.atom_sites.push_back(std::move(s));
  }
  r.methods = rd.str_set();
  r.basis_sets = rd.str_set();
  r.job_types = rd.str_set();
  r.charge = rd.opt([&] { return static_cast<int>(rd.i32()); });
  r.multiplicity = rd.opt([&] { return static_cast<int>(rd.i32()); });
  r.energy = rd.opt([&] { return rd.f64(); });
  r.degrees_of_freedom = rd.opt([&] { return static_cast<int>(rd.i32()); });
  r.flags = rd.str_set();
  r.missing = rd.str_set();
  return r;
}

constexpr std::size_t kHeaderSize = 4 + 4 + 8;
constexpr std::size_t kTrailerSize = 4;

}  // namespace

std::string encode_snapshot(const IndexSnapshot& snapshot) {
  Writer payload;
  payload.str(snapshot.taxonomy().to_config_text());
  payload.u64(snapshot.doc_count());
  for (const auto& [_, record] : snapshot.docs()) write_record(payload, record);
  for (std::size_t f = 0; f < kPostingFieldCount; ++f) {
    payload.postings(snapshot.postings(static_cast<PostingField>(f)));
  }
  payload.postings(snapshot.element_signatures());

  Writer file;
  file.bytes().append(kSnapshotMagic);
  file.u32(kSnapshotVersion);
  file.u64(payload.bytes().size());
  file.bytes().append(payload.bytes());
  file.u32(crc32_of(file.bytes()));
  return std::move(file.bytes());
}

IndexSnapshot decode_snapshot(std::string_view bytes) {
  if (bytes.size() < kHeaderSize + kTrailerSize) Reader::fail("file too short");
  if (bytes.substr(0, 4) != kSnapshotMagic) Reader::fail("bad magic");

  Reader header(bytes.substr(4, kHeaderSize - 4));
  const auto version = header.u32();
  if (version != kSnapshotVersion) {
    throw Error(ErrorKind::FormatError, "unsupported snapshot version " + std::to_string(version));
  }
  const auto payload_size = header.u64();
  if (payload_size != bytes.size() - kHeaderSize - kTrailerSize) {
    Reader::fail("payload length does not match file size");
  }
  const auto covered = bytes.substr(0, bytes.size() - kTrailerSize);
  Reader trailer(bytes.substr(bytes.size() - kTrailerSize));
  if (trailer.u32() != crc32_of(covered)) Reader::fail("checksum mismatch");

  Reader rd(bytes.substr(kHeaderSize, payload_size));
  Taxonomy taxonomy;
  try {
    taxonomy = load_taxonomy(rd.str());
  } catch (const ConfigError& e) {
    Reader::fail(std::string("embedded taxonomy: ") + e.what());
  }
  std::map<DocId, GaussianRecord> docs;
  for (auto n = rd.count(); n > 0; --n) {
    auto record = read_record(rd);
    const auto id = record.id;
    if (!docs.emplace(id, std::move(record)).second) Reader::fail("duplicate document id");
  }
  std::array<PostingMap, kPostingFieldCount> postings;
  for (auto& map : postings) map = rd.postings();
  auto signatures = rd.postings();
  if (!rd.at_end()) Reader::fail("trailing bytes in payload");
  return assemble_snapshot(std::move(docs), std::move(postings), std::move(signatures),
                           std::move(taxonomy));
}

void save_snapshot(const IndexSnapshot& snapshot, const std::string& path) {
  const auto bytes = encode_snapshot(snapshot);
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + tmp.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::IoError, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot move snapshot into place: " + ec.message());
}

IndexSnapshot load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open snapshot '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_snapshot(buf.str());
}

}  // namespace gausseer
