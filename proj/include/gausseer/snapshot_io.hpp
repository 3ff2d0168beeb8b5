#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gausseer/index.hpp"

namespace gausseer {

// Snapshot file framing:
//   "GXSI" | u32 version | u64 payload length | payload | u32 CRC-32
// Integers are little-endian; the CRC covers every byte before it.
inline constexpr std::string_view kSnapshotMagic = "GXSI";
inline constexpr std::uint32_t kSnapshotVersion = 1;

std::string encode_snapshot(const IndexSnapshot& snapshot);

/// Throws Error(FormatError) on bad magic, version, length or checksum.
IndexSnapshot decode_snapshot(std::string_view bytes);

/// Writes via a temporary file and rename. Throws Error(IoError).
void save_snapshot(const IndexSnapshot& snapshot, const std::string& path);

/// Throws Error(IoError) or Error(FormatError).
IndexSnapshot load_snapshot(const std::string& path);

}  // namespace gausseer
