#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace graphon::io {

// Shortest round-trip decimal representation of a double (std::to_chars),
// deterministic across platforms.
std::string fmt_double(double v);

// ISO-8601 UTC timestamp.  Honors the SOURCE_DATE_EPOCH environment
// variable so that output files can be reproduced byte-for-byte.
std::string utc_timestamp();

// 64-bit FNV-1a over a string, rendered as 16 hex digits; used to
// fingerprint canonical config documents in provenance blocks.
std::string fnv1a_hex(const std::string& data);

// Canonical JSON text: nlohmann objects already iterate in sorted key
// order; this pins the indentation so all emitters agree byte-for-byte.
std::string canonical_json(const nlohmann::json& j);

// Write via temp file + rename so readers never observe partial content.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace graphon::io
