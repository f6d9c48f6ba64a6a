#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace eduvis {

using Json = nlohmann::json;
namespace fs = std::filesystem;

std::string read_file(const fs::path& path);
std::vector<unsigned char> read_file_bytes(const fs::path& path);

// Creates parent directories as needed.
void write_file(const fs::path& path, std::string_view content);

// Write to <path>.tmp then rename, so readers never observe a torn file.
void write_file_atomic(const fs::path& path, std::string_view content);

Json read_json(const fs::path& path);
void write_json(const fs::path& path, const Json& value);

// One JSON record per line; blank lines skipped. Parse failures carry the
// 1-based line number.
std::vector<Json> read_jsonl(const fs::path& path);
void write_jsonl(const fs::path& path, const std::vector<Json>& records);

// Canonical serialization: object keys sorted, no insignificant whitespace.
// Equal values yield equal bytes regardless of construction order.
std::string canonical_json(const Json& value);

void append_line(const fs::path& path, const std::string& line);

}  // namespace eduvis
