#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "annni/fqa.hpp"

namespace annni::io {

/// Fixed %.12e rendering used by every CSV and JSON output.
std::string format_float(double value);

/// One CSV line from already-formatted cells.
std::string csv_line(const std::vector<std::string>& cells);

/// Write contents to a unique temp file in the target directory, then rename
/// into place.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

/// FNV-1a 64-bit, hex-encoded. Used for config and output hashes.
std::string fnv1a_hex(const std::string& data);

std::string read_file(const std::filesystem::path& path);

/// RunRecord CSV: header "k,beta,A,J", one row per layer (k from 1).
std::string run_record_csv(const RunRecord& record);

}  // namespace annni::io
