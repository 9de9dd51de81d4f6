#pragma once

#include <filesystem>
#include <string>

#include "eil/harness.hpp"

namespace eil {

struct ReportFormatOptions {
    /// Per-outcome elapsed_ms breaks byte-for-byte reproducibility, so it is opt-in.
    bool include_timing = false;
};

std::string report_json(const VerificationReport& report, const ReportFormatOptions& options = {});
/// One outcome per row; witness entries are joined as key=value pairs.
std::string report_csv(const VerificationReport& report, const ReportFormatOptions& options = {});
/// key=value summary line plus one line per failure and per finding.
std::string report_text(const VerificationReport& report);

/// Empty string when `json_text` matches the report layout, otherwise the
/// first problem found.
std::string validate_report_json(const std::string& json_text);

/// Writes through a temporary sibling file and renames it into place.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace eil
