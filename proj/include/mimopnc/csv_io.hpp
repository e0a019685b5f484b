#pragma once

#include <string>
#include <vector>

#include "mimopnc/harness.hpp"

namespace mimopnc {

inline constexpr const char* kCsvHeader =
    "detector,snr_db,bits_total,bit_errors,ber,degenerate_count";

/// One formatted CSV row (no newline). snr_db with 2 decimals, ber in
/// scientific notation with 6 significant digits.
std::string format_csv_row(const BerRecord& rec);

/// Rows sorted by (detector, snr_db), exact header, trailing newline.
/// Refuses an empty record list before touching the filesystem.
void write_csv(const std::vector<BerRecord>& records, const std::string& path);

std::vector<BerRecord> read_csv(const std::string& path);

} // namespace mimopnc
