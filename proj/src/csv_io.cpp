#include "mimopnc/csv_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mimopnc {

namespace {

std::string format_ber(double ber) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.5e", ber);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::uint64_t parse_u64(const std::string& s, std::size_t line_no, const char* field) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) {
            fail(line_no, std::string("trailing characters in ") + field);
        }
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(line_no, std::string("invalid ") + field + ": '" + s + "'");
    }
}

double parse_double(const std::string& s, std::size_t line_no, const char* field) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) {
            fail(line_no, std::string("trailing characters in ") + field);
        }
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(line_no, std::string("invalid ") + field + ": '" + s + "'");
    }
}

} // namespace

std::string format_csv_row(const BerRecord& rec) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s,%.2f,%llu,%llu,%s,%llu",
                  detector_name(rec.detector).c_str(), rec.snr_db,
                  static_cast<unsigned long long>(rec.bits_total),
                  static_cast<unsigned long long>(rec.bit_errors), format_ber(rec.ber).c_str(),
                  static_cast<unsigned long long>(rec.degenerate_count));
    return buf;
}

void write_csv(const std::vector<BerRecord>& records, const std::string& path) {
    if (records.empty()) {
        throw IoError("refusing to write an empty record list");
    }
    std::vector<BerRecord> sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const BerRecord& a, const BerRecord& b) {
        if (a.detector != b.detector) {
            return static_cast<int>(a.detector) < static_cast<int>(b.detector);
        }
        return a.snr_db < b.snr_db;
    });

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << kCsvHeader << '\n';
    for (const BerRecord& rec : sorted) {
        out << format_csv_row(rec) << '\n';
    }
    if (!out) {
        throw IoError("write failure on '" + path + "'");
    }
}

std::vector<BerRecord> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }

    std::string line;
    if (!std::getline(in, line)) {
        fail(1, "missing header");
    }
    if (line != kCsvHeader) {
        fail(1, "bad header, expected '" + std::string(kCsvHeader) + "'");
    }

    std::vector<BerRecord> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 6) {
            fail(line_no, "expected 6 fields, got " + std::to_string(fields.size()));
        }

        BerRecord rec;
        const auto det = detector_from_name(fields[0]);
        if (!det) {
            fail(line_no, "unknown detector '" + fields[0] + "'");
        }
        rec.detector = *det;
        rec.snr_db = parse_double(fields[1], line_no, "snr_db");
        rec.bits_total = parse_u64(fields[2], line_no, "bits_total");
        rec.bit_errors = parse_u64(fields[3], line_no, "bit_errors");
        const double ber_field = parse_double(fields[4], line_no, "ber");
        rec.degenerate_count = parse_u64(fields[5], line_no, "degenerate_count");

        if (rec.bits_total == 0) {
            fail(line_no, "bits_total must be positive");
        }
        rec.ber = static_cast<double>(rec.bit_errors) / static_cast<double>(rec.bits_total);
        // The ber field carries 6 significant digits; accept rounding at that
        // precision, reject anything beyond it.
        const double tol = std::max(1e-9, 5e-7 * rec.ber);
        if (std::abs(ber_field - rec.ber) > tol && format_ber(rec.ber) != fields[4]) {
            fail(line_no, "ber field inconsistent with bit_errors/bits_total");
        }
        out.push_back(rec);
    }
    return out;
}

} // namespace mimopnc
