#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckodd/numeric.hpp"
#include "dyckodd/series.hpp"

namespace dyckodd {

struct oeis_not_found : std::runtime_error {
    explicit oeis_not_found(const std::string& what) : std::runtime_error(what) {}
};

struct oeis_parse_error : std::runtime_error {
    explicit oeis_parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct oeis_network_error : std::runtime_error {
    explicit oeis_network_error(const std::string& what) : std::runtime_error(what) {}
};

struct insufficient_precision : std::invalid_argument {
    explicit insufficient_precision(const std::string& what) : std::invalid_argument(what) {}
};

struct insufficient_terms : std::invalid_argument {
    explicit insufficient_terms(const std::string& what) : std::invalid_argument(what) {}
};

struct sequence_record {
    std::string id;      // "A101785"
    std::int64_t offset;  // index of terms.front() in the b-file numbering
    std::vector<bigint> terms;
};

inline bool valid_sequence_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

// "A101785" -> "b101785.txt", the b-file naming convention.  A malformed id
// names no sequence at all, hence not_found rather than a usage error.
inline std::string bfile_name(const std::string& id) {
    if (!valid_sequence_id(id))
        throw oeis_not_found("malformed sequence id '" + id + "'");
    return "b" + id.substr(1) + ".txt";
}

// B-file format: one "index value" pair per line, '#' starts a comment line,
// blank lines ignored, indices contiguous and ascending.
inline sequence_record parse_bfile(const std::string& id, std::istream& in) {
    if (!valid_sequence_id(id)) throw oeis_not_found("malformed sequence id '" + id + "'");
    sequence_record rec;
    rec.id = id;
    rec.offset = 0;
    std::string line;
    std::size_t lineno = 0;
    bool have_offset = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        std::istringstream fields(line.substr(begin));
        std::int64_t index = 0;
        std::string value;
        if (!(fields >> index >> value))
            throw oeis_parse_error(id + ": line " + std::to_string(lineno) +
                                   " is not an 'index value' pair");
        std::string rest;
        if (fields >> rest)
            throw oeis_parse_error(id + ": line " + std::to_string(lineno) +
                                   " has trailing fields");
        bigint term;
        try {
            term = bigint(value);
        } catch (const std::exception&) {
            throw oeis_parse_error(id + ": line " + std::to_string(lineno) +
                                   " has a non-integer value '" + value + "'");
        }
        if (!have_offset) {
            rec.offset = index;
            have_offset = true;
        } else if (index != rec.offset + static_cast<std::int64_t>(rec.terms.size())) {
            throw oeis_parse_error(id + ": line " + std::to_string(lineno) +
                                   " breaks the contiguous index run (expected " +
                                   std::to_string(rec.offset +
                                                  static_cast<std::int64_t>(rec.terms.size())) +
                                   ", got " + std::to_string(index) + ")");
        }
        rec.terms.push_back(std::move(term));
    }
    if (rec.terms.empty()) throw oeis_parse_error(id + ": b-file holds no terms");
    return rec;
}

inline std::filesystem::path default_fixture_dir() {
    if (const char* env = std::getenv("DYCKODD_FIXTURE_DIR")) return env;
#ifdef DYCKODD_DEFAULT_FIXTURE_DIR
    return DYCKODD_DEFAULT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

inline sequence_record load_fixture(const std::string& id,
                                    const std::filesystem::path& dir = default_fixture_dir()) {
    std::filesystem::path file = dir / bfile_name(id);
    std::ifstream in(file);
    if (!in) throw oeis_not_found(id + ": no b-file at " + file.string());
    return parse_bfile(id, in);
}

struct term_mismatch {
    std::int64_t power;  // exponent in the compared series
    rational series_value;
    bigint oeis_value;
};

struct comparison_report {
    std::string id;
    std::int64_t start_power;
    std::int64_t terms_compared;
    std::vector<term_mismatch> mismatches;
    bool all_equal() const { return mismatches.empty(); }
};

// Compare coefficients [start_power, start_power + count) of a series against
// rec.terms[0 .. count).  The caller aligns start_power with the sequence
// offset; this stays purely positional.
inline comparison_report compare(const series& s, const sequence_record& rec,
                                 std::int64_t start_power, std::int64_t count) {
    if (count < 1) throw std::invalid_argument("compare: count must be >= 1");
    if (start_power + count > s.precision())
        throw insufficient_precision("compare: series certified below power " +
                                     std::to_string(s.precision()) + ", need " +
                                     std::to_string(start_power + count));
    if (count > static_cast<std::int64_t>(rec.terms.size()))
        throw insufficient_terms("compare: " + rec.id + " holds " +
                                 std::to_string(rec.terms.size()) + " terms, need " +
                                 std::to_string(count));
    comparison_report report{rec.id, start_power, count, {}};
    for (std::int64_t k = 0; k < count; ++k) {
        rational c = s.coeff(start_power + k);
        if (!is_integer(c) || numerator(c) != rec.terms[k])
            report.mismatches.push_back({start_power + k, c, rec.terms[k]});
    }
    return report;
}

}  // namespace dyckodd
