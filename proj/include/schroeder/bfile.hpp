#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "schroeder/rational.hpp"

namespace schroeder {

/// A parsed OEIS b-file: "index value" pairs with strictly increasing indices.
struct BFile {
    std::string sequence_id;
    std::vector<std::pair<long, Integer>> entries;
};

struct BFileParseError : std::runtime_error {
    long line;
    BFileParseError(long line_no, const std::string& what)
        : std::runtime_error("b-file line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

/// Parses b-file text: '#' lines are comments, blank lines are skipped, data
/// lines hold two whitespace-separated integers. LF and CRLF both accepted.
/// Throws BFileParseError on malformed lines or non-increasing indices.
BFile parse_bfile(const std::string& text, const std::string& sequence_id = "");

/// Canonical "index value\n" rendering; parse(serialize(parse(t))) is a
/// fixed point.
std::string serialize_bfile(const BFile& bfile);

struct SequenceMismatch {
    long index = 0;  // index into `values`
    Integer expected;  // b-file value
    Integer actual;
};

struct ComparisonReport {
    long compared = 0;
    std::vector<SequenceMismatch> mismatches;

    bool empty_overlap() const { return compared == 0; }
    bool clean() const { return compared > 0 && mismatches.empty(); }
};

/// Compares values[i] against the b-file entry with index i + offset_shift,
/// over whatever overlap exists. values[i] corresponds to sequence position
/// first_index + i.
ComparisonReport compare_sequence(const std::vector<Integer>& values, long first_index,
                                  const BFile& bfile, long offset_shift);

struct NetworkDisabledError : std::runtime_error {
    NetworkDisabledError()
        : std::runtime_error("network access is disabled (pass --enable-network)") {}
};

struct FetchError : std::runtime_error {
    explicit FetchError(const std::string& what) : std::runtime_error(what) {}
};

/// True for well-formed OEIS ids: 'A' followed by 6 or 7 digits.
bool is_valid_sequence_id(const std::string& id);

/// Downloads the b-file for an OEIS id (https://oeis.org/Axxxxxx/bxxxxxx.txt).
/// Refuses with NetworkDisabledError unless network_enabled; throws
/// std::invalid_argument on malformed ids before any I/O, FetchError on
/// transport or HTTP failures.
std::string fetch_bfile(const std::string& sequence_id, bool network_enabled);

}  // namespace schroeder
