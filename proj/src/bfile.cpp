#include "schroeder/bfile.hpp"

#include <cctype>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace schroeder {

namespace {

bool is_integer_token(const std::string& tok) {
    size_t start = tok.size() > 1 && tok[0] == '-' ? 1 : 0;
    if (start == tok.size()) return false;
    for (size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

}  // namespace

BFile parse_bfile(const std::string& text, const std::string& sequence_id) {
    BFile out;
    out.sequence_id = sequence_id;
    std::istringstream stream(text);
    std::string line;
    long line_no = 0;
    bool have_prev = false;
    long prev_index = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;  // blank
        if (line[first] == '#') continue;          // comment
        std::istringstream fields(line);
        std::string index_tok, value_tok, extra;
        fields >> index_tok >> value_tok;
        if (fields >> extra)
            throw BFileParseError(line_no, "expected 'index value', got extra field '" + extra + "'");
        if (!is_integer_token(index_tok) || value_tok.empty() || !is_integer_token(value_tok))
            throw BFileParseError(line_no, "expected 'index value', got '" + line + "'");
        long index = 0;
        try {
            index = std::stol(index_tok);
        } catch (const std::out_of_range&) {
            throw BFileParseError(line_no, "index out of range: " + index_tok);
        }
        if (have_prev && index <= prev_index)
            throw BFileParseError(line_no, "indices must be strictly increasing");
        have_prev = true;
        prev_index = index;
        out.entries.emplace_back(index, Integer(value_tok, 10));
    }
    return out;
}

std::string serialize_bfile(const BFile& bfile) {
    std::string out;
    for (const auto& [index, value] : bfile.entries) {
        out += std::to_string(index);
        out += ' ';
        out += value.get_str();
        out += '\n';
    }
    return out;
}

ComparisonReport compare_sequence(const std::vector<Integer>& values, long first_index,
                                  const BFile& bfile, long offset_shift) {
    ComparisonReport report;
    for (size_t i = 0; i < values.size(); ++i) {
        long position = first_index + static_cast<long>(i);
        long wanted = position + offset_shift;
        for (const auto& [index, value] : bfile.entries) {
            if (index != wanted) continue;
            ++report.compared;
            if (value != values[i])
                report.mismatches.push_back({position, value, values[i]});
            break;
        }
    }
    return report;
}

bool is_valid_sequence_id(const std::string& id) {
    if (id.size() < 7 || id.size() > 8 || id[0] != 'A') return false;
    for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

std::string fetch_bfile(const std::string& sequence_id, bool network_enabled) {
    if (!is_valid_sequence_id(sequence_id))
        throw std::invalid_argument("malformed OEIS id '" + sequence_id + "'");
    if (!network_enabled) throw NetworkDisabledError();
    std::string stem = "b" + sequence_id.substr(1);
    std::string path = "/" + sequence_id + "/" + stem + ".txt";
    httplib::SSLClient client("oeis.org", 443);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) throw FetchError("network failure fetching " + path);
    if (res->status != 200)
        throw FetchError("HTTP " + std::to_string(res->status) + " fetching " + path);
    return res->body;
}

}  // namespace schroeder
