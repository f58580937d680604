#include "schroeder/trees.hpp"

#include <stdexcept>

namespace schroeder {

long leaf_count(const PlaneTree& t) {
    if (t.is_leaf()) return 1;
    long n = 0;
    for (const auto& c : t.children) n += leaf_count(c);
    return n;
}

long internal_count(const PlaneTree& t) {
    if (t.is_leaf()) return 0;
    long k = 1;
    for (const auto& c : t.children) k += internal_count(c);
    return k;
}

bool is_schroeder_tree(const PlaneTree& t) {
    if (t.is_leaf()) return true;
    if (t.children.size() < 2) return false;
    for (const auto& c : t.children)
        if (!is_schroeder_tree(c)) return false;
    return true;
}

PlaneTree mirror(const PlaneTree& t) {
    PlaneTree m;
    m.children.reserve(t.children.size());
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
        m.children.push_back(mirror(*it));
    return m;
}

std::string encode_tree(const PlaneTree& t) {
    std::string out = "(";
    for (const auto& c : t.children) out += encode_tree(c);
    out += ")";
    return out;
}

namespace {

PlaneTree parse_tree(std::string_view text, size_t& pos) {
    if (pos >= text.size() || text[pos] != '(')
        throw std::invalid_argument("malformed tree encoding");
    ++pos;
    PlaneTree t;
    while (pos < text.size() && text[pos] == '(')
        t.children.push_back(parse_tree(text, pos));
    if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("malformed tree encoding");
    ++pos;
    return t;
}

}  // namespace

PlaneTree decode_tree(std::string_view text) {
    size_t pos = 0;
    PlaneTree t = parse_tree(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in tree encoding");
    return t;
}

}  // namespace schroeder
