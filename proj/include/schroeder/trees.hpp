#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

/// Plane rooted tree with ordered children; an empty child list is a leaf.
struct PlaneTree {
    std::vector<PlaneTree> children;

    bool is_leaf() const { return children.empty(); }
    bool operator==(const PlaneTree&) const = default;
};

long leaf_count(const PlaneTree& t);
long internal_count(const PlaneTree& t);

/// Every internal node has at least two children.
bool is_schroeder_tree(const PlaneTree& t);

/// Children reversed at every node.
PlaneTree mirror(const PlaneTree& t);

/// Nested parentheses: a leaf is "()", an internal node wraps the
/// concatenation of its children.
std::string encode_tree(const PlaneTree& t);
PlaneTree decode_tree(std::string_view text);

}  // namespace schroeder
