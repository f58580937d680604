#include "schroeder/fixtures.hpp"

namespace schroeder {
namespace fixtures {

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace

const std::vector<Integer>& small_schroeder_numbers() {
    static const auto v = ints({1, 1, 3, 11, 45, 197, 903, 4279});
    return v;
}

const std::vector<Integer>& weighted_d2() {
    static const auto v = ints({1, 2, 10, 62, 430, 3194, 24850, 199910});
    return v;
}

const std::vector<Integer>& weighted_d3() {
    static const auto v = ints({1, 3, 21, 183, 1785, 18651, 204141, 2310447});
    return v;
}

const std::vector<Integer>& weighted_d4() {
    static const auto v = ints({1, 4, 36, 404, 5076, 68324, 963396, 14046964});
    return v;
}

const std::vector<Integer>& large_schroeder_numbers() {
    static const auto v = ints({1, 2, 6, 22, 90, 394, 1806, 8558});
    return v;
}

const std::vector<std::vector<Integer>>& small_schroeder_triangle() {
    static const std::vector<std::vector<Integer>> v = {
        ints({1}),
        ints({0, 1}),
        ints({0, 1, 2}),
        ints({0, 1, 5, 5}),
        ints({0, 1, 9, 21, 14}),
        ints({0, 1, 14, 56, 84, 42}),
    };
    return v;
}

const std::vector<std::vector<Integer>>& narayana_triangle() {
    static const std::vector<std::vector<Integer>> v = {
        ints({1}),
        ints({0, 1}),
        ints({0, 1, 1}),
        ints({0, 1, 3, 1}),
        ints({0, 1, 6, 6, 1}),
        ints({0, 1, 10, 20, 10, 1}),
    };
    return v;
}

const std::vector<std::pair<Integer, Integer>>& peak_parity_rows() {
    static const std::vector<std::pair<Integer, Integer>> v = {
        {1, 0},  // literal count for the empty path; published row reads (0, 1)
        {0, 1}, {1, 1}, {3, 2},   {7, 7},     {20, 22},
        {66, 66}, {217, 212}, {715, 715}, {2424, 2438},
    };
    return v;
}

}  // namespace fixtures
}  // namespace schroeder
