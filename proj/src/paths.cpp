#include "schroeder/paths.hpp"

#include <stdexcept>

namespace schroeder {

char step_char(Step s) {
    switch (s) {
        case Step::up: return 'U';
        case Step::flat: return 'F';
        case Step::down: return 'D';
    }
    throw std::logic_error("bad step");
}

Step step_from_char(char c) {
    switch (c) {
        case 'U': return Step::up;
        case 'F': return Step::flat;
        case 'D': return Step::down;
        default: throw std::invalid_argument(std::string("bad step character '") + c + "'");
    }
}

PathStatistics path_statistics(const std::vector<Step>& steps) {
    PathStatistics st;
    for (size_t i = 0; i < steps.size(); ++i) {
        switch (steps[i]) {
            case Step::up: ++st.ups; break;
            case Step::flat: ++st.flats; break;
            case Step::down: ++st.downs; break;
        }
        if (i + 1 < steps.size()) {
            if (steps[i] == Step::down && steps[i + 1] == Step::up) ++st.valleys;
            if (steps[i] == Step::up && steps[i + 1] == Step::down) ++st.peaks;
        }
    }
    // Valleys are disjoint DU occurrences, so each claims one U and one D;
    // peaks likewise.
    st.nonvalley_ups = st.ups - st.valleys;
    st.nonvalley_downs = st.downs - st.valleys;
    st.nonpeak_ups = st.ups - st.peaks;
    st.nonpeak_downs = st.downs - st.peaks;
    return st;
}

long path_size(const std::vector<Step>& steps) {
    long ups = 0, flats = 0;
    for (Step s : steps) {
        if (s == Step::up) ++ups;
        if (s == Step::flat) ++flats;
    }
    return ups + flats + 1;
}

bool is_large_schroeder(const std::vector<Step>& steps) {
    long h = 0;
    for (Step s : steps) {
        if (s == Step::up) ++h;
        if (s == Step::down) --h;
        if (h < 0) return false;
    }
    return h == 0;
}

bool is_small_schroeder(const std::vector<Step>& steps) {
    long h = 0;
    for (Step s : steps) {
        if (s == Step::flat && h == 0) return false;
        if (s == Step::up) ++h;
        if (s == Step::down) --h;
        if (h < 0) return false;
    }
    return h == 0;
}

bool is_dyck(const std::vector<Step>& steps) {
    for (Step s : steps)
        if (s == Step::flat) return false;
    return is_large_schroeder(steps);
}

bool satisfies_class(const std::vector<Step>& steps, PathClass cls) {
    switch (cls) {
        case PathClass::small_schroeder: return is_small_schroeder(steps);
        case PathClass::large_schroeder: return is_large_schroeder(steps);
        case PathClass::dyck: return is_dyck(steps);
    }
    return false;
}

std::string encode_path(const std::vector<Step>& steps) {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) out.push_back(step_char(s));
    return out;
}

LatticePath make_path(std::vector<Step> steps, PathClass cls) {
    if (!satisfies_class(steps, cls))
        throw std::invalid_argument("path '" + encode_path(steps) +
                                    "' violates its class invariants");
    return LatticePath{std::move(steps), cls};
}

LatticePath make_path(std::string_view text, PathClass cls) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) steps.push_back(step_from_char(c));
    return make_path(std::move(steps), cls);
}

}  // namespace schroeder
