#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncg {

// A point of a discrete space. Lattice spaces use fixed-length integer
// coordinates; word spaces (free group, rooted tree) use variable-length
// letter sequences.
using Point = std::vector<std::int64_t>;

// Graded lexicographic order: shorter words first, then coordinate-wise.
// This is the canonical enumeration order everywhere.
inline bool point_less(const Point& a, const Point& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline std::string point_to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace ncg
