#pragma once

#include "vdec/graph.hpp"

#include <variant>
#include <vector>

namespace vdec {

// Structural families of trees used by the closed-form colorings.

struct Star {
    int leaves = 0;   // = n1 = p-1
    bool operator==(const Star&) const = default;
};

/// S_{m+1,n+1}: two adjacent centers with m and n pendant leaves, m <= n.
struct DoubleStar {
    int m = 0;
    int n = 0;
    bool operator==(const DoubleStar&) const = default;
};

/// Q(r,m,n): center w0 with r pendant leaves, m length-2 legs and n branches
/// carrying legs[i] >= 2 leaves each. legs is sorted ascending.
struct DiamFour {
    int r = 0;
    int m = 0;
    std::vector<int> legs;
    VertexId center = 0;
    bool operator==(const DiamFour& o) const {
        return r == o.r && m == o.m && legs == o.legs;   // center is incidental
    }
};

struct General {
    int diameter = 0;
    bool operator==(const General&) const = default;
};

using TreeShape = std::variant<Star, DoubleStar, DiamFour, General>;

/// Total on trees with p >= 3 (throws TooSmall below that). The diameter-4
/// classifier validates the whole Q(r,m,n) anatomy rather than assuming it.
TreeShape classify_tree(const Tree& t);

bool is_path_p5(const Tree& t);               // Q(0,2,0)
bool in_exceptional_family(const Tree& t);    // Q(r,2,0) r>=1 or Q(0,1,1)

// Canonical constructions (round-trip partners of classify_tree).
Tree build_star(int leaves);
Tree build_double_star(int m, int n);
Tree build_diam_four(int r, int m, const std::vector<int>& legs);
Tree build_path(int p);

std::string shape_to_string(const TreeShape& s);

} // namespace vdec
