#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctk/gf2.hpp"

namespace ctk::route {

/// All coordinates are integer quarter-units: x = 4*column + lane offset,
/// y = 4*row. Input terminals sit on row 0 in unit column i, output
/// terminals on row N+1 in unit column P(i).
struct Point {
    std::int64_t x = 0, y = 0;
    bool operator==(const Point&) const = default;
};

struct Segment {
    int layer = 1;  // 1 = vertical color, 2 = horizontal color
    Point a, b;     // axis-aligned, a != b

    bool vertical() const { return a.x == b.x; }
};

struct Net {
    unsigned input = 0, output = 0;  // i and P(i)
    std::vector<Segment> segments;   // connected polyline, terminal to terminal
    std::vector<Point> vias;         // layer-change points
};

struct WirePlan {
    unsigned n = 0;
    std::vector<Net> nets;
};

/// Lane scheme: input stubs at x = i + 1/4 (layer 1), one horizontal track
/// per net at y = i + 1 (layer 2), output drops at x = P(i) + 1/2 (layer 1).
/// Straight nets (P(i) = i) collapse to a single full vertical with no vias.
WirePlan route_two_layer(const Permutation& p);

struct Conflict {
    unsigned net_a = 0, net_b = 0;
    int layer = 0;
    Point where;  // a point of the shared geometry
};

/// Exact integer overlap/intersection test between every pair of same-layer
/// segments of different nets. Empty result = valid plan.
std::vector<Conflict> verify_plan(const WirePlan& plan);

struct LayerDecision {
    unsigned layers = 1;
    std::uint64_t inversions = 0;  // pairs i < j with P(i) > P(j)
};

/// 1 iff the permutation has no inversions (straight wires suffice), else 2.
LayerDecision min_layers(const Permutation& p);

/// The PRESENT bit permutation, P(i) = 16*(i mod 4) + floor(i/4), as the
/// published 64-entry table.
Permutation present_permutation();
/// 16-bit school variant, P(i) = 4*(i mod 4) + floor(i/4).
Permutation present16_permutation();

/// Deterministic SVG (no timestamps): layer 1 and 2 in fixed stroke colors,
/// vias as dots.
std::string emit_svg(const WirePlan& plan);

}  // namespace ctk::route
