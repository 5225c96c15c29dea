#include "ctk/routing.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace ctk::route {

namespace {

Segment vertical_seg(std::int64_t x, std::int64_t y0, std::int64_t y1) {
    return Segment{1, {x, y0}, {x, y1}};
}

Segment horizontal_seg(std::int64_t y, std::int64_t x0, std::int64_t x1) {
    return Segment{2, {x0, y}, {x1, y}};
}

}  // namespace

WirePlan route_two_layer(const Permutation& p) {
    const unsigned n = unsigned(p.size());
    WirePlan plan;
    plan.n = n;
    plan.nets.reserve(n);
    const std::int64_t bottom = 4 * (std::int64_t(n) + 1);
    for (unsigned i = 0; i < n; ++i) {
        Net net;
        net.input = i;
        net.output = p(i);
        const std::int64_t x_in = 4 * std::int64_t(i) + 1;        // i + 1/4
        const std::int64_t x_out = 4 * std::int64_t(p(i)) + 2;    // P(i) + 1/2
        const std::int64_t y_track = 4 * (std::int64_t(i) + 1);   // i + 1
        if (p(i) == i) {
            net.segments.push_back(vertical_seg(x_in, 0, bottom));
        } else {
            net.segments.push_back(vertical_seg(x_in, 0, y_track));
            net.segments.push_back(horizontal_seg(y_track, std::min(x_in, x_out),
                                                  std::max(x_in, x_out)));
            net.segments.push_back(vertical_seg(x_out, y_track, bottom));
            net.vias.push_back({x_in, y_track});
            net.vias.push_back({x_out, y_track});
        }
        plan.nets.push_back(std::move(net));
    }
    return plan;
}

namespace {

bool ranges_overlap(std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1) {
    return std::max(a0, b0) <= std::min(a1, b1);
}

/// Returns true and a witness point if the same-layer segments touch.
bool segments_touch(const Segment& s, const Segment& t, Point& where) {
    auto lo = [](const Segment& seg, bool vert) {
        return vert ? std::min(seg.a.y, seg.b.y) : std::min(seg.a.x, seg.b.x);
    };
    auto hi = [](const Segment& seg, bool vert) {
        return vert ? std::max(seg.a.y, seg.b.y) : std::max(seg.a.x, seg.b.x);
    };
    const bool sv = s.vertical(), tv = t.vertical();
    if (sv && tv) {
        if (s.a.x != t.a.x) return false;
        if (!ranges_overlap(lo(s, true), hi(s, true), lo(t, true), hi(t, true))) return false;
        where = {s.a.x, std::max(lo(s, true), lo(t, true))};
        return true;
    }
    if (!sv && !tv) {
        if (s.a.y != t.a.y) return false;
        if (!ranges_overlap(lo(s, false), hi(s, false), lo(t, false), hi(t, false))) return false;
        where = {std::max(lo(s, false), lo(t, false)), s.a.y};
        return true;
    }
    const Segment& v = sv ? s : t;
    const Segment& h = sv ? t : s;
    if (v.a.x < lo(h, false) || v.a.x > hi(h, false)) return false;
    if (h.a.y < lo(v, true) || h.a.y > hi(v, true)) return false;
    where = {v.a.x, h.a.y};
    return true;
}

}  // namespace

std::vector<Conflict> verify_plan(const WirePlan& plan) {
    std::vector<Conflict> conflicts;
    for (std::size_t i = 0; i < plan.nets.size(); ++i) {
        for (std::size_t j = i + 1; j < plan.nets.size(); ++j) {
            for (const Segment& s : plan.nets[i].segments) {
                for (const Segment& t : plan.nets[j].segments) {
                    if (s.layer != t.layer) continue;
                    Point where;
                    if (segments_touch(s, t, where))
                        conflicts.push_back({unsigned(i), unsigned(j), s.layer, where});
                }
            }
        }
    }
    return conflicts;
}

LayerDecision min_layers(const Permutation& p) {
    LayerDecision d;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p(i) > p(j)) ++d.inversions;
    d.layers = d.inversions == 0 ? 1 : 2;
    return d;
}

Permutation present_permutation() {
    // Table "Definition of the bit permutation used in PRESENT"
    static const std::array<std::uint32_t, 64> table = {
        0, 16, 32, 48, 1, 17, 33, 49, 2,  18, 34, 50, 3,  19, 35, 51,
        4, 20, 36, 52, 5, 21, 37, 53, 6,  22, 38, 54, 7,  23, 39, 55,
        8, 24, 40, 56, 9, 25, 41, 57, 10, 26, 42, 58, 11, 27, 43, 59,
        12, 28, 44, 60, 13, 29, 45, 61, 14, 30, 46, 62, 15, 31, 47, 63,
    };
    return Permutation(std::vector<std::uint32_t>(table.begin(), table.end()));
}

Permutation present16_permutation() {
    std::vector<std::uint32_t> table(16);
    for (std::uint32_t i = 0; i < 16; ++i) table[i] = 4 * (i % 4) + i / 4;
    return Permutation(std::move(table));
}

std::string emit_svg(const WirePlan& plan) {
    // 1 quarter-unit = 3 px, 20 px margin
    const std::int64_t scale = 3, margin = 20;
    const std::int64_t width = 2 * margin + scale * 4 * (std::int64_t(plan.n) + 1);
    const std::int64_t height = 2 * margin + scale * 4 * (std::int64_t(plan.n) + 1);
    static const char* layer_color[2] = {"#1f77b4", "#d62728"};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const Net& net : plan.nets) {
        out << "<g data-net=\"" << net.input << "-" << net.output << "\">\n";
        for (const Segment& s : net.segments) {
            out << "  <line x1=\"" << (margin + scale * s.a.x) << "\" y1=\""
                << (margin + scale * s.a.y) << "\" x2=\"" << (margin + scale * s.b.x)
                << "\" y2=\"" << (margin + scale * s.b.y) << "\" stroke=\""
                << layer_color[s.layer - 1] << "\" stroke-width=\"2\"/>\n";
        }
        for (const Point& v : net.vias) {
            out << "  <circle cx=\"" << (margin + scale * v.x) << "\" cy=\""
                << (margin + scale * v.y) << "\" r=\"3\" fill=\"black\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ctk::route
