#include <algorithm>
#include <random>

#include "ctk/routing.hpp"
#include "doctest.h"

using namespace ctk;
using namespace ctk::route;

TEST_CASE("published permutation tables") {
    Permutation p = present_permutation();
    REQUIRE(p.size() == 64);
    for (unsigned i = 0; i < 64; ++i) CHECK(p(i) == 16 * (i % 4) + i / 4);
    Permutation q = present16_permutation();
    REQUIRE(q.size() == 16);
    for (unsigned i = 0; i < 16; ++i) CHECK(q(i) == 4 * (i % 4) + i / 4);
}

TEST_CASE("routed plans verify clean and hit their terminals") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + rng() % 64;
        std::vector<std::uint32_t> map(n);
        for (std::size_t i = 0; i < n; ++i) map[i] = std::uint32_t(i);
        std::shuffle(map.begin(), map.end(), rng);
        Permutation p(map);
        WirePlan plan = route_two_layer(p);
        CHECK(plan.nets.size() == n);
        CHECK(verify_plan(plan).empty());
        for (unsigned i = 0; i < n; ++i) {
            CHECK(plan.nets[i].input == i);
            CHECK(plan.nets[i].output == p(i));
        }
    }
}

TEST_CASE("identity collapses to straight verticals without vias") {
    WirePlan plan = route_two_layer(Permutation::identity(8));
    for (const auto& net : plan.nets) {
        CHECK(net.segments.size() == 1);
        CHECK(net.segments.front().vertical());
        CHECK(net.segments.front().layer == 1);
        CHECK(net.vias.empty());
    }
    CHECK(verify_plan(plan).empty());
}

TEST_CASE("verifier detects constructed conflicts") {
    // two collinear overlapping verticals of different nets
    WirePlan bad;
    bad.n = 2;
    bad.nets.resize(2);
    bad.nets[0].segments.push_back({1, {4, 0}, {4, 20}});
    bad.nets[1].segments.push_back({1, {4, 10}, {4, 30}});
    CHECK(!verify_plan(bad).empty());

    // crossing vertical/horizontal on the same layer
    WirePlan cross;
    cross.n = 2;
    cross.nets.resize(2);
    cross.nets[0].segments.push_back({1, {4, 0}, {4, 20}});
    cross.nets[1].segments.push_back({1, {0, 10}, {8, 10}});
    CHECK(!verify_plan(cross).empty());

    // same geometry on different layers is fine
    cross.nets[1].segments.front().layer = 2;
    CHECK(verify_plan(cross).empty());

    // touching endpoints of different nets count as a short
    WirePlan touch;
    touch.n = 2;
    touch.nets.resize(2);
    touch.nets[0].segments.push_back({1, {4, 0}, {4, 10}});
    touch.nets[1].segments.push_back({1, {4, 10}, {4, 20}});
    CHECK(!verify_plan(touch).empty());
}

TEST_CASE("layer decision counts inversions") {
    CHECK(min_layers(Permutation::identity(10)).layers == 1);
    CHECK(min_layers(Permutation::identity(10)).inversions == 0);
    auto dec = min_layers(present_permutation());
    CHECK(dec.layers == 2);
    CHECK(dec.inversions == 720);
    // full reversal: n(n-1)/2 inversions
    std::vector<std::uint32_t> rev(10);
    for (unsigned i = 0; i < 10; ++i) rev[i] = 9 - i;
    CHECK(min_layers(Permutation(rev)).inversions == 45);
    CHECK(min_layers(Permutation(rev)).layers == 2);
}

TEST_CASE("the published 64-bit instance routes on two layers") {
    WirePlan plan = route_two_layer(present_permutation());
    CHECK(verify_plan(plan).empty());
    std::string svg = emit_svg(plan);
    CHECK(svg == emit_svg(route_two_layer(present_permutation())));
    // one data-net marker per net, both layer colors present
    std::size_t nets = 0;
    for (std::size_t pos = svg.find("data-net"); pos != std::string::npos;
         pos = svg.find("data-net", pos + 1))
        ++nets;
    CHECK(nets >= 64);
    CHECK(svg.find("#1f77b4") != std::string::npos);
    CHECK(svg.find("#d62728") != std::string::npos);
    CHECK(svg.find("<svg") != std::string::npos);
}
