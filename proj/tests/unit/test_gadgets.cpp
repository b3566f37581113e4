#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "rdpivot/rdpivot.hpp"

using namespace rd;

namespace {
const MoveCatalog& cat() { return MoveCatalog::builtin(); }

std::set<int> layers(const Configuration& c) {
    std::set<int> s;
    for (auto p : c.modules()) s.insert(layer_of(p));
    return s;
}
}  // namespace

TEST_CASE("roofs are hexagonal disks") {
    for (int r = 1; r <= 5; ++r) {
        const auto d = roof(r, 3);
        CHECK(d.size() == static_cast<std::size_t>(3 * r * r + 3 * r + 1));
        CHECK(layers(d) == std::set<int>{3});
        CHECK(is_connected(d));
        const auto ring = roof_boundary(r, 3);
        CHECK(ring.size() == static_cast<std::size_t>(6 * r));
        for (std::size_t i = 0; i < ring.size(); ++i) {
            CHECK(d.contains(ring[i]));
            CHECK(is_neighbor_offset(ring[(i + 1) % ring.size()] - ring[i]));
        }
        // Boundary cells miss an in-layer neighbour; interior cells have all six.
        std::set<Position> on_ring(ring.begin(), ring.end());
        for (auto p : d.modules()) {
            int inside = 0;
            for (std::size_t k = 0; k < 6; ++k) inside += d.contains(p + kNeighborOffsets[k]);
            CHECK((inside < 6) == (on_ring.count(p) == 1));
        }
    }
    CHECK_THROWS_AS(roof(0, 0), Error);
}

TEST_CASE("a bare roof is mobile at its boundary") {
    CHECK_FALSE(is_rigid(roof(2, 0), cat(), MoveModel::Restricted));
}

TEST_CASE("cap holds its terminal between modules directly above and below") {
    const auto& pat = cap_pattern();
    CHECK(pat.shape.config.size() == 7);
    const Position anchor{0, 0, 0};
    for (std::size_t i = 0; i < 6; ++i)
        for (bool flipped : {false, true}) {
            const Offset d = kNeighborOffsets[i];
            const auto c = cap(anchor, d, flipped);
            CHECK(c.size() == 7);
            CHECK_FALSE(c.contains(anchor));
            CHECK(c.contains(anchor + d));  // entry continues the path
            // Exactly one module is held by an up/down opposite pair.
            int held = 0;
            for (auto p : c.modules())
                for (std::size_t k = 6; k < 9; ++k)
                    held += c.contains(p + kNeighborOffsets[k]) && c.contains(p + kNeighborOffsets[k + 3]);
            CHECK(held == 1);
            const Position path[] = {anchor, anchor - d, anchor - d * 2};
            const auto with_path = c.with(path);
            CHECK(is_connected(with_path));
            CHECK(is_rigid(with_path, cat(), MoveModel::Restricted) == false);  // the path's free end can move
            const auto rep = mobility(with_path, cat(), MoveModel::Restricted);
            for (auto p : c.modules()) CHECK(rep.at(p).verdict != MobilityVerdict::Mobile);
        }
    CHECK_THROWS_AS(cap(anchor, {1, 1, 0}), Error);
    CHECK_THROWS_AS(cap({1, 0, 0}, {1, -1, 0}), Error);
}

TEST_CASE("capped roofs are rigid, connected and deterministic") {
    for (int r = 1; r <= 3; ++r)
        for (int len = 2; len <= 4; ++len) {
            const auto c = capped_roof(r, len);
            CHECK(is_connected(c));
            CHECK(is_rigid(c, cat(), MoveModel::Restricted));
            CHECK(is_rigid(c, cat(), MoveModel::Monkey));
            CHECK(serialize_configuration(c) == serialize_configuration(capped_roof(r, len)));
            const auto disk = roof(r, 0);
            for (auto p : disk.modules()) CHECK(c.contains(p));
            // One arm per boundary module: arms hold 6r paths of len cells plus a cap each,
            // except corner arms that add a vertical root.
            CHECK(c.size() >= disk.size() + static_cast<std::size_t>(6 * r * (len + 7)));
        }
    CHECK_THROWS_AS(capped_roof(1, 1), Error);
}

TEST_CASE("capped roof arm modules are immobile and some only by disconnecting") {
    const auto c = capped_roof(2, 3);
    const auto rep = mobility(c, cat(), MoveModel::Restricted);
    const auto disk = roof(2, 0);
    std::size_t disconnecting = 0;
    for (const auto& m : rep.modules) {
        CHECK(m.verdict != MobilityVerdict::Mobile);
        if (!disk.contains(m.module)) disconnecting += m.verdict == MobilityVerdict::Disconnecting;
        else if (m.verdict == MobilityVerdict::Disconnecting) FAIL("roof module should be blocked");
    }
    CHECK(disconnecting > 0);
}

TEST_CASE("sandwich confines a disk between two rigid roofs") {
    const auto disk = roof(2, 0);
    const auto layout = sandwich_layout(disk);
    const auto& c = layout.config;
    CHECK(is_connected(c));
    for (auto p : disk.modules()) CHECK(c.contains(p));
    CHECK(layout.band.lo == 0);
    CHECK(layout.band.hi == 0);
    CHECK(layout.confined.size() == disk.size());
    CHECK(layout.strut.size() == 2);
    for (auto model : {MoveModel::Restricted, MoveModel::Monkey}) {
        CHECK(layer_confinement(c, layout.band, cat(), model));
        // Everything outside the gadget is rigid within the sandwich.
        const auto rep = mobility(c, cat(), model);
        for (const auto& m : rep.modules)
            if (!disk.contains(m.module)) CHECK(m.verdict != MobilityVerdict::Mobile);
    }
    // Roof layers sit two above and two below.
    const auto ls = layers(c);
    CHECK(ls.count(2));
    CHECK(ls.count(-2));
    CHECK(sandwich(disk) == c);
}

TEST_CASE("sandwich of a single module holds it in place") {
    const Configuration one({{0, 0, 0}});
    const auto layout = sandwich_layout(one);
    CHECK(layer_confinement(layout.config, layout.band, cat(), MoveModel::Restricted));
    CHECK(legal_moves_of(layout.config, {0, 0, 0}, cat(), MoveModel::Monkey).empty());
}

TEST_CASE("sandwich rejects multi-layer input") {
    const Configuration two({{0, 0, 0}, {1, 1, 0}});
    try {
        (void)sandwich(two);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InputNotSingleLayer);
    }
}

TEST_CASE("fig5 spans three layers with mirrored outer layers") {
    const auto fig5 = super_rigid_labeled();
    const auto& c = fig5.config;
    CHECK(c.size() == 16);
    CHECK(is_connected(c));
    CHECK(layers(c) == std::set<int>{-1, 0, 1});
    // The outer layers are images of each other under a layer-reversing symmetry fixing the middle layer's centre.
    bool mirrored = false;
    for (const auto& op : all_symmetries()) {
        if (op.sign != -1) continue;
        for (auto shift : {Offset{0, 0, 0}, Offset{2, 0, 0}, Offset{1, 1, 0}, Offset{1, -1, 0}, Offset{1, 0, 1},
                           Offset{1, 0, -1}, Offset{0, 1, 1}, Offset{0, 1, -1}}) {
            bool ok = true;
            for (auto p : c.modules())
                if (layer_of(p) != 0) ok = ok && c.contains(op(p) + shift);
            mirrored = mirrored || ok;
        }
    }
    CHECK(mirrored);
    for (const char* label : {"A", "B", "C", "1", "2", "3"}) CHECK(c.contains(fig5.labels.at(label)));
    CHECK(layer_of(fig5.labels.at("C")) == 0);
    CHECK(layer_of(fig5.labels.at("1")) == 1);
    // B touches both A and C inside the middle layer.
    CHECK(is_neighbor_offset(fig5.labels.at("B") - fig5.labels.at("A")));
    CHECK(is_neighbor_offset(fig5.labels.at("B") - fig5.labels.at("C")));
}

TEST_CASE("fig6 pair differs by one module") {
    const auto [a, b] = free_rigid_pair();
    CHECK(b.size() == a.size() + 1);
    for (auto p : a.modules()) CHECK(b.contains(p));
    CHECK(is_connected(a));
    CHECK(is_connected(b));
}

TEST_CASE("build_gadget dispatches every kind") {
    GadgetSpec spec;
    spec.radius = 2;
    for (auto kind : {GadgetKind::Roof, GadgetKind::Cap, GadgetKind::CappedRoof, GadgetKind::Sandwich,
                      GadgetKind::Fig5, GadgetKind::Fig6a, GadgetKind::Fig6b}) {
        spec.kind = kind;
        const auto c = build_gadget(spec);
        CHECK(c.size() > 0);
    }
    spec.kind = GadgetKind::CappedRoof;
    spec.layer = 3;
    CHECK(build_gadget(spec).contains(from_hex({0, 0, 3})));
    spec.path_length = 1;
    CHECK_THROWS_AS(build_gadget(spec), Error);
    CHECK(parse_gadget_kind("capped-roof") == GadgetKind::CappedRoof);
    CHECK_FALSE(parse_gadget_kind("lock"));
}
