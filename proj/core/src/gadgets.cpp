#include "rdpivot/gadgets.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "embedded_data.hpp"
#include "rdpivot/error.hpp"

namespace rd {

LabeledConfiguration parse_labeled_configuration(std::string_view text) {
    LabeledConfiguration out{parse_configuration(text), {}};
    const auto doc = nlohmann::json::parse(text);
    const bool hex = doc.value("coords", std::string("xyz")) == "hex";
    if (doc.contains("labels")) {
        for (const auto& [name, v] : doc["labels"].items()) {
            if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::MalformedInput, "label " + name);
            const int a = v[0].get<int>(), b = v[1].get<int>(), c = v[2].get<int>();
            out.labels.emplace(name, hex ? from_hex({a, b, c}) : Position{a, b, c});
        }
    }
    return out;
}

namespace {

int hex_distance(int q, int r) {
    // Axial frame of HexCoord: neighbours are (+-1,0), (0,+-1), +-(1,1).
    if ((q >= 0) == (r >= 0)) return std::max(std::abs(q), std::abs(r));
    return std::abs(q) + std::abs(r);
}

int hex_dist(HexCoord a, HexCoord b) { return hex_distance(a.q - b.q, a.r - b.r); }

std::string describe(Position p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

// The unique layer-preserving (sign +1) symmetry taking `from` to `to`.
SymmetryOp orient(Offset from, Offset to) {
    for (const auto& op : all_symmetries())
        if (op.sign == 1 && op(from) == to) return op;
    throw Error(ErrorCode::InvalidDirection, "direction is not an in-layer neighbour offset");
}

}  // namespace

Configuration roof(int radius, int layer) {
    if (radius < 1) throw Error(ErrorCode::InvalidArgument, "roof radius must be at least 1");
    std::vector<Position> cells;
    for (int q = -radius; q <= radius; ++q)
        for (int r = -radius; r <= radius; ++r)
            if (hex_distance(q, r) <= radius) cells.push_back(from_hex({q, r, layer}));
    return Configuration(std::move(cells));
}

std::vector<Position> roof_boundary(int radius, int layer) {
    if (radius < 1) throw Error(ErrorCode::InvalidArgument, "roof radius must be at least 1");
    // Walk the ring: start at corner radius*e0, then radius steps along each side.
    const Position centre = from_hex({0, 0, layer});
    std::vector<Position> ring;
    Position p = centre + kNeighborOffsets[4] * radius;
    for (std::size_t side = 0; side < 6; ++side)
        for (int k = 0; k < radius; ++k) {
            ring.push_back(p);
            p = p + kNeighborOffsets[side];
        }
    return ring;
}

LabeledConfiguration super_rigid_labeled() { return parse_labeled_configuration(embedded::k_fig5); }

Configuration super_rigid_config() { return super_rigid_labeled().config; }

std::pair<Configuration, Configuration> free_rigid_pair() {
    return {parse_configuration(embedded::k_fig6a, true), parse_configuration(embedded::k_fig6b, true)};
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view s) {
    if (s == "roof") return GadgetKind::Roof;
    if (s == "cap") return GadgetKind::Cap;
    if (s == "capped_roof" || s == "capped-roof") return GadgetKind::CappedRoof;
    if (s == "sandwich") return GadgetKind::Sandwich;
    if (s == "fig5") return GadgetKind::Fig5;
    if (s == "fig6a") return GadgetKind::Fig6a;
    if (s == "fig6b") return GadgetKind::Fig6b;
    return std::nullopt;
}

const CapPattern& cap_pattern() {
    static const CapPattern pattern = [] {
        CapPattern p{parse_labeled_configuration(embedded::k_cap), {}};
        const auto doc = nlohmann::json::parse(embedded::k_cap);
        const auto& d = doc.at("direction");
        p.direction = {d[0].get<int>(), d[1].get<int>(), d[2].get<int>()};
        return p;
    }();
    return pattern;
}

Configuration cap(Position anchor, Offset direction, bool flipped) {
    if (!is_lattice_point(anchor)) throw Error(ErrorCode::InvalidPosition, describe(anchor));
    if (!is_neighbor_offset(direction) || classify_offset(direction) != NeighborClass::InLayer)
        throw Error(ErrorCode::InvalidDirection, "cap direction must be an in-layer neighbour offset");
    const auto& pat = cap_pattern();
    SymmetryOp op = orient(pat.direction, direction);
    if (flipped) {
        // The sign -1 symmetry fixing `direction` mirrors the cap through the layer.
        for (const auto& g : all_symmetries())
            if (g.sign == -1 && g(direction) == direction) op = op.then(g);
    }
    const Position origin = pat.shape.labels.at("anchor");
    std::vector<Position> cells;
    for (auto p : pat.shape.config.modules()) cells.push_back(anchor + op(p - origin));
    return Configuration(std::move(cells));
}

namespace {

enum class Escape { Horizontal, Vertical };

struct ArmChoice {
    Offset step;     // path direction
    Offset outward;  // in-layer cap direction
    bool flipped;    // cap mirrored below the path
};

struct ArmSlot {
    Position root;
    Escape escape;
    bool corner;
    std::vector<ArmChoice> choices;
};

std::vector<Position> arm_cells(const ArmSlot& slot, const ArmChoice& c, int path_length) {
    std::vector<Position> cells;
    Position p = slot.root;
    for (int k = 0; k < path_length; ++k) {
        p = p + c.step;
        cells.push_back(p);
    }
    const auto k = cap(p, c.outward, c.flipped);
    // Entry cell first, so the arm reads root-outward.
    const Position entry = p + c.outward;
    cells.push_back(entry);
    for (auto q : k.modules())
        if (q != entry) cells.push_back(q);
    return cells;
}

// Arms are placed in ring order by backtracking. An arm may not overlap or touch
// another arm, and only its first path cell may touch the roof (for a corner
// with a vertical arm, only the root itself), so every arm hangs from its root
// as a tree-like appendage as the construction requires.
class ArmLayout {
public:
    ArmLayout(const Configuration& disk, std::vector<ArmSlot> slots, int path_length)
        : slots_(std::move(slots)), path_length_(path_length) {
        for (auto p : disk.modules()) owner_.emplace(p, -1);
    }

    bool solve() { return place(0); }
    const std::vector<std::vector<Position>>& arms() const { return placed_; }

private:
    bool fits(std::size_t i, const std::vector<Position>& cells) const {
        const auto& slot = slots_[i];
        // The cap may touch its own path only where the path enters it.
        const auto n = static_cast<std::size_t>(path_length_);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = n; b < cells.size(); ++b)
                if (is_neighbor_offset(cells[b] - cells[a]) && !(a + 1 == n && b == n)) return false;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (owner_.count(cells[k])) return false;
            for (auto d : kNeighborOffsets) {
                const Position q = cells[k] + d;
                auto it = owner_.find(q);
                if (it == owner_.end()) continue;
                if (it->second >= 0) return false;
                const bool may_touch_roof = k == 0 && (!slot.corner || slot.escape == Escape::Horizontal);
                if (q != slot.root && !(k == 0 && may_touch_roof)) return false;
            }
        }
        return true;
    }

    bool place(std::size_t i) {
        if (i == slots_.size()) return true;
        for (const auto& choice : slots_[i].choices) {
            auto cells = arm_cells(slots_[i], choice, path_length_);
            if (!fits(i, cells)) continue;
            for (auto p : cells) owner_.emplace(p, static_cast<int>(i));
            placed_.push_back(cells);
            if (place(i + 1)) return true;
            placed_.pop_back();
            for (auto p : cells) owner_.erase(p);
        }
        return false;
    }

    std::vector<ArmSlot> slots_;
    int path_length_;
    std::map<Position, int> owner_;
    std::vector<std::vector<Position>> placed_;
};

}  // namespace

Configuration capped_roof(int radius, int path_length) {
    if (radius < 1) throw Error(ErrorCode::InvalidArgument, "roof radius must be at least 1");
    if (path_length < 2) throw Error(ErrorCode::InvalidArgument, "path length must be at least 2");
    const Configuration disk = roof(radius, 0);
    const auto ring = roof_boundary(radius, 0);

    std::vector<ArmSlot> slots;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const std::size_t side = i / static_cast<std::size_t>(radius);
        const bool corner = i % static_cast<std::size_t>(radius) == 0;
        // Side `side` runs from corner radius*e[side+4] towards radius*e[side+5];
        // both directions lead away from the disk.
        const Offset corner_dir = kNeighborOffsets[(side + 4) % 6];
        const Offset next_dir = kNeighborOffsets[(side + 5) % 6];
        std::vector<Offset> outs{corner_dir};
        if (!corner) outs.push_back(next_dir);
        ArmSlot slot{ring[i], i % 2 == 0 ? Escape::Horizontal : Escape::Vertical, corner, {}};
        for (bool flipped : {false, true})
            for (auto out : outs) {
                if (slot.escape == Escape::Horizontal) {
                    slot.choices.push_back({out, out, flipped});
                } else {
                    for (std::size_t u = 6; u < 9; ++u) slot.choices.push_back({kNeighborOffsets[u], out, flipped});
                }
            }
        slots.push_back(std::move(slot));
    }

    ArmLayout layout(disk, std::move(slots), path_length);
    if (!layout.solve())
        throw Error(ErrorCode::OverlapError, "no non-touching arrangement of capped paths for these parameters");
    std::vector<Position> cells(disk.modules().begin(), disk.modules().end());
    for (const auto& arm : layout.arms()) cells.insert(cells.end(), arm.begin(), arm.end());
    return Configuration(std::move(cells));
}

SandwichLayout sandwich_layout(const Configuration& c2d, int margin, int path_length) {
    const int layer = layer_of(c2d.modules().front());
    for (auto p : c2d.modules())
        if (layer_of(p) != layer) throw Error(ErrorCode::InputNotSingleLayer, "gadget spans several layers");
    if (!is_connected(c2d)) throw Error(ErrorCode::Disconnected, "gadget must be connected");

    // Anchor: the module minimising its farthest distance to the rest.
    Position anchor = c2d.modules().front();
    int radius = std::numeric_limits<int>::max();
    for (auto a : c2d.modules()) {
        int far = 0;
        for (auto p : c2d.modules()) far = std::max(far, hex_dist(to_hex(a), to_hex(p)));
        if (far < radius) {
            radius = far;
            anchor = a;
        }
    }

    // Strut: the Up offset whose supporting triangle holds the most gadget modules.
    std::size_t up = 6;
    int best = -1;
    for (std::size_t u = 6; u < 9; ++u) {
        int held = 0;
        for (std::size_t d = 9; d < 12; ++d) held += c2d.contains(anchor + kNeighborOffsets[u] + kNeighborOffsets[d]);
        if (held > best) {
            best = held;
            up = u;
        }
    }
    const Offset u = kNeighborOffsets[up];
    // Two different Up steps land closest to straight above the anchor; the
    // strut module touches the roof centre.
    const Offset lift = u + kNeighborOffsets[up == 8 ? 6 : up + 1];

    const Position top_centre = anchor + lift;
    const Position bottom_centre = anchor - lift;
    const std::vector<Position> strut{anchor + u, anchor - u};

    // Parts may meet only through the strut, or hidden cycles would free arm modules.
    enum Part : int { Gadget, Strut, Top, Bottom };
    auto allowed = [](int a, int b) { return a == b || (a == Strut) != (b == Strut); };
    auto assemble = [&](const Configuration& upper, const SymmetryOp& mirror) -> std::optional<Configuration> {
        std::unordered_map<Position, int, PositionHash> part;
        bool ok = true;
        auto place = [&](Position p, int id) { ok = ok && part.emplace(p, id).second; };
        for (auto p : c2d.modules()) place(p, Gadget);
        for (auto p : strut) place(p, Strut);
        for (auto p : upper.modules()) place(p + (top_centre - Position{}), Top);
        for (auto p : upper.modules()) place(bottom_centre + mirror(p - Position{}), Bottom);
        for (const auto& [p, id] : part)
            for (auto d : kNeighborOffsets) {
                auto it = part.find(p + d);
                if (it != part.end() && !allowed(id, it->second)) return std::nullopt;
            }
        if (!ok) return std::nullopt;
        std::vector<Position> cells;
        cells.reserve(part.size());
        for (const auto& [p, id] : part) cells.push_back(p);
        return Configuration(std::move(cells));
    };

    // Larger roofs and longer arm paths are tried in turn when the arms crowd.
    const int base_radius = std::max(1, radius + margin);
    for (int roof_radius = base_radius; roof_radius <= base_radius + 3; ++roof_radius) {
        for (int length = path_length; length <= path_length + 6; ++length) {
            std::optional<Configuration> upper;
            try {
                upper = capped_roof(roof_radius, length);
            } catch (const Error&) {
                continue;
            }
            // Every layer-reversing symmetry maps the disk onto itself; they differ in where the arms go.
            for (const auto& mirror : all_symmetries()) {
                if (mirror.sign != -1) continue;
                if (auto config = assemble(*upper, mirror))
                    return SandwichLayout{std::move(*config), LayerBand{layer, layer},
                                          {c2d.modules().begin(), c2d.modules().end()}, strut};
            }
        }
    }
    throw Error(ErrorCode::OverlapError, "no roof layout keeps the two sandwich halves apart");
}

Configuration sandwich(const Configuration& c2d) { return sandwich_layout(c2d).config; }

Configuration build_gadget(const GadgetSpec& spec) {
    switch (spec.kind) {
        case GadgetKind::Roof:
            return roof(spec.radius, spec.layer);
        case GadgetKind::Cap:
            return cap(spec.anchor, spec.direction);
        case GadgetKind::CappedRoof:
            if (spec.path_length < 2) throw Error(ErrorCode::InvalidArgument, "path length must be at least 2");
            return capped_roof(spec.radius, spec.path_length).translated(Offset{spec.layer, spec.layer, 0});
        case GadgetKind::Sandwich:
            return sandwich(roof(spec.radius, spec.layer));
        case GadgetKind::Fig5:
            return super_rigid_config();
        case GadgetKind::Fig6a:
            return free_rigid_pair().first;
        case GadgetKind::Fig6b:
            return free_rigid_pair().second;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown gadget kind");
}

}  // namespace rd
