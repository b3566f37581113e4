#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdpivot/config.hpp"
#include "rdpivot/lattice.hpp"

namespace rd {

// Configuration plus named reference cells (modules or empty positions).
struct LabeledConfiguration {
    Configuration config;
    std::map<std::string, Position> labels;
};

LabeledConfiguration parse_labeled_configuration(std::string_view text);

// Hexagonal disk of the given radius in one layer, centred on layer*(1,1,0).
Configuration roof(int radius, int layer);

// Boundary ring of roof(radius, layer) in cyclic order, starting at a corner.
std::vector<Position> roof_boundary(int radius, int layer);

// The cap pattern oriented so it extends a path that arrives at `anchor`
// travelling along `direction` (an in-layer neighbour offset). The cap rises
// one layer to its terminal, or descends when `flipped`. The returned modules
// exclude the anchor itself.
Configuration cap(Position anchor, Offset direction, bool flipped = false);

struct CapPattern {
    LabeledConfiguration shape;  // labels: "entry" (first cap cell), "terminal"
    Offset direction;            // travel direction of the incoming path
};
const CapPattern& cap_pattern();

// Roof with a capped path leaving every boundary module.
Configuration capped_roof(int radius, int path_length);

struct SandwichLayout {
    Configuration config;
    LayerBand band;                 // layers of the confined gadget
    std::vector<Position> confined; // modules of the input gadget
    std::vector<Position> strut;    // connector modules
};

// Input gadget between two rigid capped roofs two layers above and below.
// The strut is one module straight above and one straight below a central
// gadget module, each touching its roof; the central module is thereby held
// between the two strut modules. Throws InputNotSingleLayer.
// `margin` is how far the roof disks reach beyond the gadget's footprint radius.
SandwichLayout sandwich_layout(const Configuration& c2d, int margin = 2, int path_length = 2);
Configuration sandwich(const Configuration& c2d);

LabeledConfiguration super_rigid_labeled();
Configuration super_rigid_config();
std::pair<Configuration, Configuration> free_rigid_pair();

enum class GadgetKind { Roof, Cap, CappedRoof, Sandwich, Fig5, Fig6a, Fig6b };
std::optional<GadgetKind> parse_gadget_kind(std::string_view s);

struct GadgetSpec {
    GadgetKind kind = GadgetKind::Fig5;
    int radius = 1;
    int path_length = 2;
    int layer = 0;
    Position anchor{};
    Offset direction{1, -1, 0};
};

// Throws InvalidArgument for out-of-range parameters.
Configuration build_gadget(const GadgetSpec& spec);

}  // namespace rd
