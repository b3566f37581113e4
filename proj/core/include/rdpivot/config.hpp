#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdpivot/lattice.hpp"

namespace rd {

// A nonempty set of distinct lattice positions, stored sorted.
class Configuration {
public:
    // Validates parity, distinctness and nonemptiness. Input order is irrelevant.
    explicit Configuration(std::vector<Position> modules);

    std::span<const Position> modules() const { return modules_; }
    std::size_t size() const { return modules_.size(); }
    bool contains(Position p) const;
    // Index of p in modules(), if present.
    std::optional<std::size_t> index_of(Position p) const;

    Configuration translated(Offset v) const;
    Configuration transformed(const SymmetryOp& op) const;
    // The configuration with module `from` relocated to `to`; no legality check.
    Configuration relocated(Position from, Position to) const;
    Configuration with(std::span<const Position> extra) const;
    Configuration without(Position p) const;

    Position min_corner() const;
    Position max_corner() const;

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration& o) const { return modules_ <=> o.modules_; }

private:
    struct Trusted {};
    Configuration(std::vector<Position> sorted, Trusted) : modules_(std::move(sorted)) {}
    std::vector<Position> modules_;
};

// Dense occupancy bitmap over a padded bounding box; O(1) membership for the
// hot loops of move generation. Lookups outside the box report empty.
class OccupancyGrid {
public:
    OccupancyGrid(std::span<const Position> cells, int padding);
    bool occupied(Position p) const {
        const int i = p.x - lo_.x, j = p.y - lo_.y, k = p.z - lo_.z;
        if (i < 0 || j < 0 || k < 0 || i >= nx_ || j >= ny_ || k >= nz_) return false;
        return bits_[(static_cast<std::size_t>(i) * ny_ + j) * nz_ + k] != 0;
    }
    // Index of the module at p, or -1.
    int index(Position p) const {
        const int i = p.x - lo_.x, j = p.y - lo_.y, k = p.z - lo_.z;
        if (i < 0 || j < 0 || k < 0 || i >= nx_ || j >= ny_ || k >= nz_) return -1;
        return bits_[(static_cast<std::size_t>(i) * ny_ + j) * nz_ + k] - 1;
    }

private:
    Position lo_;
    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<std::int32_t> bits_;  // module index + 1, 0 when empty
};

bool is_connected(const Configuration& c);
bool is_connected(std::span<const Position> cells);  // throws EmptyConfiguration on empty input
bool is_connected_without(const Configuration& c, Position p);

// Cut vertices of the module adjacency graph (iterative Tarjan), flagged per
// index of c.modules(). Agrees with is_connected_without for every module.
std::vector<bool> articulation_points(const Configuration& c);

// Translation putting the lexicographically smallest module at the origin.
Configuration canonicalize(const Configuration& c);
// Smallest canonical form over the 12 point symmetries.
Configuration canonicalize_up_to_symmetry(const Configuration& c);

enum class CoordSystem { Xyz, Hex };

// Parses {"coords": "xyz"|"hex", "modules": [[a,b,c], ...]}. Extra keys are ignored.
// With strict set, disconnected input is rejected.
Configuration parse_configuration(std::string_view text, bool strict = false);
std::string serialize_configuration(const Configuration& c, CoordSystem coords = CoordSystem::Xyz,
                                    bool pretty = false);

Configuration load_configuration(const std::string& path, bool strict = false);

}  // namespace rd
