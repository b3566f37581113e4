#pragma once

// Face-centred cubic lattice of rhombic dodecahedral cells.
//
// A cell centre is an integer triple with even coordinate sum. The twelve face
// neighbours differ by a permutation of (+-1, +-1, 0). Layers are the planes of
// constant x + y + z; layer index = (x + y + z) / 2.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>

namespace rd {

struct Offset {
    int x = 0, y = 0, z = 0;

    constexpr auto operator<=>(const Offset&) const = default;
    constexpr Offset operator-() const { return {-x, -y, -z}; }
    constexpr Offset operator+(Offset o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Offset operator-(Offset o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Offset operator*(int k) const { return {x * k, y * k, z * k}; }
    constexpr int sum() const { return x + y + z; }
};

struct Position {
    int x = 0, y = 0, z = 0;

    constexpr auto operator<=>(const Position&) const = default;
    constexpr Position operator+(Offset o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Position operator-(Offset o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Offset operator-(Position p) const { return {x - p.x, y - p.y, z - p.z}; }
    constexpr int sum() const { return x + y + z; }
};

constexpr bool is_lattice_point(Position p) { return (p.sum() & 1) == 0; }
constexpr bool is_lattice_offset(Offset o) { return (o.sum() & 1) == 0; }

// Layer index; requires a lattice point (the sum is even, so this is exact).
constexpr int layer_of(Position p) { return p.sum() / 2; }
constexpr int layer_of(Offset o) { return o.sum() / 2; }

// Closed interval of layer indices.
struct LayerBand {
    int lo = 0, hi = 0;
    bool contains(int layer) const { return lo <= layer && layer <= hi; }
};

enum class NeighborClass : std::uint8_t { InLayer, Up, Down };

// In-layer offsets first (cyclic order around the hexagon), then Up, then Down.
inline constexpr std::array<Offset, 12> kNeighborOffsets{{
    {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {-1, 1, 0}, {-1, 0, 1}, {0, -1, 1},
    {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
    {-1, -1, 0}, {-1, 0, -1}, {0, -1, -1},
}};

constexpr bool is_neighbor_offset(Offset o) {
    for (auto n : kNeighborOffsets)
        if (n == o) return true;
    return false;
}

// Throws Error(InvalidPosition) when p is not a lattice point.
std::array<Position, 12> neighbors(Position p);

// Throws Error(NotANeighbor) for anything that is not one of the 12 offsets.
NeighborClass classify_offset(Offset o);

// Axial coordinates inside a layer. (x,y,z) = layer*(1,1,0) + q*(1,-1,0) + r*(0,1,-1).
struct HexCoord {
    int q = 0, r = 0, layer = 0;
    constexpr auto operator<=>(const HexCoord&) const = default;
};

HexCoord to_hex(Position p);
constexpr Position from_hex(HexCoord h) {
    return {h.layer + h.q, h.layer - h.q + h.r, -h.r};
}

// One of the 12 lattice symmetries that preserve the layer axis (1,1,1):
// a coordinate permutation combined with a global sign. The sign -1 swaps Up
// and Down.
struct SymmetryOp {
    std::array<std::uint8_t, 3> perm{0, 1, 2};
    int sign = 1;

    constexpr auto operator<=>(const SymmetryOp&) const = default;

    constexpr Offset operator()(Offset v) const {
        const int c[3] = {v.x, v.y, v.z};
        return {sign * c[perm[0]], sign * c[perm[1]], sign * c[perm[2]]};
    }
    constexpr Position operator()(Position p) const {
        const int c[3] = {p.x, p.y, p.z};
        return {sign * c[perm[0]], sign * c[perm[1]], sign * c[perm[2]]};
    }
    SymmetryOp then(const SymmetryOp& next) const;  // next after this
    SymmetryOp inverse() const;
};

std::span<const SymmetryOp, 12> all_symmetries();

// Applies op to p; throws Error(InvalidPosition) for off-lattice input.
Position apply_symmetry(const SymmetryOp& op, Position p);

std::ostream& operator<<(std::ostream& os, Position p);
std::ostream& operator<<(std::ostream& os, Offset o);

struct PositionHash {
    std::size_t operator()(Position p) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(p.x);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(p.y);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(p.z);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

}  // namespace rd
