#include "rdpivot/lattice.hpp"

#include <sstream>

#include "rdpivot/error.hpp"

namespace rd {
namespace {

std::string describe(Position p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

void require_lattice(Position p) {
    if (!is_lattice_point(p))
        throw Error(ErrorCode::InvalidPosition, describe(p) + " has odd coordinate sum");
}

constexpr std::array<SymmetryOp, 12> make_symmetries() {
    std::array<SymmetryOp, 12> ops{};
    constexpr std::uint8_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::size_t k = 0;
    for (auto& p : perms)
        for (int s : {1, -1}) ops[k++] = SymmetryOp{{p[0], p[1], p[2]}, s};
    return ops;
}

constexpr auto kSymmetries = make_symmetries();

}  // namespace

std::array<Position, 12> neighbors(Position p) {
    require_lattice(p);
    std::array<Position, 12> out;
    for (std::size_t i = 0; i < 12; ++i) out[i] = p + kNeighborOffsets[i];
    return out;
}

NeighborClass classify_offset(Offset o) {
    if (!is_neighbor_offset(o)) {
        std::ostringstream os;
        os << o << " is not a face-neighbour offset";
        throw Error(ErrorCode::NotANeighbor, os.str());
    }
    if (o.sum() == 0) return NeighborClass::InLayer;
    return o.sum() > 0 ? NeighborClass::Up : NeighborClass::Down;
}

HexCoord to_hex(Position p) {
    require_lattice(p);
    const int layer = layer_of(p);
    return {p.x - layer, -p.z, layer};
}

SymmetryOp SymmetryOp::then(const SymmetryOp& next) const {
    // (next o this)(v)_i = next.sign * this(v)_{next.perm[i]}
    SymmetryOp r;
    for (int i = 0; i < 3; ++i) r.perm[i] = perm[next.perm[i]];
    r.sign = sign * next.sign;
    return r;
}

SymmetryOp SymmetryOp::inverse() const {
    SymmetryOp r;
    for (std::uint8_t i = 0; i < 3; ++i) r.perm[perm[i]] = i;
    r.sign = sign;
    return r;
}

std::span<const SymmetryOp, 12> all_symmetries() { return kSymmetries; }

Position apply_symmetry(const SymmetryOp& op, Position p) {
    require_lattice(p);
    return op(p);
}

std::ostream& operator<<(std::ostream& os, Position p) {
    return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}

std::ostream& operator<<(std::ostream& os, Offset o) {
    return os << '<' << o.x << ',' << o.y << ',' << o.z << '>';
}

}  // namespace rd
