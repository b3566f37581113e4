#pragma once

#include <array>
#include <string>
#include <vector>

#include "rdpivot/config.hpp"

namespace rd {

enum class MeshFormat { Off, Obj };

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 4>> faces;  // zero-based, counter-clockwise seen from outside
};

// One rhombic dodecahedron per module: 14 vertices, 12 rhombic faces.
Mesh build_mesh(const Configuration& c);
std::string export_mesh(const Configuration& c, MeshFormat format);

}  // namespace rd
