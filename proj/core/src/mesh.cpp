#include "rdpivot/mesh.hpp"

#include <algorithm>
#include <sstream>

namespace rd {
namespace {

struct UnitCell {
    std::array<std::array<double, 3>, 14> vertices{};
    std::array<std::array<int, 4>, 12> faces{};
};

double dot(const std::array<double, 3>& a, Offset d) { return a[0] * d.x + a[1] * d.y + a[2] * d.z; }

UnitCell make_unit_cell() {
    UnitCell u;
    std::size_t k = 0;
    for (int axis = 0; axis < 3; ++axis)
        for (double s : {1.0, -1.0}) {
            std::array<double, 3> v{0, 0, 0};
            v[static_cast<std::size_t>(axis)] = s;
            u.vertices[k++] = v;
        }
    for (double x : {0.5, -0.5})
        for (double y : {0.5, -0.5})
            for (double z : {0.5, -0.5}) u.vertices[k++] = {x, y, z};

    // The face facing neighbour d holds the four vertices v with v.d = 1:
    // two axis vertices and two cube vertices, alternating around the rhombus.
    for (std::size_t f = 0; f < 12; ++f) {
        const Offset d = kNeighborOffsets[f];
        std::vector<int> axis_v, cube_v;
        for (int i = 0; i < 14; ++i)
            if (dot(u.vertices[static_cast<std::size_t>(i)], d) > 0.999) (i < 6 ? axis_v : cube_v).push_back(i);
        std::array<int, 4> quad{axis_v[0], cube_v[0], axis_v[1], cube_v[1]};
        const auto& a = u.vertices[static_cast<std::size_t>(quad[0])];
        const auto& b = u.vertices[static_cast<std::size_t>(quad[1])];
        const auto& c = u.vertices[static_cast<std::size_t>(quad[2])];
        const std::array<double, 3> e1{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        const std::array<double, 3> e2{c[0] - b[0], c[1] - b[1], c[2] - b[2]};
        const std::array<double, 3> n{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                                      e1[0] * e2[1] - e1[1] * e2[0]};
        if (dot(n, d) < 0) std::swap(quad[1], quad[3]);
        u.faces[f] = quad;
    }
    return u;
}

const UnitCell& unit_cell() {
    static const UnitCell u = make_unit_cell();
    return u;
}

}  // namespace

Mesh build_mesh(const Configuration& c) {
    const auto& u = unit_cell();
    Mesh m;
    for (auto p : c.modules()) {
        const int base = static_cast<int>(m.vertices.size());
        for (const auto& v : u.vertices) m.vertices.push_back({p.x + v[0], p.y + v[1], p.z + v[2]});
        for (const auto& f : u.faces) m.faces.push_back({base + f[0], base + f[1], base + f[2], base + f[3]});
    }
    return m;
}

std::string export_mesh(const Configuration& c, MeshFormat format) {
    const Mesh m = build_mesh(c);
    std::ostringstream os;
    if (format == MeshFormat::Off) {
        os << "OFF\n" << m.vertices.size() << ' ' << m.faces.size() << " 0\n";
        for (const auto& v : m.vertices) os << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
        for (const auto& f : m.faces) os << "4 " << f[0] << ' ' << f[1] << ' ' << f[2] << ' ' << f[3] << '\n';
    } else {
        os << "# rhombic dodecahedra, " << c.size() << " modules\n";
        for (const auto& v : m.vertices) os << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
        for (const auto& f : m.faces)
            os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
    }
    return os.str();
}

}  // namespace rd
