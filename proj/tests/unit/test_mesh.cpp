#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "rdpivot/rdpivot.hpp"

using namespace rd;

namespace {
using Vec = std::array<double, 3>;

Vec face_centre(const Mesh& m, const std::array<int, 4>& f) {
    Vec c{};
    for (int v : f)
        for (int k = 0; k < 3; ++k) c[k] += m.vertices[v][k] / 4;
    return c;
}

Vec outward(const Mesh& m, const std::array<int, 4>& f) {
    const auto& a = m.vertices[f[0]];
    const auto& b = m.vertices[f[1]];
    const auto& c = m.vertices[f[2]];
    const Vec u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
}  // namespace

TEST_CASE("a single module is a rhombic dodecahedron") {
    const auto m = build_mesh(Configuration({{0, 0, 0}}));
    REQUIRE(m.vertices.size() == 14);
    REQUIRE(m.faces.size() == 12);
    std::map<std::array<int, 3>, int> centres;
    for (const auto& f : m.faces) {
        const auto c = face_centre(m, f);
        // Each face sits halfway to a neighbour.
        const std::array<int, 3> twice{static_cast<int>(std::lround(2 * c[0])), static_cast<int>(std::lround(2 * c[1])),
                                       static_cast<int>(std::lround(2 * c[2]))};
        for (int k = 0; k < 3; ++k) CHECK(2 * c[k] == doctest::Approx(twice[k]));
        ++centres[twice];
        const auto n = outward(m, f);
        CHECK(n[0] * c[0] + n[1] * c[1] + n[2] * c[2] > 0);
    }
    CHECK(centres.size() == 12);
    for (auto d : kNeighborOffsets) CHECK(centres.count({d.x, d.y, d.z}) == 1);
}

TEST_CASE("adjacent modules share exactly one face") {
    const auto m = build_mesh(Configuration({{0, 0, 0}, {1, 1, 0}}));
    REQUIRE(m.faces.size() == 24);
    std::map<std::array<long, 3>, int> seen;
    for (const auto& f : m.faces) {
        const auto c = face_centre(m, f);
        ++seen[{std::lround(4 * c[0]), std::lround(4 * c[1]), std::lround(4 * c[2])}];
    }
    int shared = 0;
    for (const auto& [k, n] : seen) shared += n == 2;
    CHECK(shared == 1);
}

TEST_CASE("OFF and OBJ text carry the right counts") {
    const Configuration c({{0, 0, 0}, {1, 0, 1}, {2, 0, 2}});
    std::istringstream off(export_mesh(c, MeshFormat::Off));
    std::string magic;
    int v = 0, f = 0, e = -1;
    off >> magic >> v >> f >> e;
    CHECK(magic == "OFF");
    CHECK(v == 42);
    CHECK(f == 36);
    const auto obj = export_mesh(c, MeshFormat::Obj);
    int vs = 0, fs = 0;
    std::istringstream in(obj);
    for (std::string line; std::getline(in, line);) {
        vs += line.rfind("v ", 0) == 0;
        fs += line.rfind("f ", 0) == 0;
    }
    CHECK(vs == 42);
    CHECK(fs == 36);
}
