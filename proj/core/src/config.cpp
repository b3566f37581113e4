#include "rdpivot/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rdpivot/error.hpp"

namespace rd {
namespace {

std::string describe(Position p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

}  // namespace

Configuration::Configuration(std::vector<Position> modules) : modules_(std::move(modules)) {
    if (modules_.empty()) throw Error(ErrorCode::EmptyConfiguration, "configuration has no modules");
    for (auto p : modules_)
        if (!is_lattice_point(p))
            throw Error(ErrorCode::ParityViolation, describe(p) + " has odd coordinate sum");
    std::sort(modules_.begin(), modules_.end());
    auto dup = std::adjacent_find(modules_.begin(), modules_.end());
    if (dup != modules_.end())
        throw Error(ErrorCode::DuplicateModule, describe(*dup) + " listed twice");
}

bool Configuration::contains(Position p) const {
    return std::binary_search(modules_.begin(), modules_.end(), p);
}

std::optional<std::size_t> Configuration::index_of(Position p) const {
    auto it = std::lower_bound(modules_.begin(), modules_.end(), p);
    if (it == modules_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - modules_.begin());
}

Configuration Configuration::translated(Offset v) const {
    if (!is_lattice_offset(v))
        throw Error(ErrorCode::ParityViolation, "translation vector leaves the lattice");
    std::vector<Position> out(modules_);
    for (auto& p : out) p = p + v;
    return Configuration(std::move(out), Trusted{});
}

Configuration Configuration::transformed(const SymmetryOp& op) const {
    std::vector<Position> out;
    out.reserve(modules_.size());
    for (auto p : modules_) out.push_back(op(p));
    std::sort(out.begin(), out.end());
    return Configuration(std::move(out), Trusted{});
}

Configuration Configuration::relocated(Position from, Position to) const {
    if (!contains(from))
        throw Error(ErrorCode::PositionNotInConfiguration, describe(from));
    std::vector<Position> out;
    out.reserve(modules_.size());
    for (auto p : modules_)
        if (p != from) out.push_back(p);
    out.push_back(to);
    return Configuration(std::move(out));
}

Configuration Configuration::with(std::span<const Position> extra) const {
    std::vector<Position> out(modules_);
    out.insert(out.end(), extra.begin(), extra.end());
    return Configuration(std::move(out));
}

Configuration Configuration::without(Position p) const {
    if (!contains(p)) throw Error(ErrorCode::PositionNotInConfiguration, describe(p));
    std::vector<Position> out;
    out.reserve(modules_.size() - 1);
    for (auto q : modules_)
        if (q != p) out.push_back(q);
    return Configuration(std::move(out));
}

Position Configuration::min_corner() const {
    Position lo = modules_.front();
    for (auto p : modules_) lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    return lo;
}

Position Configuration::max_corner() const {
    Position hi = modules_.front();
    for (auto p : modules_) hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    return hi;
}

OccupancyGrid::OccupancyGrid(std::span<const Position> cells, int padding) {
    if (cells.empty()) return;
    Position lo = cells.front(), hi = cells.front();
    for (auto p : cells) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    lo_ = {lo.x - padding, lo.y - padding, lo.z - padding};
    nx_ = hi.x - lo.x + 1 + 2 * padding;
    ny_ = hi.y - lo.y + 1 + 2 * padding;
    nz_ = hi.z - lo.z + 1 + 2 * padding;
    bits_.assign(static_cast<std::size_t>(nx_) * ny_ * nz_, 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto p = cells[i];
        bits_[(static_cast<std::size_t>(p.x - lo_.x) * ny_ + (p.y - lo_.y)) * nz_ + (p.z - lo_.z)] =
            static_cast<std::int32_t>(i + 1);
    }
}

namespace {

// Number of cells reachable from `start` while skipping index `skip`.
std::size_t flood(std::span<const Position> cells, const OccupancyGrid& grid, std::size_t start,
                  std::ptrdiff_t skip) {
    std::vector<char> seen(cells.size(), 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    if (skip >= 0) seen[static_cast<std::size_t>(skip)] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        ++count;
        for (auto d : kNeighborOffsets) {
            const int j = grid.index(cells[i] + d);
            if (j >= 0 && !seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                stack.push_back(static_cast<std::size_t>(j));
            }
        }
    }
    return count;
}

}  // namespace

bool is_connected(std::span<const Position> cells) {
    if (cells.empty()) throw Error(ErrorCode::EmptyConfiguration, "no modules");
    OccupancyGrid grid(cells, 1);
    return flood(cells, grid, 0, -1) == cells.size();
}

bool is_connected(const Configuration& c) { return is_connected(c.modules()); }

bool is_connected_without(const Configuration& c, Position p) {
    const auto idx = c.index_of(p);
    if (!idx) throw Error(ErrorCode::PositionNotInConfiguration, describe(p));
    if (c.size() == 1) return true;
    OccupancyGrid grid(c.modules(), 1);
    const std::size_t start = *idx == 0 ? 1 : 0;
    return flood(c.modules(), grid, start, static_cast<std::ptrdiff_t>(*idx)) == c.size() - 1;
}

std::vector<bool> articulation_points(const Configuration& c) {
    const auto cells = c.modules();
    const std::size_t n = cells.size();
    std::vector<bool> cut(n, false);
    if (n < 3) return cut;
    OccupancyGrid grid(cells, 1);
    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame {
        std::size_t v;
        int parent;
        int next_dir;
        int children;
    };
    int timer = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& f = stack.back();
            if (f.next_dir < 12) {
                const int w = grid.index(cells[f.v] + kNeighborOffsets[static_cast<std::size_t>(f.next_dir++)]);
                if (w < 0 || w == f.parent) continue;
                const auto u = static_cast<std::size_t>(w);
                if (disc[u] < 0) {
                    disc[u] = low[u] = timer++;
                    ++f.children;
                    stack.push_back({u, static_cast<int>(f.v), 0, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                cut[done.v] = done.children > 1;
            } else {
                auto& parent = stack.back();
                low[parent.v] = std::min(low[parent.v], low[done.v]);
                if (parent.parent >= 0 && low[done.v] >= disc[parent.v]) cut[parent.v] = true;
            }
        }
    }
    return cut;
}

Configuration canonicalize(const Configuration& c) {
    const Position first = c.modules().front();
    return c.translated(Position{0, 0, 0} - first);
}

Configuration canonicalize_up_to_symmetry(const Configuration& c) {
    std::optional<Configuration> best;
    for (const auto& op : all_symmetries()) {
        auto cand = canonicalize(c.transformed(op));
        if (!best || cand < *best) best = std::move(cand);
    }
    return *best;
}

Configuration parse_configuration(std::string_view text, bool strict) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedInput, e.what());
    }
    if (!doc.is_object() || !doc.contains("modules") || !doc["modules"].is_array())
        throw Error(ErrorCode::MalformedInput, "expected an object with a \"modules\" array");
    CoordSystem coords = CoordSystem::Xyz;
    if (doc.contains("coords")) {
        const auto& v = doc["coords"];
        if (v == "xyz") coords = CoordSystem::Xyz;
        else if (v == "hex") coords = CoordSystem::Hex;
        else throw Error(ErrorCode::MalformedInput, "coords must be \"xyz\" or \"hex\"");
    }
    std::vector<Position> mods;
    for (const auto& m : doc["modules"]) {
        if (!m.is_array() || m.size() != 3 || !m[0].is_number_integer() || !m[1].is_number_integer() ||
            !m[2].is_number_integer())
            throw Error(ErrorCode::MalformedInput, "each module must be a triple of integers");
        const int a = m[0].get<int>(), b = m[1].get<int>(), c = m[2].get<int>();
        mods.push_back(coords == CoordSystem::Hex ? from_hex({a, b, c}) : Position{a, b, c});
    }
    Configuration conf(std::move(mods));
    if (strict && !is_connected(conf))
        throw Error(ErrorCode::Disconnected, "module adjacency graph is not connected");
    return conf;
}

std::string serialize_configuration(const Configuration& c, CoordSystem coords, bool pretty) {
    nlohmann::json mods = nlohmann::json::array();
    std::vector<std::array<int, 3>> rows;
    for (auto p : c.modules()) {
        if (coords == CoordSystem::Hex) {
            const auto h = to_hex(p);
            rows.push_back({h.q, h.r, h.layer});
        } else {
            rows.push_back({p.x, p.y, p.z});
        }
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& r : rows) mods.push_back(r);
    nlohmann::json doc{{"coords", coords == CoordSystem::Hex ? "hex" : "xyz"}, {"modules", mods}};
    return doc.dump(pretty ? 1 : -1);
}

Configuration load_configuration(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_configuration(ss.str(), strict);
}

}  // namespace rd
