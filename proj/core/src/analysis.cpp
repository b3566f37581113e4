#include "rdpivot/analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "moves_internal.hpp"
#include "rdpivot/error.hpp"

namespace rd {

std::string_view to_string(MobilityVerdict v) noexcept {
    switch (v) {
        case MobilityVerdict::Mobile: return "mobile";
        case MobilityVerdict::Blocked: return "blocked";
        case MobilityVerdict::Disconnecting: return "disconnecting";
    }
    return "unknown";
}

std::string_view to_string(Elimination e) noexcept {
    switch (e) {
        case Elimination::Sandwich: return "sandwich";
        case Elimination::Covered: return "covered";
        case Elimination::Enabled: return "enabled";
    }
    return "unknown";
}

std::size_t MobilityReport::count(MobilityVerdict v) const {
    return static_cast<std::size_t>(
        std::count_if(modules.begin(), modules.end(), [&](const auto& m) { return m.verdict == v; }));
}

const ModuleMobility& MobilityReport::at(Position p) const {
    for (const auto& m : modules)
        if (m.module == p) return m;
    throw Error(ErrorCode::PositionNotInConfiguration, "module not in report");
}

MobilityReport mobility(const Configuration& c, const MoveCatalog& catalog, MoveModel model, MoveOptions options) {
    if (!is_connected(c)) throw Error(ErrorCode::Disconnected, "mobility needs a connected configuration");
    MobilityReport report;
    const OccupancyGrid grid(c.modules(), 1);
    const auto templates = catalog.full(model);
    for (std::size_t i = 0; i < c.size(); ++i) {
        ModuleMobility mm;
        mm.module = c.modules()[i];
        for (const auto& t : templates)
            if (detail::fits(grid, mm.module, t)) ++mm.fitting_templates;
        if (mm.fitting_templates > 0 && c.size() > 1)
            detail::append_moves(c, grid, nullptr, i, templates, false, options, mm.moves);
        mm.verdict = !mm.moves.empty()         ? MobilityVerdict::Mobile
                     : mm.fitting_templates > 0 ? MobilityVerdict::Disconnecting
                                                : MobilityVerdict::Blocked;
        report.modules.push_back(std::move(mm));
    }
    return report;
}

bool is_rigid(const Configuration& c, const MoveCatalog& catalog, MoveModel model, MoveOptions options) {
    return legal_moves(c, catalog, model, options).empty();
}

std::vector<const MoveTemplate*> enabling_templates(const Configuration& g, Position m, const MoveCatalog& catalog,
                                                    MoveModel model) {
    if (!g.contains(m)) throw Error(ErrorCode::PositionNotInConfiguration, "module not in configuration");
    std::vector<const MoveTemplate*> out;
    const OccupancyGrid grid(g.modules(), 1);
    for (const auto& t : catalog.full(model)) {
        const bool free = std::none_of(t.empty.begin(), t.empty.end(),
                                       [&](Offset e) { return grid.occupied(m + e); });
        if (free) out.push_back(&t);
    }
    return out;
}

Configuration witness_superconfiguration(const Configuration& g, Position m, const MoveTemplate& t,
                                         int box_padding) {
    if (!g.contains(m)) throw Error(ErrorCode::PositionNotInConfiguration, "module not in configuration");
    std::unordered_set<Position, PositionHash> forbidden{m};
    for (auto e : t.empty) {
        if (g.contains(m + e)) throw Error(ErrorCode::NoWitnessFound, "template is not enabling for this module");
        forbidden.insert(m + e);
    }
    std::unordered_set<Position, PositionHash> cells(g.modules().begin(), g.modules().end());
    for (auto b : t.base) cells.insert(m + b);

    Position lo = m, hi = m;
    auto grow = [&](Position p) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    };
    for (auto p : cells) grow(p);
    for (auto p : forbidden) grow(p);
    auto in_box = [&](Position p) {
        return p.x >= lo.x - box_padding && p.x <= hi.x + box_padding && p.y >= lo.y - box_padding &&
               p.y <= hi.y + box_padding && p.z >= lo.z - box_padding && p.z <= hi.z + box_padding;
    };

    // Grow the component of the first non-mover cell until it absorbs all others.
    while (true) {
        std::vector<Position> rest;
        for (auto p : cells)
            if (p != m) rest.push_back(p);
        std::sort(rest.begin(), rest.end());
        std::unordered_set<Position, PositionHash> comp{rest.front()};
        std::deque<Position> queue{rest.front()};
        while (!queue.empty()) {
            auto p = queue.front();
            queue.pop_front();
            for (auto d : kNeighborOffsets) {
                auto q = p + d;
                if (q != m && cells.count(q) && comp.insert(q).second) queue.push_back(q);
            }
        }
        if (comp.size() == rest.size()) break;

        // Shortest free-cell path from the component to any other occupied cell.
        std::unordered_map<Position, Position, PositionHash> parent;
        std::deque<Position> bfs;
        for (auto p : rest)
            if (comp.count(p)) bfs.push_back(p);
        std::sort(bfs.begin(), bfs.end());
        std::optional<Position> hit, via;
        while (!bfs.empty() && !hit) {
            auto p = bfs.front();
            bfs.pop_front();
            for (auto d : kNeighborOffsets) {
                auto q = p + d;
                if (q == m || comp.count(q)) continue;
                if (cells.count(q)) {
                    hit = q;
                    via = p;
                    break;
                }
                if (forbidden.count(q) || !in_box(q) || parent.count(q)) continue;
                parent.emplace(q, p);
                bfs.push_back(q);
            }
        }
        if (!hit) throw Error(ErrorCode::NoWitnessFound, "connector search exhausted the bounding box");
        for (Position p = *via; !comp.count(p); p = parent.at(p)) cells.insert(p);
    }

    Configuration c(std::vector<Position>(cells.begin(), cells.end()));
    const LegalMove mv{m, &t};
    if (!is_connected(c) || !is_legal(c, mv))
        throw Error(ErrorCode::NoWitnessFound, "constructed superconfiguration does not enable the move");
    return c;
}

SuperRigidityVerdict is_super_rigid(const Configuration& g, const MoveCatalog& catalog, MoveModel model,
                                    SuperRigidityOptions options) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "super-rigidity needs a connected configuration");
    SuperRigidityVerdict verdict{true, {}};
    const bool lemma = catalog.sandwich_lemma(model);
    for (auto m : g.modules()) {
        ModuleSuperRigidity r;
        r.module = m;
        if (lemma) {
            for (std::size_t i = 0; i < 12 && !r.sandwich_pair; ++i) {
                const Offset d = kNeighborOffsets[i];
                if (d < -d && g.contains(m + d) && g.contains(m - d)) r.sandwich_pair = std::pair{d, -d};
            }
        }
        if (r.sandwich_pair) {
            r.reason = Elimination::Sandwich;
        } else {
            r.enabling = enabling_templates(g, m, catalog, model);
            r.reason = r.enabling.empty() ? Elimination::Covered : Elimination::Enabled;
        }
        if (r.reason == Elimination::Enabled) {
            verdict.super_rigid = false;
            if (options.witnesses) {
                for (const auto* t : r.enabling) {
                    try {
                        r.witness = Witness{m, t, witness_superconfiguration(g, m, *t, options.box_padding)};
                        break;
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::NoWitnessFound) throw;
                    }
                }
                if (!r.witness) {
                    std::ostringstream os;
                    os << "no witness superconfiguration for enabled module " << m;
                    throw Error(ErrorCode::NoWitnessFound, os.str());
                }
            }
        }
        verdict.modules.push_back(std::move(r));
    }
    return verdict;
}

bool sandwich_lemma_holds(std::span<const MoveTemplate> templates) {
    for (const auto& t : templates)
        for (auto d : kNeighborOffsets)
            if (!std::binary_search(t.empty.begin(), t.empty.end(), d) &&
                !std::binary_search(t.empty.begin(), t.empty.end(), -d))
                return false;
    return true;
}

bool verify_sandwich_lemma(const MoveCatalog& catalog, MoveModel model) {
    return sandwich_lemma_holds(catalog.full(model));
}

std::vector<LegalMove> band_escapes(const Configuration& c, LayerBand band, const MoveCatalog& catalog,
                                    MoveModel model, MoveOptions options) {
    std::vector<LegalMove> out;
    for (const auto& mv : legal_moves(c, catalog, model, options))
        if (band.contains(layer_of(mv.module)) && !band.contains(layer_of(mv.destination()))) out.push_back(mv);
    return out;
}

bool layer_confinement(const Configuration& c, LayerBand band, const MoveCatalog& catalog, MoveModel model,
                       MoveOptions options) {
    return band_escapes(c, band, catalog, model, options).empty();
}

}  // namespace rd
