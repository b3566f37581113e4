#include "rdpivot/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "embedded_data.hpp"
#include "moves_internal.hpp"
#include "rdpivot/error.hpp"

namespace rd {

std::string_view to_string(MoveModel m) noexcept {
    return m == MoveModel::Restricted ? "restricted" : "monkey";
}

MoveModel parse_move_model(std::string_view s) {
    if (s == "restricted") return MoveModel::Restricted;
    if (s == "monkey") return MoveModel::Monkey;
    throw Error(ErrorCode::InvalidArgument, "unknown move model '" + std::string(s) + "'");
}

int MoveTemplate::min_layer() const {
    int lo = std::min(0, layer_of(target));
    for (auto o : base) lo = std::min(lo, layer_of(o));
    for (auto o : empty) lo = std::min(lo, layer_of(o));
    return lo;
}

int MoveTemplate::max_layer() const {
    int hi = std::max(0, layer_of(target));
    for (auto o : base) hi = std::max(hi, layer_of(o));
    for (auto o : empty) hi = std::max(hi, layer_of(o));
    return hi;
}

void validate_template(const MoveTemplate& t) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::MalformedInput, "template '" + t.move_class + "': " + why);
    };
    const Offset zero{};
    if (t.base.empty()) fail("no base cells");
    for (const auto* cells : {&t.base, &t.empty}) {
        for (auto o : *cells) {
            if (!is_lattice_offset(o)) fail("offset off the lattice");
            if (o == zero) fail("source cell listed as base or empty");
        }
        if (!std::is_sorted(cells->begin(), cells->end()) ||
            std::adjacent_find(cells->begin(), cells->end()) != cells->end())
            fail("offsets must be distinct");
    }
    if (!std::binary_search(t.empty.begin(), t.empty.end(), t.target)) fail("target not among empty cells");
    for (auto b : t.base)
        if (std::binary_search(t.empty.begin(), t.empty.end(), b)) fail("base and empty overlap");
    const bool pivot = std::any_of(t.base.begin(), t.base.end(),
                                   [&](Offset b) { return is_neighbor_offset(t.target - b); });
    if (!pivot) fail("target is not adjacent to any base cell");
}

namespace {

void sort_cells(std::vector<Offset>& v) { std::sort(v.begin(), v.end()); }

bool lemma_holds(std::span<const MoveTemplate> templates) {
    for (const auto& t : templates)
        for (std::size_t i = 0; i < 12; ++i) {
            const Offset d = kNeighborOffsets[i];
            const bool blocked = std::binary_search(t.empty.begin(), t.empty.end(), d) ||
                                 std::binary_search(t.empty.begin(), t.empty.end(), -d);
            if (!blocked) return false;
        }
    return true;
}

Offset parse_offset(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::MalformedInput, "offset must be [x,y,z]");
    for (const auto& v : j)
        if (!v.is_number_integer()) throw Error(ErrorCode::MalformedInput, "offset must be integers");
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

MoveTemplate transform(const MoveTemplate& t, const SymmetryOp& op) {
    MoveTemplate r{t.move_class, t.model, {}, {}, op(t.target)};
    for (auto o : t.base) r.base.push_back(op(o));
    for (auto o : t.empty) r.empty.push_back(op(o));
    sort_cells(r.base);
    sort_cells(r.empty);
    return r;
}

MoveTemplate reversed(const MoveTemplate& t) {
    MoveTemplate r{t.move_class, t.model, {}, {}, -t.target};
    for (auto o : t.base) r.base.push_back(o - t.target);
    for (auto o : t.empty) r.empty.push_back(o == t.target ? -t.target : o - t.target);
    sort_cells(r.base);
    sort_cells(r.empty);
    return r;
}

MoveCatalog::MoveCatalog(std::vector<MoveTemplate> canonical) {
    for (auto& t : canonical) {
        sort_cells(t.base);
        sort_cells(t.empty);
        validate_template(t);
    }
    std::stable_partition(canonical.begin(), canonical.end(),
                          [](const MoveTemplate& t) { return t.model == MoveModel::Restricted; });
    canonical_ = std::move(canonical);
    canonical_restricted_ = static_cast<std::size_t>(
        std::count_if(canonical_.begin(), canonical_.end(),
                      [](const MoveTemplate& t) { return t.model == MoveModel::Restricted; }));

    // Duplicates are keyed by geometry only; a class label does not make two
    // identical requirement sets distinct moves.
    using Key = std::tuple<std::vector<Offset>, std::vector<Offset>, Offset>;
    std::set<Key> seen;
    for (const auto& t : canonical_) {
        for (const auto& op : all_symmetries()) {
            auto img = transform(t, op);
            if (seen.insert({img.base, img.empty, img.target}).second) full_.push_back(std::move(img));
        }
        if (t.model == MoveModel::Restricted) full_restricted_ = full_.size();
    }
    if (canonical_restricted_ == 0) full_restricted_ = 0;
    sandwich_[0] = lemma_holds(full(MoveModel::Restricted));
    sandwich_[1] = lemma_holds(full(MoveModel::Monkey));
}

MoveCatalog MoveCatalog::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedInput, e.what());
    }
    if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "catalog must be a JSON list");
    std::vector<MoveTemplate> out;
    for (const auto& e : doc) {
        if (!e.is_object() || !e.contains("class") || !e.contains("model") || !e.contains("base") ||
            !e.contains("empty") || !e.contains("target"))
            throw Error(ErrorCode::MalformedInput, "template needs class, model, base, empty, target");
        MoveTemplate t;
        t.move_class = e["class"].get<std::string>();
        try {
            t.model = parse_move_model(e["model"].get<std::string>());
        } catch (const Error&) {
            throw Error(ErrorCode::MalformedInput, "model must be \"restricted\" or \"monkey\"");
        }
        for (const auto& o : e["base"]) t.base.push_back(parse_offset(o));
        for (const auto& o : e["empty"]) t.empty.push_back(parse_offset(o));
        t.target = parse_offset(e["target"]);
        out.push_back(std::move(t));
    }
    return MoveCatalog(std::move(out));
}

MoveCatalog MoveCatalog::from_file(const std::string& path) { return from_json(read_file(path)); }

const MoveCatalog& MoveCatalog::builtin() {
    static const MoveCatalog catalog = from_json(embedded::k_catalog);
    return catalog;
}

MoveCatalog MoveCatalog::load_default() {
    if (const char* env = std::getenv("RD_PIVOT_CATALOG"); env && *env) return from_file(env);
    return builtin();
}

std::span<const MoveTemplate> MoveCatalog::canonical(MoveModel m) const {
    std::span<const MoveTemplate> all(canonical_);
    return m == MoveModel::Restricted ? all.first(canonical_restricted_) : all;
}

std::span<const MoveTemplate> MoveCatalog::full(MoveModel m) const {
    std::span<const MoveTemplate> all(full_);
    return m == MoveModel::Restricted ? all.first(full_restricted_) : all;
}

std::optional<std::size_t> MoveCatalog::find(const MoveTemplate& t) const {
    for (std::size_t i = 0; i < full_.size(); ++i)
        if (full_[i].base == t.base && full_[i].empty == t.empty && full_[i].target == t.target) return i;
    return std::nullopt;
}

bool template_fits(const Configuration& c, Position module, const MoveTemplate& t) {
    for (auto b : t.base)
        if (!c.contains(module + b)) return false;
    for (auto e : t.empty)
        if (c.contains(module + e)) return false;
    return true;
}

namespace detail {

bool fits(const OccupancyGrid& grid, Position p, const MoveTemplate& t) {
    for (auto b : t.base)
        if (!grid.occupied(p + b)) return false;
    for (auto e : t.empty)
        if (grid.occupied(p + e)) return false;
    return true;
}

bool sandwiched(const OccupancyGrid& grid, Position p) {
    // Offsets i and i+3 are opposite in the in-layer ring; Up k and Down k are opposite.
    for (std::size_t i = 0; i < 3; ++i)
        if (grid.occupied(p + kNeighborOffsets[i]) && grid.occupied(p + kNeighborOffsets[i + 3])) return true;
    for (std::size_t i = 6; i < 9; ++i)
        if (grid.occupied(p + kNeighborOffsets[i]) && grid.occupied(p + kNeighborOffsets[i + 3])) return true;
    return false;
}

void append_moves(const Configuration& c, const OccupancyGrid& grid, const std::vector<bool>* cut,
                  std::size_t index, std::span<const MoveTemplate> templates, bool use_lemma,
                  MoveOptions options, std::vector<LegalMove>& out) {
    const Position p = c.modules()[index];
    if (options.rule == ConnectivityRule::Backbone && cut && (*cut)[index]) return;
    if (use_lemma && sandwiched(grid, p)) return;
    for (const auto& t : templates) {
        if (!fits(grid, p, t)) continue;
        if (options.rule == ConnectivityRule::Backbone) {
            if (!cut && !is_connected_without(c, p)) continue;
        } else if (!is_connected(c.relocated(p, p + t.target))) {
            continue;
        }
        out.push_back({p, &t});
    }
}

std::vector<LegalMove> moves_unchecked(const Configuration& c, const MoveCatalog& catalog, MoveModel model,
                                       MoveOptions options) {
    std::vector<LegalMove> out;
    if (c.size() < 2) return out;
    const OccupancyGrid grid(c.modules(), 1);
    std::vector<bool> cut;
    if (options.rule == ConnectivityRule::Backbone) cut = articulation_points(c);
    const auto templates = catalog.full(model);
    const bool lemma = catalog.sandwich_lemma(model);
    for (std::size_t i = 0; i < c.size(); ++i)
        append_moves(c, grid, options.rule == ConnectivityRule::Backbone ? &cut : nullptr, i, templates, lemma,
                     options, out);
    return out;
}

}  // namespace detail

std::vector<LegalMove> legal_moves(const Configuration& c, const MoveCatalog& catalog, MoveModel model,
                                   MoveOptions options) {
    if (!is_connected(c)) throw Error(ErrorCode::Disconnected, "legal_moves needs a connected configuration");
    return detail::moves_unchecked(c, catalog, model, options);
}

std::vector<LegalMove> legal_moves_of(const Configuration& c, Position module, const MoveCatalog& catalog,
                                      MoveModel model, MoveOptions options) {
    if (!is_connected(c)) throw Error(ErrorCode::Disconnected, "legal_moves needs a connected configuration");
    const auto idx = c.index_of(module);
    if (!idx) throw Error(ErrorCode::PositionNotInConfiguration, "module not in configuration");
    std::vector<LegalMove> out;
    if (c.size() < 2) return out;
    const OccupancyGrid grid(c.modules(), 1);
    detail::append_moves(c, grid, nullptr, *idx, catalog.full(model), catalog.sandwich_lemma(model), options,
                         out);
    return out;
}

bool is_legal(const Configuration& c, const LegalMove& m, MoveOptions options) {
    if (!m.move || !c.contains(m.module) || c.size() < 2) return false;
    if (!template_fits(c, m.module, *m.move)) return false;
    if (options.rule == ConnectivityRule::Backbone) return is_connected_without(c, m.module);
    return is_connected(c.relocated(m.module, m.destination()));
}

Configuration apply_move(const Configuration& c, const LegalMove& m, MoveOptions options) {
    if (!is_legal(c, m, options)) {
        std::ostringstream os;
        os << "move of " << m.module << (m.move ? " (" + m.move->move_class + ")" : std::string()) << " is not legal";
        throw Error(ErrorCode::IllegalMove, os.str());
    }
    return c.relocated(m.module, m.destination());
}

std::optional<LegalMove> reverse_move(const MoveCatalog& catalog, const LegalMove& m) {
    const auto idx = catalog.find(reversed(*m.move));
    if (!idx) return std::nullopt;
    return LegalMove{m.destination(), &catalog.full(MoveModel::Monkey)[*idx]};
}

std::vector<HexTemplate> parse_hex_catalog(std::string_view text) {
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) throw Error(ErrorCode::MalformedInput, "hex catalog must be a list");
    auto cell = [](const nlohmann::json& j) {
        if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::MalformedInput, "hex cell must be [q,r]");
        return std::pair<int, int>{j[0].get<int>(), j[1].get<int>()};
    };
    std::vector<HexTemplate> out;
    for (const auto& e : doc) {
        HexTemplate t;
        t.move_class = e.at("class").get<std::string>();
        t.model = parse_move_model(e.at("model").get<std::string>());
        for (const auto& c : e.at("base")) t.base.push_back(cell(c));
        for (const auto& c : e.at("empty")) t.empty.push_back(cell(c));
        t.target = cell(e.at("target"));
        out.push_back(std::move(t));
    }
    return out;
}

const std::vector<HexTemplate>& builtin_hex_catalog() {
    static const auto cat = parse_hex_catalog(embedded::k_hex_catalog);
    return cat;
}

bool EquivalenceReport::all_match() const {
    return !classes.empty() && std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.match; });
}

namespace {

using Hex = std::pair<int, int>;
using HexKey = std::tuple<std::vector<Hex>, std::vector<Hex>, Hex>;

// Dihedral group of the hexagon in the axial frame used by HexCoord.
// Rotation by 60 degrees: (q, r) -> (q - r, q); reflection: (q, r) -> (r, q).
Hex hex_op(Hex v, int rot, bool flip) {
    if (flip) v = {v.second, v.first};
    for (int k = 0; k < rot; ++k) v = {v.first - v.second, v.first};
    return v;
}

HexKey hex_key(std::vector<Hex> base, std::vector<Hex> empty, Hex target) {
    std::sort(base.begin(), base.end());
    std::sort(empty.begin(), empty.end());
    return {std::move(base), std::move(empty), target};
}

Hex axial(Offset o) {
    const auto h = to_hex(Position{o.x, o.y, o.z});
    return {h.q, h.r};
}

}  // namespace

EquivalenceReport check_2d_equivalence(const MoveCatalog& catalog, const std::vector<HexTemplate>& hex) {
    std::map<std::string, std::set<HexKey>> hex_sets, rd_sets;
    std::map<std::string, std::size_t> rd_counts;
    for (const auto& t : hex) {
        for (int rot = 0; rot < 6; ++rot)
            for (bool flip : {false, true}) {
                std::vector<Hex> b, e;
                for (auto c : t.base) b.push_back(hex_op(c, rot, flip));
                for (auto c : t.empty) e.push_back(hex_op(c, rot, flip));
                hex_sets[t.move_class].insert(hex_key(b, e, hex_op(t.target, rot, flip)));
            }
    }
    for (const auto& t : catalog.full(MoveModel::Monkey)) {
        const bool flat = layer_of(t.target) == 0 &&
                          std::all_of(t.base.begin(), t.base.end(), [](Offset o) { return layer_of(o) == 0; });
        if (!flat || !hex_sets.count(t.move_class)) continue;
        std::vector<Hex> b, e;
        for (auto o : t.base) b.push_back(axial(o));
        for (auto o : t.empty)
            if (layer_of(o) == 0) e.push_back(axial(o));
        rd_sets[t.move_class].insert(hex_key(b, e, axial(t.target)));
        ++rd_counts[t.move_class];
    }
    EquivalenceReport report;
    for (const auto& [cls, hs] : hex_sets) {
        const auto& rs = rd_sets[cls];
        std::vector<HexKey> diff;
        std::set_symmetric_difference(hs.begin(), hs.end(), rs.begin(), rs.end(), std::back_inserter(diff));
        report.classes.push_back({cls, rd_counts[cls], hs.size(), diff.size(), diff.empty() && !rs.empty()});
    }
    return report;
}

bool CatalogReport::ok() const {
    return symmetry_failures == 0 && reversal_failures == 0 && sandwich_lemma[0] && sandwich_lemma[1] &&
           equivalence.all_match();
}

CatalogReport check_catalog(const MoveCatalog& catalog, const std::vector<HexTemplate>& hex) {
    CatalogReport r;
    r.templates[0] = catalog.full(MoveModel::Restricted).size();
    r.templates[1] = catalog.full(MoveModel::Monkey).size();
    for (const auto& t : catalog.full(MoveModel::Monkey)) {
        for (const auto& op : all_symmetries())
            if (!catalog.find(transform(t, op))) ++r.symmetry_failures;
        const auto back = catalog.find(reversed(t));
        const bool same_tier = back && (t.model == MoveModel::Monkey || *back < r.templates[0]);
        if (!same_tier) ++r.reversal_failures;
    }
    r.sandwich_lemma[0] = catalog.sandwich_lemma(MoveModel::Restricted);
    r.sandwich_lemma[1] = catalog.sandwich_lemma(MoveModel::Monkey);
    r.equivalence = check_2d_equivalence(catalog, hex);
    return r;
}

}  // namespace rd

