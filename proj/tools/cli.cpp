#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdpivot/rdpivot.hpp"

namespace rd::cli {
namespace {

using nlohmann::json;

struct Common {
    std::string model = "restricted";
    std::string limits;
    std::string coords = "xyz";
    std::string catalog;
    bool pretty = false;
    unsigned threads = 1;

    CoordSystem coord_system() const { return coords == "hex" ? CoordSystem::Hex : CoordSystem::Xyz; }
};

json to_json(Position p, CoordSystem cs) {
    if (cs == CoordSystem::Hex) {
        const auto h = to_hex(p);
        return {h.q, h.r, h.layer};
    }
    return {p.x, p.y, p.z};
}

std::string to_text(Position p, CoordSystem cs) {
    std::ostringstream os;
    if (cs == CoordSystem::Hex) {
        const auto h = to_hex(p);
        os << '(' << h.q << ',' << h.r << ';' << h.layer << ')';
    } else {
        os << p;
    }
    return os.str();
}

std::vector<int> parse_triple(const std::string& text, const char* what) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be three comma-separated integers");
        }
    }
    if (v.size() != 3) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must have three components");
    return v;
}

Position parse_position(const std::string& text, CoordSystem cs) {
    const auto v = parse_triple(text, "position");
    const Position p = cs == CoordSystem::Hex ? from_hex({v[0], v[1], v[2]}) : Position{v[0], v[1], v[2]};
    if (!is_lattice_point(p)) throw Error(ErrorCode::ParityViolation, text + " is not a lattice point");
    return p;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Configuration load(const std::string& path) { return parse_configuration(read_input(path)); }

MoveCatalog load_catalog(const Common& c) {
    return c.catalog.empty() ? MoveCatalog::load_default() : MoveCatalog::from_file(c.catalog);
}

json move_json(const LegalMove& m, CoordSystem cs) {
    return {{"source", to_json(m.module, cs)}, {"target", to_json(m.destination(), cs)}, {"class", m.move->move_class}};
}

json moves_json(const std::vector<LegalMove>& moves, CoordSystem cs) {
    json out = json::array();
    for (const auto& m : moves) out.push_back(move_json(m, cs));
    return out;
}

void print_moves(std::ostream& out, const std::vector<LegalMove>& moves, CoordSystem cs) {
    for (const auto& m : moves)
        out << "  " << to_text(m.module, cs) << " -> " << to_text(m.destination(), cs) << "  " << m.move->move_class
            << '\n';
}

int cmd_validate(const Common& c, const std::string& file, std::ostream& out) {
    const auto config = load(file);
    const bool connected = is_connected(config);
    int lo = layer_of(config.modules().front()), hi = lo;
    for (auto p : config.modules()) {
        lo = std::min(lo, layer_of(p));
        hi = std::max(hi, layer_of(p));
    }
    if (c.pretty) {
        out << (connected ? "valid" : "invalid: disconnected") << ", " << config.size() << " modules, layers " << lo
            << ".." << hi << '\n';
    } else {
        out << json{{"valid", connected}, {"connected", connected}, {"modules", config.size()}, {"layers", {lo, hi}}}
                   .dump()
            << '\n';
    }
    return connected ? 0 : 1;
}

int cmd_moves(const Common& c, const std::string& file, const std::string& module, std::ostream& out) {
    const auto config = load(file);
    const auto catalog = load_catalog(c);
    const auto model = parse_move_model(c.model);
    const auto cs = c.coord_system();
    const auto moves = module.empty() ? legal_moves(config, catalog, model)
                                      : legal_moves_of(config, parse_position(module, cs), catalog, model);
    if (c.pretty) {
        out << moves.size() << " legal move" << (moves.size() == 1 ? "" : "s") << '\n';
        print_moves(out, moves, cs);
    } else {
        out << moves_json(moves, cs).dump() << '\n';
    }
    return 0;
}

int cmd_rigid(const Common& c, const std::string& file, std::ostream& out) {
    const auto config = load(file);
    const auto catalog = load_catalog(c);
    const auto report = mobility(config, catalog, parse_move_model(c.model));
    const auto cs = c.coord_system();
    if (c.pretty) {
        out << (report.rigid() ? "rigid" : "not rigid") << ": " << report.count(MobilityVerdict::Mobile)
            << " mobile, " << report.count(MobilityVerdict::Blocked) << " blocked, "
            << report.count(MobilityVerdict::Disconnecting) << " disconnecting\n";
        for (const auto& m : report.modules)
            out << "  " << to_text(m.module, cs) << "  " << to_string(m.verdict) << '\n';
    } else {
        json mods = json::array();
        for (const auto& m : report.modules)
            mods.push_back({{"module", to_json(m.module, cs)},
                            {"verdict", to_string(m.verdict)},
                            {"moves", moves_json(m.moves, cs)}});
        out << json{{"rigid", report.rigid()},
                    {"mobile", report.count(MobilityVerdict::Mobile)},
                    {"blocked", report.count(MobilityVerdict::Blocked)},
                    {"disconnecting", report.count(MobilityVerdict::Disconnecting)},
                    {"modules", mods}}
                   .dump()
            << '\n';
    }
    return report.rigid() ? 0 : 1;
}

int cmd_super_rigid(const Common& c, const std::string& file, int padding, bool no_witness, std::ostream& out) {
    const auto config = load(file);
    const auto catalog = load_catalog(c);
    SuperRigidityOptions opts;
    opts.box_padding = padding;
    opts.witnesses = !no_witness;
    const auto verdict = is_super_rigid(config, catalog, parse_move_model(c.model), opts);
    const auto cs = c.coord_system();
    if (c.pretty) {
        out << (verdict.super_rigid ? "super rigid" : "not super rigid") << '\n';
        for (const auto& m : verdict.modules) {
            out << "  " << to_text(m.module, cs) << "  " << to_string(m.reason);
            if (m.sandwich_pair)
                out << " between " << to_text(m.module + m.sandwich_pair->first, cs) << " and "
                    << to_text(m.module + m.sandwich_pair->second, cs);
            if (!m.enabling.empty()) out << ", " << m.enabling.size() << " enabling templates";
            if (m.witness)
                out << ", witness " << m.witness->move->move_class << " with "
                    << m.witness->superconfiguration.size() - config.size() << " added modules";
            out << '\n';
        }
    } else {
        json mods = json::array();
        for (const auto& m : verdict.modules) {
            json entry{{"module", to_json(m.module, cs)}, {"reason", to_string(m.reason)}};
            if (m.sandwich_pair)
                entry["sandwich"] = {to_json(m.module + m.sandwich_pair->first, cs),
                                     to_json(m.module + m.sandwich_pair->second, cs)};
            json enabling = json::array();
            for (const auto* t : m.enabling)
                enabling.push_back({{"class", t->move_class}, {"target", to_json(m.module + t->target, cs)}});
            entry["enabling"] = enabling;
            if (m.witness) {
                json added = json::array();
                for (auto p : m.witness->superconfiguration.modules())
                    if (!config.contains(p)) added.push_back(to_json(p, cs));
                entry["witness"] = {{"class", m.witness->move->move_class},
                                    {"target", to_json(m.module + m.witness->move->target, cs)},
                                    {"added", added}};
            }
            mods.push_back(entry);
        }
        out << json{{"super_rigid", verdict.super_rigid}, {"modules", mods}}.dump() << '\n';
    }
    return verdict.super_rigid ? 0 : 1;
}

SearchOptions search_options(const Common& c, bool symmetry) {
    SearchOptions o;
    o.symmetry_reduction = symmetry;
    o.threads = std::max(1u, c.threads);
    return o;
}

int cmd_reach(const Common& c, const std::string& a, const std::string& b, bool symmetry, bool iddfs,
              std::ostream& out) {
    const auto s = load(a), t = load(b);
    const auto catalog = load_catalog(c);
    const auto model = parse_move_model(c.model);
    const auto limits = parse_limits(c.limits);
    const auto opts = search_options(c, symmetry);
    const auto result = iddfs ? reachable_iddfs(s, t, catalog, model, limits, opts)
                              : reachable(s, t, catalog, model, limits, opts);
    const auto cs = c.coord_system();
    if (c.pretty) {
        out << to_string(result.outcome) << " after " << result.states_explored << " states";
        if (result.outcome == SearchOutcome::Reached) out << ", " << result.moves.size() << " moves";
        out << '\n';
        print_moves(out, result.moves, cs);
    } else {
        out << json{{"outcome", to_string(result.outcome)},
                    {"states_explored", result.states_explored},
                    {"trace", moves_json(result.moves, cs)}}
                   .dump()
            << '\n';
    }
    return result.outcome == SearchOutcome::Reached ? 0 : 1;
}

int cmd_explore(const Common& c, const std::string& file, bool symmetry, std::ostream& out) {
    const auto s = load(file);
    const auto catalog = load_catalog(c);
    const auto stats =
        explore(s, catalog, parse_move_model(c.model), parse_limits(c.limits), search_options(c, symmetry));
    if (c.pretty) {
        out << stats.states << " states, " << (stats.complete ? "complete" : "limit hit") << "\n  depth profile:";
        for (auto n : stats.depth_profile) out << ' ' << n;
        out << '\n';
    } else {
        out << json{{"states", stats.states}, {"complete", stats.complete}, {"depth_profile", stats.depth_profile}}
                   .dump()
            << '\n';
    }
    return stats.complete ? 0 : 1;
}

struct GadgetArgs {
    std::string kind;
    int radius = 1;
    int path_length = 2;
    int layer = 0;
    std::string anchor = "0,0,0";
    std::string direction = "1,-1,0";
    std::string input;
    int margin = 2;
    std::string output;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    f << text;
}

int cmd_gadget(const Common& c, const GadgetArgs& g, std::ostream& out) {
    const auto kind = parse_gadget_kind(g.kind);
    if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown gadget kind " + g.kind);
    const auto cs = c.coord_system();
    Configuration config = [&] {
        if (*kind == GadgetKind::Sandwich && !g.input.empty()) return sandwich_layout(load(g.input), g.margin).config;
        GadgetSpec spec;
        spec.kind = *kind;
        spec.radius = g.radius;
        spec.path_length = g.path_length;
        spec.layer = g.layer;
        spec.anchor = parse_position(g.anchor, cs);
        const auto d = parse_triple(g.direction, "direction");
        spec.direction = {d[0], d[1], d[2]};
        return build_gadget(spec);
    }();
    write_output(g.output, serialize_configuration(config, cs, c.pretty) + "\n", out);
    return 0;
}

int cmd_export_mesh(const std::string& file, const std::string& format, const std::string& output,
                    std::ostream& out) {
    const auto config = load(file);
    write_output(output, export_mesh(config, format == "obj" ? MeshFormat::Obj : MeshFormat::Off), out);
    return 0;
}

int cmd_check_catalog(const Common& c, const std::string& hex_file, std::ostream& out) {
    const auto catalog = load_catalog(c);
    const auto hex = hex_file.empty() ? builtin_hex_catalog() : parse_hex_catalog(read_input(hex_file));
    const auto r = check_catalog(catalog, hex);
    if (c.pretty) {
        out << (r.ok() ? "catalog ok" : "catalog FAILED") << '\n'
            << "  templates: " << r.templates[0] << " restricted, " << r.templates[1] << " monkey\n"
            << "  symmetry failures: " << r.symmetry_failures << "\n  reversal failures: " << r.reversal_failures
            << "\n  sandwich lemma: restricted " << (r.sandwich_lemma[0] ? "holds" : "fails") << ", monkey "
            << (r.sandwich_lemma[1] ? "holds" : "fails") << '\n';
        for (const auto& cl : r.equivalence.classes)
            out << "  2d " << cl.move_class << ": " << cl.rd_templates << " rd vs " << cl.hex_templates << " hex, "
                << cl.mismatched << " mismatched\n";
    } else {
        json classes = json::array();
        for (const auto& cl : r.equivalence.classes)
            classes.push_back({{"class", cl.move_class},
                               {"rd_templates", cl.rd_templates},
                               {"hex_templates", cl.hex_templates},
                               {"mismatched", cl.mismatched},
                               {"match", cl.match}});
        out << json{{"ok", r.ok()},
                    {"templates", {{"restricted", r.templates[0]}, {"monkey", r.templates[1]}}},
                    {"symmetry_failures", r.symmetry_failures},
                    {"reversal_failures", r.reversal_failures},
                    {"sandwich_lemma", {{"restricted", r.sandwich_lemma[0]}, {"monkey", r.sandwich_lemma[1]}}},
                    {"equivalence_2d", classes}}
                   .dump()
            << '\n';
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rigidity, reachability and gadget tools for rhombic-dodecahedral modular robots", "rdpivot"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Common c;
    app.add_option("--model", c.model, "Move model")->check(CLI::IsMember({"restricted", "monkey"}));
    app.add_option("--limits", c.limits, "Search limits as states:depth:seconds (empty fields keep defaults)");
    app.add_option("--coords", c.coords, "Coordinates for positions on the command line and in output")
        ->check(CLI::IsMember({"xyz", "hex"}));
    app.add_option("--catalog", c.catalog, "Move catalog file (default: RD_PIVOT_CATALOG, else built in)");
    app.add_flag("--pretty", c.pretty, "Human-readable output instead of JSON");
    app.add_option("--threads", c.threads, "Search worker threads")->check(CLI::PositiveNumber);

    std::string file, file_b, module, hex_file, format = "off", output;
    int padding = 4;
    bool no_witness = false, symmetry = false, iddfs = false;
    GadgetArgs g;

    auto* validate = app.add_subcommand("validate", "Check parity, duplicates and connectivity");
    validate->add_option("file", file, "Configuration file, - for stdin")->required();

    auto* moves = app.add_subcommand("moves", "List legal moves");
    moves->add_option("file", file, "Configuration file, - for stdin")->required();
    moves->add_option("--module", module, "Only this module, as a,b,c");

    auto* rigid = app.add_subcommand("rigid", "Per-module mobility; exit 0 when no module can move");
    rigid->add_option("file", file, "Configuration file, - for stdin")->required();

    auto* super = app.add_subcommand("super-rigid", "Decide whether no superset can free any module");
    super->add_option("file", file, "Configuration file, - for stdin")->required();
    super->add_option("--box-padding", padding, "Witness connector search margin")->check(CLI::NonNegativeNumber);
    super->add_flag("--no-witness", no_witness, "Skip witness construction");

    auto* reach = app.add_subcommand("reach", "Breadth-first reachability between two configurations");
    reach->add_option("source", file, "Start configuration")->required();
    reach->add_option("target", file_b, "Goal configuration")->required();
    reach->add_flag("--symmetry", symmetry, "Identify states related by a point symmetry");
    reach->add_flag("--iddfs", iddfs, "Iterative deepening instead of breadth-first search");

    auto* expl = app.add_subcommand("explore", "Enumerate the reachable component");
    expl->add_option("file", file, "Configuration file, - for stdin")->required();
    expl->add_flag("--symmetry", symmetry, "Identify states related by a point symmetry");

    auto* gadget = app.add_subcommand("gadget", "Emit a gadget configuration");
    gadget->add_option("kind", g.kind, "roof | cap | capped_roof | sandwich | fig5 | fig6a | fig6b")->required();
    gadget->add_option("--radius", g.radius, "Roof or disk radius");
    gadget->add_option("--path-length", g.path_length, "Capped roof path length");
    gadget->add_option("--layer", g.layer, "Layer of the roof or disk");
    gadget->add_option("--anchor", g.anchor, "Cap anchor as a,b,c");
    gadget->add_option("--direction", g.direction, "Cap direction, an in-layer offset x,y,z");
    gadget->add_option("--input", g.input, "Single-layer gadget to sandwich (default: disk of --radius)");
    gadget->add_option("--margin", g.margin, "Sandwich roof reach beyond the gadget footprint");
    gadget->add_option("-o,--output", g.output, "Output file");

    auto* mesh = app.add_subcommand("export-mesh", "Write one rhombic dodecahedron per module");
    mesh->add_option("file", file, "Configuration file, - for stdin")->required();
    mesh->add_option("--format", format, "off or obj")->check(CLI::IsMember({"off", "obj"}));
    mesh->add_option("-o,--output", output, "Output file");

    auto* check = app.add_subcommand("check-catalog", "Verify symmetry and reversal closure, sandwich lemma, 2D slice");
    check->add_option("--hex", hex_file, "Hexagonal catalog to compare against");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(c, file, out);
        if (moves->parsed()) return cmd_moves(c, file, module, out);
        if (rigid->parsed()) return cmd_rigid(c, file, out);
        if (super->parsed()) return cmd_super_rigid(c, file, padding, no_witness, out);
        if (reach->parsed()) return cmd_reach(c, file, file_b, symmetry, iddfs, out);
        if (expl->parsed()) return cmd_explore(c, file, symmetry, out);
        if (gadget->parsed()) return cmd_gadget(c, g, out);
        if (mesh->parsed()) return cmd_export_mesh(file, format, output, out);
        if (check->parsed()) return cmd_check_catalog(c, hex_file, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed-input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace rd::cli
