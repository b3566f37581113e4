#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdpivot/config.hpp"
#include "rdpivot/lattice.hpp"

namespace rd {

enum class MoveModel : std::uint8_t { Restricted, Monkey };

std::string_view to_string(MoveModel m) noexcept;
MoveModel parse_move_model(std::string_view s);  // throws InvalidArgument

// One pivoting move expressed relative to the mover at the origin.
// `base` cells must be occupied, `empty` cells (which include `target`) free.
// `model` is the tier the class belongs to; Monkey-tier templates are excluded
// from the Restricted catalog.
struct MoveTemplate {
    std::string move_class;
    MoveModel model = MoveModel::Restricted;
    std::vector<Offset> base;   // sorted
    std::vector<Offset> empty;  // sorted
    Offset target;

    bool operator==(const MoveTemplate&) const = default;

    // Lowest and highest layer touched, relative to the source layer.
    int min_layer() const;
    int max_layer() const;
};

// Throws MalformedInput naming the violated invariant.
void validate_template(const MoveTemplate& t);

MoveTemplate transform(const MoveTemplate& t, const SymmetryOp& op);

// The move back from target to source: base and empty shifted by -target,
// with the old source cell taking the place of the old target cell.
MoveTemplate reversed(const MoveTemplate& t);

// Immutable move catalog: canonical templates plus their closure under the 12
// point symmetries. The full Monkey catalog is the full Restricted catalog
// followed by the Monkey-tier templates.
class MoveCatalog {
public:
    static MoveCatalog from_json(std::string_view text);
    static MoveCatalog from_file(const std::string& path);
    // Catalog compiled into the library.
    static const MoveCatalog& builtin();
    // RD_PIVOT_CATALOG if set, else the built-in catalog.
    static MoveCatalog load_default();
    // Builds from explicit canonical templates (validated, then closed).
    explicit MoveCatalog(std::vector<MoveTemplate> canonical);

    std::span<const MoveTemplate> canonical(MoveModel m) const;
    std::span<const MoveTemplate> full(MoveModel m) const;

    // True when every full template has one of d, -d empty for each neighbour
    // offset d. Then a module with two opposite neighbours can never move.
    bool sandwich_lemma(MoveModel m) const { return sandwich_[static_cast<int>(m)]; }

    // Index of t within full(Monkey), or nullopt.
    std::optional<std::size_t> find(const MoveTemplate& t) const;

private:
    std::vector<MoveTemplate> canonical_;  // restricted tier first
    std::size_t canonical_restricted_ = 0;
    std::vector<MoveTemplate> full_;       // restricted tier first
    std::size_t full_restricted_ = 0;
    bool sandwich_[2] = {false, false};
};

struct LegalMove {
    Position module;
    const MoveTemplate* move = nullptr;  // points into a MoveCatalog

    Position destination() const { return module + move->target; }
    bool operator==(const LegalMove& o) const { return module == o.module && *move == *o.move; }
};

enum class ConnectivityRule : std::uint8_t {
    // C \ {mover} stays connected (the default single-backbone rule).
    Backbone,
    // Only the configuration after the move must be connected.
    EndpointsConnected,
};

struct MoveOptions {
    ConnectivityRule rule = ConnectivityRule::Backbone;
};

bool template_fits(const Configuration& c, Position module, const MoveTemplate& t);

// All legal moves in module order, then catalog order. Throws Disconnected.
std::vector<LegalMove> legal_moves(const Configuration& c, const MoveCatalog& catalog, MoveModel model,
                                   MoveOptions options = {});

// Legal moves of one module.
std::vector<LegalMove> legal_moves_of(const Configuration& c, Position module, const MoveCatalog& catalog,
                                      MoveModel model, MoveOptions options = {});

bool is_legal(const Configuration& c, const LegalMove& m, MoveOptions options = {});

// Throws IllegalMove unless m is legal in c.
Configuration apply_move(const Configuration& c, const LegalMove& m, MoveOptions options = {});

// The reverse move in the catalog, instantiated at m's destination.
std::optional<LegalMove> reverse_move(const MoveCatalog& catalog, const LegalMove& m);

// Axial 2D hexagonal move, coordinates (q, r) as in HexCoord.
struct HexTemplate {
    std::string move_class;
    MoveModel model = MoveModel::Restricted;
    std::vector<std::pair<int, int>> base, empty;
    std::pair<int, int> target;
};

std::vector<HexTemplate> parse_hex_catalog(std::string_view text);
const std::vector<HexTemplate>& builtin_hex_catalog();

struct ClassComparison {
    std::string move_class;
    std::size_t rd_templates = 0;   // in-layer RD templates of this class
    std::size_t hex_templates = 0;  // hexagonal templates after closure
    std::size_t mismatched = 0;     // in the symmetric difference of the slices
    bool match = false;
};

struct EquivalenceReport {
    std::vector<ClassComparison> classes;
    bool all_match() const;
};

// Compares the middle-layer slice of the RD in-layer templates (base and empty
// cells on the source layer, in axial coordinates) with the hexagonal catalog.
EquivalenceReport check_2d_equivalence(const MoveCatalog& catalog,
                                       const std::vector<HexTemplate>& hex = builtin_hex_catalog());

struct CatalogReport {
    std::size_t templates[2] = {0, 0};       // full catalog size per model
    std::size_t symmetry_failures = 0;       // images under a symmetry missing from the catalog
    std::size_t reversal_failures = 0;       // reversed templates missing, or found in a wider tier
    bool sandwich_lemma[2] = {false, false};
    EquivalenceReport equivalence;
    bool ok() const;
};

CatalogReport check_catalog(const MoveCatalog& catalog,
                            const std::vector<HexTemplate>& hex = builtin_hex_catalog());

}  // namespace rd
