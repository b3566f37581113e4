#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rdpivot/config.hpp"
#include "rdpivot/moves.hpp"

namespace rd {

enum class MobilityVerdict {
    Mobile,         // has at least one legal move
    Blocked,        // every template has an occupied empty cell or a missing base
    Disconnecting,  // some template fits, but removing the module disconnects the rest
};

std::string_view to_string(MobilityVerdict v) noexcept;

struct ModuleMobility {
    Position module;
    MobilityVerdict verdict = MobilityVerdict::Blocked;
    std::size_t fitting_templates = 0;  // templates whose cells are satisfied
    std::vector<LegalMove> moves;
};

struct MobilityReport {
    std::vector<ModuleMobility> modules;  // in configuration order

    std::size_t count(MobilityVerdict v) const;
    bool rigid() const { return count(MobilityVerdict::Mobile) == 0; }
    const ModuleMobility& at(Position p) const;
};

MobilityReport mobility(const Configuration& c, const MoveCatalog& catalog, MoveModel model,
                        MoveOptions options = {});
bool is_rigid(const Configuration& c, const MoveCatalog& catalog, MoveModel model, MoveOptions options = {});

// Templates some superconfiguration of g could enable for module m while g is
// intact: every empty cell is free in g (base cells may always be added).
std::vector<const MoveTemplate*> enabling_templates(const Configuration& g, Position m,
                                                    const MoveCatalog& catalog, MoveModel model);

struct Witness {
    Position module;
    const MoveTemplate* move = nullptr;
    Configuration superconfiguration;
};

enum class Elimination {
    Sandwich,  // two opposite neighbours in g; immobile by the sandwich lemma
    Covered,   // every template has an empty cell occupied by g
    Enabled,   // some template can be enabled by adding modules
};

std::string_view to_string(Elimination e) noexcept;

struct ModuleSuperRigidity {
    Position module;
    Elimination reason = Elimination::Covered;
    std::optional<std::pair<Offset, Offset>> sandwich_pair;
    std::vector<const MoveTemplate*> enabling;
    std::optional<Witness> witness;  // for the first enabling template
};

struct SuperRigidityVerdict {
    bool super_rigid = false;
    std::vector<ModuleSuperRigidity> modules;
};

struct SuperRigidityOptions {
    int box_padding = 4;     // witness connector search box, cells beyond the bounding box
    bool witnesses = true;   // build witness superconfigurations for enabled modules
};

SuperRigidityVerdict is_super_rigid(const Configuration& g, const MoveCatalog& catalog, MoveModel model,
                                    SuperRigidityOptions options = {});

// A connected superset of g holding the base of t at m, keeping its empty cells
// free, with connector paths added so that removing m leaves it connected.
// Throws NoWitnessFound when the bounded search fails.
Configuration witness_superconfiguration(const Configuration& g, Position m, const MoveTemplate& t,
                                         int box_padding = 4);

bool verify_sandwich_lemma(const MoveCatalog& catalog, MoveModel model);
bool sandwich_lemma_holds(std::span<const MoveTemplate> templates);

// Moves that take a module from inside the band to a layer outside it.
std::vector<LegalMove> band_escapes(const Configuration& c, LayerBand band, const MoveCatalog& catalog,
                                    MoveModel model, MoveOptions options = {});
bool layer_confinement(const Configuration& c, LayerBand band, const MoveCatalog& catalog, MoveModel model,
                       MoveOptions options = {});

}  // namespace rd
