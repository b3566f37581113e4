#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "rdpivot/config.hpp"
#include "rdpivot/moves.hpp"

namespace rd {

struct SearchLimits {
    std::size_t max_states = 5'000'000;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
    double max_seconds = 600.0;
};

// "states:depth:seconds"; an empty field, or an empty string, keeps the defaults.
SearchLimits parse_limits(std::string_view text);

enum class SearchOutcome { Reached, Exhausted, LimitHit };
std::string_view to_string(SearchOutcome o) noexcept;

struct SearchOptions {
    bool symmetry_reduction = false;  // identify states related by the 12 point symmetries
    unsigned threads = 1;             // frontier expansion workers; results do not depend on it
    MoveOptions moves;
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::LimitHit;
    std::vector<LegalMove> moves;  // from s, in s's own frame, when reached
    std::size_t states_explored = 0;
};

// Breadth-first search over canonical configurations. Exhausted certifies that
// t is not in the component of s. Throws SizeMismatch when |s| != |t|.
SearchResult reachable(const Configuration& s, const Configuration& t, const MoveCatalog& catalog, MoveModel model,
                       SearchLimits limits = {}, SearchOptions options = {});

// Iterative deepening variant with memory linear in depth; never reports Exhausted.
SearchResult reachable_iddfs(const Configuration& s, const Configuration& t, const MoveCatalog& catalog,
                             MoveModel model, SearchLimits limits = {}, SearchOptions options = {});

struct ExploreStats {
    std::size_t states = 0;
    std::vector<std::size_t> depth_profile;  // states first reached at each depth
    bool complete = false;
    std::vector<Configuration> visited;  // canonical states, when requested
};

ExploreStats explore(const Configuration& s, const MoveCatalog& catalog, MoveModel model, SearchLimits limits = {},
                     SearchOptions options = {}, bool keep_states = false);

// Replays a move sequence with legality re-checked at every step.
Configuration replay(const Configuration& s, const std::vector<LegalMove>& moves, MoveOptions options = {});

// JSON list of {source, target, class} steps.
std::string trace_json(const std::vector<LegalMove>& moves, bool pretty = false);

}  // namespace rd
