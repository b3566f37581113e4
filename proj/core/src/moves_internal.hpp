#pragma once

#include <vector>

#include "rdpivot/moves.hpp"

namespace rd::detail {

bool fits(const OccupancyGrid& grid, Position p, const MoveTemplate& t);
bool sandwiched(const OccupancyGrid& grid, Position p);

void append_moves(const Configuration& c, const OccupancyGrid& grid, const std::vector<bool>* cut,
                  std::size_t index, std::span<const MoveTemplate> templates, bool use_lemma,
                  MoveOptions options, std::vector<LegalMove>& out);

// legal_moves without the connectivity precondition check.
std::vector<LegalMove> moves_unchecked(const Configuration& c, const MoveCatalog& catalog, MoveModel model,
                                       MoveOptions options);

}  // namespace rd::detail
