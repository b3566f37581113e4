#pragma once

#include "rdpivot/analysis.hpp"
#include "rdpivot/config.hpp"
#include "rdpivot/error.hpp"
#include "rdpivot/gadgets.hpp"
#include "rdpivot/lattice.hpp"
#include "rdpivot/mesh.hpp"
#include "rdpivot/moves.hpp"
#include "rdpivot/search.hpp"
