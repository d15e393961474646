#pragma once

#include "maroni/box_search.hpp"
#include "maroni/chain_geometry.hpp"
#include "maroni/class_formulas.hpp"
#include "maroni/combinatorics.hpp"
#include "maroni/errors.hpp"
#include "maroni/lattice_optimizer.hpp"
#include "maroni/rational.hpp"
#include "maroni/report.hpp"
