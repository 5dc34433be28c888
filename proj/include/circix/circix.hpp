#pragma once

// Umbrella header: index coding over prime fields, exact circular graph
// parameters, the coloring-based optimal construction for complements of
// circular perfect graphs, and the exhaustive oracles that certify it.

#include "circix/code.hpp"
#include "circix/confusion.hpp"
#include "circix/construction.hpp"
#include "circix/generators.hpp"
#include "circix/gf.hpp"
#include "circix/graph.hpp"
#include "circix/io.hpp"
#include "circix/limits.hpp"
#include "circix/max_clique.hpp"
#include "circix/ng.hpp"
#include "circix/params.hpp"
#include "circix/prng.hpp"
#include "circix/rational.hpp"
#include "circix/search.hpp"
