#pragma once

// Umbrella header for the distance-k domination toolkit.

#include "kdom/approx.hpp"
#include "kdom/decomposition.hpp"
#include "kdom/domset.hpp"
#include "kdom/exact_oracle.hpp"
#include "kdom/experiments.hpp"
#include "kdom/generators.hpp"
#include "kdom/graph.hpp"
#include "kdom/graph_io.hpp"
#include "kdom/local_runtime.hpp"
#include "kdom/qpath.hpp"
#include "kdom/structural.hpp"
#include "kdom/voronoi.hpp"
