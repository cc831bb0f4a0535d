#pragma once

#include "skewenergy/canonical.hpp"
#include "skewenergy/charpoly.hpp"
#include "skewenergy/energy.hpp"
#include "skewenergy/error.hpp"
#include "skewenergy/extremal.hpp"
#include "skewenergy/graph.hpp"
#include "skewenergy/graph_io.hpp"
#include "skewenergy/quadrature.hpp"
#include "skewenergy/subgraph_oracle.hpp"
