#pragma once

#include "gorenstein/analysis.hpp"
#include "gorenstein/arith.hpp"
#include "gorenstein/edge_polytope.hpp"
#include "gorenstein/ehrhart.hpp"
#include "gorenstein/error.hpp"
#include "gorenstein/geometric.hpp"
#include "gorenstein/graph.hpp"
#include "gorenstein/json_io.hpp"
#include "gorenstein/lattice_points.hpp"
#include "gorenstein/linalg.hpp"
#include "gorenstein/lp.hpp"
#include "gorenstein/polytope.hpp"
#include "gorenstein/report.hpp"
#include "gorenstein/stable_polytope.hpp"
#include "gorenstein/sweep.hpp"
