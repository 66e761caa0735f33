#pragma once

#include "canonical.hpp"
#include "characterization.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "gamma_graph.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "invariants.hpp"
#include "structure.hpp"
#include "tree_enum.hpp"
#include "verify.hpp"
#include "vertex_set.hpp"
