#pragma once

#include "cmgraph/canonical.hpp"
#include "cmgraph/cliques.hpp"
#include "cmgraph/cm_criteria.hpp"
#include "cmgraph/cover_matching.hpp"
#include "cmgraph/enumerate.hpp"
#include "cmgraph/exact_rank.hpp"
#include "cmgraph/fixtures.hpp"
#include "cmgraph/graph.hpp"
#include "cmgraph/harness.hpp"
#include "cmgraph/homology.hpp"
#include "cmgraph/independence.hpp"
#include "cmgraph/json_io.hpp"
#include "cmgraph/perfect.hpp"
#include "cmgraph/shelling.hpp"
#include "cmgraph/simplicial_complex.hpp"
#include "cmgraph/vertex_set.hpp"
