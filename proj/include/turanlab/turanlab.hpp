#pragma once

#include "turanlab/bounds.hpp"
#include "turanlab/cliques.hpp"
#include "turanlab/coloring.hpp"
#include "turanlab/edge_list.hpp"
#include "turanlab/embedding.hpp"
#include "turanlab/exact.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/harness.hpp"
#include "turanlab/polynomial.hpp"
#include "turanlab/rng.hpp"
#include "turanlab/serialize.hpp"
#include "turanlab/spectral.hpp"
#include "turanlab/spectral_exact.hpp"
#include "turanlab/stability.hpp"
#include "turanlab/theorems.hpp"
#include "turanlab/vertex_set.hpp"
