#pragma once

#include "clusterent/bloch.hpp"
#include "clusterent/cluster.hpp"
#include "clusterent/divergence.hpp"
#include "clusterent/graph.hpp"
#include "clusterent/overlap.hpp"
#include "clusterent/parallel.hpp"
#include "clusterent/pauli.hpp"
#include "clusterent/rng.hpp"
#include "clusterent/separable.hpp"
#include "clusterent/tensor.hpp"
#include "clusterent/thermal.hpp"
#include "clusterent/types.hpp"
