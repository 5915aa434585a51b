#pragma once

#include "hexcover/analytics.hpp"
#include "hexcover/benchmark.hpp"
#include "hexcover/deployment.hpp"
#include "hexcover/exact.hpp"
#include "hexcover/geometry.hpp"
#include "hexcover/io.hpp"
#include "hexcover/random.hpp"
#include "hexcover/tiling.hpp"
#include "hexcover/verifier.hpp"
