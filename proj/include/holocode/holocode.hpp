#pragma once

#include "holocode/schlafli.hpp"
#include "holocode/geometry.hpp"
#include "holocode/inflation.hpp"
#include "holocode/combinatorial_map.hpp"
#include "holocode/tiling_sim.hpp"
#include "holocode/analysis.hpp"
#include "holocode/output.hpp"
