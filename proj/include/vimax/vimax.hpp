#pragma once

#include "vimax/errors.hpp"
#include "vimax/generators.hpp"
#include "vimax/gomory_hu.hpp"
#include "vimax/graph.hpp"
#include "vimax/instance_io.hpp"
#include "vimax/max_flow.hpp"
#include "vimax/mip_export.hpp"
#include "vimax/preprocess.hpp"
#include "vimax/reduction.hpp"
#include "vimax/report.hpp"
#include "vimax/solvers.hpp"
#include "vimax/vitality.hpp"
