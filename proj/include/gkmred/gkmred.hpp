// Umbrella header.

#pragma once

#include "gkmred/catalog.hpp"
#include "gkmred/class_expr.hpp"
#include "gkmred/cohomology.hpp"
#include "gkmred/json_io.hpp"
#include "gkmred/kirwan.hpp"
#include "gkmred/linalg.hpp"
#include "gkmred/polynomial.hpp"
#include "gkmred/rational.hpp"
#include "gkmred/space.hpp"
#include "gkmred/svg_plot.hpp"
#include "gkmred/walls.hpp"
