#pragma once

#include "scalekit/error.hpp"
#include "scalekit/special_fn.hpp"
#include "scalekit/quadrature.hpp"
#include "scalekit/levy_core.hpp"
#include "scalekit/gtsc.hpp"
#include "scalekit/poly_pfd.hpp"
#include "scalekit/scale_function.hpp"
#include "scalekit/bromwich.hpp"
#include "scalekit/scale_gtsc.hpp"
#include "scalekit/scale_catalog.hpp"
#include "scalekit/applications.hpp"
#include "scalekit/mc_sim.hpp"
