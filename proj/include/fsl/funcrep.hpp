// SPDX-License-Identifier: MIT
#pragma once

#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/interval_set.hpp"
#include "fsl/funcrep/io.hpp"
#include "fsl/funcrep/plateau.hpp"
#include "fsl/funcrep/polyline.hpp"
#include "fsl/funcrep/step_function.hpp"
#include "fsl/funcrep/transforms.hpp"
